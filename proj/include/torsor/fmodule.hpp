#ifndef TORSOR_FMODULE_HPP
#define TORSOR_FMODULE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "torsor/finite_ring.hpp"

namespace torsor {

class FModule;
using FModulePtr = std::shared_ptr<const FModule>;

/// Explicit finite module over a FiniteRing, represented as a subquotient
/// U/K of a universe S^L. Elements are dense indices (0 = zero); each index
/// names a coset of K inside U. Arithmetic is componentwise in the universe
/// followed by coset canonicalization, so no quadratic tables are stored.
///
/// Every module carries a generating set and, for each element, one
/// expression as an S-combination of the generators (used to transport maps
/// along constructions). Immutable once built.
class FModule {
 public:
  using Handle = std::int64_t;

  int size() const { return static_cast<int>(reps_.size()); }
  const FiniteRingPtr& ring() const { return R_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int act(int s, int a) const;  // s: ring element index
  int multiple(long k, int a) const;

  const std::vector<int>& gens() const { return gens_; }
  /// expr(a)[k] is a ring element c_k with a = sum_k c_k * gens()[k].
  const std::vector<int>& expr(int a) const { return expr_[a]; }

  int additive_order(int a) const;
  /// annihilator bitmap: ann(a)[s] iff s*a = 0
  std::vector<char> annihilator(int a) const;

  /// Relations of the generating set: generators of ker(S^g -> M).
  /// Computed lazily by enumerating S^g (guarded).
  const std::vector<std::vector<int>>& relations() const;

  // --- constructions ---
  static FModulePtr ring_module(FiniteRingPtr R);
  static FModulePtr zero_module(FiniteRingPtr R);
  static FModulePtr free_module(FiniteRingPtr R, int rank);
  /// Cyclic submodule e*S of the ring.
  static FModulePtr cyclic(FiniteRingPtr R, int gen_elem);
  /// S^g / <relation rows>, rows as ring-coefficient tuples.
  static FModulePtr presented(FiniteRingPtr R, int rank,
                              const std::vector<std::vector<int>>& rel_rows);

  std::string describe() const;

  // internal: handles
  Handle rep_handle(int a) const { return reps_[a]; }
  int index_of_handle(Handle h) const;  // -1 if not a member
  int universe_len() const { return L_; }
  const std::vector<Handle>& universe_handles() const { return universe_; }
  std::vector<Handle> zero_coset_handles() const;

 private:
  friend struct ModuleBuilder;
  FModule() = default;

  FiniteRingPtr R_;
  int L_ = 0;
  std::vector<Handle> reps_;
  std::vector<Handle> universe_;  // all members of U, sorted
  std::unordered_map<Handle, int> canon_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> expr_;

  struct RelCache {
    std::once_flag flag;
    std::vector<std::vector<int>> rows;
  };
  mutable std::shared_ptr<RelCache> relcache_ = std::make_shared<RelCache>();

  Handle add_h(Handle a, Handle b) const;
  Handle neg_h(Handle a) const;
  Handle act_h(int s, Handle a) const;
  void decode(Handle h, std::vector<int>& out) const;
  Handle encode(const std::vector<int>& v) const;
};

/// Total map table between modules. Verified S-linear at construction.
struct ModuleHom {
  FModulePtr src, dst;
  std::vector<int> table;

  int operator()(int x) const { return table[x]; }
  bool is_zero_map() const;
  bool same_table(const ModuleHom& o) const { return table == o.table; }

  ModuleHom then(const ModuleHom& g) const;  // g after this
  ModuleHom operator+(const ModuleHom& o) const;
  ModuleHom operator-() const;
  ModuleHom operator-(const ModuleHom& o) const { return *this + (-o); }
  ModuleHom scaled(int s) const;

  static ModuleHom identity(const FModulePtr& m);
  static ModuleHom zero(const FModulePtr& src, const FModulePtr& dst);
  static ModuleHom scalar(const FModulePtr& m, int s);
  /// Builds from generator images and verifies linearity on every edge
  /// (x, x + s*gen). Throws std::domain_error if not well-defined.
  static ModuleHom from_gen_images(const FModulePtr& src, const FModulePtr& dst,
                                   const std::vector<int>& images);
  static ModuleHom from_table_checked(const FModulePtr& src,
                                      const FModulePtr& dst,
                                      std::vector<int> table);

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
};

struct SubmoduleView {
  FModulePtr module;    // the submodule as a module in its own right
  ModuleHom inclusion;  // into the ambient
  std::vector<int> elements;  // sorted ambient element indices
};

struct QuotientView {
  FModulePtr module;
  ModuleHom projection;  // from the ambient
};

SubmoduleView submodule(const FModulePtr& m, const std::vector<int>& gen_elems);
QuotientView quotient(const FModulePtr& m, const SubmoduleView& sub);
QuotientView quotient_by_elements(const FModulePtr& m,
                                  const std::vector<int>& closed_subgroup);

struct SumView {
  FModulePtr module;
  std::vector<ModuleHom> into;  // injections
  std::vector<ModuleHom> onto;  // projections
};
SumView direct_sum(const std::vector<FModulePtr>& parts);

struct TensorView {
  FModulePtr module;
  FModulePtr left, right;
  /// class of x (x) y
  int pure(int x, int y) const;
  /// gens of module are pure tensors gen_i (x) gen_j in row-major order
};
TensorView tensor(const FModulePtr& a, const FModulePtr& b);
ModuleHom tensor_hom(const TensorView& src, const TensorView& dst,
                     const ModuleHom& f, const ModuleHom& g);

struct HomView {
  FModulePtr module;  // Hom(a, b) as a module
  FModulePtr a, b;
  std::vector<ModuleHom> components;  // hom elem -> image of a's k-th gen
  int apply(int hom_elem, int x) const;          // evaluate
  int of_map(const ModuleHom& f) const;          // element index of f, -1 if absent
  ModuleHom as_map(int hom_elem) const;
};
HomView hom_module(const FModulePtr& a, const FModulePtr& b);

std::vector<int> kernel_elements(const ModuleHom& f);
SubmoduleView kernel(const ModuleHom& f);
SubmoduleView image(const ModuleHom& f);

std::vector<int> minimal_gens(const FModulePtr& m);

/// Invariant factors of the underlying abelian group, ascending divisibility.
std::vector<long> invariant_factors(const FModulePtr& m);

/// Exact S-module isomorphism test by generator-image search.
/// Intended for small modules (used below a size threshold of 256).
bool modules_isomorphic(const FModulePtr& a, const FModulePtr& b);

/// ker f = im g as subsets of f's source (exactness at that spot).
bool exact_at(const ModuleHom& g, const ModuleHom& f);

/// M[1/t] for a finite module: the stabilized image e*M (e the idempotent
/// power of t), on which t acts bijectively, with the canonical localization
/// map M -> M[1/t], x -> e*x.
struct Localization {
  FModulePtr module;
  ModuleHom map;
};
Localization localize_finite(const FModulePtr& m, int t);

/// elements of the annihilator ideal of the whole module
std::vector<int> annihilator_of_module(const FModulePtr& m);

}  // namespace torsor

#endif
