#ifndef TORSOR_FINITE_RING_HPP
#define TORSOR_FINITE_RING_HPP

#include <memory>
#include <string>
#include <vector>

namespace torsor {

/// Fully enumerated commutative ring with 1. Elements are dense indices;
/// index 0 is the zero element. Built from a spec string: "Z/n", "Fq",
/// "Fp[x]/(f)", or a finite product of such joined by 'x' or '*'
/// (e.g. "F2xF4"). Tables are verified at construction.
///
/// Primes are derived from the primitive orthogonal idempotents: the ring is
/// a product of local rings, and the prime attached to a local factor is the
/// set of elements whose component there is a non-unit (equivalently,
/// nilpotent). All primes of such a ring are maximal.
class FiniteRing {
 public:
  static std::shared_ptr<const FiniteRing> build(const std::string& spec);
  static std::shared_ptr<const FiniteRing> build(const std::string& spec,
                                                 int max_size);

  int size() const { return n_; }
  int zero() const { return 0; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int pow(int a, long k) const;
  int of_integer(long v) const;

  const std::string& elem_name(int a) const { return names_[a]; }
  int elem_by_name(const std::string& s) const;  // -1 if absent
  const std::string& spec_string() const { return spec_; }

  // primes and the idempotents that cut out the local factors
  int num_primes() const { return static_cast<int>(local_idem_.size()); }
  const std::vector<int>& local_idempotents() const { return local_idem_; }
  const std::vector<std::vector<int>>& primes() const { return primes_; }
  bool in_prime(int elem, int prime) const { return prime_mask_[prime][elem]; }
  int prime_of_idempotent(int e) const;  // index, or -1

  std::vector<int> all_idempotents() const;

  /// Smallest ideal (as a sorted element subset) containing the generators.
  std::vector<int> ideal_generated(const std::vector<int>& gens) const;
  /// radical of the ideal generated by gens: intersection of the primes
  /// containing it (the whole ring when no prime does).
  std::vector<int> radical_of(const std::vector<int>& gens) const;
  /// primes containing every generator
  std::vector<int> zero_set(const std::vector<int>& gens) const;

  bool is_nilpotent(int a) const;
  bool is_unit(int a) const;

  /// The idempotent e = t^m with t invertible on e*S; e = 0 iff t nilpotent,
  /// e = 1 iff t is a unit. Also reports the multiplicative order data:
  /// t * (t^(L-1) e) = e on e*S.
  struct StablePower {
    int idem;
    long exponent;      // m with t^m = idem (m >= 1)
    int inverse_on_im;  // u with (t*u)|_{eS} = identity, u = t^(L-1)*e
  };
  StablePower stable_idempotent(int t) const;

 private:
  FiniteRing() = default;
  void derive_structure();  // verify axioms, find idempotents and primes
  void verify_tables(bool full) const;

  int n_ = 0;
  int one_ = 0;
  std::string spec_;
  std::vector<int> add_, mul_, neg_;
  std::vector<std::string> names_;
  std::vector<int> local_idem_;
  std::vector<std::vector<int>> primes_;      // sorted element subsets
  std::vector<std::vector<char>> prime_mask_;
};

using FiniteRingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace torsor

#endif
