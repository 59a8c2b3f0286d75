#ifndef TORSOR_RINGMAP_HPP
#define TORSOR_RINGMAP_HPP

#include <vector>

#include "torsor/finite_ring.hpp"
#include "torsor/ideal.hpp"

namespace torsor {

/// Polynomial substitution map S -> T, one image per source variable.
struct PolyMap {
  RingPtr src, dst;
  std::vector<Polynomial> images;

  Polynomial apply(const Polynomial& f) const {
    return f.substitute(dst, images);
  }
  /// extension ideal P*T
  Ideal extend(const Ideal& P) const {
    std::vector<Polynomial> gens;
    for (auto& g : P.gens()) gens.push_back(apply(g));
    return Ideal(dst, std::move(gens));
  }
};

/// Verified homomorphism of finite rings, given by its full element table.
/// Construction checks additivity, multiplicativity and unitality on all
/// pairs and throws std::domain_error("not-a-homomorphism") otherwise.
class FiniteRingMap {
 public:
  FiniteRingMap(FiniteRingPtr src, FiniteRingPtr dst, std::vector<int> images);

  const FiniteRingPtr& src() const { return src_; }
  const FiniteRingPtr& dst() const { return dst_; }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& table() const { return images_; }

  static FiniteRingMap identity(const FiniteRingPtr& R);
  FiniteRingMap compose_after(const FiniteRingMap& first) const;  // this o first

  /// index of the source prime psi^{-1}(q), for a destination prime index q
  int preimage_prime(int dst_prime) const;

  /// All unital ring homomorphisms src -> dst, by exhaustive search over
  /// generator images (feasible for the small rings this is used with).
  static std::vector<FiniteRingMap> all_homs(const FiniteRingPtr& src,
                                             const FiniteRingPtr& dst);

  bool operator==(const FiniteRingMap& o) const { return images_ == o.images_; }

 private:
  FiniteRingPtr src_, dst_;
  std::vector<int> images_;
};

}  // namespace torsor

#endif
