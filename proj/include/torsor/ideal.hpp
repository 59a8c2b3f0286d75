#ifndef TORSOR_IDEAL_HPP
#define TORSOR_IDEAL_HPP

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "torsor/groebner.hpp"
#include "torsor/poly.hpp"

namespace torsor {

enum class IdealOp { sum, product, intersection, quotient, saturation };

/// An ideal of a polynomial ring, held by generators with a lazily computed
/// reduced Groebner basis. The basis is published once: concurrent first
/// uses may race to compute it but agree bit-for-bit (it is unique).
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// The unique reduced Groebner basis; computed on first use.
  const std::vector<Polynomial>& groebner() const;
  bool has_cached_groebner() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;  // other subset of this
  bool equals(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero_ideal() const;

  std::vector<std::string> gen_strings() const;

 private:
  void check_ring(const Ideal& other) const;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::once_flag flag;
    std::atomic<bool> ready{false};
    std::vector<Polynomial> gb;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal ideal_op(IdealOp kind, const Ideal& I, const Ideal& J);

/// Decides sqrt(J) >= I: every generator g of I satisfies g in sqrt(J),
/// tested per generator by saturation, (J : g^inf) = (1).
bool radical_contains(const Ideal& I, const Ideal& J);

/// Brute-force radical membership for the monomial-corpus oracle:
/// exists t <= bound with g^t in J.
bool radical_member_bruteforce(const Polynomial& g, const Ideal& J, int bound = 8);

Ideal saturation_by(const Ideal& I, const Polynomial& f);

}  // namespace torsor

#endif
