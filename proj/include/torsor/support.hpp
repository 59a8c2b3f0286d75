#ifndef TORSOR_SUPPORT_HPP
#define TORSOR_SUPPORT_HPP

#include <optional>
#include <variant>
#include <vector>

#include "torsor/fmodule.hpp"
#include "torsor/ideal.hpp"
#include "torsor/ringmap.hpp"

namespace torsor {

/// The ambient Spec: either the explicit prime list of a finite ring, or
/// Spec of a polynomial ring whose closed sets are carried by ideals and
/// never enumerated.
struct SpecModel {
  FiniteRingPtr finite;  // exactly one of these is set
  RingPtr symbolic;

  bool is_finite() const { return finite != nullptr; }
  bool same_as(const SpecModel& o) const;

  static SpecModel of(FiniteRingPtr R) { return SpecModel{std::move(R), nullptr}; }
  static SpecModel of(RingPtr R) { return SpecModel{nullptr, std::move(R)}; }
};

/// A specialization-stable subset of Spec. Over a finite ring every subset
/// of the (maximal) primes qualifies and is stored explicitly; over a
/// polynomial ring only closed sets Z(P) are representable, canonical up to
/// radical.
class StableSet {
 public:
  static StableSet of_primes(SpecModel model, std::vector<int> primes);
  static StableSet of_ideal(SpecModel model, Ideal rep);
  static StableSet empty_set(SpecModel model);
  static StableSet full_set(SpecModel model);

  const SpecModel& model() const { return model_; }
  const std::vector<int>& primes() const { return primes_; }
  const Ideal& ideal() const { return *rep_; }

  bool is_empty() const;
  bool is_full() const;
  bool equals(const StableSet& o) const;
  bool subset_of(const StableSet& o) const;
  StableSet intersect(const StableSet& o) const;
  StableSet union_with(const StableSet& o) const;
  bool contains_prime(int prime) const;  // finite model only

 private:
  StableSet() = default;
  SpecModel model_;
  std::vector<int> primes_;   // finite model: sorted prime indices
  std::optional<Ideal> rep_;  // symbolic model: Z = Z(rep)
};

/// A base of ideals {J : sqrt(J) contains P}, canonicalized to one
/// representative P (the product of any generating family).
class SupportBase {
 public:
  static SupportBase of_ideal(SpecModel model, Ideal rep);
  /// finite model: representative ideal given by ring-element generators
  static SupportBase of_elements(SpecModel model, std::vector<int> gens);

  const SpecModel& model() const { return model_; }
  const Ideal& rep() const { return *rep_; }
  const std::vector<int>& rep_elements() const { return elems_; }

  bool member(const Ideal& J) const;               // symbolic
  bool member(const std::vector<int>& gens) const; // finite
  bool equals(const SupportBase& o) const;
  bool subset_of(const SupportBase& o) const;

 private:
  SupportBase() = default;
  SpecModel model_;
  std::optional<Ideal> rep_;
  std::vector<int> elems_;
};

/// A system of supports, held as an antichain of closed-set representatives
/// {Z(I_1), ..., Z(I_k)} with union Z(I_1...I_k); over a finite ring it is
/// carried by its stable set directly.
class SupportSystem {
 public:
  static SupportSystem of_ideals(SpecModel model, std::vector<Ideal> members);
  static SupportSystem of_stable(StableSet Y);

  const SpecModel& model() const { return model_; }
  const std::vector<Ideal>& members() const { return members_; }
  const StableSet& stable() const { return *stable_; }

  bool member(const Ideal& closed_rep) const;  // is Z(J) in Phi
  bool member(const std::vector<int>& prime_subset) const;
  bool equals(const SupportSystem& o) const;
  bool subset_of(const SupportSystem& o) const;

 private:
  SupportSystem() = default;
  SpecModel model_;
  std::vector<Ideal> members_;       // symbolic: canonical antichain
  std::optional<StableSet> stable_;  // finite
};

SupportSystem base_to_sos(const SupportBase& base);
SupportBase sos_to_base(const SupportSystem& sos);

StableSet stable_set_of(const SupportBase& base);
StableSet stable_set_of(const SupportSystem& sos);
SupportSystem from_stable_set(const StableSet& Z);

SupportBase meet(const SupportBase& a, const SupportBase& b);
SupportSystem meet(const SupportSystem& a, const SupportSystem& b);

SupportBase inverse_image(const PolyMap& f, const SupportBase& base);
SupportSystem inverse_image(const PolyMap& f, const SupportSystem& sos);
SupportBase inverse_image(const FiniteRingMap& f, const SupportBase& base);
SupportSystem inverse_image(const FiniteRingMap& f, const SupportSystem& sos);
StableSet inverse_image_stable(const FiniteRingMap& f, const StableSet& Z);

/// Supp(M) as a stable set: localization at each listed prime for the finite
/// backend, Z(I) for a cyclic polynomial module S/I.
StableSet support_module(const FModulePtr& m);
StableSet support_module_cyclic(const RingPtr& ring, const Ideal& relations);

}  // namespace torsor

#endif
