#include "torsor/support.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsor {

bool SpecModel::same_as(const SpecModel& o) const {
  if (is_finite() != o.is_finite()) return false;
  if (is_finite()) return finite.get() == o.finite.get();
  return symbolic->same_as(*o.symbolic);
}

namespace {

void require_same(const SpecModel& a, const SpecModel& b) {
  if (!a.same_as(b)) throw std::invalid_argument("Spec model mismatch");
}

Ideal product_of(const std::vector<Ideal>& ideals, const RingPtr& ring) {
  if (ideals.empty()) return Ideal::unit(ring);
  Ideal acc = ideals[0];
  for (size_t i = 1; i < ideals.size(); ++i)
    acc = ideal_op(IdealOp::product, acc, ideals[i]);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// StableSet

StableSet StableSet::of_primes(SpecModel model, std::vector<int> primes) {
  if (!model.is_finite())
    throw std::invalid_argument("explicit primes need a finite model");
  StableSet z;
  z.model_ = std::move(model);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  z.primes_ = std::move(primes);
  return z;
}

StableSet StableSet::of_ideal(SpecModel model, Ideal rep) {
  if (model.is_finite()) {
    // convert the kernel data: Z(rep) = primes containing all generators
    throw std::invalid_argument("finite stable sets are given by primes");
  }
  StableSet z;
  z.model_ = std::move(model);
  z.rep_ = std::move(rep);
  return z;
}

StableSet StableSet::empty_set(SpecModel model) {
  if (model.is_finite()) return of_primes(std::move(model), {});
  auto ring = model.symbolic;
  return of_ideal(std::move(model), Ideal::unit(ring));
}

StableSet StableSet::full_set(SpecModel model) {
  if (model.is_finite()) {
    std::vector<int> all;
    for (int i = 0; i < model.finite->num_primes(); ++i) all.push_back(i);
    return of_primes(std::move(model), all);
  }
  auto ring = model.symbolic;
  return of_ideal(std::move(model), Ideal::zero(ring));
}

bool StableSet::is_empty() const {
  if (model_.is_finite()) return primes_.empty();
  return rep_->is_unit();
}

bool StableSet::is_full() const {
  if (model_.is_finite())
    return static_cast<int>(primes_.size()) == model_.finite->num_primes();
  return radical_contains(*rep_, Ideal::zero(model_.symbolic));
}

bool StableSet::subset_of(const StableSet& o) const {
  require_same(model_, o.model_);
  if (model_.is_finite())
    return std::includes(o.primes_.begin(), o.primes_.end(), primes_.begin(),
                         primes_.end());
  // Z(P) subset of Z(Q)  iff  sqrt(P) contains Q
  return radical_contains(*o.rep_, *rep_);
}

bool StableSet::equals(const StableSet& o) const {
  return subset_of(o) && o.subset_of(*this);
}

StableSet StableSet::intersect(const StableSet& o) const {
  require_same(model_, o.model_);
  if (model_.is_finite()) {
    std::vector<int> out;
    std::set_intersection(primes_.begin(), primes_.end(), o.primes_.begin(),
                          o.primes_.end(), std::back_inserter(out));
    return of_primes(model_, std::move(out));
  }
  // Z(P) cap Z(Q) = Z(P + Q)
  return of_ideal(model_, ideal_op(IdealOp::sum, *rep_, *o.rep_));
}

StableSet StableSet::union_with(const StableSet& o) const {
  require_same(model_, o.model_);
  if (model_.is_finite()) {
    std::vector<int> out;
    std::set_union(primes_.begin(), primes_.end(), o.primes_.begin(),
                   o.primes_.end(), std::back_inserter(out));
    return of_primes(model_, std::move(out));
  }
  // Z(P) cup Z(Q) = Z(P*Q)
  return of_ideal(model_, ideal_op(IdealOp::product, *rep_, *o.rep_));
}

bool StableSet::contains_prime(int prime) const {
  return std::binary_search(primes_.begin(), primes_.end(), prime);
}

// ---------------------------------------------------------------------------
// SupportBase

SupportBase SupportBase::of_ideal(SpecModel model, Ideal rep) {
  if (model.is_finite())
    throw std::invalid_argument("finite bases are given by ring elements");
  SupportBase b;
  b.model_ = std::move(model);
  b.rep_ = std::move(rep);
  return b;
}

SupportBase SupportBase::of_elements(SpecModel model, std::vector<int> gens) {
  if (!model.is_finite())
    throw std::invalid_argument("element generators need a finite model");
  SupportBase b;
  b.model_ = std::move(model);
  b.elems_ = std::move(gens);
  return b;
}

bool SupportBase::member(const Ideal& J) const {
  // J in the base  iff  sqrt(J) contains P
  return radical_contains(*rep_, J);
}

bool SupportBase::member(const std::vector<int>& gens) const {
  // sqrt((gens)) contains (elems): compare radicals elementwise
  const auto& R = *model_.finite;
  auto rad = R.radical_of(gens);
  for (int e : elems_)
    if (!std::binary_search(rad.begin(), rad.end(), e)) return false;
  return true;
}

bool SupportBase::subset_of(const SupportBase& o) const {
  require_same(model_, o.model_);
  // I_P subset of I_Q  iff  P is a member of I_Q  iff  sqrt(P) contains Q
  if (model_.is_finite()) {
    const auto& R = *model_.finite;
    auto rad = R.radical_of(elems_);
    for (int e : o.elems_)
      if (!std::binary_search(rad.begin(), rad.end(), e)) return false;
    return true;
  }
  return radical_contains(*o.rep_, *rep_);
}

bool SupportBase::equals(const SupportBase& o) const {
  return subset_of(o) && o.subset_of(*this);
}

// ---------------------------------------------------------------------------
// SupportSystem

SupportSystem SupportSystem::of_ideals(SpecModel model,
                                       std::vector<Ideal> members) {
  if (model.is_finite())
    throw std::invalid_argument("finite systems are given by stable sets");
  SupportSystem s;
  s.model_ = model;
  // canonicalize to an antichain: drop members whose closed set is contained
  // in another kept member's (Z(I_i) subset of Z(I_j) iff sqrt(I_i) >= I_j)
  std::vector<char> keep(members.size(), 1);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (radical_contains(members[j], members[i])) keep[i] = 0;
    }
  for (size_t i = 0; i < members.size(); ++i)
    if (keep[i]) s.members_.push_back(members[i]);
  if (s.members_.empty()) s.members_.push_back(Ideal::unit(model.symbolic));
  return s;
}

SupportSystem SupportSystem::of_stable(StableSet Y) {
  SupportSystem s;
  s.model_ = Y.model();
  if (!s.model_.is_finite()) {
    s.members_ = {Y.ideal()};
    s.stable_ = std::move(Y);
    return s;
  }
  s.stable_ = std::move(Y);
  return s;
}

bool SupportSystem::member(const Ideal& J) const {
  // Z(J) in Phi(Y), Y = Z(I_1...I_k)  iff  sqrt(J) contains I_1...I_k
  Ideal prod = product_of(members_, model_.symbolic);
  return radical_contains(prod, J);
}

bool SupportSystem::member(const std::vector<int>& prime_subset) const {
  for (int p : prime_subset)
    if (!stable_->contains_prime(p)) return false;
  return true;
}

bool SupportSystem::subset_of(const SupportSystem& o) const {
  require_same(model_, o.model_);
  return stable_set_of(*this).subset_of(stable_set_of(o));
}

bool SupportSystem::equals(const SupportSystem& o) const {
  return subset_of(o) && o.subset_of(*this);
}

// ---------------------------------------------------------------------------
// conversions

SupportSystem base_to_sos(const SupportBase& base) {
  if (base.model().is_finite()) {
    const auto& R = *base.model().finite;
    return SupportSystem::of_stable(
        StableSet::of_primes(base.model(), R.zero_set(base.rep_elements())));
  }
  return SupportSystem::of_ideals(base.model(), {base.rep()});
}

SupportBase sos_to_base(const SupportSystem& sos) {
  if (sos.model().is_finite()) {
    // representative ideal: intersection of the primes in the stable set
    const auto& R = *sos.model().finite;
    std::vector<int> rep;
    for (int x = 0; x < R.size(); ++x) {
      bool in_all = true;
      for (int pi : sos.stable().primes())
        if (!R.in_prime(x, pi)) {
          in_all = false;
          break;
        }
      if (in_all) rep.push_back(x);
    }
    return SupportBase::of_elements(sos.model(), rep);
  }
  return SupportBase::of_ideal(sos.model(),
                               product_of(sos.members(), sos.model().symbolic));
}

StableSet stable_set_of(const SupportBase& base) {
  if (base.model().is_finite())
    return StableSet::of_primes(base.model(),
                                base.model().finite->zero_set(base.rep_elements()));
  return StableSet::of_ideal(base.model(), base.rep());
}

StableSet stable_set_of(const SupportSystem& sos) {
  if (sos.model().is_finite()) return sos.stable();
  return StableSet::of_ideal(sos.model(),
                             product_of(sos.members(), sos.model().symbolic));
}

SupportSystem from_stable_set(const StableSet& Z) {
  return SupportSystem::of_stable(Z);
}

SupportBase meet(const SupportBase& a, const SupportBase& b) {
  require_same(a.model(), b.model());
  if (a.model().is_finite()) {
    std::vector<int> gens = a.rep_elements();
    for (int e : b.rep_elements()) gens.push_back(e);
    return SupportBase::of_elements(a.model(), gens);
  }
  return SupportBase::of_ideal(a.model(), ideal_op(IdealOp::sum, a.rep(), b.rep()));
}

SupportSystem meet(const SupportSystem& a, const SupportSystem& b) {
  require_same(a.model(), b.model());
  if (a.model().is_finite())
    return SupportSystem::of_stable(a.stable().intersect(b.stable()));
  // stable sets intersect: Z(P) cap Z(Q) = Z(P+Q)
  Ideal p = product_of(a.members(), a.model().symbolic);
  Ideal q = product_of(b.members(), b.model().symbolic);
  return SupportSystem::of_ideals(a.model(), {ideal_op(IdealOp::sum, p, q)});
}

SupportBase inverse_image(const PolyMap& f, const SupportBase& base) {
  return SupportBase::of_ideal(SpecModel::of(f.dst), f.extend(base.rep()));
}

SupportSystem inverse_image(const PolyMap& f, const SupportSystem& sos) {
  std::vector<Ideal> members;
  for (auto& I : sos.members()) members.push_back(f.extend(I));
  return SupportSystem::of_ideals(SpecModel::of(f.dst), std::move(members));
}

SupportBase inverse_image(const FiniteRingMap& f, const SupportBase& base) {
  std::vector<int> gens;
  for (int e : base.rep_elements()) gens.push_back(f(e));
  return SupportBase::of_elements(SpecModel::of(f.dst()), std::move(gens));
}

StableSet inverse_image_stable(const FiniteRingMap& f, const StableSet& Z) {
  // spectral map: a target prime q lies in the pulled-back set iff
  // psi^{-1}(q) lies in Z
  SpecModel target = SpecModel::of(f.dst());
  std::vector<int> primes;
  for (int q = 0; q < f.dst()->num_primes(); ++q)
    if (Z.contains_prime(f.preimage_prime(q))) primes.push_back(q);
  return StableSet::of_primes(std::move(target), std::move(primes));
}

SupportSystem inverse_image(const FiniteRingMap& f, const SupportSystem& sos) {
  return SupportSystem::of_stable(inverse_image_stable(f, sos.stable()));
}

StableSet support_module(const FModulePtr& m) {
  const auto& R = m->ring();
  SpecModel model = SpecModel::of(R);
  std::vector<int> primes;
  for (int pi = 0; pi < R->num_primes(); ++pi) {
    int e = R->local_idempotents()[pi];
    bool nonzero = false;
    for (int g : m->gens())
      if (m->act(e, g) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) primes.push_back(pi);
  }
  return StableSet::of_primes(std::move(model), std::move(primes));
}

StableSet support_module_cyclic(const RingPtr& ring, const Ideal& relations) {
  return StableSet::of_ideal(SpecModel::of(ring), relations);
}

}  // namespace torsor
