#include "torsor/ideal.hpp"

#include <stdexcept>

namespace torsor {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one =
      Polynomial::constant(ring, Scalar::integer(1, ring->characteristic()));
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (auto& s : gens) ps.push_back(Polynomial::parse(ring, s));
  return Ideal(ring, std::move(ps));
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::call_once(cache_->flag, [this] {
    cache_->gb = reduced_groebner(gens_);
    cache_->ready.store(true, std::memory_order_release);
  });
  return cache_->gb;
}

bool Ideal::has_cached_groebner() const {
  return cache_->ready.load(std::memory_order_acquire);
}

bool Ideal::contains(const Polynomial& f) const {
  if (!f.ring()->same_as(*ring_))
    throw std::invalid_argument("ring-mismatch in ideal membership");
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  check_ring(other);
  for (auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  return contains(other) && other.contains(*this);
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero_ideal() const { return groebner().empty(); }

std::vector<std::string> Ideal::gen_strings() const {
  std::vector<std::string> out;
  for (auto& g : gens_) out.push_back(g.str());
  return out;
}

void Ideal::check_ring(const Ideal& other) const {
  if (!other.ring_->same_as(*ring_))
    throw std::invalid_argument("ring-mismatch between ideals");
}

namespace {

// Recompute generators of I inside a ring extended by a fresh variable "@t"
// placed first, under the elimination block order.
struct ElimSetup {
  RingPtr ext;
  std::vector<Polynomial> lift;  // images of the base variables
  Polynomial t;
};

ElimSetup extend_with_tag(const RingPtr& base) {
  std::vector<std::string> vars;
  vars.push_back("@t");
  for (auto& v : base->vars()) vars.push_back(v);
  auto ext = std::make_shared<PolyRing>(vars, base->characteristic(),
                                        Order::elim, 1);
  ElimSetup s;
  s.ext = ext;
  for (int i = 0; i < base->nvars(); ++i)
    s.lift.push_back(Polynomial::variable(ext, i + 1));
  s.t = Polynomial::variable(ext, 0);
  return s;
}

std::vector<Polynomial> drop_tag(const RingPtr& base,
                                 const std::vector<Polynomial>& gb) {
  std::vector<Polynomial> out;
  for (auto& g : gb) {
    bool uses_t = false;
    for (auto& term : g.terms())
      if (term.mono[0] != 0) uses_t = true;
    if (uses_t) continue;
    std::vector<Term> ts;
    for (auto& term : g.terms()) {
      Exponents e(term.mono.begin() + 1, term.mono.end());
      ts.push_back({std::move(e), term.coeff});
    }
    out.push_back(Polynomial(base, std::move(ts)));
  }
  return out;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  // t*I + (1-t)*J in S[t], eliminate t.
  ElimSetup s = extend_with_tag(I.ring());
  Polynomial one =
      Polynomial::constant(s.ext, Scalar::integer(1, s.ext->characteristic()));
  std::vector<Polynomial> gens;
  for (auto& f : I.gens()) gens.push_back(s.t * f.substitute(s.ext, s.lift));
  for (auto& g : J.gens())
    gens.push_back((one - s.t) * g.substitute(s.ext, s.lift));
  auto gb = reduced_groebner(gens);
  return Ideal(I.ring(), drop_tag(I.ring(), gb));
}

// (I : f) via (I intersect (f)) / f
Ideal quotient_by_poly(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(I.ring());
  Ideal inter = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> gens;
  for (auto& g : inter.gens()) gens.push_back(g.divide_exact(f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (J.gens().empty()) return Ideal::unit(I.ring());
  bool first = true;
  Ideal acc;
  for (auto& f : J.gens()) {
    Ideal q = quotient_by_poly(I, f);
    acc = first ? q : intersect(acc, q);
    first = false;
  }
  return acc;
}

}  // namespace

Ideal saturation_by(const Ideal& I, const Polynomial& f) {
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient_by_poly(cur, f);
    if (next.equals(cur)) return cur;
    cur = next;
  }
}

Ideal ideal_op(IdealOp kind, const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_as(*J.ring()))
    throw std::invalid_argument("ring-mismatch between ideals");
  switch (kind) {
    case IdealOp::sum: {
      std::vector<Polynomial> gens = I.gens();
      for (auto& g : J.gens()) gens.push_back(g);
      return Ideal(I.ring(), std::move(gens));
    }
    case IdealOp::product: {
      std::vector<Polynomial> gens;
      if (I.gens().empty() || J.gens().empty())
        return Ideal::zero(I.ring());
      for (auto& f : I.gens())
        for (auto& g : J.gens()) gens.push_back(f * g);
      return Ideal(I.ring(), std::move(gens));
    }
    case IdealOp::intersection:
      return intersect(I, J);
    case IdealOp::quotient:
      return quotient(I, J);
    case IdealOp::saturation: {
      // (I : J^inf): stabilized quotient chain
      Ideal cur = I;
      for (;;) {
        Ideal next = quotient(cur, J);
        if (next.equals(cur)) return cur;
        cur = next;
      }
    }
  }
  throw std::logic_error("unreachable");
}

bool radical_contains(const Ideal& I, const Ideal& J) {
  for (auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (!saturation_by(J, g).is_unit()) return false;
  }
  return true;
}

bool radical_member_bruteforce(const Polynomial& g, const Ideal& J, int bound) {
  Polynomial p = Polynomial::constant(
      g.ring(), Scalar::integer(1, g.ring()->characteristic()));
  for (int t = 1; t <= bound; ++t) {
    p = p * g;
    if (J.contains(p)) return true;
  }
  return false;
}

}  // namespace torsor
