#include "torsor/groebner.hpp"

#include <algorithm>

namespace torsor {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial rem = f;
  std::vector<Term> kept;  // fully reduced terms, collected in order
  while (!rem.is_zero()) {
    bool reduced = false;
    for (auto& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.leading_mono(), rem.leading_mono())) {
        Exponents q = mono_div(rem.leading_mono(), g.leading_mono());
        Scalar c = rem.leading_coeff() / g.leading_coeff();
        rem = rem - g.times_mono(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // the leading term is irreducible; move it out and continue below it
      kept.push_back(rem.terms().front());
      std::vector<Term> tail(rem.terms().begin() + 1, rem.terms().end());
      rem = Polynomial(rem.ring(), std::move(tail));
    }
  }
  return Polynomial(f.ring(), std::move(kept));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Exponents l = mono_lcm(f.leading_mono(), g.leading_mono());
  Exponents qf = mono_div(l, f.leading_mono());
  Exponents qg = mono_div(l, g.leading_mono());
  return f.times_mono(qf, f.leading_coeff().inverse()) -
         g.times_mono(qg, g.leading_coeff().inverse());
}

std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return basis;

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) pairs.push_back({j, i});

  auto lcm_degree = [&](const std::pair<size_t, size_t>& pr) {
    Exponents l =
        mono_lcm(basis[pr.first].leading_mono(), basis[pr.second].leading_mono());
    int d = 0;
    for (int e : l) d += e;
    return d;
  };

  while (!pairs.empty()) {
    // normal strategy: process the pair with the smallest lcm degree
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (lcm_degree(pairs[k]) < lcm_degree(pairs[best])) best = k;
    std::swap(pairs[best], pairs.back());
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const Exponents& a = basis[i].leading_mono();
    const Exponents& b = basis[j].leading_mono();
    // Buchberger's first criterion: coprime leading monomials
    bool coprime = true;
    for (size_t k = 0; k < a.size(); ++k)
      if (a[k] > 0 && b[k] > 0) {
        coprime = false;
        break;
      }
    if (coprime) continue;
    Polynomial s = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (!s.is_zero()) {
      basis.push_back(s);
      for (size_t k = 0; k + 1 < basis.size(); ++k)
        pairs.push_back({k, basis.size() - 1});
    }
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (mono_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
        keep[i] = false;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i].monic());

  // inter-reduce: fully reduce each against the others
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }

  const PolyRing& ring = *reduced.front().ring();
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& x, const Polynomial& y) {
              return ring.mono_greater(x.leading_mono(), y.leading_mono());
            });
  return reduced;
}

bool buchberger_certificate(const std::vector<Polynomial>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero())
        return false;
  return true;
}

}  // namespace torsor
