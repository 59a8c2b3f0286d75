#include "torsor/torsion.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <stdexcept>

namespace torsor {

namespace {

// products of exactly t generators, deduped
std::vector<int> power_products(const FiniteRing& R, const std::vector<int>& gens,
                                const std::vector<int>& prev) {
  std::set<int> out;
  for (int g : gens)
    for (int p : prev) out.insert(R.mul(g, p));
  return {out.begin(), out.end()};
}

std::vector<int> killed_by(const FModulePtr& M, const std::vector<int>& mults) {
  std::vector<int> out;
  for (int x = 0; x < M->size(); ++x) {
    bool dead = true;
    for (int s : mults)
      if (M->act(s, x) != 0) {
        dead = false;
        break;
      }
    if (dead) out.push_back(x);
  }
  return out;
}

}  // namespace

GammaFinite gamma(const std::vector<int>& ideal_gens, const FModulePtr& M) {
  const auto& R = *M->ring();
  TorsionChainFinite chain;
  chain.ideal_gens = ideal_gens;
  std::vector<int> products = ideal_gens;  // generators of I^t
  for (int t = 1; t <= kGammaStepCap + 1; ++t) {
    std::vector<int> step = killed_by(M, products);
    if (!chain.steps.empty() && step == chain.steps.back()) {
      chain.stable_index = t - 2;
      chain.steps.push_back(step);
      return GammaFinite{submodule(M, chain.steps.back()), chain};
    }
    chain.steps.push_back(step);
    products = power_products(R, ideal_gens, products);
  }
  throw std::domain_error("stabilization-cap-exceeded");
}

GammaPoly gamma(const Ideal& I, const Ideal& K) {
  GammaPoly out;
  out.ambient_relations = K;
  out.chain.ideal = I;
  Ideal power = I;
  for (int t = 1; t <= kGammaStepCap + 1; ++t) {
    Ideal step = ideal_op(IdealOp::quotient, K, power);
    if (!out.chain.steps.empty() && step.equals(out.chain.steps.back())) {
      out.chain.stable_index = t - 2;
      out.chain.steps.push_back(step);
      out.result = out.chain.steps.back();
      return out;
    }
    out.chain.steps.push_back(step);
    power = ideal_op(IdealOp::product, power, I);
  }
  throw std::domain_error("stabilization-cap-exceeded");
}

Ideal gamma_on_submodule(const Ideal& I, const Ideal& K, const Ideal& L) {
  Ideal full = gamma(I, K).result;
  return ideal_op(IdealOp::intersection, full, L);
}

SubmoduleView gamma_by_support(const StableSet& Z, const FModulePtr& M) {
  if (!Z.model().is_finite())
    throw std::domain_error("unsupported-backend: support path needs a finite ring");
  const auto& R = *M->ring();
  std::vector<int> keep;
  for (int x = 0; x < M->size(); ++x) {
    bool dies_outside = true;
    for (int pi = 0; pi < R.num_primes(); ++pi) {
      if (Z.contains_prime(pi)) continue;
      if (M->act(R.local_idempotents()[pi], x) != 0) {
        dies_outside = false;
        break;
      }
    }
    if (dies_outside) keep.push_back(x);
  }
  return submodule(M, keep);
}

ChainColimit chain_colimit(const std::vector<FModulePtr>& modules,
                           const std::vector<ModuleHom>& maps) {
  if (modules.empty()) throw std::invalid_argument("empty chain");
  if (maps.size() + 1 != modules.size())
    throw std::invalid_argument("chain arity mismatch");
  SumView sum = direct_sum(modules);
  std::vector<int> rel_gens;
  for (size_t j = 0; j + 1 < modules.size(); ++j)
    for (int g : modules[j]->gens()) {
      int a = sum.into[j](g);
      int b = sum.into[j + 1](maps[j](g));
      rel_gens.push_back(sum.module->sub(a, b));
    }
  SubmoduleView rel = submodule(sum.module, rel_gens);
  QuotientView q = quotient(sum.module, rel);
  ChainColimit out;
  out.module = q.module;
  for (size_t j = 0; j < modules.size(); ++j)
    out.insertions.push_back(sum.into[j].then(q.projection));
  return out;
}

bool gamma_colimit_check(const std::vector<int>& ideal_gens,
                         const std::vector<FModulePtr>& modules,
                         const std::vector<ModuleHom>& maps) {
  // right side: Gamma_I of the colimit
  ChainColimit colim = chain_colimit(modules, maps);
  GammaFinite right = gamma(ideal_gens, colim.module);

  // left side: colimit of the Gamma chain, with restricted maps
  std::vector<FModulePtr> gmods;
  std::vector<SubmoduleView> gsubs;
  for (auto& m : modules) {
    gsubs.push_back(gamma(ideal_gens, m).sub);
    gmods.push_back(gsubs.back().module);
  }
  std::vector<ModuleHom> gmaps;
  for (size_t j = 0; j + 1 < modules.size(); ++j) {
    // restriction of f_j to the torsion submodules
    std::vector<int> reverse(modules[j + 1]->size(), -1);
    for (int i = 0; i < gmods[j + 1]->size(); ++i)
      reverse[gsubs[j + 1].inclusion(i)] = i;
    std::vector<int> table(gmods[j]->size());
    for (int i = 0; i < gmods[j]->size(); ++i) {
      int img = maps[j](gsubs[j].inclusion(i));
      int idx = reverse[img];
      if (idx < 0) throw std::logic_error("torsion not preserved by chain map");
      table[i] = idx;
    }
    gmaps.push_back(ModuleHom{gmods[j], gmods[j + 1], std::move(table)});
  }
  ChainColimit gcolim = chain_colimit(gmods, gmaps);

  // natural map colim Gamma(M_j) -> Gamma(colim M_j), on generator classes
  std::vector<int> reverse(colim.module->size(), -1);
  for (int i = 0; i < right.sub.module->size(); ++i)
    reverse[right.sub.inclusion(i)] = i;
  std::unordered_map<int, int> img_of_class;
  for (size_t j = 0; j < gmods.size(); ++j)
    for (int g : gmods[j]->gens()) {
      int cls = gcolim.insertions[j](g);
      int amb = colim.insertions[j](gsubs[j].inclusion(g));
      int idx = reverse[amb];
      if (idx < 0) return false;  // lands outside the torsion part
      img_of_class.emplace(cls, idx);
    }
  std::vector<int> images;
  for (int g : gcolim.module->gens()) {
    auto it = img_of_class.find(g);
    if (it == img_of_class.end())
      throw std::logic_error("colimit generator bookkeeping mismatch");
    images.push_back(it->second);
  }
  ModuleHom nat;
  try {
    nat = ModuleHom::from_gen_images(gcolim.module, right.sub.module, images);
  } catch (const std::domain_error&) {
    return false;
  }
  return nat.is_bijective();
}

bool gamma_colimit_check(const Ideal& I, const Ideal& K,
                         const std::vector<Ideal>& inclusion_chain) {
  // verify the chain is increasing
  for (size_t j = 0; j + 1 < inclusion_chain.size(); ++j)
    if (!inclusion_chain[j + 1].contains(inclusion_chain[j]))
      throw std::invalid_argument("not an inclusion chain");
  // colim = last member; Gamma commutes iff the sum of the torsion parts
  // equals the torsion of the last member
  Ideal rhs = gamma_on_submodule(I, K, inclusion_chain.back());
  Ideal lhs = Ideal::zero(K.ring());
  for (auto& L : inclusion_chain)
    lhs = ideal_op(IdealOp::sum, lhs, gamma_on_submodule(I, K, L));
  return lhs.equals(rhs);
}

}  // namespace torsor
