#ifndef TORSOR_TORSION_HPP
#define TORSOR_TORSION_HPP

#include <vector>

#include "torsor/fmodule.hpp"
#include "torsor/ideal.hpp"
#include "torsor/support.hpp"

namespace torsor {

constexpr int kGammaStepCap = 64;

/// Certificate for Gamma_I(M): the ascending chain (0 :_M I^t) with its
/// stabilization index. Finite backend: element subsets of M; polynomial
/// backend: the ideals L_t with (0 : I^t) = L_t / K.
struct TorsionChainFinite {
  std::vector<int> ideal_gens;
  std::vector<std::vector<int>> steps;  // ascending element subsets
  int stable_index = 0;                 // steps[stable_index] == steps[stable_index+1]
};

struct TorsionChainPoly {
  Ideal ideal;
  std::vector<Ideal> steps;  // L_t = (K : I^t)
  int stable_index = 0;
};

struct GammaFinite {
  SubmoduleView sub;  // Gamma_I(M) inside M, with inclusion
  TorsionChainFinite chain;
};

struct GammaPoly {
  Ideal ambient_relations;  // K, the module being S/K
  Ideal result;             // L with Gamma = L/K (K subset of L)
  TorsionChainPoly chain;
};

/// Gamma_I(M) = union_t (0 :_M I^t) over a finite ring, I given by element
/// generators. Throws std::domain_error("stabilization-cap-exceeded") if the
/// chain fails to stabilize within the step cap.
GammaFinite gamma(const std::vector<int>& ideal_gens, const FModulePtr& M);

/// Gamma_I(S/K) for a cyclic polynomial module.
GammaPoly gamma(const Ideal& I, const Ideal& K);

/// Gamma_I(L/K), the submodule form needed for iterated application.
Ideal gamma_on_submodule(const Ideal& I, const Ideal& K, const Ideal& L);

/// Support-side computation over a finite ring: elements of M that localize
/// to zero at every prime outside Z.
SubmoduleView gamma_by_support(const StableSet& Z, const FModulePtr& M);

/// Finite chain of module maps standing in for a filtered system; checks
/// colim Gamma_I(M_j) = Gamma_I(colim M_j) via the coequalizer construction.
bool gamma_colimit_check(const std::vector<int>& ideal_gens,
                         const std::vector<FModulePtr>& modules,
                         const std::vector<ModuleHom>& maps);

/// Polynomial variant for an inclusion chain K <= L_1 <= ... <= L_k <= S.
bool gamma_colimit_check(const Ideal& I, const Ideal& K,
                         const std::vector<Ideal>& inclusion_chain);

/// colimit of a finite chain by the coequalizer construction:
/// (+)M_j / <in_j(x) - in_{j+1}(f_j x)>, with its insertion maps.
struct ChainColimit {
  FModulePtr module;
  std::vector<ModuleHom> insertions;
};
ChainColimit chain_colimit(const std::vector<FModulePtr>& modules,
                           const std::vector<ModuleHom>& maps);

}  // namespace torsor

#endif
