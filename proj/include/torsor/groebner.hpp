#ifndef TORSOR_GROEBNER_HPP
#define TORSOR_GROEBNER_HPP

#include <vector>

#include "torsor/poly.hpp"

namespace torsor {

/// Full normal form of f against basis (every term reduced).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger with the coprime-leading-term criterion, followed by
/// minimalization and inter-reduction. The result is the unique reduced
/// Groebner basis (monic, sorted descending by leading monomial).
std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens);

/// Checks that every S-polynomial of basis pairs reduces to zero.
bool buchberger_certificate(const std::vector<Polynomial>& basis);

}  // namespace torsor

#endif
