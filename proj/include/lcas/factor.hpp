#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcas/laurent.hpp"

namespace lcas {

// Complete factorization of a univariate Laurent polynomial:
//   input = unit * X^monomial * prod(factors[i] ^ multiplicity[i]).
// Every factor is monic, non-monomial, irreducible, with nonzero constant
// term; factors are sorted by degree and then by coefficients, so the output
// is reproducible.
struct Factorization {
    uint32_t unit;
    ExpVec monomial;
    std::vector<std::pair<LaurentPoly, uint32_t>> factors;
};

// Cantor-Zassenhaus factorization (squarefree, distinct-degree, equal-degree
// splitting). The splitting elements come from a counter-based generator
// seeded from the input polynomial, so runs are deterministic. The input must
// be nonzero and use at most one variable; constants and monomials yield an
// empty factor list.
Factorization univariate_factor(const LaurentPoly& a);

LaurentPoly factorization_product(const Factorization& f, Prime p, size_t dim);

} // namespace lcas
