#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcas/factor.hpp"
#include "lcas/language.hpp"

namespace lcas {

// A local rule gamma: values on the language over its shape, one table entry
// per language element in index order. table[0] = 0 keeps gamma(0) = 0.
struct LocalRule {
    LanguageSubspace domain;
    std::vector<uint32_t> table;

    LocalRule(LanguageSubspace d, std::vector<uint32_t> t);

    uint32_t apply(const std::vector<uint32_t>& values) const; // values on the shape
};

// Slide the rule across x: output cell k = gamma(x restricted to k + shape),
// defined on every k with k + shape inside x's window. Errors when no k fits
// or a restriction falls outside the rule's language.
Configuration apply_local_rule(const LocalRule& rule, const Configuration& x);

// The sliding map sends src into dst iff for every window restriction w of
// src over the union of shape - n (n in the support of dst's annihilator),
//   sum over n of coeff(dst annihilator, n) * gamma(w restricted to shape - n) = 0.
bool equivariance_check(const LocalRule& rule, const CAShift& src, const CAShift& dst,
                        const Budget& b = {});

// gamma(c + c') = gamma(c) + gamma(c') over all pairs of language elements.
bool additivity_check(const LocalRule& rule, const Budget& b = {});

// Families C assign a language element to every support point of either phi.
// Checks gamma(sum coeff(phi_src, n) C(n)) = sum coeff(phi_dst, n) gamma(C(n)),
// exhaustively when the family count is within `trials`, else on `trials`
// sampled families.
bool functional_eq_check(const LocalRule& rule, const CAShift& src, const CAShift& dst,
                         uint64_t trials, uint64_t seed = 0);

struct FoundRule {
    LocalRule rule;
    bool additive;
    std::optional<LaurentPoly> representative; // R with rule = coefficient window of R*x
};

struct HomSearchResult {
    std::vector<FoundRule> rules;
    uint64_t candidates;    // p^(|L_S| - 1), the searched table space
    bool expected_trivial;  // support(src annihilator) not inside support(dst annihilator)
};

// All local rules on the shape that carry src into dst, in table order. The
// equivariance conditions are linear in the table, so the search solves for
// the kernel and then re-verifies every solution directly. When the support
// inclusion fails, anything beyond the zero rule is a hard error.
HomSearchResult hom_search(const CAShift& src, const CAShift& dst, const Shape& s,
                           const Budget& b = {});

// A dual-hom class in the quotient ring modulo the annihilator, written
// without the time variable: numerator / phi^denominator_power in lowest
// terms (phi does not divide the numerator unless the power is zero).
struct DualHom {
    LaurentPoly numerator;
    uint32_t phi_power;

    friend bool operator==(const DualHom& a, const DualHom& b) {
        return a.phi_power == b.phi_power && a.numerator == b.numerator;
    }
};

std::string to_string(const DualHom& h);

// Canonical form of r modulo the annihilator: clear negative time exponents,
// substitute X_d -> phi, and cancel phi from the resulting fraction.
DualHom reduce_dual(const LaurentPoly& r, const CAShift& ca);

// Does multiplication by r map src's group into dst's group, i.e. does the
// src annihilator divide (dst annihilator) * r?
bool poly_map_check(const CAShift& src, const CAShift& dst, const LaurentPoly& r);

// Enumerate all r supported on the bound, keep those passing poly_map_check,
// and return the distinct classes modulo src's annihilator.
std::vector<DualHom> dual_hom_search(const CAShift& src, const CAShift& dst,
                                     const Shape& support_bound, const Budget& b = {});

// r * rinv = 1 modulo the annihilator.
bool verify_unit_pair(const CAShift& ca, const LaurentPoly& r, const LaurentPoly& rinv);

struct UnitGenerator {
    std::string name;
    LaurentPoly element;
    LaurentPoly inverse_witness; // verify_unit_pair(ca, element, inverse_witness)
};

// The automorphisms are the units of the coefficient ring localized at the
// variables and at phi: a torsion part F_p^* and a free part generated by the
// spatial variables together with the distinct irreducible factors of phi.
struct AutDescription {
    uint32_t torsion_order;     // p - 1
    uint32_t torsion_generator; // smallest primitive root mod p
    std::vector<UnitGenerator> free_generators;
    size_t rank;
    bool monomial_only;     // phi irreducible: every unit is c * X^n with X_d = phi
    bool factors_verified;  // false when irreducibility came from a caller hint
    Factorization phi_factors;
};

// Factors phi automatically when it is univariate; higher-dimensional phi
// needs a caller-supplied factorization, which is product-checked but whose
// irreducibility is taken on faith.
AutDescription aut_group(const CAShift& ca,
                         const std::optional<Factorization>& factor_hint = std::nullopt);

} // namespace lcas
