#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "lcas/exponents.hpp"
#include "lcas/fp.hpp"

namespace lcas {

// Support of a polynomial: the set of exponent vectors with nonzero coefficient.
using Shape = std::set<ExpVec>;

// Laurent polynomial over F_p in `dim` variables. Terms are kept normalized:
// coefficients are canonical residues in 1..p-1 and zero terms are never stored,
// so equal polynomials compare equal structurally and iterate in lexicographic
// exponent order.
class LaurentPoly {
public:
    LaurentPoly(Prime p, size_t dim);

    static LaurentPoly constant(Prime p, size_t dim, uint32_t c);
    static LaurentPoly monomial(Prime p, const ExpVec& e, uint32_t c = 1);

    uint32_t p() const { return p_.value; }
    Prime prime() const { return p_; }
    size_t dim() const { return dim_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, uint32_t>& terms() const { return terms_; }

    uint32_t coeff(const ExpVec& e) const;
    void add_term(const ExpVec& e, uint32_t c); // accumulates, renormalizes

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(uint32_t c) const;

private:
    Prime p_;
    size_t dim_;
    std::map<ExpVec, uint32_t> terms_;

    void check_compatible(const LaurentPoly& o) const;
};

LaurentPoly pow(const LaurentPoly& a, uint64_t e);

// a^(p^e) computed through the Frobenius endomorphism: coefficients are fixed
// by c^p = c and every exponent vector scales by p^e.
LaurentPoly frobenius_power(const LaurentPoly& a, uint32_t e);

Shape shape(const LaurentPoly& a); // error on the zero polynomial

// Translate so the lexicographically smallest point sits at the origin.
// Returns the translated shape and the offset that was subtracted.
std::pair<Shape, ExpVec> primitive_translate(const Shape& s);

struct CollinearSupport {
    ExpVec direction; // primitive, first nonzero component positive
    int64_t step;     // gcd of positions along the line, > 0
};

// If the support lies on one arithmetic progression, return its primitive
// direction and step: a = X^s0 * B(X^(step*direction)) for univariate B.
// A single monomial reports "none" by convention.
std::optional<CollinearSupport> collinear_support(const LaurentPoly& a);

// Multiply by the monomial X^e.
LaurentPoly translated(const LaurentPoly& a, const ExpVec& e);

// Ring automorphism sending X_i -> X_i^-1 for every axis i with bit (i-1) set.
LaurentPoly invert_axes(const LaurentPoly& a, uint32_t axis_mask);

uint32_t eval_all_ones(const LaurentPoly& a); // sum of coefficients mod p

// Exact division in the Laurent ring: returns q with a = q*b, or nullopt
// when b does not divide a. b must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Grammar (ASCII, whitespace ignored):
//   poly   := term (('+'|'-') term)*
//   term   := [coeff '*'?] factor*
//   factor := 'x' index ('^' signed-int)?
//   coeff  := unsigned-int
// Variable indices run 1..dim. Coefficients reduce mod p.
LaurentPoly parse_poly(std::string_view text, Prime p, size_t dim);

// Canonical form: terms in lexicographic exponent order, coefficients as
// canonical residues, joined by '+'. Parses back to the same polynomial.
std::string to_string(const LaurentPoly& a);

} // namespace lcas
