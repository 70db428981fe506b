#pragma once

#include <set>

#include "lcas/laurent.hpp"

namespace lcas {

// The Markov subgroup annihilated by P = X_d - Phi, where Phi is a Laurent
// polynomial in the first d-1 variables with at least two terms. The d-th
// coordinate is the time axis: one step from a layer to the layer below is
// convolution with Phi's coefficients.
class CAShift {
public:
    // phi is given embedded in the full ring: every term has final exponent 0.
    CAShift(Prime p, LaurentPoly phi);

    uint32_t p() const { return phi_.p(); }
    Prime prime() const { return phi_.prime(); }
    size_t dim() const { return phi_.dim(); }
    const LaurentPoly& phi() const { return phi_; }
    LaurentPoly annihilator() const; // X_d - Phi

private:
    LaurentPoly phi_;
};

// Convenience: parse Phi over x1..x(d-1) and build the shift.
CAShift make_ca_shift(uint32_t p, size_t dim, std::string_view phi_text);

// Records how an annihilator was brought to CA form:
//   P = unit * X^monomial * (A with the masked axes inverted).
struct NormalizeTransform {
    uint32_t axis_mask; // bit i-1 set means axis i was inverted
    uint32_t unit;
    ExpVec monomial;
};

struct NormalizeResult {
    CAShift shift;
    NormalizeTransform transform;
};

LaurentPoly apply_transform(const NormalizeTransform& t, const LaurentPoly& a);

// Search axis inversions (mask order, identity first) and monomial unit
// multiples for a presentation u * X^m * A' = X_d - Phi. Fails when no
// inversion exposes a unique top layer one step above the rest, or when the
// resulting Phi would have fewer than two terms.
NormalizeResult ca_normalize(const LaurentPoly& a);

// Membership of q in the principal ideal <X_d - Phi> of the Laurent ring:
// clear negative powers of X_d (a unit), then substitute X_d -> Phi and test
// for zero. Valid since X_d - Phi is monic in X_d.
bool ideal_member(const LaurentPoly& q, const CAShift& ca);

// Substitute Phi for X_d; q must have no negative X_d exponents.
LaurentPoly substitute_time_axis(const LaurentPoly& q, const CAShift& ca);

// Fixed points of all coordinate shifts inside the group: constants c with
// c * P(1,...,1) = 0, i.e. all of F_p when the coefficients of P sum to zero
// and {0} otherwise.
std::set<uint32_t> constant_points(const CAShift& ca);

} // namespace lcas
