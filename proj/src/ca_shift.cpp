#include "lcas/ca_shift.hpp"

#include <algorithm>
#include <vector>

namespace lcas {

CAShift::CAShift(Prime p, LaurentPoly phi) : phi_(std::move(phi)) {
    if (phi_.p() != p.value)
        throw DomainError("phi is over a different prime");
    if (phi_.dim() < 2)
        throw DomainError("a CA shift needs dimension at least 2");
    if (phi_.term_count() < 2)
        throw DomainError("phi must have at least two terms");
    for (const auto& [e, c] : phi_.terms())
        if (e.back() != 0)
            throw DomainError("phi may not involve the time axis");
}

LaurentPoly CAShift::annihilator() const {
    LaurentPoly p = LaurentPoly::monomial(phi_.prime(), unit_vec(dim(), dim() - 1), 1);
    p -= phi_;
    return p;
}

CAShift make_ca_shift(uint32_t p, size_t dim, std::string_view phi_text) {
    Prime prime(p);
    return CAShift(prime, parse_poly(phi_text, prime, dim));
}

LaurentPoly apply_transform(const NormalizeTransform& t, const LaurentPoly& a) {
    return translated(invert_axes(a, t.axis_mask), t.monomial).scaled(t.unit);
}

NormalizeResult ca_normalize(const LaurentPoly& a) {
    if (a.is_zero()) throw DomainError("cannot normalize the zero polynomial");
    const size_t d = a.dim();
    if (d < 2) throw DomainError("a CA shift needs dimension at least 2");
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
        LaurentPoly b = invert_axes(a, mask);
        // The final exponents must take exactly two adjacent values with a
        // single term on the upper level; that term becomes X_d.
        int64_t hi = b.terms().begin()->first.back();
        int64_t lo = hi;
        for (const auto& [e, c] : b.terms()) {
            hi = std::max(hi, e.back());
            lo = std::min(lo, e.back());
        }
        if (hi != lo + 1) continue;
        const ExpVec* top = nullptr;
        bool unique = true;
        for (const auto& [e, c] : b.terms()) {
            if (e.back() != hi) continue;
            if (top) unique = false;
            top = &e;
        }
        if (!unique) continue;
        if (b.term_count() < 3)
            throw DomainError("phi would have fewer than two terms");
        ExpVec m = vec_sub(unit_vec(d, d - 1), *top);
        uint32_t u = inv_mod(b.coeff(*top), b.p());
        LaurentPoly p = translated(b, m).scaled(u);
        LaurentPoly phi = LaurentPoly::monomial(b.prime(), unit_vec(d, d - 1), 1);
        phi -= p;
        return NormalizeResult{CAShift(a.prime(), phi), NormalizeTransform{mask, u, m}};
    }
    throw DomainError("no axis inversion gives CA form (X_d - phi)");
}

LaurentPoly substitute_time_axis(const LaurentPoly& q, const CAShift& ca) {
    if (q.dim() != ca.dim() || q.p() != ca.p())
        throw DomainError("polynomial and shift live in different rings");
    // split q into layers q_j * X_d^j and sum q_j * phi^j
    const size_t d = ca.dim();
    int64_t max_j = 0;
    std::map<int64_t, LaurentPoly> layers;
    for (const auto& [e, c] : q.terms()) {
        int64_t j = e.back();
        if (j < 0) throw DomainError("negative time exponent in substitution");
        max_j = std::max(max_j, j);
        ExpVec flat = e;
        flat[d - 1] = 0;
        auto [it, fresh] = layers.try_emplace(j, LaurentPoly(q.prime(), d));
        it->second.add_term(flat, c);
    }
    LaurentPoly result(q.prime(), d);
    LaurentPoly phi_pow = LaurentPoly::constant(q.prime(), d, 1);
    int64_t at = 0;
    for (const auto& [j, layer] : layers) {
        while (at < j) {
            phi_pow = phi_pow * ca.phi();
            ++at;
        }
        result += layer * phi_pow;
    }
    return result;
}

bool ideal_member(const LaurentPoly& q, const CAShift& ca) {
    if (q.dim() != ca.dim() || q.p() != ca.p())
        throw DomainError("polynomial and shift live in different rings");
    if (q.is_zero()) return true;
    int64_t min_j = 0;
    for (const auto& [e, c] : q.terms()) min_j = std::min(min_j, e.back());
    LaurentPoly cleared =
        min_j < 0 ? translated(q, unit_vec(q.dim(), q.dim() - 1, -min_j)) : q;
    return substitute_time_axis(cleared, ca).is_zero();
}

std::set<uint32_t> constant_points(const CAShift& ca) {
    std::set<uint32_t> pts{0};
    if (sub_mod(1, eval_all_ones(ca.phi()), ca.p()) == 0)
        for (uint32_t c = 1; c < ca.p(); ++c) pts.insert(c);
    return pts;
}

} // namespace lcas
