#include "lcas/mixing.hpp"

#include <algorithm>

namespace lcas {

namespace {

MeasureValue product_of(const std::vector<MeasureValue>& factors) {
    uint64_t k = 0;
    for (const MeasureValue& f : factors) {
        if (f.is_zero) return MeasureValue::zero();
        k += f.exponent;
    }
    return MeasureValue::p_power(k);
}

MeasureValue joint_at(const CAShift& ca, const std::vector<BaseEvent>& events,
                      const PrimitiveSet& offsets, int64_t m, const Budget& b) {
    std::vector<CylinderEvent> translated;
    translated.reserve(events.size());
    for (size_t i = 0; i < events.size(); ++i)
        translated.push_back(
            {events[i].window, events[i].values, vec_scale(-m, offsets.offsets[i])});
    return cylinder_measure(ca, translated, b);
}

std::vector<MeasureValue> single_factors(const CAShift& ca,
                                         const std::vector<BaseEvent>& events,
                                         const Budget& b) {
    std::vector<MeasureValue> factors;
    factors.reserve(events.size());
    for (const BaseEvent& ev : events) {
        CylinderEvent single{ev.window, ev.values, ExpVec(ca.dim(), 0)};
        factors.push_back(cylinder_measure(ca, std::span(&single, 1), b));
    }
    return factors;
}

void check_events(const CAShift& ca, const std::vector<BaseEvent>& events,
                  const PrimitiveSet& offsets) {
    if (events.size() != offsets.offsets.size())
        throw DomainError("need exactly one event per offset");
    for (const ExpVec& n : offsets.offsets)
        if (n.size() != ca.dim()) throw DomainError("offset dimension does not match the shift");
}

} // namespace

DilationReport mixing_scan(const CAShift& ca, const std::vector<BaseEvent>& events,
                           const PrimitiveSet& offsets, const std::vector<int64_t>& dilations,
                           const Budget& b) {
    check_events(ca, events, offsets);
    DilationReport report{offsets, events, single_factors(ca, events, b), {}};
    MeasureValue product = product_of(report.factors);
    for (int64_t m : dilations) {
        if (m < 1) throw DomainError("dilations must be positive");
        MeasureValue joint = joint_at(ca, events, offsets, m, b);
        report.rows.push_back({m, joint, product, joint == product});
    }
    return report;
}

std::vector<int64_t> default_dilations(uint32_t p, int64_t mmax) {
    std::vector<int64_t> ds;
    for (int64_t m = 2; m <= std::min<int64_t>(16, mmax); ++m) ds.push_back(m);
    for (int64_t m = p; m <= mmax; m *= p) {
        if (std::find(ds.begin(), ds.end(), m) == ds.end()) ds.push_back(m);
        if (m > mmax / p) break;
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

CertificateReport nonmixing_certificate(const CAShift& ca, const LaurentPoly& multiplier,
                                        uint32_t jmax, const Budget& b) {
    if (multiplier.is_zero()) throw DomainError("multiplier must be nonzero");
    if (multiplier.dim() != ca.dim() || multiplier.p() != ca.p())
        throw DomainError("multiplier and shift live in different rings");
    LaurentPoly q = multiplier * ca.annihilator();
    auto [sq, base] = primitive_translate(shape(q));
    PrimitiveSet offsets{std::vector<ExpVec>(sq.begin(), sq.end())};

    Window origin(std::vector<ExpVec>{ExpVec(ca.dim(), 0)});
    std::vector<BaseEvent> events;
    events.reserve(offsets.offsets.size());
    for (size_t i = 0; i < offsets.offsets.size(); ++i)
        events.push_back({origin, {i == 0 ? 1u : 0u}});

    CertificateReport report{multiplier, q, offsets, {}, MeasureValue::p_power(0), true};
    report.product = product_of(single_factors(ca, events, b));
    int64_t m = 1;
    for (uint32_t j = 1; j <= jmax; ++j) {
        if (m > (int64_t(1) << 40) / int64_t(ca.p()))
            throw BudgetError("dilation power out of range");
        m *= ca.p();
        MeasureValue joint = joint_at(ca, events, offsets, m, b);
        if (!joint.is_zero) report.witnessed = false;
        report.rows.push_back({j, m, joint});
    }
    return report;
}

HorizontalReport horizontal_mixing_check(const CAShift& ca, const PrimitiveSet& offsets,
                                         std::vector<BaseEvent> events, int64_t mmax,
                                         const Budget& b) {
    for (const ExpVec& n : offsets.offsets) {
        if (n.size() != ca.dim())
            throw DomainError("offset dimension does not match the shift");
        if (n.back() != 0)
            throw DomainError("horizontal offsets need a zero final coordinate");
    }
    if (events.empty()) {
        Window origin(std::vector<ExpVec>{ExpVec(ca.dim(), 0)});
        for (size_t i = 0; i < offsets.offsets.size(); ++i)
            events.push_back({origin, {i == 0 ? 1u : 0u}});
    }
    check_events(ca, events, offsets);
    if (mmax < 1) throw DomainError("mmax must be positive");

    MeasureValue product = product_of(single_factors(ca, events, b));
    HorizontalReport report{offsets, {}, false, 0};
    for (int64_t m = 1; m <= mmax; ++m) {
        MeasureValue joint = joint_at(ca, events, offsets, m, b);
        report.rows.push_back({m, joint, product, joint == product});
    }
    int64_t m0 = mmax + 1;
    for (int64_t m = mmax; m >= 1 && report.rows[size_t(m - 1)].equal; --m) m0 = m;
    if (m0 <= mmax) {
        report.found = true;
        report.m0 = m0;
    }
    return report;
}

} // namespace lcas
