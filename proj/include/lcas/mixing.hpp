#pragma once

#include <cstdint>
#include <vector>

#include "lcas/language.hpp"

namespace lcas {

// Offsets {n_0, ..., n_k} with n_0 = 0, pairwise distinct.
struct PrimitiveSet {
    std::vector<ExpVec> offsets;

    explicit PrimitiveSet(std::vector<ExpVec> o) : offsets(std::move(o)) {
        if (offsets.empty() || !vec_is_zero(offsets.front()))
            throw DomainError("offset list must start with the zero vector");
        for (size_t i = 0; i < offsets.size(); ++i)
            for (size_t j = i + 1; j < offsets.size(); ++j)
                if (offsets[i] == offsets[j]) throw DomainError("offsets must be distinct");
    }
};

// A cylinder to be dragged along the offsets (no translation of its own).
struct BaseEvent {
    Window window;
    std::vector<uint32_t> values;
};

struct DilationRow {
    int64_t m;
    MeasureValue joint;
    MeasureValue product;
    bool equal;
};

struct DilationReport {
    PrimitiveSet offsets;
    std::vector<BaseEvent> events;
    std::vector<MeasureValue> factors; // measure of each event alone
    std::vector<DilationRow> rows;
};

// For each dilation m, compare the joint measure of the events pulled back
// along the dilated offsets, mu(A_0 and T^(-m n_1) A_1 and ...), with the
// product of the individual measures. T^n is multiplication by the monomial
// X^n, so the i-th event's cells land at (its window) - m*n_i.
DilationReport mixing_scan(const CAShift& ca, const std::vector<BaseEvent>& events,
                           const PrimitiveSet& offsets, const std::vector<int64_t>& dilations,
                           const Budget& b = {});

// Dilations 2..16 plus the powers of p up to mmax.
std::vector<int64_t> default_dilations(uint32_t p, int64_t mmax);

struct CertificateRow {
    uint32_t j;
    int64_t m; // p^j
    MeasureValue joint;
};

struct CertificateReport {
    LaurentPoly multiplier;
    LaurentPoly q; // multiplier * annihilator
    PrimitiveSet offsets;
    std::vector<CertificateRow> rows;
    MeasureValue product; // product of the single-cell measures, never zero
    bool witnessed;       // every tested joint measure was zero
};

// Witness non-mixing along the support of q = r * (X_d - phi): prescribe
// value 1 at the translated origin and 0 at the other support offsets; the
// joint cylinder is empty at every dilation p^j because the corresponding
// coefficient of q^(p^j) * x would be nonzero.
CertificateReport nonmixing_certificate(const CAShift& ca, const LaurentPoly& multiplier,
                                        uint32_t jmax, const Budget& b = {});

struct HorizontalRow {
    int64_t m;
    MeasureValue joint;
    MeasureValue product;
    bool equal;
};

struct HorizontalReport {
    PrimitiveSet offsets;
    std::vector<HorizontalRow> rows;
    bool found;
    int64_t m0; // least m0 with equality for all tested m >= m0 (when found)
};

// Offsets with zero final coordinate index cells inside a single layer, which
// projects onto the full shift; scan m = 1..mmax and report the least m0 from
// which joint and product agree. Events default to the certificate's pattern
// (value 1 at the first offset, 0 elsewhere) when the list is empty.
HorizontalReport horizontal_mixing_check(const CAShift& ca, const PrimitiveSet& offsets,
                                         std::vector<BaseEvent> events, int64_t mmax,
                                         const Budget& b = {});

} // namespace lcas
