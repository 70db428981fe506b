#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcas/ca_shift.hpp"
#include "lcas/linalg.hpp"
#include "lcas/window.hpp"

namespace lcas {

// Resource limits. Exceeding one raises BudgetError before any partial work
// is returned.
struct Budget {
    size_t max_window_cells = 24;
    size_t max_top_sites = size_t(1) << 20;       // top-slice region
    uint64_t max_rule_candidates = uint64_t(1) << 16;
    uint64_t max_enumeration = uint64_t(1) << 20; // language / pair enumeration
};

// Linear presentation of a window's contents in terms of the top slice.
// Every cell (s, t) of the window is the convolution of the layer at the top
// time t1 with the coefficients of phi^(t1 - t):
//   x(s, t) = sum over u of coeff(phi^(t1-t), s - u) * y(u),
// so the rows of `matrix` (one per window cell, columns indexed by `region`)
// push an arbitrary top-slice assignment y down onto the window. Assignments
// on the region extend both downward (deterministically) and upward
// (convolution by phi is onto, since its dual, multiplication by phi in the
// polynomial ring, is injective), so the image of the matrix is exactly the
// window language and uniform y gives the Haar marginal.
struct TopSliceSystem {
    int64_t top_time = 0;
    Window window; // d-dimensional cells
    Window region; // (d-1)-dimensional top-slice sites
    std::vector<std::vector<uint32_t>> matrix;
};

TopSliceSystem top_slice_system(const CAShift& ca, const Window& w, const Budget& b = {});

// The set of restrictions of group elements to a window, as an F_p-subspace
// with its canonical reduced echelon basis. Elements are indexed 0..p^rank-1
// by their basis coordinates, least significant digit first; index 0 is the
// zero configuration.
class LanguageSubspace {
public:
    LanguageSubspace(Window w, FpEchelon basis);

    const Window& window() const { return window_; }
    const FpEchelon& basis() const { return basis_; }
    size_t rank() const { return basis_.rank(); }
    uint32_t p() const { return basis_.p(); }

    uint64_t size() const; // p^rank; error when it would not fit in 64 bits
    bool contains(const std::vector<uint32_t>& values) const;
    std::vector<uint32_t> element(uint64_t index) const;
    std::optional<uint64_t> index_of(const std::vector<uint32_t>& values) const;

private:
    Window window_;
    FpEchelon basis_;
};

// Window language through the top-slice presentation.
LanguageSubspace language(const CAShift& ca, const Window& w, const Budget& b = {});

// Fallback for an arbitrary nonzero annihilator polynomial: intersect the
// kernels of all annihilator translates that fit inside an inflated window
// and project back, inflating until two consecutive projections coincide.
LanguageSubspace language_generic(const LaurentPoly& annihilator, const Window& w,
                                  const Budget& b = {});

// Exact Haar measure of a finite intersection of cylinders: either zero or a
// power p^-k, never a float.
struct MeasureValue {
    bool is_zero;
    uint64_t exponent; // measure = p^-exponent when not zero

    static MeasureValue zero() { return {true, 0}; }
    static MeasureValue p_power(uint64_t k) { return {false, k}; }

    friend bool operator==(MeasureValue a, MeasureValue b) {
        return a.is_zero == b.is_zero && (a.is_zero || a.exponent == b.exponent);
    }
};

std::string to_string(MeasureValue m);

// One cylinder: the prescribed values on window + offset.
struct CylinderEvent {
    Window window;
    std::vector<uint32_t> values;
    ExpVec offset;
};

// Measure of the joint cylinder. Conflicting prescriptions on a shared cell
// give zero; a prescription outside the window language gives zero; otherwise
// the result is p^-rank of the union window's language.
MeasureValue cylinder_measure(const CAShift& ca, std::span<const CylinderEvent> events,
                              const Budget& b = {});

// Haar-uniform draw of a window restriction: push a uniform top-slice
// assignment through the top-slice matrix. Deterministic for a fixed seed.
Configuration sample_point(const CAShift& ca, const Window& w, uint64_t seed,
                           const Budget& b = {});

} // namespace lcas
