#include "lcas/language.hpp"

#include <algorithm>
#include <map>

#include "lcas/rng.hpp"

namespace lcas {

namespace {

void check_window_budget(const Window& w, const Budget& b) {
    if (w.size() > b.max_window_cells)
        throw BudgetError("window has " + std::to_string(w.size()) + " cells, budget is " +
                          std::to_string(b.max_window_cells));
}

ExpVec drop_time(const ExpVec& cell) { return ExpVec(cell.begin(), cell.end() - 1); }

} // namespace

TopSliceSystem top_slice_system(const CAShift& ca, const Window& w, const Budget& b) {
    check_window_budget(w, b);
    if (w.empty()) return TopSliceSystem{0, w, Window(), {}};
    if (w.cell(0).size() != ca.dim())
        throw DomainError("window dimension does not match the shift");

    int64_t t1 = w.cell(0).back();
    for (const ExpVec& c : w.cells()) t1 = std::max(t1, c.back());

    // phi powers, reindexed to the spatial coordinates only
    int64_t max_depth = 0;
    for (const ExpVec& c : w.cells()) max_depth = std::max(max_depth, t1 - c.back());
    std::vector<std::map<ExpVec, uint32_t>> phi_pow(static_cast<size_t>(max_depth) + 1);
    LaurentPoly acc = LaurentPoly::constant(ca.prime(), ca.dim(), 1);
    for (int64_t k = 0;; ++k) {
        for (const auto& [e, c] : acc.terms()) phi_pow[size_t(k)].emplace(drop_time(e), c);
        if (k == max_depth) break;
        acc = acc * ca.phi();
        if (acc.term_count() > b.max_top_sites)
            throw BudgetError("top-slice region exceeds the site budget");
    }

    std::vector<ExpVec> sites;
    for (const ExpVec& c : w.cells()) {
        const auto& table = phi_pow[size_t(t1 - c.back())];
        ExpVec s = drop_time(c);
        for (const auto& [n, coeff] : table) sites.push_back(vec_sub(s, n));
    }
    Window region(std::move(sites));
    if (region.size() > b.max_top_sites)
        throw BudgetError("top-slice region exceeds the site budget");

    TopSliceSystem sys{t1, w, region, {}};
    sys.matrix.assign(w.size(), std::vector<uint32_t>(region.size(), 0));
    for (size_t i = 0; i < w.size(); ++i) {
        const auto& table = phi_pow[size_t(t1 - w.cell(i).back())];
        ExpVec s = drop_time(w.cell(i));
        for (const auto& [n, coeff] : table)
            sys.matrix[i][*region.index_of(vec_sub(s, n))] = coeff;
    }
    return sys;
}

LanguageSubspace::LanguageSubspace(Window w, FpEchelon basis)
    : window_(std::move(w)), basis_(std::move(basis)) {
    if (basis_.space_dim() != window_.size())
        throw DomainError("basis does not match the window");
}

uint64_t LanguageSubspace::size() const {
    uint64_t n = 1;
    for (size_t i = 0; i < rank(); ++i) {
        if (n > (uint64_t(1) << 62) / p()) throw BudgetError("language too large to count");
        n *= p();
    }
    return n;
}

bool LanguageSubspace::contains(const std::vector<uint32_t>& values) const {
    return basis_.contains(values);
}

std::vector<uint32_t> LanguageSubspace::element(uint64_t index) const {
    size(); // reject subspaces whose indices cannot fit
    std::vector<uint32_t> v(window_.size(), 0);
    for (size_t i = 0; i < rank(); ++i) {
        uint32_t digit = static_cast<uint32_t>(index % p());
        index /= p();
        if (digit == 0) continue;
        std::vector<uint32_t> row = basis_.row(i);
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = add_mod(v[j], mul_mod(digit, row[j], p()), p());
    }
    if (index != 0) throw DomainError("element index out of range");
    return v;
}

std::optional<uint64_t> LanguageSubspace::index_of(const std::vector<uint32_t>& values) const {
    size();
    if (values.size() != window_.size()) throw DomainError("values do not match the window");
    if (!contains(values)) return std::nullopt;
    // coordinates can be read off at the pivots of the reduced basis
    uint64_t index = 0;
    for (size_t i = rank(); i-- > 0;)
        index = index * p() + values[basis_.pivots()[i]];
    return index;
}

LanguageSubspace language(const CAShift& ca, const Window& w, const Budget& b) {
    TopSliceSystem sys = top_slice_system(ca, w, b);
    // the language is the column space of the top-slice matrix
    FpEchelon basis(ca.p(), w.size());
    for (size_t col = 0; col < sys.region.size(); ++col) {
        std::vector<uint32_t> v(w.size());
        for (size_t row = 0; row < w.size(); ++row) v[row] = sys.matrix[row][col];
        basis.insert(v);
        if (basis.rank() == w.size()) break;
    }
    return LanguageSubspace(w, std::move(basis));
}

namespace {

// Kernel of all annihilator translates fitting in `big`, projected onto `w`.
FpEchelon projected_kernel(const LaurentPoly& ann, const Window& big, const Window& w) {
    const uint32_t p = ann.p();
    FpEchelon constraints(p, big.size());
    // a translate by k fits when k - S(ann) stays inside the window
    for (const ExpVec& base : big.cells()) {
        // candidate k values: base + n for each n in the support
        for (const auto& [n, cn] : ann.terms()) {
            ExpVec k = vec_add(base, n);
            std::vector<uint32_t> row(big.size(), 0);
            bool fits = true;
            for (const auto& [m, cm] : ann.terms()) {
                auto idx = big.index_of(vec_sub(k, m));
                if (!idx) {
                    fits = false;
                    break;
                }
                row[*idx] = add_mod(row[*idx], cm, p);
            }
            if (fits) constraints.insert(row);
        }
    }
    FpEchelon projected(p, w.size());
    for (const auto& kv : kernel_basis(constraints)) {
        std::vector<uint32_t> r(w.size(), 0);
        for (size_t i = 0; i < w.size(); ++i) r[i] = kv[*big.index_of(w.cell(i))];
        projected.insert(r);
    }
    return projected;
}

Window inflated_box(const Window& w, int64_t radius, const LaurentPoly& ann) {
    const size_t d = w.cell(0).size();
    ExpVec lo = w.cell(0), hi = w.cell(0);
    for (const ExpVec& c : w.cells())
        for (size_t i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], c[i]);
            hi[i] = std::max(hi[i], c[i]);
        }
    // inflate by the annihilator's span per axis, times the radius
    ExpVec span(d, 1);
    Shape s = shape(ann);
    for (size_t i = 0; i < d; ++i) {
        int64_t mn = (*s.begin())[i], mx = mn;
        for (const ExpVec& e : s) {
            mn = std::min(mn, e[i]);
            mx = std::max(mx, e[i]);
        }
        span[i] = std::max<int64_t>(1, mx - mn);
    }
    std::vector<ExpVec> cells;
    ExpVec cur(d);
    for (size_t i = 0; i < d; ++i) cur[i] = lo[i] - radius * span[i];
    while (true) {
        cells.push_back(cur);
        size_t axis = 0;
        while (axis < d) {
            if (++cur[axis] <= hi[axis] + radius * span[axis]) break;
            cur[axis] = lo[axis] - radius * span[axis];
            ++axis;
        }
        if (axis == d) break;
    }
    return Window(std::move(cells));
}

} // namespace

LanguageSubspace language_generic(const LaurentPoly& ann, const Window& w, const Budget& b) {
    check_window_budget(w, b);
    if (ann.is_zero()) throw DomainError("annihilator must be nonzero");
    if (w.empty()) return LanguageSubspace(w, FpEchelon(ann.p(), 0));
    if (w.cell(0).size() != ann.dim())
        throw DomainError("window dimension does not match the annihilator");

    FpEchelon current = projected_kernel(ann, inflated_box(w, 1, ann), w);
    for (int64_t radius = 2;; ++radius) {
        Window big = inflated_box(w, radius, ann);
        if (big.size() > b.max_top_sites)
            throw BudgetError("inflated window exceeds the site budget");
        FpEchelon next = projected_kernel(ann, big, w);
        if (next == current) return LanguageSubspace(w, std::move(next));
        current = std::move(next);
    }
}

std::string to_string(MeasureValue m) {
    if (m.is_zero) return "0";
    if (m.exponent == 0) return "1";
    return "p^-" + std::to_string(m.exponent);
}

MeasureValue cylinder_measure(const CAShift& ca, std::span<const CylinderEvent> events,
                              const Budget& b) {
    std::map<ExpVec, uint32_t> prescribed;
    for (const CylinderEvent& ev : events) {
        if (ev.window.size() != ev.values.size())
            throw DomainError("event values do not match its window");
        for (size_t i = 0; i < ev.window.size(); ++i) {
            ExpVec cell = vec_add(ev.window.cell(i), ev.offset);
            uint32_t v = ev.values[i] % ca.p();
            auto [it, fresh] = prescribed.emplace(cell, v);
            if (!fresh && it->second != v) return MeasureValue::zero();
        }
    }
    std::vector<ExpVec> cells;
    cells.reserve(prescribed.size());
    for (const auto& [cell, v] : prescribed) cells.push_back(cell);
    Window u(std::move(cells));
    std::vector<uint32_t> values(u.size());
    for (size_t i = 0; i < u.size(); ++i) values[i] = prescribed.at(u.cell(i));

    LanguageSubspace lang = language(ca, u, b);
    if (!lang.contains(values)) return MeasureValue::zero();
    return MeasureValue::p_power(lang.rank());
}

Configuration sample_point(const CAShift& ca, const Window& w, uint64_t seed, const Budget& b) {
    TopSliceSystem sys = top_slice_system(ca, w, b);
    CounterRng rng(seed);
    std::vector<uint32_t> y(sys.region.size());
    for (auto& v : y) v = rng.residue(ca.p());
    std::vector<uint32_t> values(w.size(), 0);
    for (size_t i = 0; i < w.size(); ++i) {
        uint64_t acc = 0;
        for (size_t j = 0; j < y.size(); ++j) acc += uint64_t(sys.matrix[i][j]) * y[j];
        values[i] = static_cast<uint32_t>(acc % ca.p());
    }
    return Configuration(w, std::move(values));
}

} // namespace lcas
