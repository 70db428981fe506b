#include "lcas/homs.hpp"

#include <algorithm>

#include "lcas/rng.hpp"

namespace lcas {

LocalRule::LocalRule(LanguageSubspace d, std::vector<uint32_t> t)
    : domain(std::move(d)), table(std::move(t)) {
    if (table.size() != domain.size())
        throw DomainError("rule table size must equal the language size");
    if (!table.empty() && table[0] % domain.p() != 0)
        throw DomainError("a local rule must send zero to zero");
    for (uint32_t& v : table) v %= domain.p();
}

uint32_t LocalRule::apply(const std::vector<uint32_t>& values) const {
    auto idx = domain.index_of(values);
    if (!idx) throw DomainError("restriction is not in the rule's language");
    return table[*idx];
}

Configuration apply_local_rule(const LocalRule& rule, const Configuration& x) {
    const Window& shape_w = rule.domain.window();
    // output cells: k with k + shape inside the input window
    std::vector<ExpVec> out_cells;
    for (const ExpVec& w : x.window.cells()) {
        ExpVec k = vec_sub(w, shape_w.cell(0));
        bool fits = true;
        for (const ExpVec& s : shape_w.cells())
            if (!x.window.contains(vec_add(k, s))) {
                fits = false;
                break;
            }
        if (fits) out_cells.push_back(k);
    }
    Window out_window(std::move(out_cells));
    if (out_window.empty())
        throw DomainError("input window has no room for the rule's shape");
    std::vector<uint32_t> out_values;
    out_values.reserve(out_window.size());
    std::vector<uint32_t> local(shape_w.size());
    for (const ExpVec& k : out_window.cells()) {
        for (size_t i = 0; i < shape_w.size(); ++i)
            local[i] = x.values[*x.window.index_of(vec_add(k, shape_w.cell(i)))];
        out_values.push_back(rule.apply(local));
    }
    return Configuration(std::move(out_window), std::move(out_values));
}

namespace {

// Union of shape - n over the support of dst's annihilator, plus the index of
// each translated shape cell inside that union window.
struct EquivarianceFrame {
    Window big;
    std::vector<uint32_t> coeffs;                  // annihilator coefficient per translate
    std::vector<std::vector<size_t>> cell_index;   // [translate][shape cell] -> big index
};

EquivarianceFrame equivariance_frame(const Window& shape_w, const CAShift& dst) {
    LaurentPoly ann = dst.annihilator();
    std::vector<ExpVec> cells;
    for (const auto& [n, c] : ann.terms())
        for (const ExpVec& s : shape_w.cells()) cells.push_back(vec_sub(s, n));
    EquivarianceFrame frame{Window(std::move(cells)), {}, {}};
    for (const auto& [n, c] : ann.terms()) {
        frame.coeffs.push_back(c);
        std::vector<size_t> idx(shape_w.size());
        for (size_t i = 0; i < shape_w.size(); ++i)
            idx[i] = *frame.big.index_of(vec_sub(shape_w.cell(i), n));
        frame.cell_index.push_back(std::move(idx));
    }
    return frame;
}

// Odometer over a language: visits every element by adding one basis row at a
// time, p-adic little-endian order, matching LanguageSubspace::element.
struct LanguageWalker {
    const LanguageSubspace& lang;
    std::vector<uint32_t> digits;
    std::vector<uint32_t> current;

    explicit LanguageWalker(const LanguageSubspace& l)
        : lang(l), digits(l.rank(), 0), current(l.window().size(), 0) {}

    bool advance() { // false when wrapped back to zero
        for (size_t i = 0; i < digits.size(); ++i) {
            const std::vector<uint32_t> row = lang.basis().row(i);
            for (size_t j = 0; j < current.size(); ++j)
                current[j] = add_mod(current[j], row[j], lang.p());
            if (++digits[i] < lang.p()) return true;
            digits[i] = 0;
        }
        return false;
    }
};

} // namespace

bool equivariance_check(const LocalRule& rule, const CAShift& src, const CAShift& dst,
                        const Budget& b) {
    if (src.p() != dst.p() || src.dim() != dst.dim())
        throw DomainError("source and destination shifts live in different rings");
    EquivarianceFrame frame = equivariance_frame(rule.domain.window(), dst);
    Budget wide = b;
    wide.max_window_cells = std::max(b.max_window_cells, frame.big.size());
    LanguageSubspace big_lang = language(src, frame.big, wide);
    if (big_lang.size() > b.max_enumeration)
        throw BudgetError("window language too large to enumerate");

    const uint32_t p = src.p();
    LanguageWalker walker(big_lang);
    std::vector<uint32_t> local(rule.domain.window().size());
    do {
        uint64_t acc = 0;
        for (size_t t = 0; t < frame.coeffs.size(); ++t) {
            for (size_t i = 0; i < local.size(); ++i)
                local[i] = walker.current[frame.cell_index[t][i]];
            acc += uint64_t(frame.coeffs[t]) * rule.apply(local);
        }
        if (acc % p != 0) return false;
    } while (walker.advance());
    return true;
}

bool additivity_check(const LocalRule& rule, const Budget& b) {
    const LanguageSubspace& lang = rule.domain;
    const uint32_t p = lang.p();
    uint64_t n = lang.size();
    if (n > b.max_enumeration / std::max<uint64_t>(n, 1))
        throw BudgetError("too many pairs for the additivity check");
    std::vector<std::vector<uint32_t>> elems;
    elems.reserve(n);
    for (uint64_t i = 0; i < n; ++i) elems.push_back(lang.element(i));
    std::vector<uint32_t> sum(lang.window().size());
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = i; j < n; ++j) {
            for (size_t c = 0; c < sum.size(); ++c)
                sum[c] = add_mod(elems[i][c], elems[j][c], p);
            if (rule.apply(sum) != add_mod(rule.table[i], rule.table[j], p))
                return false;
        }
    return true;
}

bool functional_eq_check(const LocalRule& rule, const CAShift& src, const CAShift& dst,
                         uint64_t trials, uint64_t seed) {
    if (src.p() != dst.p() || src.dim() != dst.dim())
        throw DomainError("source and destination shifts live in different rings");
    const LanguageSubspace& lang = rule.domain;
    const uint32_t p = src.p();

    // support points of either phi, with their coefficients in each
    std::vector<ExpVec> points;
    for (const auto& [e, c] : src.phi().terms()) points.push_back(e);
    for (const auto& [e, c] : dst.phi().terms())
        if (src.phi().coeff(e) == 0) points.push_back(e);
    std::sort(points.begin(), points.end());
    const size_t k = points.size();

    uint64_t n = lang.size();
    bool exhaustive = true;
    uint64_t families = 1;
    for (size_t i = 0; i < k && exhaustive; ++i) {
        if (families > trials / std::max<uint64_t>(n, 1)) exhaustive = false;
        else families *= n;
    }
    if (!exhaustive || families > trials) {
        exhaustive = false;
        families = trials;
    }

    CounterRng rng(seed);
    std::vector<uint64_t> pick(k, 0);
    std::vector<uint32_t> lhs(lang.window().size());
    for (uint64_t f = 0; f < families; ++f) {
        if (exhaustive) {
            uint64_t idx = f;
            for (size_t i = 0; i < k; ++i) {
                pick[i] = idx % n;
                idx /= n;
            }
        } else {
            for (size_t i = 0; i < k; ++i) pick[i] = rng.below(n);
        }
        std::fill(lhs.begin(), lhs.end(), 0);
        uint64_t rhs = 0;
        for (size_t i = 0; i < k; ++i) {
            std::vector<uint32_t> ci = lang.element(pick[i]);
            uint32_t c_src = src.phi().coeff(points[i]);
            uint32_t c_dst = dst.phi().coeff(points[i]);
            if (c_src != 0)
                for (size_t j = 0; j < lhs.size(); ++j)
                    lhs[j] = add_mod(lhs[j], mul_mod(c_src, ci[j], p), p);
            if (c_dst != 0) rhs += uint64_t(c_dst) * rule.apply(ci);
        }
        if (rule.apply(lhs) != rhs % p) return false;
    }
    return true;
}

namespace {

bool shape_subset(const Shape& a, const Shape& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<LaurentPoly> additive_representative(const LocalRule& rule) {
    // Solve sum over s of a_s * basis_i(s) = table value of basis_i for the
    // coefficients a_s; then R = sum a_s X^(-s) reproduces the rule on the
    // whole language by linearity.
    const LanguageSubspace& lang = rule.domain;
    std::vector<std::vector<uint32_t>> rows;
    std::vector<uint32_t> rhs;
    for (size_t i = 0; i < lang.rank(); ++i) {
        rows.push_back(lang.basis().row(i));
        rhs.push_back(rule.table[lang.index_of(rows.back()).value_or(0)]);
    }
    auto sol = solve_linear(std::move(rows), std::move(rhs), lang.p());
    if (!sol) return std::nullopt;
    LaurentPoly r(Prime(lang.p()), lang.window().cell(0).size());
    for (size_t s = 0; s < lang.window().size(); ++s)
        r.add_term(vec_neg(lang.window().cell(s)), (*sol)[s]);
    return r;
}

} // namespace

HomSearchResult hom_search(const CAShift& src, const CAShift& dst, const Shape& s,
                           const Budget& b) {
    if (src.p() != dst.p() || src.dim() != dst.dim())
        throw DomainError("source and destination shifts live in different rings");
    LanguageSubspace lang = language(src, Window::from_shape(s), b);
    const uint32_t p = src.p();
    uint64_t n = lang.size();

    uint64_t candidates = 1;
    for (uint64_t i = 1; i < n; ++i) {
        if (candidates > b.max_rule_candidates / p)
            throw BudgetError("rule table space exceeds the candidate budget");
        candidates *= p;
    }

    // Equivariance is linear in the table entries: one constraint per window
    // restriction, plus gamma(0) = 0. Solve for the kernel, then double-check
    // every solution with the direct enumeration.
    EquivarianceFrame frame = equivariance_frame(lang.window(), dst);
    Budget wide = b;
    wide.max_window_cells = std::max(b.max_window_cells, frame.big.size());
    LanguageSubspace big_lang = language(src, frame.big, wide);
    if (big_lang.size() > b.max_enumeration)
        throw BudgetError("window language too large to enumerate");

    FpEchelon constraints(p, n);
    {
        std::vector<uint32_t> row(n);
        row[0] = 1; // gamma(0) = 0
        constraints.insert(row);
    }
    LanguageWalker walker(big_lang);
    std::vector<uint32_t> local(lang.window().size());
    do {
        std::vector<uint32_t> row(n, 0);
        for (size_t t = 0; t < frame.coeffs.size(); ++t) {
            for (size_t i = 0; i < local.size(); ++i)
                local[i] = walker.current[frame.cell_index[t][i]];
            uint64_t idx = *lang.index_of(local);
            row[idx] = add_mod(row[idx], frame.coeffs[t], p);
        }
        constraints.insert(row);
        if (constraints.rank() == n) break;
    } while (walker.advance());

    std::vector<std::vector<uint32_t>> kernel = kernel_basis(constraints);

    HomSearchResult result{{}, candidates, !shape_subset(shape(src.annihilator()),
                                                          shape(dst.annihilator()))};
    uint64_t count = 1;
    for (size_t i = 0; i < kernel.size(); ++i) {
        if (count > b.max_rule_candidates / p)
            throw BudgetError("too many equivariant rules for the budget");
        count *= p;
    }
    std::vector<uint32_t> table(n, 0);
    std::vector<uint32_t> digits(kernel.size(), 0);
    for (uint64_t idx = 0;; ++idx) {
        LocalRule rule(lang, table);
        if (!equivariance_check(rule, src, dst, b))
            throw Error("solver produced a rule failing the direct equivariance check");
        bool additive = additivity_check(rule, b);
        std::optional<LaurentPoly> rep;
        if (additive) rep = additive_representative(rule);
        result.rules.push_back({std::move(rule), additive, std::move(rep)});
        // advance the odometer over the kernel
        size_t axis = 0;
        for (; axis < kernel.size(); ++axis) {
            for (size_t j = 0; j < n; ++j)
                table[j] = add_mod(table[j], kernel[axis][j], p);
            if (++digits[axis] < p) break;
            digits[axis] = 0;
        }
        if (axis == kernel.size()) break;
    }
    std::sort(result.rules.begin(), result.rules.end(),
              [](const FoundRule& a, const FoundRule& b2) { return a.rule.table < b2.rule.table; });

    if (result.expected_trivial)
        for (const FoundRule& fr : result.rules)
            for (uint32_t v : fr.rule.table)
                if (v != 0)
                    throw Error("nonzero rule found where support inclusion fails");
    return result;
}

std::string to_string(const DualHom& h) {
    std::string s = to_string(h.numerator);
    if (h.phi_power > 0) s = "(" + s + ") / phi^" + std::to_string(h.phi_power);
    return s;
}

DualHom reduce_dual(const LaurentPoly& r, const CAShift& ca) {
    if (r.dim() != ca.dim() || r.p() != ca.p())
        throw DomainError("polynomial and shift live in different rings");
    if (r.is_zero()) return DualHom{r, 0};
    int64_t min_j = 0;
    for (const auto& [e, c] : r.terms()) min_j = std::min(min_j, e.back());
    LaurentPoly cleared =
        min_j < 0 ? translated(r, unit_vec(r.dim(), r.dim() - 1, -min_j)) : r;
    LaurentPoly numer = substitute_time_axis(cleared, ca);
    uint32_t power = static_cast<uint32_t>(min_j < 0 ? -min_j : 0);
    while (power > 0) {
        auto q = divide_exact(numer, ca.phi());
        if (!q) break;
        numer = std::move(*q);
        --power;
    }
    if (numer.is_zero()) power = 0;
    return DualHom{numer, power};
}

bool poly_map_check(const CAShift& src, const CAShift& dst, const LaurentPoly& r) {
    if (src.p() != dst.p() || src.dim() != dst.dim())
        throw DomainError("source and destination shifts live in different rings");
    return ideal_member(dst.annihilator() * r, src);
}

std::vector<DualHom> dual_hom_search(const CAShift& src, const CAShift& dst,
                                     const Shape& support_bound, const Budget& b) {
    std::vector<ExpVec> support(support_bound.begin(), support_bound.end());
    uint64_t total = 1;
    const uint32_t p = src.p();
    for (size_t i = 0; i < support.size(); ++i) {
        if (total > b.max_rule_candidates / p)
            throw BudgetError("support bound exceeds the candidate budget");
        total *= p;
    }
    std::vector<DualHom> classes;
    std::vector<uint32_t> coeffs(support.size(), 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        LaurentPoly r(src.prime(), src.dim());
        for (size_t i = 0; i < support.size(); ++i) {
            coeffs[i] = static_cast<uint32_t>(rest % p);
            rest /= p;
            if (coeffs[i]) r.add_term(support[i], coeffs[i]);
        }
        if (!poly_map_check(src, dst, r)) continue;
        DualHom h = reduce_dual(r, src);
        if (std::find(classes.begin(), classes.end(), h) == classes.end())
            classes.push_back(std::move(h));
    }
    return classes;
}

bool verify_unit_pair(const CAShift& ca, const LaurentPoly& r, const LaurentPoly& rinv) {
    LaurentPoly prod = r * rinv;
    prod -= LaurentPoly::constant(ca.prime(), ca.dim(), 1);
    return ideal_member(prod, ca);
}

AutDescription aut_group(const CAShift& ca, const std::optional<Factorization>& factor_hint) {
    const uint32_t p = ca.p();
    const size_t d = ca.dim();

    Factorization fac{1, ExpVec(d, 0), {}};
    bool verified = true;
    if (factor_hint) {
        fac = *factor_hint;
        if (!(factorization_product(fac, ca.prime(), d) == ca.phi()))
            throw DomainError("factor hint does not multiply back to phi");
        verified = false;
    } else {
        size_t vars_used = 0;
        for (size_t i = 0; i + 1 < d; ++i)
            for (const auto& [e, c] : ca.phi().terms())
                if (e[i] != 0) {
                    ++vars_used;
                    break;
                }
        if (vars_used > 1)
            throw DomainError("phi uses several variables; supply a factorization hint");
        fac = univariate_factor(ca.phi());
    }

    AutDescription out{p - 1, primitive_root(p), {}, 0, false, verified, fac};
    for (size_t i = 0; i + 1 < d; ++i)
        out.free_generators.push_back(
            UnitGenerator{"x" + std::to_string(i + 1),
                          LaurentPoly::monomial(ca.prime(), unit_vec(d, i, 1), 1),
                          LaurentPoly::monomial(ca.prime(), unit_vec(d, i, -1), 1)});
    for (size_t f = 0; f < fac.factors.size(); ++f) {
        // cofactor * factor = phi, so factor^-1 = cofactor * X_d^-1 in the quotient
        LaurentPoly cofactor = LaurentPoly::monomial(ca.prime(), fac.monomial, fac.unit);
        for (size_t i = 0; i < fac.factors.size(); ++i) {
            uint32_t mult = fac.factors[i].second - (i == f ? 1 : 0);
            cofactor = cofactor * pow(fac.factors[i].first, mult);
        }
        out.free_generators.push_back(
            UnitGenerator{"f" + std::to_string(f + 1), fac.factors[f].first,
                          cofactor * LaurentPoly::monomial(ca.prime(), unit_vec(d, d - 1, -1), 1)});
    }
    out.rank = out.free_generators.size();
    out.monomial_only = fac.factors.size() == 1 && fac.factors[0].second == 1;
    return out;
}

} // namespace lcas
