#include "lcas/factor.hpp"

#include <algorithm>

#include "lcas/rng.hpp"

namespace lcas {

namespace {

// Dense univariate arithmetic over F_p. Coefficient i belongs to X^i; the
// vector is trimmed so back() is nonzero for nonzero polynomials.
using UPoly = std::vector<uint32_t>;

void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int64_t degree(const UPoly& f) { return int64_t(f.size()) - 1; }

bool is_one(const UPoly& f) { return f.size() == 1 && f[0] == 1; }

UPoly mul(const UPoly& a, const UPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

UPoly make_monic(UPoly f, uint32_t p) {
    trim(f);
    if (f.empty()) return f;
    uint32_t inv = inv_mod(f.back(), p);
    for (uint32_t& c : f) c = mul_mod(c, inv, p);
    return f;
}

// division with remainder; g must be nonzero
std::pair<UPoly, UPoly> divmod(UPoly f, const UPoly& g, uint32_t p) {
    trim(f);
    if (degree(f) < degree(g)) return {{}, f};
    UPoly q(f.size() - g.size() + 1, 0);
    uint32_t lead_inv = inv_mod(g.back(), p);
    for (int64_t i = degree(f); i >= degree(g); --i) {
        uint32_t c = mul_mod(f[i], lead_inv, p);
        if (c == 0) continue;
        q[i - degree(g)] = c;
        for (size_t j = 0; j < g.size(); ++j)
            f[i - degree(g) + j] = sub_mod(f[i - degree(g) + j], mul_mod(c, g[j], p), p);
    }
    trim(q);
    trim(f);
    return {q, f};
}

UPoly mod(const UPoly& f, const UPoly& g, uint32_t p) { return divmod(f, g, p).second; }

UPoly gcd(UPoly a, UPoly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

UPoly add(UPoly a, const UPoly& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = add_mod(a[i], b[i], p);
    trim(a);
    return a;
}

UPoly sub(UPoly a, const UPoly& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
    trim(a);
    return a;
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m, uint32_t p) {
    return mod(mul(a, b, p), m, p);
}

UPoly powmod(UPoly base, unsigned __int128 e, const UPoly& m, uint32_t p) {
    UPoly r{1};
    base = mod(base, m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

UPoly derivative(const UPoly& f, uint32_t p) {
    UPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(static_cast<uint32_t>((uint64_t(f[i]) * (i % p)) % p));
    trim(d);
    return d;
}

// f = g(X^p) with g's coefficients equal to f's (c^(1/p) = c over F_p)
UPoly pth_root(const UPoly& f, uint32_t p) {
    UPoly g((f.size() - 1) / p + 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (i % p != 0) throw Error("p-th root of a polynomial that is not a p-th power");
        g[i / p] = f[i];
    }
    return g;
}

void squarefree_parts(const UPoly& f, uint32_t p, uint32_t outer_mult,
                      std::vector<std::pair<UPoly, uint32_t>>& out) {
    UPoly df = derivative(f, p);
    if (df.empty()) {
        squarefree_parts(pth_root(f, p), p, outer_mult * p, out);
        return;
    }
    UPoly c = gcd(f, df, p);
    UPoly w = divmod(f, c, p).first;
    uint32_t i = 1;
    while (!is_one(w)) {
        UPoly y = gcd(w, c, p);
        UPoly z = divmod(w, y, p).first;
        if (degree(z) > 0) out.emplace_back(make_monic(z, p), i * outer_mult);
        w = std::move(y);
        c = divmod(c, w, p).first;
        ++i;
    }
    if (!is_one(c)) squarefree_parts(pth_root(c, p), p, outer_mult * p, out);
}

// distinct-degree stage: split a monic squarefree f into (product, degree) pairs
std::vector<std::pair<UPoly, int64_t>> distinct_degree(UPoly f, uint32_t p) {
    std::vector<std::pair<UPoly, int64_t>> out;
    UPoly x{0, 1};
    UPoly h = mod(x, f, p);
    for (int64_t k = 1; 2 * k <= degree(f); ++k) {
        h = powmod(h, p, f, p);
        UPoly g = gcd(sub(h, x, p), f, p);
        if (degree(g) > 0) {
            out.emplace_back(g, k);
            f = divmod(f, g, p).first;
            h = mod(h, f, p);
        }
    }
    if (degree(f) > 0) out.emplace_back(f, degree(f));
    return out;
}

UPoly random_below(int64_t deg, uint32_t p, CounterRng& rng) {
    UPoly r(static_cast<size_t>(deg), 0);
    for (auto& c : r) c = rng.residue(p);
    trim(r);
    return r;
}

// equal-degree splitting of a monic product of irreducibles of degree k
void equal_degree(const UPoly& f, int64_t k, uint32_t p, CounterRng& rng,
                  std::vector<UPoly>& out) {
    if (degree(f) == k) {
        out.push_back(f);
        return;
    }
    unsigned __int128 field_size = 1;
    if (p != 2) {
        for (int64_t i = 0; i < k; ++i) {
            if (field_size > (unsigned __int128)1 << 110)
                throw BudgetError("equal-degree splitting exponent out of range");
            field_size *= p;
        }
    }
    UPoly g;
    while (true) {
        UPoly r = random_below(degree(f), p, rng);
        if (degree(r) < 1) continue;
        if (p == 2) {
            // trace map r + r^2 + ... + r^(2^(k-1)) splits f
            UPoly t = r, sq = r;
            for (int64_t i = 1; i < k; ++i) {
                sq = mulmod(sq, sq, f, p);
                t = add(t, sq, p);
            }
            g = gcd(t, f, p);
        } else {
            UPoly t = powmod(r, (field_size - 1) / 2, f, p);
            g = gcd(sub(t, UPoly{1}, p), f, p);
        }
        if (degree(g) > 0 && degree(g) < degree(f)) break;
    }
    equal_degree(g, k, p, rng, out);
    equal_degree(divmod(f, g, p).first, k, p, rng, out);
}

LaurentPoly lift(const UPoly& f, Prime p, size_t dim, size_t var) {
    LaurentPoly r(p, dim);
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) r.add_term(unit_vec(dim, var, int64_t(i)), f[i]);
    return r;
}

} // namespace

Factorization univariate_factor(const LaurentPoly& a) {
    if (a.is_zero()) throw DomainError("cannot factor the zero polynomial");
    const uint32_t p = a.p();
    const size_t dim = a.dim();

    // locate the single variable in use
    size_t var = 0;
    bool found = false;
    for (const auto& [e, c] : a.terms()) {
        for (size_t i = 0; i < dim; ++i) {
            if (e[i] == 0) continue;
            if (found && var != i)
                throw DomainError("polynomial uses more than one variable");
            var = i;
            found = true;
        }
    }

    Factorization result{1, ExpVec(dim, 0), {}};
    if (!found) { // constant
        result.unit = a.terms().begin()->second;
        return result;
    }

    int64_t emin = a.terms().begin()->first[var];
    for (const auto& [e, c] : a.terms()) emin = std::min(emin, e[var]);
    result.monomial = unit_vec(dim, var, emin);

    UPoly f;
    for (const auto& [e, c] : a.terms()) {
        size_t i = static_cast<size_t>(e[var] - emin);
        if (f.size() <= i) f.resize(i + 1, 0);
        f[i] = c;
    }
    result.unit = f.back();
    f = make_monic(f, p);
    if (degree(f) == 0) return result; // pure monomial

    uint64_t seed = fnv1a64(&p, sizeof p);
    for (uint32_t c : f) seed = fnv1a64(&c, sizeof c, seed);
    CounterRng rng(seed);

    std::vector<std::pair<UPoly, uint32_t>> square_free;
    squarefree_parts(f, p, 1, square_free);
    for (const auto& [part, mult] : square_free) {
        for (const auto& [prod, k] : distinct_degree(part, p)) {
            std::vector<UPoly> irreducibles;
            equal_degree(prod, k, p, rng, irreducibles);
            for (const UPoly& g : irreducibles)
                result.factors.emplace_back(lift(g, a.prime(), dim, var), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& x, const auto& y) {
                  const ExpVec& dx = x.first.terms().rbegin()->first;
                  const ExpVec& dy = y.first.terms().rbegin()->first;
                  if (dx != dy) return dx < dy;
                  return x.first.terms() < y.first.terms();
              });

    if (!(factorization_product(result, a.prime(), dim) == a))
        throw Error("factorization product check failed");
    return result;
}

LaurentPoly factorization_product(const Factorization& f, Prime p, size_t dim) {
    if (f.monomial.size() != dim)
        throw DomainError("factorization monomial does not match the dimension");
    LaurentPoly r = LaurentPoly::monomial(p, f.monomial, f.unit);
    for (const auto& [g, m] : f.factors) r = r * pow(g, m);
    return r;
}

} // namespace lcas
