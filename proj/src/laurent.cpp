#include "lcas/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lcas {

LaurentPoly::LaurentPoly(Prime p, size_t dim) : p_(p), dim_(dim) {
    if (dim < 1 || dim > max_dimension)
        throw DomainError("dimension out of range: " + std::to_string(dim));
}

LaurentPoly LaurentPoly::constant(Prime p, size_t dim, uint32_t c) {
    LaurentPoly r(p, dim);
    r.add_term(ExpVec(dim, 0), c);
    return r;
}

LaurentPoly LaurentPoly::monomial(Prime p, const ExpVec& e, uint32_t c) {
    LaurentPoly r(p, e.size());
    r.add_term(e, c);
    return r;
}

uint32_t LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, uint32_t c) {
    if (e.size() != dim_)
        throw DomainError("exponent vector has wrong length");
    c %= p_.value;
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second = add_mod(it->second, c, p_.value);
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (p_.value != o.p_.value || dim_ != o.dim_)
        throw DomainError("polynomials live in different rings");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(p_, dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, neg_mod(c, p_.value));
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, neg_mod(c, p_.value));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.p_, a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(vec_add(ea, eb), mul_mod(ca, cb, a.p_.value));
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.p_.value == b.p_.value && a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::scaled(uint32_t c) const {
    LaurentPoly r(p_, dim_);
    c %= p_.value;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, mul_mod(k, c, p_.value));
    return r;
}

LaurentPoly pow(const LaurentPoly& a, uint64_t e) {
    LaurentPoly r = LaurentPoly::constant(a.prime(), a.dim(), 1);
    LaurentPoly base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

LaurentPoly frobenius_power(const LaurentPoly& a, uint32_t e) {
    int64_t scale = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (scale > (int64_t(1) << 40))
            throw DomainError("frobenius exponent too large");
        scale *= a.p();
    }
    LaurentPoly r(a.prime(), a.dim());
    for (const auto& [ev, c] : a.terms()) r.add_term(vec_scale(scale, ev), c);
    return r;
}

Shape shape(const LaurentPoly& a) {
    if (a.is_zero()) throw DomainError("zero polynomial has no shape");
    Shape s;
    for (const auto& [e, c] : a.terms()) s.insert(e);
    return s;
}

std::pair<Shape, ExpVec> primitive_translate(const Shape& s) {
    if (s.empty()) throw DomainError("empty shape");
    const ExpVec& base = *s.begin(); // lexicographically smallest
    Shape t;
    for (const ExpVec& e : s) t.insert(vec_sub(e, base));
    return {t, base};
}

std::optional<CollinearSupport> collinear_support(const LaurentPoly& a) {
    if (a.is_zero()) throw DomainError("zero polynomial has no support");
    if (a.term_count() == 1) return std::nullopt; // single monomial: no direction
    const ExpVec& base = a.terms().begin()->first;
    std::vector<ExpVec> diffs;
    for (const auto& [e, c] : a.terms()) {
        ExpVec d = vec_sub(e, base);
        if (!vec_is_zero(d)) diffs.push_back(std::move(d));
    }
    // primitive direction of the first difference
    int64_t g = 0;
    for (int64_t x : diffs[0]) g = std::gcd(g, x < 0 ? -x : x);
    ExpVec dir(diffs[0].size());
    for (size_t i = 0; i < dir.size(); ++i) dir[i] = diffs[0][i] / g;
    for (int64_t x : dir) {
        if (x > 0) break;
        if (x < 0) {
            dir = vec_neg(dir);
            break;
        }
    }
    // every difference must be an integer multiple of dir
    size_t lead = 0;
    while (dir[lead] == 0) ++lead;
    int64_t step = 0;
    for (const ExpVec& d : diffs) {
        if (d[lead] % dir[lead] != 0) return std::nullopt;
        int64_t k = d[lead] / dir[lead];
        if (d != vec_scale(k, dir)) return std::nullopt;
        step = std::gcd(step, k < 0 ? -k : k);
    }
    return CollinearSupport{dir, step};
}

LaurentPoly translated(const LaurentPoly& a, const ExpVec& e) {
    if (e.size() != a.dim()) throw DomainError("translation vector has wrong length");
    LaurentPoly r(a.prime(), a.dim());
    for (const auto& [ev, c] : a.terms()) r.add_term(vec_add(ev, e), c);
    return r;
}

LaurentPoly invert_axes(const LaurentPoly& a, uint32_t axis_mask) {
    if (axis_mask >> a.dim())
        throw DomainError("axis mask names a variable past the dimension");
    LaurentPoly r(a.prime(), a.dim());
    for (const auto& [ev, c] : a.terms()) {
        ExpVec e = ev;
        for (size_t i = 0; i < e.size(); ++i)
            if (axis_mask & (1u << i)) e[i] = -e[i];
        r.add_term(e, c);
    }
    return r;
}

uint32_t eval_all_ones(const LaurentPoly& a) {
    uint32_t s = 0;
    for (const auto& [e, c] : a.terms()) s = add_mod(s, c, a.p());
    return s;
}

namespace {

// Coordinate-wise minimum over the support; valid only for nonzero a.
ExpVec support_min(const LaurentPoly& a) {
    ExpVec m = a.terms().begin()->first;
    for (const auto& [e, c] : a.terms())
        for (size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

} // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly(a.prime(), a.dim());
    // Shift both so supports sit in the nonneg orthant. Lowest x_i-degrees are
    // additive under multiplication (the coefficient ring is a domain), so a
    // Laurent quotient exists iff the shifted polynomial quotient does.
    ExpVec sa = support_min(a), sb = support_min(b);
    LaurentPoly rem = translated(a, vec_neg(sa));
    LaurentPoly div = translated(b, vec_neg(sb));
    const uint32_t p = a.p();
    const ExpVec& lead_b = div.terms().rbegin()->first; // lex-max term
    uint32_t lead_b_inv = inv_mod(div.terms().rbegin()->second, p);
    LaurentPoly q(a.prime(), a.dim());
    while (!rem.is_zero()) {
        const ExpVec& lead_r = rem.terms().rbegin()->first;
        ExpVec t = vec_sub(lead_r, lead_b);
        for (int64_t x : t)
            if (x < 0) return std::nullopt;
        uint32_t c = mul_mod(rem.terms().rbegin()->second, lead_b_inv, p);
        q.add_term(t, c);
        rem -= translated(div, t).scaled(c);
    }
    return translated(q, vec_sub(sa, sb));
}

// ---- parsing ----

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;
    Prime p;
    size_t dim;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    uint64_t parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + uint64_t(text[pos] - '0');
            if (v > (uint64_t(1) << 53)) fail("number too large");
            ++pos;
        }
        return v;
    }

    int64_t parse_signed() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = text[pos] == '-';
            ++pos;
        }
        return neg ? -int64_t(parse_uint()) : int64_t(parse_uint());
    }

    // factor := 'x' index ('^' signed-int)?
    void parse_factor(ExpVec& e) {
        ++pos; // consume 'x'
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a variable index after 'x'");
        uint64_t idx = parse_uint();
        if (idx < 1 || idx > dim)
            fail("variable index out of range 1.." + std::to_string(dim));
        int64_t exp = 1;
        if (peek() == '^') {
            ++pos;
            exp = parse_signed();
        }
        e[idx - 1] += exp;
    }

    // term := [coeff '*'?] factor*
    void parse_term(LaurentPoly& out, bool negate) {
        skip_ws();
        uint32_t c = 1;
        bool saw_any = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = static_cast<uint32_t>(parse_uint() % p.value);
            saw_any = true;
            if (peek() == '*') ++pos;
        }
        ExpVec e(dim, 0);
        while (peek() == 'x') {
            parse_factor(e);
            saw_any = true;
        }
        if (!saw_any) fail("expected a term");
        out.add_term(e, negate ? neg_mod(c, p.value) : c);
    }
};

} // namespace

LaurentPoly parse_poly(std::string_view text, Prime p, size_t dim) {
    Parser ps{text, 0, p, dim};
    LaurentPoly out(p, dim);
    bool negate = false;
    if (ps.peek() == '+' || ps.peek() == '-') { // tolerate a leading sign
        negate = ps.text[ps.pos] == '-';
        ++ps.pos;
    }
    ps.parse_term(out, negate);
    while (!ps.at_end()) {
        char c = ps.peek();
        if (c != '+' && c != '-') ps.fail("expected '+' or '-'");
        ++ps.pos;
        ps.parse_term(out, c == '-');
    }
    return out;
}

std::string to_string(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        if (!first) s += " + ";
        first = false;
        bool has_vars = !vec_is_zero(e);
        if (c != 1 || !has_vars) {
            s += std::to_string(c);
            if (has_vars) s += "*";
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            s += "x" + std::to_string(i + 1);
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

} // namespace lcas
