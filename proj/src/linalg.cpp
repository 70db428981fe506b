#include "lcas/linalg.hpp"

#include <algorithm>
#include <bit>

namespace lcas {

FpEchelon::FpEchelon(uint32_t p, size_t n) : p_(p), n_(n), packed_(p == 2 && n <= 64) {}

bool FpEchelon::insert(const std::vector<uint32_t>& v) {
    if (v.size() != n_) throw DomainError("vector has wrong length");
    if (packed_) {
        uint64_t w = 0;
        for (size_t i = 0; i < n_; ++i)
            if (v[i] & 1) w |= uint64_t(1) << i;
        for (size_t r = 0; r < bits_.size(); ++r)
            if (w & (uint64_t(1) << pivots_[r])) w ^= bits_[r];
        if (w == 0) return false;
        size_t pivot = static_cast<size_t>(std::countr_zero(w));
        for (uint64_t& row : bits_)
            if (row & (uint64_t(1) << pivot)) row ^= w;
        size_t at = static_cast<size_t>(
            std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
        pivots_.insert(pivots_.begin() + at, pivot);
        bits_.insert(bits_.begin() + at, w);
        return true;
    }
    std::vector<uint32_t> w = reduce(v);
    size_t pivot = n_;
    for (size_t i = 0; i < n_; ++i)
        if (w[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == n_) return false;
    uint32_t inv = inv_mod(w[pivot], p_);
    for (uint32_t& c : w) c = mul_mod(c, inv, p_);
    for (auto& row : rows_) {
        uint32_t c = row[pivot];
        if (c == 0) continue;
        for (size_t i = 0; i < n_; ++i) row[i] = sub_mod(row[i], mul_mod(c, w[i], p_), p_);
    }
    size_t at = static_cast<size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    pivots_.insert(pivots_.begin() + at, pivot);
    rows_.insert(rows_.begin() + at, std::move(w));
    return true;
}

std::vector<uint32_t> FpEchelon::reduce(std::vector<uint32_t> v) const {
    if (v.size() != n_) throw DomainError("vector has wrong length");
    if (packed_) {
        uint64_t w = 0;
        for (size_t i = 0; i < n_; ++i)
            if (v[i] & 1) w |= uint64_t(1) << i;
        for (size_t r = 0; r < bits_.size(); ++r)
            if (w & (uint64_t(1) << pivots_[r])) w ^= bits_[r];
        for (size_t i = 0; i < n_; ++i) v[i] = (w >> i) & 1;
        return v;
    }
    for (uint32_t& c : v) c %= p_;
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t c = v[pivots_[r]];
        if (c == 0) continue;
        for (size_t i = 0; i < n_; ++i)
            v[i] = sub_mod(v[i], mul_mod(c, rows_[r][i], p_), p_);
    }
    return v;
}

bool FpEchelon::contains(const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t c) { return c == 0; });
}

std::vector<uint32_t> FpEchelon::row(size_t i) const {
    if (packed_) {
        std::vector<uint32_t> v(n_, 0);
        for (size_t j = 0; j < n_; ++j) v[j] = (bits_[i] >> j) & 1;
        return v;
    }
    return rows_[i];
}

bool operator==(const FpEchelon& a, const FpEchelon& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_ || a.pivots_ != b.pivots_) return false;
    for (size_t i = 0; i < a.rank(); ++i)
        if (a.row(i) != b.row(i)) return false;
    return true;
}

std::vector<std::vector<uint32_t>> kernel_basis(const FpEchelon& constraints) {
    const size_t n = constraints.space_dim();
    const uint32_t p = constraints.p();
    const auto& pivots = constraints.pivots();
    std::vector<std::vector<uint32_t>> basis;
    size_t next_pivot = 0;
    for (size_t col = 0; col < n; ++col) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        std::vector<uint32_t> v(n, 0);
        v[col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = neg_mod(constraints.row(r)[col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<uint32_t>> solve_linear(std::vector<std::vector<uint32_t>> rows,
                                                  std::vector<uint32_t> rhs, uint32_t p) {
    if (rows.size() != rhs.size()) throw DomainError("system shape mismatch");
    const size_t n = rows.empty() ? 0 : rows[0].size();
    FpEchelon aug(p, n + 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<uint32_t> r = rows[i];
        r.push_back(rhs[i]);
        aug.insert(r);
    }
    std::vector<uint32_t> x(n, 0);
    for (size_t i = 0; i < aug.rank(); ++i) {
        if (aug.pivots()[i] == n) return std::nullopt; // 0 = 1 row
        x[aug.pivots()[i]] = aug.row(i)[n];
    }
    return x;
}

} // namespace lcas
