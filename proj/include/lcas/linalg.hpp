#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcas/fp.hpp"

namespace lcas {

// Reduced row-echelon basis of a subspace of F_p^n, maintained incrementally.
// The reduced form is unique for a given subspace, so the stored rows do not
// depend on insertion order. Rows are bit-packed machine words when p = 2 and
// n fits in one word; the dense path produces the same rows.
class FpEchelon {
public:
    FpEchelon(uint32_t p, size_t n);

    uint32_t p() const { return p_; }
    size_t space_dim() const { return n_; }
    size_t rank() const { return pivots_.size(); }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Returns true when v was independent of the rows so far.
    bool insert(const std::vector<uint32_t>& v);

    // Eliminate every pivot from v; the residual is zero iff v is in the span.
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;

    std::vector<uint32_t> row(size_t i) const;

    friend bool operator==(const FpEchelon& a, const FpEchelon& b);

private:
    uint32_t p_;
    size_t n_;
    bool packed_;
    std::vector<std::vector<uint32_t>> rows_; // dense path, sorted by pivot
    std::vector<uint64_t> bits_;              // packed path (p = 2, n <= 64)
    std::vector<size_t> pivots_;              // ascending
};

// Basis of {x : r . x = 0 for every row r}, from the reduced echelon form of
// the constraint rows. One basis vector per free column, in column order.
std::vector<std::vector<uint32_t>> kernel_basis(const FpEchelon& constraints);

// One solution x of rows . x = rhs with free variables set to zero, or
// nullopt when the system is inconsistent.
std::optional<std::vector<uint32_t>> solve_linear(std::vector<std::vector<uint32_t>> rows,
                                                  std::vector<uint32_t> rhs, uint32_t p);

} // namespace lcas
