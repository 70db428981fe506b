#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcas {

// Exponent vector of a Laurent monomial. Comparison is the vector's built-in
// lexicographic order; every container keyed on ExpVec iterates in that order.
using ExpVec = std::vector<int64_t>;

inline ExpVec vec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExpVec vec_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ExpVec vec_neg(const ExpVec& a) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline ExpVec vec_scale(int64_t c, const ExpVec& a) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const ExpVec& a) {
    for (int64_t x : a)
        if (x != 0) return false;
    return true;
}

inline ExpVec unit_vec(size_t dim, size_t axis, int64_t value = 1) {
    ExpVec r(dim, 0);
    r[axis] = value;
    return r;
}

inline std::string vec_to_string(const ExpVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    s += ")";
    return s;
}

} // namespace lcas
