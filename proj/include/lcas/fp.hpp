#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcas {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed; position is a 0-based offset into the text.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (position " + std::to_string(pos) + ")"), position(pos) {}
};

// A configured resource limit would be exceeded; nothing is computed partially.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Precondition violation: mismatched rings, non-CA input, bad arguments.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

inline constexpr uint32_t max_prime = 1u << 16;
inline constexpr size_t max_dimension = 4;

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

// A checked prime modulus, p < 2^16.
struct Prime {
    uint32_t value;

    explicit Prime(uint32_t p) : value(p) {
        if (p >= max_prime)
            throw DomainError("prime too large: " + std::to_string(p));
        if (!is_prime_u32(p))
            throw DomainError("not a prime: " + std::to_string(p));
    }

    friend bool operator==(Prime a, Prime b) { return a.value == b.value; }
    friend bool operator!=(Prime a, Prime b) { return a.value != b.value; }
};

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t neg_mod(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((uint64_t(a) * b) % p);
}

inline uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint32_t inv_mod(uint32_t a, uint32_t p) {
    if (a % p == 0) throw DomainError("division by zero mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

// Smallest primitive root mod p (1 for p = 2).
inline uint32_t primitive_root(uint32_t p) {
    if (p == 2) return 1;
    uint32_t n = p - 1;
    uint32_t tmp = n;
    uint32_t prime_factors[32];
    size_t nf = 0;
    for (uint32_t q = 2; q * q <= tmp; ++q) {
        if (tmp % q == 0) {
            prime_factors[nf++] = q;
            while (tmp % q == 0) tmp /= q;
        }
    }
    if (tmp > 1) prime_factors[nf++] = tmp;
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (size_t i = 0; i < nf && ok; ++i)
            if (pow_mod(g, n / prime_factors[i], p) == 1) ok = false;
        if (ok) return g;
    }
    throw Error("no primitive root found for p = " + std::to_string(p));
}

} // namespace lcas
