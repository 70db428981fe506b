#pragma once

#include <cstddef>
#include <cstdint>

namespace lcas {

inline uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
    const unsigned char* b = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= b[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Counter-based generator: the stream is a pure function of (key, counter),
// so every consumer replays identically for a fixed seed.
struct CounterRng {
    uint64_t key;
    uint64_t counter = 0;

    explicit CounterRng(uint64_t k) : key(k) {}

    uint64_t next() { return splitmix64(key + 0x9e3779b97f4a7c15ULL * ++counter); }

    // Unbiased draw from [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    uint32_t residue(uint32_t p) { return static_cast<uint32_t>(below(p)); }
};

} // namespace lcas
