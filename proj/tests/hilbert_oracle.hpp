#pragma once

// Local solvability of z^2 = a x^2 + b y^2 by exhaustive search.

#include "ambig/bigint.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

/// (a, b)_p by searching primitive solutions modulo p^k. a and b are first
/// stripped of square factors p^2, so v_p(a), v_p(b) <= 1; then a solution
/// modulo p^(v_p(a)+v_p(b)+1) (p odd) or 2^(v_2(a)+v_2(b)+3) lifts.
inline int hilbert_brute(std::int64_t a, std::int64_t b, std::int64_t p) {
    auto strip = [p](std::int64_t x, int& v) {
        while (x % (p * p) == 0) x /= p * p;
        v = x % p == 0 ? 1 : 0;
        return x;
    };
    int va = 0, vb = 0;
    a = strip(a, va);
    b = strip(b, vb);
    const int k = va + vb + (p == 2 ? 3 : 1);
    std::int64_t mod = 1;
    for (int i = 0; i < k; ++i) mod *= p;
    std::vector<bool> square(mod, false);
    for (std::int64_t z = 0; z < mod; ++z) square[(z * z) % mod] = true;
    auto residue = [mod](std::int64_t x) { return ((x % mod) + mod) % mod; };
    const std::int64_t am = residue(a), bm = residue(b);
    // primitive (x, y): scale so that x = 1, or x = 0 mod p and y = 1
    for (std::int64_t y = 0; y < mod; ++y) {
        if (square[residue(am + bm * ((y * y) % mod))]) return 1;
    }
    for (std::int64_t x = 0; x < mod; x += p) {
        if (square[residue(am * ((x * x) % mod) + bm)]) return 1;
    }
    return -1;
}

/// (a, b)_inf: some nonzero real (x, y) makes a x^2 + b y^2 >= 0.
inline int hilbert_brute_real(std::int64_t a, std::int64_t b) {
    for (int x = -1; x <= 1; ++x) {
        for (int y = -1; y <= 1; ++y) {
            if ((x || y) && a * x * x + b * y * y >= 0) return 1;
        }
    }
    return -1;
}

}  // namespace oracle
