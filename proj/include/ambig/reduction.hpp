#pragma once

// Reduction of binary quadratic forms (a, b, c), b^2 - 4ac = D, shared by
// the form engine and by the ideal principality test.
//
// The elementary step is rho: (a, b, c) -> (c, -b, a) followed by a
// translation of b. On the ideal side, with I = [|a|, (b+√D)/2] and
// J = [|c|, (-b+√D)/2], rho realizes I = gamma * J for
// gamma = (b + √D)/(2c); the hook `on_swap(b, c)` sees each such step.

#include "ambig/bigint.hpp"

namespace ambig::detail {

struct NoTracking {
    void operator()(const Int&, const Int&) const {}
};

inline Int recompute_c(const Int& a, const Int& b, const Int& D) { return exact_div(b * b - D, 4 * a); }

/// b into (-a, a], a > 0
inline void normalize_definite(const Int& a, Int& b, Int& c, const Int& D) {
    Int two_a = 2 * a;
    Int nb = mod_floor(b, two_a);
    if (nb > a) nb -= two_a;
    if (nb != b) {
        b = nb;
        c = recompute_c(a, b, D);
    }
}

inline bool is_reduced_definite(const Int& a, const Int& b, const Int& c) {
    if (cmpabs(b, a) > 0 || a > c) return false;
    if ((cmpabs(b, a) == 0 || a == c) && sgn(b) < 0) return false;
    return true;
}

template <class OnSwap = NoTracking>
void reduce_definite(Int& a, Int& b, Int& c, const Int& D, OnSwap&& on_swap = {}) {
    normalize_definite(a, b, c, D);
    while (a > c || (a == c && sgn(b) < 0)) {
        on_swap(b, c);
        std::swap(a, c);
        b = -b;
        normalize_definite(a, b, c, D);
    }
}

/// s = floor(sqrt(D)), D > 0 not a square.
inline bool is_reduced_indefinite(const Int& a, const Int& b, const Int& D, const Int& s) {
    if (sgn(b) <= 0 || b > s) return false;
    Int two_a = 2 * abs(a);
    Int hi = two_a + b;
    if (hi * hi <= D) return false;
    Int lo = two_a - b;
    return sgn(lo) <= 0 || lo * lo < D;
}

inline void normalize_indefinite(const Int& a, Int& b, Int& c, const Int& D, const Int& s) {
    Int abs_a = abs(a);
    Int two_a = 2 * abs_a;
    Int nb;
    if (abs_a * abs_a > D) {
        nb = mod_floor(b, two_a);
        if (nb > abs_a) nb -= two_a;
    } else {
        nb = s - mod_floor(s - b, two_a);
    }
    if (nb != b) {
        b = nb;
        c = recompute_c(a, b, D);
    }
}

template <class OnSwap = NoTracking>
void rho_indefinite(Int& a, Int& b, Int& c, const Int& D, const Int& s, OnSwap&& on_swap = {}) {
    on_swap(b, c);
    std::swap(a, c);
    b = -b;
    normalize_indefinite(a, b, c, D, s);
}

template <class OnSwap = NoTracking>
void reduce_indefinite(Int& a, Int& b, Int& c, const Int& D, const Int& s, OnSwap&& on_swap = {}) {
    normalize_indefinite(a, b, c, D, s);
    while (!is_reduced_indefinite(a, b, D, s)) {
        rho_indefinite(a, b, c, D, s, on_swap);
    }
}

}  // namespace ambig::detail
