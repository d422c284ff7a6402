#pragma once

// Fundamental unit of a real quadratic maximal order from the continued
// fraction of omega = (b0 + sqrt(D))/2.

#include "ambig/quadfield.hpp"

namespace ambig {

struct ContinuedFraction {
    Int a0;
    std::vector<Int> period;  // partial quotients a_1 .. a_r
};

/// Continued fraction of omega = (b0 + sqrt(D))/2, D > 0 not a square. The
/// expansion is [a0; period, period, ...].
inline ContinuedFraction omega_continued_fraction(std::int64_t disc) {
    if (disc <= 0) throw NegativeDiscriminant("continued fraction needs D > 0, got " + std::to_string(disc));
    const Int D = to_int(disc);
    const Int s = isqrt(D);
    if (s * s == D) throw std::invalid_argument("omega_continued_fraction: square discriminant");
    // x_k = (P + sqrt(D))/Q
    Int P = disc_parity(disc), Q = 2;
    ContinuedFraction cf;
    cf.a0 = floor_div(P + s, Q);
    P = cf.a0 * Q - P;
    Q = exact_div(D - P * P, Q);
    // the period closes at the first x_k = omega + m, i.e. Q_k = 2
    for (;;) {
        Int a = floor_div(P + s, Q);
        cf.period.push_back(a);
        if (Q == 2) break;
        P = a * Q - P;
        Q = exact_div(D - P * P, Q);
    }
    return cf;
}

/// Smallest unit > 1 of the maximal order of Q(sqrt(D)).
inline QuadInt fundamental_unit(std::int64_t disc) {
    if (disc <= 0) throw NegativeDiscriminant("no fundamental unit for D = " + std::to_string(disc));
    ContinuedFraction cf = omega_continued_fraction(disc);
    // convergents p_k/q_k up to k = r - 1
    Int p_prev = 1, q_prev = 0;  // k = -1
    Int p = cf.a0, q = 1;        // k = 0
    for (std::size_t k = 0; k + 1 < cf.period.size(); ++k) {
        Int pn = cf.period[k] * p + p_prev;
        Int qn = cf.period[k] * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
    }
    // eps = p - q * conj(omega) = (2p - q b0 + q sqrt(D))/2
    const int b0 = disc_parity(disc);
    return QuadInt(disc, 2 * p - q * b0, q);
}

/// Nonnegative exponent n with eps^n, by repeated squaring.
inline QuadInt power(const QuadInt& x, unsigned long n) {
    QuadInt r = QuadInt::from_integer(x.disc(), 1), b = x;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

/// Roots of unity of the maximal order, starting with 1.
inline std::vector<QuadInt> roots_of_unity(std::int64_t disc) {
    std::vector<QuadInt> out{QuadInt::from_integer(disc, 1), QuadInt::from_integer(disc, -1)};
    if (disc == -4) {
        out.emplace_back(disc, 0, 1);  // i = sqrt(-4)/2
        out.emplace_back(disc, 0, -1);
    } else if (disc == -3) {
        for (int su : {1, -1}) {
            for (int sv : {1, -1}) out.emplace_back(disc, su, sv);
        }
    }
    return out;
}

/// Torsion and, for D > 0, the fundamental unit.
struct UnitGroup {
    std::int64_t disc = 0;
    std::vector<QuadInt> torsion;
    std::optional<QuadInt> fundamental;

    static UnitGroup of(std::int64_t disc) {
        UnitGroup g{disc, roots_of_unity(disc), std::nullopt};
        if (disc > 0) g.fundamental = fundamental_unit(disc);
        return g;
    }

    int torsion_order() const { return static_cast<int>(torsion.size()); }
    /// N(eps), or 0 for imaginary fields.
    int norm_fundamental() const { return fundamental ? static_cast<int>(fundamental->norm().get_si()) : 0; }
};

}  // namespace ambig
