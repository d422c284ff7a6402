#pragma once

// Thin helpers over gmpxx: floor division, integer square roots, checked
// narrowing.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ambig {

using Int = mpz_class;
using Rat = mpq_class;

inline Int to_int(std::int64_t v) {
    // mpz_class has no int64 constructor on every platform.
    Int r;
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
        r = static_cast<long>(v);
    } else {
        r = std::to_string(v);
    }
    return r;
}

inline bool fits_int64(const Int& v) {
    return v.fits_slong_p();
}

inline std::int64_t to_int64(const Int& v) {
    if (!v.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    }
    return v.get_si();
}

/// Floor of a / b, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Representative of a mod |m| in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline int cmpabs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; the caller guarantees d | n.
inline Int exact_div(const Int& n, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Returns (g, s, t) with g = gcd(a, b) = s*a + t*b.
inline std::tuple<Int, Int, Int> gcdext(const Int& a, const Int& b) {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, s, t};
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// Removes every factor p from n and returns the multiplicity.
inline unsigned long remove_factor(Int& n, const Int& p) {
    if (sgn(n) == 0) {
        return 0;
    }
    return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline unsigned long valuation(Int n, const Int& p) {
    return remove_factor(n, p);
}

}  // namespace ambig
