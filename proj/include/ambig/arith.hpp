#pragma once

// Elementary number theory on big integers: factorization, primality,
// square roots modulo primes, Kronecker symbols.

#include "ambig/bigint.hpp"
#include "ambig/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

namespace ambig {

/// Limits for integer factorization. Trial division runs up to
/// `trial_bound`; anything left is split with Pollard rho. Inputs larger
/// than `max_value` are refused with FactorizationTooLarge.
struct FactorLimits {
    Int max_value = Int("1000000000000000000000000000000000000000000000000000000000000");
    std::uint64_t trial_bound = 1'000'000;

    /// Reads AMBIG_FACTOR_BOUND (a decimal integer) if set.
    static FactorLimits from_env() {
        FactorLimits l;
        if (const char* s = std::getenv("AMBIG_FACTOR_BOUND"); s && *s) {
            l.max_value = Int(s);
        }
        return l;
    }
};

using Factorization = std::vector<std::pair<Int, unsigned long>>;

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

inline Int pollard_rho(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        // Brent's cycle finding with batched gcds
        Int y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Int& v) {
            Int w = v * v + c;
            return mod_floor(w, n);
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Int diff = x - y;
                    q = mod_floor(q * abs(diff), n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(Int(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split_into(const Int& n, Factorization& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    split_into(d, out);
    split_into(exact_div(n, d), out);
}

inline void merge(Factorization& f) {
    std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Factorization merged;
    for (auto& [p, e] : f) {
        if (!merged.empty() && merged.back().first == p) {
            merged.back().second += e;
        } else {
            merged.emplace_back(p, e);
        }
    }
    f = std::move(merged);
}

}  // namespace detail

/// Prime factorization of |n|, n != 0, primes ascending.
inline Factorization factor_integer(const Int& n, const FactorLimits& limits = {}) {
    if (sgn(n) == 0) {
        throw std::invalid_argument("factor_integer: zero has no factorization");
    }
    Int m = abs(n);
    if (m > limits.max_value) {
        throw FactorizationTooLarge(m.get_str() + " exceeds the factoring bound " + limits.max_value.get_str());
    }
    Factorization out;
    for (std::uint32_t p : detail::small_primes()) {
        if (p > limits.trial_bound) break;
        Int pp = p;
        if (pp * pp > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned long e = remove_factor(m, pp);
            out.emplace_back(pp, e);
        }
    }
    if (m != 1) {
        detail::split_into(m, out);
    }
    detail::merge(out);
    return out;
}

inline bool is_prime(const Int& n) {
    return sgn(n) > 0 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

inline bool is_squarefree(const Int& n) {
    for (const auto& [p, e] : factor_integer(n)) {
        if (e > 1) return false;
    }
    return true;
}

/// Kronecker symbol (a/n), extended to n even and n negative.
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

/// Some r with r^2 = a (mod p), p an odd prime; nullopt if a is a
/// non-residue.
inline std::optional<Int> sqrt_mod_prime(const Int& a_in, const Int& p) {
    Int a = mod_floor(a_in, p);
    if (a == 0) return Int(0);
    if (kronecker(a, p) != 1) return std::nullopt;
    Int r;
    if (mod_floor(p, 4) == 3) {
        Int e = (p + 1) / 4;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = remove_factor(q, Int(2));
    Int z = 2;
    while (kronecker(z, p) != -1) ++z;
    Int c, t, exp;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    exp = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = mod_floor(tt * tt, p);
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_floor(b * b, p);
        r = mod_floor(r * b, p);
        c = mod_floor(b * b, p);
        t = mod_floor(t * c, p);
        m = i;
    }
    return r;
}

}  // namespace ambig
