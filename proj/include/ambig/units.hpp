#pragma once

// Unit groups of quadratic fields, Hilbert symbols, and the unit indices
// (E_K : E_K ∩ NL^x), (E_K : NE_L), (E_L[N] : E_L^(1-sigma)) for K = Q.

#include "ambig/abgroup.hpp"
#include "ambig/arith.hpp"
#include "ambig/pell.hpp"
#include "ambig/quadfield.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ambig {

/// A place of Q: a prime p, or the real place.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place prime(const Int& p) {
        if (!is_prime(p)) throw InvalidPlace(p.get_str() + " is not a prime");
        Place v;
        v.p_ = p;
        return v;
    }
    static Place prime(std::int64_t p) {
        if (p < 2) throw InvalidPlace(std::to_string(p) + " is not a prime");
        return prime(to_int(p));
    }

    bool is_infinite() const { return sgn(p_) == 0; }
    const Int& p() const { return p_; }
    std::string to_string() const { return is_infinite() ? "inf" : p_.get_str(); }

    friend bool operator==(const Place&, const Place&) = default;

private:
    Place() = default;
    Int p_;  // 0 for the real place
};

namespace detail {

// x = p^alpha * u with p not dividing u
inline std::pair<unsigned long, Int> split_power(const Int& x, const Int& p) {
    Int u = x;
    unsigned long alpha = remove_factor(u, p);
    return {alpha, u};
}

inline int eps2(const Int& u) { return mod_floor(u, 4) == 3 ? 1 : 0; }              // (u-1)/2 mod 2
inline int omega2(const Int& u) {                                                    // (u^2-1)/8 mod 2
    Int r = mod_floor(u, 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

/// Integer in the same square class as the nonzero rational q.
inline Int square_class_rep(const Rat& q) { return q.get_num() * q.get_den(); }

}  // namespace detail

/// Hilbert symbol (a, b)_v of nonzero rationals.
inline int hilbert_symbol(const Rat& a_in, const Rat& b_in, const Place& v) {
    if (sgn(a_in) == 0 || sgn(b_in) == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    const Int a = detail::square_class_rep(a_in), b = detail::square_class_rep(b_in);
    if (v.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    const Int& p = v.p();
    auto [alpha, u] = detail::split_power(a, p);
    auto [beta, w] = detail::split_power(b, p);
    int e = 0;
    if (p == 2) {
        e = (detail::eps2(u) * detail::eps2(w) + static_cast<int>(alpha % 2) * detail::omega2(w) +
             static_cast<int>(beta % 2) * detail::omega2(u)) % 2;
        return e ? -1 : 1;
    }
    int r = 1;
    if ((alpha % 2) && (beta % 2) && mod_floor(p, 4) == 3) r = -r;
    if (beta % 2) r *= kronecker(u, p);
    if (alpha % 2) r *= kronecker(w, p);
    return r;
}

inline int hilbert_symbol(const Rat& a, const Rat& b, std::int64_t p) { return hilbert_symbol(a, b, Place::prime(p)); }

/// Whether -1 is a norm from Q(sqrt(D))^x. By the Hasse norm theorem this
/// is the local condition (-1, D)_v = 1 at every place; only v | 2D can fail.
inline bool minus_one_global_norm(std::int64_t disc) {
    if (disc < 0) return false;
    const Rat m1(-1), d(to_int(disc));
    if (hilbert_symbol(m1, d, Place::infinity()) != 1) return false;
    for (const auto& [p, e] : factor_integer(to_int(2 * disc))) {
        if (hilbert_symbol(m1, d, Place::prime(p)) != 1) return false;
    }
    return true;
}

/// An element of norm -1, found from a representation D = X^2 + Z^2:
/// N((X + sqrt(D))/Z) = (X^2 - D)/Z^2 = -1.
inline std::optional<QuadNum> minus_one_norm_witness(std::int64_t disc) {
    if (disc <= 0) return std::nullopt;
    const Int D = to_int(disc);
    for (Int x = 0; x * x < D; ++x) {
        Int z2 = D - x * x;
        if (is_perfect_square(z2)) return QuadNum(disc, Rat(x, isqrt(z2)), Rat(1) / isqrt(z2));
    }
    return std::nullopt;
}

/// (E_L[N] : E_L^(1-sigma)) from the Galois action on E_L = mu_w x <eps>.
///
/// Units are exponent vectors over (zeta, eps); sigma acts by zeta -> zeta^-1
/// and eps -> N(eps) eps^-1.
inline Int unit_cohomology_index(int w, std::optional<int> norm_eps) {
    const std::size_t n = norm_eps ? 2 : 1;
    IntMatrix S(n, n), torsion(1, n);
    S(0, 0) = -1;
    torsion(0, 0) = w;
    if (norm_eps) {
        // -1 = zeta^(w/2)
        S(1, 0) = *norm_eps == -1 ? w / 2 : 0;
        S(1, 1) = -1;
    }
    IntMatrix plus = IntMatrix::identity(n), minus = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            plus(i, j) += S(i, j);
            minus(i, j) -= S(i, j);
        }
    }
    // E_L[N]: x with x (1 + S) in the torsion lattice, via the left kernel of [1+S; torsion]
    IntMatrix stacked(0, n);
    for (std::size_t i = 0; i < n; ++i) stacked.append_row(plus.row(i));
    stacked.append_row(torsion.row(0));
    SmithForm s = smith_normal_form(stacked);
    IntMatrix kernel(0, n);
    for (std::size_t i = s.rank; i < stacked.rows(); ++i) {
        std::vector<Int> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = s.U(i, j);
        kernel.append_row(r);
    }
    kernel.append_row(torsion.row(0));
    // E_L^(1-sigma) together with the torsion relation
    IntMatrix image(0, n);
    for (std::size_t i = 0; i < n; ++i) image.append_row(minus.row(i));
    image.append_row(torsion.row(0));
    return lattice_index(n, kernel, image);
}

struct UnitData {
    std::int64_t disc = 0;
    int w = 2;                          // number of roots of unity
    std::optional<QuadInt> fund_unit;  // D > 0
    int norm_eps = 0;                  // N(eps), 0 for D < 0
    int idx_Q = 0;                     // (E_K : E_K ∩ NL^x)
    int idx_E = 0;                     // (E_K : NE_L)
    int idx_coh = 0;                   // (E_L[N] : E_L^(1-sigma))
};

/// (idx_Q, idx_E) for K = Q, E_K = {1, -1}.
inline std::pair<int, int> norm_indices(std::int64_t disc, int norm_eps) {
    int idx_Q = minus_one_global_norm(disc) ? 1 : 2;
    // NE_L is generated by the norms of roots of unity (all 1) and of eps
    int idx_E = norm_eps == -1 ? 1 : 2;
    return {idx_Q, idx_E};
}

inline std::pair<int, int> norm_indices(std::int64_t disc) {
    return norm_indices(disc, disc > 0 ? static_cast<int>(fundamental_unit(disc).norm().get_si()) : 0);
}

inline UnitData unit_data(std::int64_t disc) {
    validate_discriminant(disc);
    UnitData u;
    u.disc = disc;
    u.w = static_cast<int>(roots_of_unity(disc).size());
    std::optional<int> n;
    if (disc > 0) {
        u.fund_unit = fundamental_unit(disc);
        u.norm_eps = static_cast<int>(u.fund_unit->norm().get_si());
        n = u.norm_eps;
    }
    std::tie(u.idx_Q, u.idx_E) = norm_indices(disc, u.norm_eps);
    u.idx_coh = static_cast<int>(unit_cohomology_index(u.w, n).get_si());
    return u;
}

inline Int unit_cohomology_index(std::int64_t disc) {
    UnitData u = unit_data(disc);
    return u.idx_coh;
}

struct UnitPgtReport {
    int idx_E = 0;
    int idx_coh = 0;
    int e_infinity = 1;
    Rat lhs, rhs;
    bool holds = false;
};

/// (E_K : NE_L) / (E_L[N] : E_L^(1-sigma)) = e(inf) / 2
inline UnitPgtReport verify_unit_pgt(const UnitData& u) {
    UnitPgtReport r;
    r.idx_E = u.idx_E;
    r.idx_coh = u.idx_coh;
    r.e_infinity = u.disc < 0 ? 2 : 1;
    r.lhs = Rat(u.idx_E, u.idx_coh);
    r.lhs.canonicalize();
    r.rhs = Rat(r.e_infinity, 2);
    r.rhs.canonicalize();
    r.holds = r.lhs == r.rhs;
    return r;
}

inline UnitPgtReport verify_unit_pgt(std::int64_t disc) { return verify_unit_pgt(unit_data(disc)); }

}  // namespace ambig
