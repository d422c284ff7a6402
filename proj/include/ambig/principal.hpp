#pragma once

// Principality of fractional ideals by reduction, with an explicit generator.

#include "ambig/pell.hpp"
#include "ambig/quadfield.hpp"
#include "ambig/reduction.hpp"

#include <optional>

namespace ambig {

/// Canonical associate of a nonzero element under the unit group.
///
/// Real fields: the associate with 1 <= |g/g'| < eps^2 and g > 0 in the
/// first coordinate (or y > 0 when x = 0). Imaginary fields: the associate
/// whose argument lies in (-pi/w, pi/w], w the number of roots of unity.
inline QuadNum normalize_generator(QuadNum g, const UnitGroup& units) {
    if (g.is_zero()) throw std::domain_error("normalize_generator: zero element");
    require_same_disc(g.disc(), units.disc);
    if (units.fundamental) {
        const QuadNum eps(*units.fundamental);
        const QuadNum eps_inv = units.norm_fundamental() == 1 ? eps.conjugate() : -eps.conjugate();
        // |g/g'| >= 1 iff xy >= 0
        auto above = [](const QuadNum& z) { return sgn(z.x()) * sgn(z.y()) >= 0; };
        while (!above(g)) g = g * eps;
        for (QuadNum h = g * eps_inv; above(h); h = g * eps_inv) g = h;
        if (sgn(g.x()) < 0 || (sgn(g.x()) == 0 && sgn(g.y()) < 0)) g = -g;
        return g;
    }
    // largest real part; on a tie the one with positive imaginary part
    QuadNum best = g;
    for (const QuadInt& z : units.torsion) {
        QuadNum h = g * QuadNum(z);
        if (h.x() > best.x() || (h.x() == best.x() && h.y() > best.y())) best = h;
    }
    return best;
}

namespace detail {

// Reduce the form of x and search its cycle for a = +-1. on_swap sees every
// reduction step.
template <class OnSwap>
bool reaches_unit_form(const OIdeal& x, OnSwap&& on_swap) {
    const Int D = to_int(x.disc());
    Int a = x.a(), b = x.b(), c = x.c();
    if (sgn(D) < 0) {
        reduce_definite(a, b, c, D, on_swap);
        return a == 1;
    }
    const Int s = isqrt(D);
    reduce_indefinite(a, b, c, D, s, on_swap);
    const Int a0 = a, b0 = b;
    for (;;) {
        if (cmpabs(a, Int(1)) == 0) return true;
        rho_indefinite(a, b, c, D, s, on_swap);
        if (a == a0 && b == b0) return false;
    }
}

}  // namespace detail

/// A generator of x if x is principal. The generator is normalized with
/// `units`.
inline std::optional<QuadNum> is_principal_with_generator(const OIdeal& x, const UnitGroup& units) {
    const std::int64_t disc = x.disc();
    require_same_disc(disc, units.disc);
    // x = content * gamma * [|a|, (b + √D)/2] throughout
    QuadNum gamma = QuadNum::rational(disc, x.content());
    auto track = [&](const Int& bb, const Int& cc) {
        Rat den(2 * cc);
        gamma = gamma * QuadNum(disc, Rat(bb) / den, Rat(1) / den);
    };
    if (!detail::reaches_unit_form(x, track)) return std::nullopt;
    return normalize_generator(gamma, units);
}

inline std::optional<QuadNum> is_principal_with_generator(const OIdeal& x) {
    return is_principal_with_generator(x, UnitGroup::of(x.disc()));
}

inline bool is_principal(const OIdeal& x) { return detail::reaches_unit_form(x, detail::NoTracking{}); }

}  // namespace ambig
