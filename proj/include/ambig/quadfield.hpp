#pragma once

// Arithmetic in the quadratic field L = Q(sqrt(D)) for a fundamental
// discriminant D: elements, fractional ideals of the maximal order,
// prime decomposition, ideal factorization, Hilbert 90 for ideals and the
// decomposition of Galois-invariant ideals.
//
// Integral elements are written (u + v sqrt(D))/2 with u = vD (mod 2); field
// elements as x + y sqrt(D) with rational x, y. A fractional ideal is
// q * (aZ + ((b + sqrt(D))/2)Z) with q > 0 rational, a > 0, -a < b <= a and
// b^2 = D (mod 4a). The Galois action sigma is conjugation sqrt(D) -> -sqrt(D).

#include "ambig/arith.hpp"
#include "ambig/bigint.hpp"
#include "ambig/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ambig {

class FundamentalDiscriminant {
public:
    enum class Reason { ZeroOrOne, WrongResidue, SquareFactor };

    static FundamentalDiscriminant validate(std::int64_t n) {
        auto fail = [n](const char* why) {
            throw NotFundamental(std::to_string(n) + " is not a fundamental discriminant (" + why + ")");
        };
        if (n == 0 || n == 1) fail("0 and 1 are excluded");
        std::int64_t r = ((n % 4) + 4) % 4;
        std::int64_t core = 0;
        if (r == 1) {
            core = n;
        } else if (r == 0) {
            std::int64_t m = n / 4;
            std::int64_t rm = ((m % 4) + 4) % 4;
            if (rm != 2 && rm != 3) fail("n = 4m requires m = 2, 3 mod 4");
            core = m;
        } else {
            fail("not 0 or 1 mod 4");
        }
        FundamentalDiscriminant d;
        d.value_ = n;
        std::int64_t x = core < 0 ? -core : core;
        for (const auto& [p, e] : factor_integer(to_int(x))) {
            if (e > 1) fail("square factor");
        }
        for (const auto& [p, e] : factor_integer(to_int(n < 0 ? -n : n))) {
            d.finite_ramified_.push_back(to_int64(p));
        }
        return d;
    }

    std::int64_t value() const { return value_; }
    bool is_real() const { return value_ > 0; }
    bool is_imaginary() const { return value_ < 0; }
    const std::vector<std::int64_t>& finite_ramified() const { return finite_ramified_; }
    bool infinite_ramified() const { return value_ < 0; }
    int t() const { return static_cast<int>(finite_ramified_.size()) + (infinite_ramified() ? 1 : 0); }

    /// Squarefree m with L = Q(sqrt(m)).
    std::int64_t squarefree_kernel() const { return ((value_ % 4) + 4) % 4 == 0 ? value_ / 4 : value_; }

    friend bool operator==(const FundamentalDiscriminant&, const FundamentalDiscriminant&) = default;

private:
    std::int64_t value_ = 0;
    std::vector<std::int64_t> finite_ramified_;
};

inline FundamentalDiscriminant validate_discriminant(std::int64_t n) {
    return FundamentalDiscriminant::validate(n);
}

/// D mod 2, the b-coefficient of the unit ideal.
inline int disc_parity(std::int64_t disc) {
    return static_cast<int>(((disc % 2) + 2) % 2);
}

inline void require_same_disc(std::int64_t d1, std::int64_t d2) {
    if (d1 != d2) {
        throw DiscriminantMismatch(std::to_string(d1) + " vs " + std::to_string(d2));
    }
}

/// Integral element (u + v sqrt(D))/2.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(std::int64_t disc, Int u, Int v) : disc_(disc), u_(std::move(u)), v_(std::move(v)) {
        if (mod_floor(u_ - v_ * to_int(disc_), 2) != 0) {
            throw std::invalid_argument("QuadInt: u and vD must have the same parity");
        }
    }

    static QuadInt from_integer(std::int64_t disc, const Int& n) { return QuadInt(disc, 2 * n, 0); }

    std::int64_t disc() const { return disc_; }
    const Int& u() const { return u_; }
    const Int& v() const { return v_; }

    Int trace() const { return u_; }
    Int norm() const { return exact_div(u_ * u_ - to_int(disc_) * v_ * v_, Int(4)); }
    QuadInt conjugate() const { return QuadInt(disc_, u_, -v_); }

    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        require_same_disc(x.disc_, y.disc_);
        Int u = x.u_ * y.u_ + to_int(x.disc_) * x.v_ * y.v_;
        Int v = x.u_ * y.v_ + x.v_ * y.u_;
        return QuadInt(x.disc_, exact_div(u, Int(2)), exact_div(v, Int(2)));
    }
    friend QuadInt operator-(const QuadInt& x) { return QuadInt(x.disc_, -x.u_, -x.v_); }
    friend bool operator==(const QuadInt&, const QuadInt&) = default;

    /// "a+b√m" style text for the squarefree kernel m of D.
    std::string to_string() const;

private:
    std::int64_t disc_ = 0;
    Int u_;
    Int v_;
};

/// Field element x + y sqrt(D), x and y rational.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(std::int64_t disc, Rat x, Rat y) : disc_(disc), x_(std::move(x)), y_(std::move(y)) {
        x_.canonicalize();
        y_.canonicalize();
    }
    QuadNum(const QuadInt& z) : disc_(z.disc()), x_(Rat(z.u(), 2)), y_(Rat(z.v(), 2)) {  // NOLINT
        x_.canonicalize();
        y_.canonicalize();
    }

    static QuadNum rational(std::int64_t disc, const Rat& q) { return QuadNum(disc, q, 0); }

    std::int64_t disc() const { return disc_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
    Rat norm() const { return x_ * x_ - Rat(to_int(disc_)) * y_ * y_; }
    Rat trace() const { return 2 * x_; }
    QuadNum conjugate() const { return QuadNum(disc_, x_, -y_); }

    QuadNum inverse() const {
        Rat n = norm();
        if (sgn(n) == 0) throw std::domain_error("QuadNum: inverse of zero");
        return QuadNum(disc_, x_ / n, -y_ / n);
    }

    bool is_integral() const {
        Rat u = 2 * x_, v = 2 * y_;
        if (u.get_den() != 1 || v.get_den() != 1) return false;
        return mod_floor(u.get_num() - v.get_num() * to_int(disc_), 2) == 0;
    }

    QuadInt to_quad_int() const {
        if (!is_integral()) throw std::domain_error("QuadNum: element is not integral");
        Rat u = 2 * x_, v = 2 * y_;
        return QuadInt(disc_, u.get_num(), v.get_num());
    }

    friend QuadNum operator*(const QuadNum& a, const QuadNum& b) {
        require_same_disc(a.disc_, b.disc_);
        return QuadNum(a.disc_, a.x_ * b.x_ + Rat(to_int(a.disc_)) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_);
    }
    friend QuadNum operator/(const QuadNum& a, const QuadNum& b) { return a * b.inverse(); }
    friend QuadNum operator-(const QuadNum& a) { return QuadNum(a.disc_, -a.x_, -a.y_); }
    friend bool operator==(const QuadNum& a, const QuadNum& b) {
        return a.disc_ == b.disc_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << x_ << (sgn(y_) < 0 ? " - " : " + ") << abs(y_) << "*sqrt(" << disc_ << ")";
        return os.str();
    }

private:
    std::int64_t disc_ = 0;
    Rat x_;
    Rat y_;
};

inline std::string QuadInt::to_string() const {
    // (u + v sqrt(D))/2 rewritten over sqrt(m)
    std::int64_t m = ((disc_ % 4) + 4) % 4 == 0 ? disc_ / 4 : disc_;
    Int a_num, b_num;
    Int den;
    if (m == disc_) {
        a_num = u_;
        b_num = v_;
        den = 2;
        if (mpz_even_p(u_.get_mpz_t()) && mpz_even_p(v_.get_mpz_t())) {
            a_num /= 2;
            b_num /= 2;
            den = 1;
        }
    } else {
        // sqrt(D) = 2 sqrt(m), u even
        a_num = u_ / 2;
        b_num = v_;
        den = 1;
    }
    std::ostringstream os;
    auto root = [&] { return std::string("√") + std::to_string(m); };
    std::string body;
    {
        std::ostringstream b;
        bool have_a = sgn(a_num) != 0;
        if (have_a) b << a_num;
        if (sgn(b_num) != 0) {
            if (have_a) b << (sgn(b_num) > 0 ? "+" : "-");
            else if (sgn(b_num) < 0) b << "-";
            Int ab = abs(b_num);
            if (ab != 1) b << ab;
            b << root();
        }
        if (!have_a && sgn(b_num) == 0) b << "0";
        body = b.str();
    }
    if (den == 1) {
        os << body;
    } else {
        os << "(" << body << ")/2";
    }
    return os.str();
}

namespace detail {

struct ComposeResult {
    Int a, b, scale;
};

/// Product of the primitive lattices [a1, (b1+√D)/2] [a2, (b2+√D)/2] as
/// scale * [a3, (b3+√D)/2]; equivalently Gauss composition of the forms
/// (a1,b1,c1), (a2,b2,c2). Unreduced.
inline ComposeResult compose_primitive(std::int64_t disc, Int a1, Int b1, Int a2, Int b2) {
    const Int D = to_int(disc);
    if (a1 > a2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
    }
    Int c2 = exact_div(b2 * b2 - D, 4 * a2);
    Int s = exact_div(b1 + b2, Int(2));
    Int n = b2 - s;
    Int y1, d;
    if (divides(a1, a2)) {
        y1 = 0;
        d = abs(a1);
    } else {
        auto [g, u, v] = gcdext(a2, a1);
        y1 = u;
        d = g;
    }
    Int x2, y2, d1;
    if (divides(d, s)) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        auto [g, u, v] = gcdext(s, d);
        x2 = u;
        y2 = -v;
        d1 = g;
    }
    Int v1 = exact_div(a1, d1);
    Int v2 = exact_div(a2, d1);
    Int r = mod_floor(y1 * y2 * n - x2 * c2, v1);
    Int b3 = b2 + 2 * v2 * r;
    Int a3 = v1 * v2;
    return {a3, b3, d1};
}

}  // namespace detail

class OIdeal {
public:
    OIdeal() = default;

    OIdeal(std::int64_t disc, Rat content, Int a, Int b) : disc_(disc), content_(std::move(content)), a_(std::move(a)), b_(std::move(b)) {
        content_.canonicalize();
        if (sgn(content_) <= 0) throw std::invalid_argument("OIdeal: content must be positive");
        if (sgn(a_) <= 0) throw std::invalid_argument("OIdeal: a must be positive");
        normalize_b();
        if (!divides(4 * a_, b_ * b_ - to_int(disc_))) {
            throw std::invalid_argument("OIdeal: b^2 != D mod 4a for a=" + a_.get_str() + " b=" + b_.get_str());
        }
    }

    static OIdeal unit(std::int64_t disc) { return OIdeal(disc, 1, 1, disc_parity(disc)); }
    static OIdeal rational(std::int64_t disc, const Rat& q) { return OIdeal(disc, abs(q), 1, disc_parity(disc)); }

    /// The ideal generated by a nonzero field element.
    static OIdeal principal(const QuadNum& gamma);

    std::int64_t disc() const { return disc_; }
    const Rat& content() const { return content_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    /// c of the associated form (a, b, c)
    Int c() const { return exact_div(b_ * b_ - to_int(disc_), 4 * a_); }

    Rat norm() const { return content_ * content_ * Rat(a_); }
    bool is_primitive() const { return content_ == 1; }
    bool is_integral() const { return content_.get_den() == 1; }
    bool is_rational() const { return a_ == 1; }

    OIdeal conjugate() const { return OIdeal(disc_, content_, a_, -b_); }
    bool is_invariant() const { return conjugate() == *this; }

    OIdeal scaled(const Rat& q) const { return OIdeal(disc_, content_ * abs(q), a_, b_); }
    OIdeal primitive_part() const { return OIdeal(disc_, 1, a_, b_); }

    OIdeal inverse() const {
        // a * a^sigma = (N a)
        OIdeal c = conjugate();
        return c.scaled(1 / norm());
    }

    friend OIdeal operator*(const OIdeal& x, const OIdeal& y) {
        require_same_disc(x.disc_, y.disc_);
        auto r = detail::compose_primitive(x.disc_, x.a_, x.b_, y.a_, y.b_);
        return OIdeal(x.disc_, x.content_ * y.content_ * Rat(r.scale), r.a, r.b);
    }
    friend OIdeal operator/(const OIdeal& x, const OIdeal& y) { return x * y.inverse(); }
    friend bool operator==(const OIdeal& x, const OIdeal& y) {
        return x.disc_ == y.disc_ && x.content_ == y.content_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator<(const OIdeal& x, const OIdeal& y) {
        return std::tie(x.content_, x.a_, x.b_) < std::tie(y.content_, y.a_, y.b_);
    }

    std::string to_string() const {
        std::ostringstream os;
        if (content_ != 1) os << content_ << "*";
        os << "[" << a_ << ", (" << b_ << "+√" << disc_ << ")/2]";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const OIdeal& x) { return os << x.to_string(); }

private:
    void normalize_b() {
        Int two_a = 2 * a_;
        b_ = mod_floor(b_, two_a);
        if (b_ > a_) b_ -= two_a;
    }

    std::int64_t disc_ = 0;
    Rat content_;
    Int a_;
    Int b_;
};

inline OIdeal ideal_mul(const OIdeal& x, const OIdeal& y) { return x * y; }
inline OIdeal ideal_conjugate(const OIdeal& x) { return x.conjugate(); }
inline Rat ideal_norm(const OIdeal& x) { return x.norm(); }
inline bool ideal_eq(const OIdeal& x, const OIdeal& y) {
    require_same_disc(x.disc(), y.disc());
    return x == y;
}

inline OIdeal ideal_pow(const OIdeal& x, long e) {
    OIdeal base = e < 0 ? x.inverse() : x;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    OIdeal r = OIdeal::unit(x.disc());
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

/// x^(sigma - 1) = x^sigma / x
inline OIdeal sigma_minus_one(const OIdeal& x) { return x.conjugate() / x; }

inline OIdeal OIdeal::principal(const QuadNum& gamma) {
    if (gamma.is_zero()) throw std::domain_error("OIdeal::principal: zero element");
    const std::int64_t disc = gamma.disc();
    const Int D = to_int(disc);
    const int b0 = disc_parity(disc);
    // n * gamma = (u + v√D)/2 is integral
    Rat u_r = 2 * gamma.x(), v_r = 2 * gamma.y();
    Int n = lcm(u_r.get_den(), v_r.get_den());
    Int u = u_r.get_num() * exact_div(n, u_r.get_den());
    Int v = v_r.get_num() * exact_div(n, v_r.get_den());
    if (mod_floor(u - v * D, 2) != 0) {
        n *= 2;
        u *= 2;
        v *= 2;
    }
    // Z-basis beta, beta*omega with omega = (b0 + √D)/2, coordinates in (1, omega)
    Int y1 = v, x1 = exact_div(u - v * b0, Int(2));
    Int u2 = exact_div(u * b0 + v * D, Int(2));
    Int v2 = exact_div(u + v * b0, Int(2));
    Int y2 = v2, x2 = exact_div(u2 - v2 * b0, Int(2));
    // Hermite form {A, B + C omega}
    Int det = abs(x1 * y2 - x2 * y1);
    auto [C, s, t] = gcdext(y1, y2);
    Int A = exact_div(det, C);
    Int B = mod_floor(s * x1 + t * x2, A);
    Int a = exact_div(A, C);
    Int b = 2 * exact_div(B, C) + b0;
    return OIdeal(disc, Rat(C, n), a, b);
}

enum class SplitKind { Ramified, Split, Inert };

inline const char* to_string(SplitKind k) {
    switch (k) {
        case SplitKind::Ramified: return "ramified";
        case SplitKind::Split: return "split";
        case SplitKind::Inert: return "inert";
    }
    return "?";
}

struct PrimeSplitting {
    SplitKind kind;
    /// ramified: {P} with P^2 = (p); split: {P, P^sigma}; inert: {(p)}
    std::vector<OIdeal> primes;
};

inline PrimeSplitting prime_splitting(const Int& p, std::int64_t disc) {
    if (!is_prime(p)) throw NotPrime(p.get_str() + " is not prime");
    const Int D = to_int(disc);
    int k = kronecker(D, p);
    if (k == -1) {
        return {SplitKind::Inert, {OIdeal::rational(disc, Rat(p))}};
    }
    // b with b^2 = D (mod 4p)
    Int b;
    if (p == 2) {
        b = disc_parity(disc) == 1 ? 1 : (mod_floor(D, 8) == 0 ? 0 : 2);
    } else {
        Int r = *sqrt_mod_prime(D, p);
        b = mod_floor(r - D, 2) == 0 ? r : r + p;
    }
    OIdeal P(disc, 1, p, b);
    if (k == 0) return {SplitKind::Ramified, {P}};
    return {SplitKind::Split, {P, P.conjugate()}};
}

/// The prime above a ramified rational prime p | D.
inline OIdeal ramified_prime(std::int64_t p, std::int64_t disc) {
    auto s = prime_splitting(to_int(p), disc);
    if (s.kind != SplitKind::Ramified) {
        throw std::invalid_argument(std::to_string(p) + " is not ramified in discriminant " + std::to_string(disc));
    }
    return s.primes.front();
}

struct PrimeIdeal {
    Int p;
    SplitKind kind;
    OIdeal ideal;

    friend bool operator==(const PrimeIdeal& x, const PrimeIdeal& y) { return x.ideal == y.ideal; }
    friend bool operator<(const PrimeIdeal& x, const PrimeIdeal& y) {
        return std::tie(x.p, x.ideal) < std::tie(y.p, y.ideal);
    }
};

using IdealFactorization = std::vector<std::pair<PrimeIdeal, long>>;

namespace detail {

inline void add_exponent(IdealFactorization& f, const PrimeIdeal& P, long e) {
    if (e == 0) return;
    for (auto& [Q, k] : f) {
        if (Q == P) {
            k += e;
            return;
        }
    }
    f.emplace_back(P, e);
}

}  // namespace detail

/// Prime ideal factorization of a nonzero fractional ideal.
inline IdealFactorization factor_ideal(const OIdeal& x, const FactorLimits& limits = {}) {
    const std::int64_t disc = x.disc();
    IdealFactorization out;
    auto rational_part = [&](const Int& n, long sign) {
        if (n == 1) return;
        for (const auto& [p, e] : factor_integer(n, limits)) {
            auto s = prime_splitting(p, disc);
            long k = sign * static_cast<long>(e);
            switch (s.kind) {
                case SplitKind::Ramified:
                    detail::add_exponent(out, {p, s.kind, s.primes[0]}, 2 * k);
                    break;
                case SplitKind::Split:
                    detail::add_exponent(out, {p, s.kind, s.primes[0]}, k);
                    detail::add_exponent(out, {p, s.kind, s.primes[1]}, k);
                    break;
                case SplitKind::Inert:
                    detail::add_exponent(out, {p, s.kind, s.primes[0]}, k);
                    break;
            }
        }
    };
    rational_part(x.content().get_num(), 1);
    rational_part(x.content().get_den(), -1);
    if (x.a() != 1) {
        for (const auto& [p, e] : factor_integer(x.a(), limits)) {
            auto s = prime_splitting(p, disc);
            if (s.kind == SplitKind::Inert || (s.kind == SplitKind::Ramified && e > 1)) {
                throw std::logic_error("factor_ideal: primitive ideal with impossible norm");
            }
            const OIdeal* P = &s.primes[0];
            if (s.kind == SplitKind::Split && !divides(2 * p, x.b() - s.primes[0].b())) {
                P = &s.primes[1];
            }
            detail::add_exponent(out, {p, s.kind, *P}, static_cast<long>(e));
        }
    }
    std::erase_if(out, [](const auto& pe) { return pe.second == 0; });
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

inline OIdeal ideal_from_factorization(std::int64_t disc, const IdealFactorization& f) {
    OIdeal r = OIdeal::unit(disc);
    for (const auto& [P, e] : f) r = r * ideal_pow(P.ideal, e);
    return r;
}

/// Some ideal a with a^(sigma-1) = (alpha), for alpha of norm +-1.
inline OIdeal hilbert90_ideal(const QuadNum& alpha, const FactorLimits& limits = {}) {
    Rat n = alpha.norm();
    if (n != 1 && n != -1) {
        throw NormNotUnit("element has norm " + n.get_str());
    }
    const std::int64_t disc = alpha.disc();
    auto f = factor_ideal(OIdeal::principal(alpha), limits);
    OIdeal a = OIdeal::unit(disc);
    std::vector<bool> used(f.size(), false);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& [P, e] = f[i];
        if (P.kind != SplitKind::Split) {
            throw std::logic_error("hilbert90_ideal: nonzero exponent at a non-split prime");
        }
        if (used[i]) continue;
        // partner exponent is -e since N((alpha)) = (1)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[j].first.p == P.p) used[j] = true;
        }
        a = a * ideal_pow(P.ideal, -e);
    }
    return a;
}

/// x = (rational ideal) * prod over finite ramified p of P_p^(a_p), a_p in {0,1}.
struct InvariantDecomposition {
    Rat rational;                                       // generator q > 0 of the rational part
    std::vector<std::pair<std::int64_t, int>> exponents;  // (p, a_p) for every finite ramified p

    friend bool operator==(const InvariantDecomposition&, const InvariantDecomposition&) = default;
};

inline InvariantDecomposition invariant_decompose(const OIdeal& x, const FundamentalDiscriminant& d) {
    require_same_disc(x.disc(), d.value());
    if (!x.is_invariant()) {
        throw NotInvariant(x.to_string() + " is not fixed by conjugation");
    }
    InvariantDecomposition r{x.content(), {}};
    Int rest = x.a();
    for (std::int64_t p : d.finite_ramified()) {
        Int pp = to_int(p);
        int e = divides(pp, rest) ? 1 : 0;
        if (e) rest = exact_div(rest, pp);
        r.exponents.emplace_back(p, e);
    }
    if (rest != 1) {
        throw std::logic_error("invariant_decompose: primitive part is not a product of ramified primes");
    }
    return r;
}

inline OIdeal reconstruct_invariant(const InvariantDecomposition& dec, std::int64_t disc) {
    OIdeal r = OIdeal::rational(disc, dec.rational);
    for (const auto& [p, e] : dec.exponents) {
        if (e) r = r * ramified_prime(p, disc);
    }
    return r;
}

}  // namespace ambig
