#pragma once

// Binary quadratic forms of fundamental discriminant, their reduction and
// composition, and the narrow and wide class groups built on top.

#include "ambig/abgroup.hpp"
#include "ambig/quadfield.hpp"
#include "ambig/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ambig {

struct QForm {
    Int a, b, c;

    QForm() = default;
    QForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    /// (a, b, (b^2 - D)/4a)
    static QForm from_ab(std::int64_t disc, const Int& a, const Int& b) {
        return QForm(a, b, detail::recompute_c(a, b, to_int(disc)));
    }
    static QForm principal(std::int64_t disc) { return from_ab(disc, 1, disc_parity(disc)); }
    /// The primitive part of an ideal read as the form (a, b, c).
    static QForm from_ideal(const OIdeal& x) { return QForm(x.a(), x.b(), x.c()); }

    Int disc() const { return b * b - 4 * a * c; }
    std::int64_t disc64() const { return to_int64(disc()); }
    bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
    QForm inverse() const { return QForm(a, -b, c); }

    std::string to_string() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }

    friend bool operator==(const QForm&, const QForm&) = default;
    friend bool operator<(const QForm& x, const QForm& y) { return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c); }
};

namespace detail {

inline void require_form_disc(const QForm& f, std::int64_t disc) {
    if (f.disc() != to_int(disc)) {
        throw DiscriminantMismatch("form " + f.to_string() + " has discriminant " + f.disc().get_str() + ", expected " +
                                   std::to_string(disc));
    }
}

inline void require_positive_definite(const QForm& f) {
    if (sgn(f.a) <= 0) throw std::invalid_argument("negative definite form " + f.to_string());
}

}  // namespace detail

/// Reduced representative. For D < 0 it is the unique reduced form of the
/// class; for D > 0 it is some member of the reduced cycle.
inline QForm reduce(QForm f) {
    const Int D = f.disc();
    if (sgn(D) < 0) {
        detail::require_positive_definite(f);
        detail::reduce_definite(f.a, f.b, f.c, D);
    } else {
        if (is_perfect_square(D)) throw std::invalid_argument("reduce: square discriminant");
        detail::reduce_indefinite(f.a, f.b, f.c, D, isqrt(D));
    }
    return f;
}

inline bool is_reduced(const QForm& f) {
    const Int D = f.disc();
    if (sgn(D) < 0) return sgn(f.a) > 0 && detail::is_reduced_definite(f.a, f.b, f.c);
    return detail::is_reduced_indefinite(f.a, f.b, D, isqrt(D));
}

/// Cycle of reduced forms properly equivalent to f (D > 0), rotated to start
/// at its smallest member.
inline std::vector<QForm> reduced_cycle(const QForm& f) {
    const Int D = f.disc();
    if (sgn(D) <= 0) throw NegativeDiscriminant("reduced cycles exist only for D > 0");
    const Int s = isqrt(D);
    QForm g = reduce(f);
    std::vector<QForm> cycle{g};
    for (;;) {
        detail::rho_indefinite(g.a, g.b, g.c, D, s);
        if (g == cycle.front()) break;
        cycle.push_back(g);
    }
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    return cycle;
}

/// Proper equivalence.
inline bool equivalent(const QForm& f, const QForm& g) {
    if (f.disc() != g.disc()) return false;
    if (sgn(f.disc()) < 0) return reduce(f) == reduce(g);
    return reduced_cycle(f).front() == reduced_cycle(g).front();
}

namespace detail {

/// A form with a > 0 in the proper class of f.
inline QForm positive_member(const QForm& f) {
    if (sgn(f.a) > 0) return f;
    const Int D = f.disc();
    const Int s = isqrt(D);
    QForm g = reduce(f);
    // leading coefficients alternate in sign along a reduced cycle
    if (sgn(g.a) < 0) rho_indefinite(g.a, g.b, g.c, D, s);
    return g;
}

}  // namespace detail

/// A form in the product class, reduced.
inline QForm compose(const QForm& f, const QForm& g) {
    if (f.disc() != g.disc()) {
        throw DiscriminantMismatch(f.to_string() + " and " + g.to_string() + " have different discriminants");
    }
    if (!f.is_primitive()) throw ImprimitiveForm(f.to_string());
    if (!g.is_primitive()) throw ImprimitiveForm(g.to_string());
    const std::int64_t disc = f.disc64();
    if (disc < 0) {
        detail::require_positive_definite(f);
        detail::require_positive_definite(g);
    }
    QForm f1 = disc < 0 ? f : detail::positive_member(f);
    QForm g1 = disc < 0 ? g : detail::positive_member(g);
    auto r = detail::compose_primitive(disc, f1.a, f1.b, g1.a, g1.b);
    return reduce(QForm::from_ab(disc, r.a, r.b));
}

/// Reduced forms of discriminant D; for D > 0 both signs of a occur.
inline std::vector<QForm> reduced_forms(std::int64_t disc) {
    std::vector<QForm> out;
    const int parity = disc_parity(disc);
    if (disc < 0) {
        const std::int64_t n = -disc;
        for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
            for (std::int64_t b = -a + 1; b <= a; ++b) {
                if (((b % 2) + 2) % 2 != parity) continue;
                std::int64_t num = b * b - disc;
                if (num % (4 * a) != 0) continue;
                std::int64_t c = num / (4 * a);
                if (c < a || (c == a && b < 0)) continue;
                out.emplace_back(a, b, c);
            }
        }
        return out;
    }
    const std::int64_t s = to_int64(isqrt(to_int(disc)));
    const Int D = to_int(disc);
    const Int S = s;
    for (std::int64_t b = s; b >= 1; --b) {
        if (((b % 2) + 2) % 2 != parity) continue;
        std::int64_t n = (disc - b * b) / 4;  // = -ac
        for (std::int64_t a = 1; 2 * a <= s + b; ++a) {
            if (n % a != 0) continue;
            if (!detail::is_reduced_indefinite(Int(a), Int(b), D, S)) continue;
            out.emplace_back(a, b, -(n / a));
            out.emplace_back(-a, b, n / a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Narrow and wide class groups of a fundamental discriminant.
///
/// Narrow classes are numbered 0..h+-1 with 0 the principal class; each
/// carries a reduced representative with a > 0. For D < 0 (positive forms
/// only) narrow and wide coincide.
class ClassGroup {
public:
    static ClassGroup compute(std::int64_t disc) {
        validate_discriminant(disc);
        ClassGroup cg;
        cg.disc_ = disc;
        cg.enumerate_classes();
        cg.build_narrow_group();
        cg.build_wide_group();
        return cg;
    }

    std::int64_t disc() const { return disc_; }
    std::uint64_t h_narrow() const { return reps_.size(); }
    std::uint64_t h() const { return wide_.small_order(); }

    const FinAbGroup& narrow() const { return narrow_pres_.group; }
    const FinAbGroup& wide() const { return wide_; }
    const GroupHom& narrow_to_wide() const { return narrow_to_wide_; }

    /// Reduced representative (a > 0) of each narrow class.
    const std::vector<QForm>& representatives() const { return reps_; }

    /// Narrow class of the form -principal; trivial iff N(eps) = -1 or D < 0.
    std::size_t sign_class() const { return sign_class_; }

    std::size_t class_index(const QForm& f) const {
        detail::require_form_disc(f, disc_);
        QForm r = reduce(f);
        auto it = index_.find(key(r));
        if (it == index_.end()) throw std::logic_error("class_index: reduced form " + r.to_string() + " not enumerated");
        return it->second;
    }

    const Element& narrow_element(std::size_t class_id) const { return narrow_elems_.at(class_id); }
    Element narrow_element(const QForm& f) const { return narrow_elems_[class_index(f)]; }
    Element wide_element(const QForm& f) const { return narrow_to_wide_(narrow_element(f)); }

    std::size_t class_of_narrow(const Element& e) const { return narrow_lookup_.at(e); }
    const QForm& narrow_rep(const Element& e) const { return reps_[class_of_narrow(e)]; }

    /// Narrow class id of the chosen representative for a wide class.
    std::size_t class_of_wide(const Element& e) const { return wide_lookup_.at(e); }
    const QForm& wide_rep(const Element& e) const { return reps_[class_of_wide(e)]; }

    /// Wide class of a fractional ideal.
    Element ideal_to_class(const OIdeal& x) const {
        require_same_disc(x.disc(), disc_);
        return wide_element(QForm::from_ideal(x));
    }
    Element ideal_to_narrow_class(const OIdeal& x) const {
        require_same_disc(x.disc(), disc_);
        return narrow_element(QForm::from_ideal(x));
    }

    /// A primitive integral ideal in the wide class e.
    OIdeal class_to_ideal(const Element& e) const {
        wide_.check(e);
        const QForm& f = wide_rep(e);
        return OIdeal(disc_, 1, f.a, f.b);
    }

    /// Forms generating the narrow group, one per invariant factor.
    std::vector<QForm> narrow_generator_forms() const {
        std::vector<QForm> out;
        for (std::size_t i = 0; i < narrow().rank(); ++i) {
            Element e = narrow().identity();
            e[i] = 1;
            out.push_back(narrow_rep(e));
        }
        return out;
    }

private:
    using Key = std::pair<std::int64_t, std::int64_t>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<std::int64_t>()(k.first) * 1000003u ^ std::hash<std::int64_t>()(k.second);
        }
    };
    static Key key(const QForm& f) { return {to_int64(f.a), to_int64(f.b)}; }

    void enumerate_classes() {
        std::vector<QForm> forms = reduced_forms(disc_);
        QForm principal = reduce(QForm::principal(disc_));
        if (disc_ < 0) {
            // principal form (1, b0, c0) sorts first
            for (std::size_t i = 0; i < forms.size(); ++i) {
                index_[key(forms[i])] = i;
                reps_.push_back(forms[i]);
            }
            return;
        }
        const Int D = to_int(disc_);
        const Int s = isqrt(D);
        auto walk = [&](QForm g) {
            const std::size_t id = reps_.size();
            QForm best;
            bool have = false;
            const QForm start = g;
            do {
                index_[key(g)] = id;
                if (sgn(g.a) > 0 && (!have || g < best)) {
                    best = g;
                    have = true;
                }
                detail::rho_indefinite(g.a, g.b, g.c, D, s);
            } while (!(g == start));
            reps_.push_back(best);
        };
        walk(principal);
        for (const QForm& f : forms) {
            if (!index_.count(key(f))) walk(f);
        }
    }

    std::size_t index_of_form(const QForm& f) const { return index_.at(key(reduce(f))); }

    // Adjoin classes one at a time: find the order of each new class modulo
    // the span so far, record that relation, and extend the span.
    void build_narrow_group() {
        const std::size_t n = reps_.size();
        std::vector<std::vector<Int>> coord(n);
        std::vector<bool> known(n, false);
        std::vector<std::size_t> span{0};
        known[0] = true;
        std::vector<std::vector<Int>> relations;
        std::size_t gens = 0;
        for (std::size_t id = 1; id < n; ++id) {
            if (known[id]) continue;
            const std::size_t k = gens++;
            const QForm g = reps_[id];
            std::vector<QForm> powers{QForm::principal(disc_), g};
            QForm cur = g;
            std::size_t cur_id = id;
            while (!known[cur_id]) {
                cur = compose(cur, g);
                cur_id = index_of_form(cur);
                powers.push_back(cur);
            }
            const std::size_t order = powers.size() - 1;
            std::vector<Int> rel = coord[cur_id];
            rel.resize(gens);
            for (auto& x : rel) x = -x;
            rel[k] += static_cast<long>(order);
            relations.push_back(rel);
            const std::vector<std::size_t> old = span;
            for (std::size_t j = 1; j < order; ++j) {
                for (std::size_t h : old) {
                    std::size_t t = j == 1 && h == 0 ? id : index_of_form(compose(powers[j], reps_[h]));
                    if (known[t]) throw std::logic_error("class group: coset overlap");
                    known[t] = true;
                    coord[t] = coord[h];
                    coord[t].resize(gens);
                    coord[t][k] += static_cast<long>(j);
                    span.push_back(t);
                }
            }
        }
        if (span.size() != n) throw std::logic_error("class group: classes not exhausted");
        IntMatrix rel(0, gens);
        for (auto& r : relations) {
            r.resize(gens);
            rel.append_row(r);
        }
        narrow_pres_ = present(gens, rel);
        narrow_elems_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> c = coord[i];
            c.resize(gens);
            narrow_elems_[i] = narrow_pres_.project(c);
            narrow_lookup_[narrow_elems_[i]] = i;
        }
        if (narrow_lookup_.size() != n) throw std::logic_error("class group: projection not injective");
    }

    void build_wide_group() {
        const FinAbGroup& g = narrow();
        if (disc_ > 0) {
            sign_class_ = index_of_form(QForm::from_ab(disc_, -1, disc_parity(disc_)));
        }
        Subgroup sign(g, {narrow_elems_[sign_class_]});
        const Presentation& q = sign.quotient();
        wide_ = q.group;
        std::vector<Element> images;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            Element e = g.identity();
            e[i] = 1;
            images.push_back(q.project(e));
        }
        narrow_to_wide_ = GroupHom(g, wide_, images);
        for (std::size_t i = 0; i < reps_.size(); ++i) {
            wide_lookup_.emplace(narrow_to_wide_(narrow_elems_[i]), i);
        }
    }

    std::int64_t disc_ = 0;
    std::vector<QForm> reps_;
    std::unordered_map<Key, std::size_t, KeyHash> index_;
    Presentation narrow_pres_;
    std::vector<Element> narrow_elems_;
    std::map<Element, std::size_t> narrow_lookup_;
    std::size_t sign_class_ = 0;
    FinAbGroup wide_;
    GroupHom narrow_to_wide_{FinAbGroup{}, FinAbGroup{}, {}};
    std::map<Element, std::size_t> wide_lookup_;
};

inline ClassGroup class_group(std::int64_t disc) { return ClassGroup::compute(disc); }

}  // namespace ambig
