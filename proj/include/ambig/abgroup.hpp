#pragma once

// Finite abelian groups in invariant-factor form, built on a Smith normal
// form over arbitrary-precision integers.
//
// A group is Z/d_1 x ... x Z/d_k with 1 < d_1 | d_2 | ... | d_k; elements
// are residue tuples. Quotients of Z^n by relation lattices come back as a
// Presentation, which also carries the coordinate change needed to move
// between Z^n and the canonical generators.

#include "ambig/bigint.hpp"
#include "ambig/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ambig {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw std::invalid_argument("IntMatrix: ragged rows");
            }
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
        IntMatrix m(rows.size(), cols);
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != cols) {
                throw std::invalid_argument("IntMatrix: ragged rows");
            }
            std::size_t j = 0;
            for (long v : r) {
                m(i, j++) = v;
            }
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void append_row(const std::vector<Int>& r) {
        if (r.size() != cols_) {
            throw std::invalid_argument("IntMatrix: row length mismatch");
        }
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(i, j), (*this)(k, j));
        }
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::swap((*this)(i, j), (*this)(i, k));
        }
    }

    /// row dst += q * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(dst, j) += q * (*this)(src, j);
        }
    }

    /// col dst += q * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < rows_; ++i) {
            (*this)(i, dst) += q * (*this)(i, src);
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(i, j) = -(*this)(i, j);
        }
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return sgn(v) == 0; });
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols_ != y.rows_) {
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        }
        IntMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Int& xik = x(i, k);
                if (sgn(xik) == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    r(i, j) += xik * y(k, j);
                }
            }
        }
        return r;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// U * M * V = D with U, V unimodular; V_inv is V^{-1}. The first `rank`
/// diagonal entries of D are positive and form a divisibility chain, the
/// rest of D is zero.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inv;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
            d.push_back(D(i, i));
        }
        return d;
    }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    SmithForm s{IntMatrix::identity(r), m, IntMatrix::identity(c), IntMatrix::identity(c), 0};
    IntMatrix& D = s.D;

    auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        // col dst += q col src, on D and V; the inverse acts on rows of V_inv
        D.add_col_multiple(dst, src, q);
        s.V.add_col_multiple(dst, src, q);
        s.V_inv.add_row_multiple(src, dst, Int(-q));
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        D.swap_cols(j, k);
        s.V.swap_cols(j, k);
        s.V_inv.swap_rows(j, k);
    };
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        D.add_row_multiple(dst, src, q);
        s.U.add_row_multiple(dst, src, q);
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        D.swap_rows(i, k);
        s.U.swap_rows(i, k);
    };

    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < r; ++i) {
            for (std::size_t j = t; j < c; ++j) {
                if (sgn(D(i, j)) != 0 && (!found || cmpabs(D(i, j), best) < 0)) {
                    found = true;
                    best = D(i, j);
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            for (std::size_t i = t + 1; i < r; ++i) {
                if (sgn(D(i, t)) != 0) {
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                    if (sgn(q) != 0) row_op(i, t, Int(-q));
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (sgn(D(t, j)) != 0) {
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                    if (sgn(q) != 0) col_op(j, t, Int(-q));
                }
            }
            // leftover remainders are smaller than the pivot: promote one
            bool leftover = false;
            std::size_t li = t, lj = t;
            Int lbest;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (sgn(D(i, t)) != 0 && (!leftover || cmpabs(D(i, t), lbest) < 0)) {
                    leftover = true;
                    lbest = D(i, t);
                    li = i;
                    lj = t;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (sgn(D(t, j)) != 0 && (!leftover || cmpabs(D(t, j), lbest) < 0)) {
                    leftover = true;
                    lbest = D(t, j);
                    li = t;
                    lj = j;
                }
            }
            if (leftover) {
                row_swap(t, li);
                col_swap(t, lj);
                continue;
            }
            // enforce d_t | every remaining entry
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i) {
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (!divides(D(t, t), D(i, j))) {
                        row_op(t, i, Int(1));
                        fixed = true;
                        break;
                    }
                }
            }
            if (!fixed) break;
        }
        if (sgn(D(t, t)) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
        }
    }
    s.rank = t;
    return s;
}

using Element = std::vector<std::int64_t>;

class FinAbGroup {
public:
    FinAbGroup() = default;

    explicit FinAbGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2) {
                throw std::invalid_argument("FinAbGroup: invariant factor < 2");
            }
            if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
                throw std::invalid_argument("FinAbGroup: divisibility chain broken");
            }
        }
    }

    static FinAbGroup cyclic(std::int64_t n) {
        return n == 1 ? FinAbGroup{} : FinAbGroup{{n}};
    }

    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }

    Int order() const {
        Int o = 1;
        for (auto d : factors_) o *= to_int(d);
        return o;
    }

    std::uint64_t small_order() const {
        std::uint64_t o = 1;
        for (auto d : factors_) {
            if (o > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(d)) {
                throw std::overflow_error("FinAbGroup: group too large to enumerate");
            }
            o *= static_cast<std::uint64_t>(d);
        }
        return o;
    }

    bool is_trivial() const { return factors_.empty(); }

    Element identity() const { return Element(factors_.size(), 0); }

    bool is_valid(const Element& x) const {
        if (x.size() != factors_.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < 0 || x[i] >= factors_[i]) return false;
        }
        return true;
    }

    void check(const Element& x) const {
        if (!is_valid(x)) {
            throw InvalidElement("element " + format(x) + " not in " + to_string());
        }
    }

    Element reduce(const std::vector<Int>& v) const {
        if (v.size() != factors_.size()) {
            throw InvalidElement("coordinate vector has wrong length");
        }
        Element e(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            e[i] = to_int64(mod_floor(v[i], to_int(factors_[i])));
        }
        return e;
    }

    Element add(const Element& x, const Element& y) const {
        Element r(factors_.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = (x[i] + y[i]) % factors_[i];
        }
        return r;
    }

    Element negate(const Element& x) const {
        Element r(factors_.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = x[i] == 0 ? 0 : factors_[i] - x[i];
        }
        return r;
    }

    Element scale(const Element& x, const Int& k) const {
        Element r(factors_.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = to_int64(mod_floor(k * to_int(x[i]), to_int(factors_[i])));
        }
        return r;
    }

    bool is_identity(const Element& x) const {
        return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
    }

    std::int64_t element_order(const Element& x) const {
        std::int64_t o = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::int64_t oi = factors_[i] / std::gcd(factors_[i], x[i]);
            o = std::lcm(o, oi);
        }
        return o;
    }

    /// Mixed-radix position of x in [0, order).
    std::uint64_t index_of(const Element& x) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            idx = idx * static_cast<std::uint64_t>(factors_[i]) + static_cast<std::uint64_t>(x[i]);
        }
        return idx;
    }

    Element element_at(std::uint64_t idx) const {
        Element e(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            e[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(factors_[i]));
            idx /= static_cast<std::uint64_t>(factors_[i]);
        }
        return e;
    }

    std::vector<Element> elements() const {
        std::uint64_t n = small_order();
        std::vector<Element> out;
        out.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
        return out;
    }

    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) os << " x ";
            os << "Z/" << factors_[i];
        }
        return os.str();
    }

    static std::string format(const Element& x) {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) os << ',';
            os << x[i];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
    std::vector<std::int64_t> factors_;
};

/// Z^n / L together with the coordinate change. `proj` (n x k) maps a row
/// vector of Z^n to canonical coordinates; row j of `lift` (k x n) is a
/// preimage of the j-th canonical generator.
struct Presentation {
    FinAbGroup group;
    IntMatrix proj;
    IntMatrix lift;

    std::size_t free_rank() const { return proj.rows(); }

    Element project(const std::vector<Int>& x) const {
        if (x.size() != proj.rows()) {
            throw InvalidElement("vector length does not match presentation");
        }
        std::vector<Int> y(proj.cols());
        for (std::size_t j = 0; j < proj.cols(); ++j) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                y[j] += x[i] * proj(i, j);
            }
        }
        return group.reduce(y);
    }

    Element project(const Element& x) const {
        std::vector<Int> v(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) v[i] = to_int(x[i]);
        return project(v);
    }

    std::vector<Int> lift_generator(std::size_t j) const { return lift.row(j); }

    /// A preimage in Z^n of an arbitrary element.
    std::vector<Int> lift_element(const Element& e) const {
        std::vector<Int> v(lift.cols());
        for (std::size_t j = 0; j < e.size(); ++j) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i] += to_int(e[j]) * lift(j, i);
            }
        }
        return v;
    }
};

/// Presents Z^n modulo the row span of `relations` (rows of length n).
inline Presentation present(std::size_t n, const IntMatrix& relations) {
    if (relations.cols() != n) {
        throw std::invalid_argument("present: relation rows must have n entries");
    }
    SmithForm s = smith_normal_form(relations);
    if (s.rank < n) {
        throw InfiniteQuotient("relation lattice has rank " + std::to_string(s.rank) + " < " +
                               std::to_string(n));
    }
    std::vector<std::size_t> keep;
    std::vector<std::int64_t> factors;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.D(i, i) != 1) {
            keep.push_back(i);
            factors.push_back(to_int64(s.D(i, i)));
        }
    }
    Presentation p{FinAbGroup(std::move(factors)), IntMatrix(n, keep.size()), IntMatrix(keep.size(), n)};
    for (std::size_t k = 0; k < keep.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            p.proj(i, k) = s.V(i, keep[k]);
            p.lift(k, i) = s.V_inv(keep[k], i);
        }
    }
    return p;
}

inline FinAbGroup group_from_relations(std::size_t n, const IntMatrix& relations) {
    return present(n, relations).group;
}

namespace detail {

inline IntMatrix stack_with_orders(const std::vector<Element>& rows, const FinAbGroup& g) {
    const std::size_t k = g.rank();
    IntMatrix m(rows.size() + k, k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = to_int(rows[i][j]);
    }
    for (std::size_t j = 0; j < k; ++j) m(rows.size() + j, j) = to_int(g.invariant_factors()[j]);
    return m;
}

/// Relations among `gens` inside g: the lattice {x in Z^m : sum x_i gens_i = 0}.
inline IntMatrix relation_lattice(const std::vector<Element>& gens, const FinAbGroup& g) {
    const std::size_t m = gens.size();
    IntMatrix stacked = stack_with_orders(gens, g);
    SmithForm s = smith_normal_form(stacked);
    IntMatrix rel(0, m);
    for (std::size_t i = s.rank; i < stacked.rows(); ++i) {
        std::vector<Int> r(m);
        for (std::size_t j = 0; j < m; ++j) r[j] = s.U(i, j);
        rel.append_row(r);
    }
    return rel;
}

}  // namespace detail

/// Subgroup of an ambient group given by generators, with its abstract
/// structure and a membership test.
class Subgroup {
public:
    Subgroup(FinAbGroup ambient, std::vector<Element> gens) : ambient_(std::move(ambient)), gens_(std::move(gens)) {
        for (const auto& g : gens_) ambient_.check(g);
        structure_ = gens_.empty() ? FinAbGroup{}
                                   : group_from_relations(gens_.size(), detail::relation_lattice(gens_, ambient_));
        quotient_ = present(ambient_.rank(), detail::stack_with_orders(gens_, ambient_));
    }

    const FinAbGroup& ambient() const { return ambient_; }
    const FinAbGroup& structure() const { return structure_; }
    const std::vector<Element>& generators() const { return gens_; }
    Int order() const { return structure_.order(); }

    /// ambient / subgroup
    const Presentation& quotient() const { return quotient_; }

    bool contains(const Element& x) const {
        ambient_.check(x);
        return quotient_.group.is_identity(quotient_.project(x));
    }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        for (const auto& x : ambient_.elements()) {
            if (contains(x)) out.push_back(x);
        }
        return out;
    }

private:
    FinAbGroup ambient_;
    std::vector<Element> gens_;
    FinAbGroup structure_;
    Presentation quotient_;
};

inline Subgroup subgroup_generated(const FinAbGroup& g, const std::vector<Element>& gens) {
    return Subgroup(g, gens);
}

class GroupHom {
public:
    GroupHom(FinAbGroup source, FinAbGroup target, std::vector<Element> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != source_.rank()) {
            throw IllFormedHom("expected one image per source generator");
        }
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (!target_.is_valid(images_[i])) {
                throw IllFormedHom("image " + FinAbGroup::format(images_[i]) + " is not an element of " +
                                   target_.to_string());
            }
            if (!target_.is_identity(target_.scale(images_[i], to_int(source_.invariant_factors()[i])))) {
                throw IllFormedHom("generator " + std::to_string(i) + " of order " +
                                   std::to_string(source_.invariant_factors()[i]) + " has image " +
                                   FinAbGroup::format(images_[i]) + " of incompatible order");
            }
        }
    }

    static GroupHom identity(const FinAbGroup& g) {
        std::vector<Element> imgs;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            Element e = g.identity();
            e[i] = 1;
            imgs.push_back(e);
        }
        return GroupHom(g, g, imgs);
    }

    const FinAbGroup& source() const { return source_; }
    const FinAbGroup& target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }

    /// Image of an integer combination of source generators.
    Element apply(const std::vector<Int>& coeffs) const {
        std::vector<Int> y(target_.rank());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            for (std::size_t j = 0; j < y.size(); ++j) {
                y[j] += coeffs[i] * to_int(images_[i][j]);
            }
        }
        return target_.reduce(y);
    }

    Element operator()(const Element& x) const {
        source_.check(x);
        std::vector<Int> c(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) c[i] = to_int(x[i]);
        return apply(c);
    }

    /// next o this
    GroupHom then(const GroupHom& next) const {
        if (!(next.source_ == target_)) {
            throw IllFormedHom("composition of incompatible homomorphisms");
        }
        std::vector<Element> imgs;
        for (const auto& im : images_) imgs.push_back(next(im));
        return GroupHom(source_, next.target_, imgs);
    }

    friend bool operator==(const GroupHom&, const GroupHom&) = default;

private:
    FinAbGroup source_;
    FinAbGroup target_;
    std::vector<Element> images_;
};

struct HomAnalysis {
    FinAbGroup kernel;
    FinAbGroup image;
    FinAbGroup cokernel;
    std::vector<Element> kernel_generators;  // elements of the source
};

inline HomAnalysis analyze_hom(const GroupHom& f) {
    const auto& a = f.source();
    const auto& b = f.target();
    HomAnalysis h;
    if (a.rank() == 0) {
        h.image = FinAbGroup{};
    } else {
        IntMatrix rel = detail::relation_lattice(f.images(), b);
        h.image = group_from_relations(a.rank(), rel);
        for (std::size_t i = 0; i < rel.rows(); ++i) {
            Element k = a.reduce(rel.row(i));
            if (!a.is_identity(k)) h.kernel_generators.push_back(k);
        }
    }
    h.kernel = subgroup_generated(a, h.kernel_generators).structure();
    h.cokernel = present(b.rank(), detail::stack_with_orders(f.images(), b)).group;
    return h;
}

/// A x C with its canonical coordinates.
struct DirectProduct {
    Presentation pres;  // Z^(rank A + rank C) -> A x C
    FinAbGroup first;
    FinAbGroup second;

    const FinAbGroup& group() const { return pres.group; }

    Element pair(const Element& x, const Element& y) const {
        std::vector<Int> v;
        for (auto c : x) v.push_back(to_int(c));
        for (auto c : y) v.push_back(to_int(c));
        return pres.project(v);
    }

    GroupHom inject_first() const {
        std::vector<Element> imgs;
        for (std::size_t i = 0; i < first.rank(); ++i) {
            Element e = first.identity();
            e[i] = 1;
            imgs.push_back(pair(e, second.identity()));
        }
        return GroupHom(first, group(), imgs);
    }

    GroupHom project_second() const {
        std::vector<Element> imgs;
        for (std::size_t j = 0; j < group().rank(); ++j) {
            auto v = pres.lift_generator(j);
            std::vector<Int> tail(v.begin() + static_cast<std::ptrdiff_t>(first.rank()), v.end());
            imgs.push_back(second.reduce(tail));
        }
        return GroupHom(group(), second, imgs);
    }

    /// Splits an element into its (A, C) components.
    std::pair<Element, Element> split(const Element& x) const {
        auto v = pres.lift_element(x);
        std::vector<Int> head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(first.rank()));
        std::vector<Int> tail(v.begin() + static_cast<std::ptrdiff_t>(first.rank()), v.end());
        return {first.reduce(head), second.reduce(tail)};
    }
};

inline DirectProduct direct_product(const FinAbGroup& a, const FinAbGroup& c) {
    const std::size_t n = a.rank() + c.rank();
    IntMatrix rel(n, n);
    for (std::size_t i = 0; i < a.rank(); ++i) rel(i, i) = to_int(a.invariant_factors()[i]);
    for (std::size_t j = 0; j < c.rank(); ++j) {
        rel(a.rank() + j, a.rank() + j) = to_int(c.invariant_factors()[j]);
    }
    return DirectProduct{present(n, rel), a, c};
}

/// Index (L_sup : L_sub) of full-rank lattices in Z^n given by generators.
inline Int lattice_index(std::size_t n, const IntMatrix& sup, const IntMatrix& sub) {
    Int big = group_from_relations(n, sub).order();
    Int small = group_from_relations(n, sup).order();
    if (!divides(small, big)) {
        throw std::invalid_argument("lattice_index: sub is not contained in sup");
    }
    return exact_div(big, small);
}

}  // namespace ambig
