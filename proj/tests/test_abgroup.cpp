#include "ambig/abgroup.hpp"
#include "ambig/index_lemma.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

using namespace ambig;

namespace {

Int det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t k = 0, kk = 0; k < n; ++k) {
                if (k == j) continue;
                minor(i - 1, kk++) = m(i, k);
            }
        }
        Int term = m(0, j) * det(minor);
        d += (j % 2 == 0) ? term : Int(-term);
    }
    return d;
}

// gcd of all k x k minors, the classical determinantal divisor
Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
    Int g = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
        if (rows.size() == k) {
            cols.clear();
            pick_cols(0);
            return;
        }
        for (std::size_t i = start; i < m.rows(); ++i) {
            rows.push_back(i);
            pick_rows(i + 1);
            rows.pop_back();
        }
    };
    pick_cols = [&](std::size_t start) {
        if (cols.size() == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
            Int d = det(sub);
            g = gcd(g, d);
            return;
        }
        for (std::size_t j = start; j < m.cols(); ++j) {
            cols.push_back(j);
            pick_cols(j + 1);
            cols.pop_back();
        }
    };
    pick_rows(0);
    return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
    std::uniform_int_distribution<long> e(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
    return m;
}

void expect_valid_snf(const IntMatrix& m, const SmithForm& s) {
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_EQ(abs(det(s.U)), 1);
    EXPECT_EQ(abs(det(s.V)), 1);
    EXPECT_EQ(s.V * s.V_inv, IntMatrix::identity(m.cols()));
    for (std::size_t i = 0; i < s.D.rows(); ++i) {
        for (std::size_t j = 0; j < s.D.cols(); ++j) {
            if (i != j) EXPECT_EQ(s.D(i, j), 0);
        }
    }
    auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_GE(sgn(d[i]), 0);
        if (i + 1 < d.size() && sgn(d[i + 1]) != 0) {
            EXPECT_TRUE(divides(d[i], d[i + 1]));
        }
    }
}

// closure of a generating set by brute force
std::set<Element> span_by_closure(const FinAbGroup& g, const std::vector<Element>& gens) {
    std::set<Element> seen{g.identity()};
    std::vector<Element> frontier{g.identity()};
    while (!frontier.empty()) {
        Element x = frontier.back();
        frontier.pop_back();
        for (const auto& s : gens) {
            Element y = g.add(x, s);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen;
}

}  // namespace

TEST(SmithNormalForm, IdentityIsFixed) {
    auto s = smith_normal_form(IntMatrix::identity(2));
    EXPECT_EQ(s.D, IntMatrix::identity(2));
    EXPECT_EQ(s.U, IntMatrix::identity(2));
    EXPECT_EQ(s.V, IntMatrix::identity(2));
}

TEST(SmithNormalForm, SmallExample) {
    auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.D, IntMatrix::from_rows({{2, 0}, {0, 4}}));
    expect_valid_snf(m, s);
}

TEST(SmithNormalForm, ZeroMatrix) {
    IntMatrix z(3, 2);
    auto s = smith_normal_form(z);
    EXPECT_TRUE(s.D.is_zero());
    EXPECT_EQ(s.rank, 0u);
}

TEST(SmithNormalForm, RandomRoundTripAndDeterminantalDivisors) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        auto m = random_matrix(rng, r, c, 50);
        auto s = smith_normal_form(m);
        expect_valid_snf(m, s);
        if (r <= 4 && c <= 4) {
            Int prod = 1;
            auto d = s.diagonal();
            for (std::size_t k = 1; k <= std::min(r, c); ++k) {
                prod *= d[k - 1];
                EXPECT_EQ(prod, determinantal_divisor(m, k)) << "k=" << k;
            }
        }
    }
}

TEST(GroupFromRelations, Cyclic) {
    EXPECT_EQ(group_from_relations(1, IntMatrix::from_rows({{5}})), FinAbGroup({5}));
}

TEST(GroupFromRelations, KleinFour) {
    EXPECT_EQ(group_from_relations(2, IntMatrix::from_rows({{2, 0}, {0, 2}})), FinAbGroup({2, 2}));
}

TEST(GroupFromRelations, NonDiagonal) {
    EXPECT_EQ(group_from_relations(2, IntMatrix::from_rows({{2, 2}, {0, 4}})), FinAbGroup({2, 4}));
}

TEST(GroupFromRelations, TrivialFactorsDropped) {
    EXPECT_EQ(group_from_relations(2, IntMatrix::from_rows({{1, 0}, {0, 3}})), FinAbGroup({3}));
    EXPECT_TRUE(group_from_relations(1, IntMatrix::from_rows({{1}})).is_trivial());
}

TEST(GroupFromRelations, RankDeficientIsInfinite) {
    EXPECT_THROW(group_from_relations(2, IntMatrix::from_rows({{2, 4}})), InfiniteQuotient);
    EXPECT_THROW(group_from_relations(2, IntMatrix::from_rows({{1, 2}, {2, 4}})), InfiniteQuotient);
}

TEST(GroupFromRelations, ProjectionMatchesOrderOfQuotient) {
    // every relation row maps to zero, every basis vector lifts back
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 4;
        IntMatrix rel = random_matrix(rng, n + 1, n, 9);
        Presentation p;
        try {
            p = present(n, rel);
        } catch (const InfiniteQuotient&) {
            continue;
        }
        for (std::size_t i = 0; i < rel.rows(); ++i) {
            EXPECT_TRUE(p.group.is_identity(p.project(rel.row(i))));
        }
        for (std::size_t j = 0; j < p.group.rank(); ++j) {
            Element e = p.group.identity();
            e[j] = 1;
            EXPECT_EQ(p.project(p.lift_generator(j)), e);
        }
        EXPECT_EQ(p.group.order(), abs(det(IntMatrix::from_rows(
                                       [&] {
                                           // any n independent rows: use HNF-free check via SNF order
                                           std::vector<std::vector<Int>> rows;
                                           auto s = smith_normal_form(rel);
                                           for (std::size_t i = 0; i < n; ++i) {
                                               std::vector<Int> r(n);
                                               r[i] = s.D(i, i);
                                               rows.push_back(r);
                                           }
                                           return rows;
                                       }(),
                                       n))));
    }
}

TEST(Subgroup, IdentityGeneratesTrivial) {
    FinAbGroup g({2, 4});
    auto h = subgroup_generated(g, {g.identity()});
    EXPECT_TRUE(h.structure().is_trivial());
}

TEST(Subgroup, EvenResiduesInZ4) {
    FinAbGroup g({4});
    auto h = subgroup_generated(g, {{2}});
    EXPECT_EQ(h.structure(), FinAbGroup({2}));
}

TEST(Subgroup, MembershipInZ2xZ4) {
    FinAbGroup g({2, 4});
    auto h = subgroup_generated(g, {{1, 2}});
    EXPECT_EQ(h.structure(), FinAbGroup({2}));
    EXPECT_TRUE(h.contains({1, 2}));
    EXPECT_TRUE(h.contains({0, 0}));
    EXPECT_FALSE(h.contains({0, 2}));
}

TEST(Subgroup, InvalidElementRejected) {
    FinAbGroup g({2, 4});
    EXPECT_THROW(subgroup_generated(g, {{2, 0}}), InvalidElement);
    EXPECT_THROW(subgroup_generated(g, {{1}}), InvalidElement);
}

TEST(Subgroup, AllGeneratorsGiveWholeGroupAndMatchClosure) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        FinAbGroup g = random_group(rng, 200);
        std::vector<Element> basis;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            Element e = g.identity();
            e[i] = 1;
            basis.push_back(e);
        }
        EXPECT_EQ(subgroup_generated(g, basis).structure(), g);

        std::vector<Element> gens;
        std::uniform_int_distribution<int> count(0, 3);
        int k = count(rng);
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::uint64_t> pick(0, g.small_order() - 1);
            gens.push_back(g.element_at(pick(rng)));
        }
        auto h = subgroup_generated(g, gens);
        auto closure = span_by_closure(g, gens);
        EXPECT_EQ(h.order(), Int(static_cast<unsigned long>(closure.size())));
        for (const auto& x : g.elements()) {
            EXPECT_EQ(h.contains(x), closure.count(x) == 1);
        }
    }
}

TEST(GroupHom, IdentityOnZ6) {
    auto f = GroupHom::identity(FinAbGroup({6}));
    auto a = analyze_hom(f);
    EXPECT_TRUE(a.kernel.is_trivial());
    EXPECT_TRUE(a.cokernel.is_trivial());
    EXPECT_EQ(a.image, FinAbGroup({6}));
}

TEST(GroupHom, DoublingOnZ4) {
    GroupHom f(FinAbGroup({4}), FinAbGroup({4}), {{2}});
    auto a = analyze_hom(f);
    EXPECT_EQ(a.kernel, FinAbGroup({2}));
    EXPECT_EQ(a.image, FinAbGroup({2}));
    EXPECT_EQ(a.cokernel, FinAbGroup({2}));
}

TEST(GroupHom, Z2IntoZ4) {
    GroupHom f(FinAbGroup({2}), FinAbGroup({4}), {{2}});
    auto a = analyze_hom(f);
    EXPECT_TRUE(a.kernel.is_trivial());
    EXPECT_EQ(a.cokernel, FinAbGroup({2}));
}

TEST(GroupHom, IllFormedRejected) {
    EXPECT_THROW(GroupHom(FinAbGroup({2}), FinAbGroup({4}), {{1}}), IllFormedHom);
    EXPECT_THROW(GroupHom(FinAbGroup({2}), FinAbGroup({4}), {}), IllFormedHom);
}

TEST(GroupHom, KernelTimesImageIsSource) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        FinAbGroup a = random_group(rng, 300);
        FinAbGroup b = random_group(rng, 300);
        GroupHom f = random_hom(rng, a, b);
        auto h = analyze_hom(f);
        EXPECT_EQ(h.kernel.order() * h.image.order(), a.order());
        EXPECT_EQ(h.image.order() * h.cokernel.order(), b.order());
        // brute-force kernel size
        std::size_t ker = 0;
        for (const auto& x : a.elements()) ker += b.is_identity(f(x)) ? 1 : 0;
        EXPECT_EQ(h.kernel.order(), Int(static_cast<unsigned long>(ker)));
    }
}

TEST(IndexLemma, IdentityVerticalMaps) {
    FinAbGroup a({2}), c({3});
    auto b = direct_product(a, c);
    ShortExactRow row{b.inject_first(), b.project_second()};
    IndexDiagram d{row, row, GroupHom::identity(a), GroupHom::identity(b.group()), GroupHom::identity(c)};
    auto r = check_index_lemma(d);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.a.value(), 1);
    EXPECT_EQ(r.b.value(), 1);
    EXPECT_EQ(r.c.value(), 1);
}

TEST(IndexLemma, InclusionsZ2Z4) {
    // A = A' = Z/2, C = Z/2 in C' = Z/4, B = Z/2 x Z/2 in B' = Z/2 x Z/4
    FinAbGroup a({2}), c({2}), c2({4});
    auto b = direct_product(a, c);
    auto b2 = direct_product(a, c2);
    GroupHom gamma(c, c2, {{2}});
    std::vector<Element> beta_imgs;
    for (std::size_t j = 0; j < b.group().rank(); ++j) {
        Element e = b.group().identity();
        e[j] = 1;
        auto [xa, xc] = b.split(e);
        beta_imgs.push_back(b2.pair(xa, gamma(xc)));
    }
    GroupHom beta(b.group(), b2.group(), beta_imgs);
    IndexDiagram d{{b.inject_first(), b.project_second()},
                   {b2.inject_first(), b2.project_second()},
                   GroupHom::identity(a),
                   beta,
                   gamma};
    auto r = check_index_lemma(d);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.b.value(), 2);
    EXPECT_EQ(r.a.value(), 1);
    EXPECT_EQ(r.c.value(), 2);
    EXPECT_EQ(r.b.cokernel_order, 2);
    EXPECT_EQ(r.b.kernel_order, 1);
}

TEST(IndexLemma, RejectsNonExactRow) {
    FinAbGroup a({2}), c({2});
    auto b = direct_product(a, c);
    // zero map A -> B is not injective
    GroupHom zero(a, b.group(), {b.group().identity()});
    ShortExactRow bad{zero, b.project_second()};
    ShortExactRow good{b.inject_first(), b.project_second()};
    IndexDiagram d{bad, good, GroupHom::identity(a), GroupHom::identity(b.group()), GroupHom::identity(c)};
    EXPECT_THROW(check_index_lemma(d), NotExact);
}

TEST(IndexLemma, RejectsNonCommutingDiagram) {
    FinAbGroup a({2}), c({2});
    auto b = direct_product(a, c);
    ShortExactRow row{b.inject_first(), b.project_second()};
    GroupHom zero_c(c, c, {c.identity()});
    IndexDiagram d{row, row, GroupHom::identity(a), GroupHom::identity(b.group()), zero_c};
    EXPECT_THROW(check_index_lemma(d), NotCommutative);
}

TEST(IndexLemma, RandomizedDiagrams) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = random_index_diagram(rng, 4096, trial % 2 == 0);
        EXPECT_LE(d.beta.target().order(), 4096);
        auto r = check_index_lemma(d);
        EXPECT_TRUE(r.holds) << "trial " << trial;
    }
}
