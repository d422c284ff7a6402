#pragma once

// Multiplicativity of generalized indices along a morphism of short exact
// sequences
//
//     1 -> A  -> B  -> C  -> 1
//          |a    |b    |c
//     1 -> A' -> B' -> C' -> 1
//
// with (X':X) := #coker / #ker taken as an exact rational.

#include "ambig/abgroup.hpp"

#include <random>

namespace ambig {

struct ShortExactRow {
    GroupHom inject;   // A -> B
    GroupHom project;  // B -> C
};

struct IndexDiagram {
    ShortExactRow top;
    ShortExactRow bottom;
    GroupHom alpha;  // A -> A'
    GroupHom beta;   // B -> B'
    GroupHom gamma;  // C -> C'
};

struct GeneralizedIndex {
    Int kernel_order;
    Int cokernel_order;

    Rat value() const {
        Rat r(cokernel_order, kernel_order);
        r.canonicalize();
        return r;
    }
};

struct IndexLemmaReport {
    GeneralizedIndex a;
    GeneralizedIndex b;
    GeneralizedIndex c;
    bool holds = false;
};

namespace detail {

inline void check_row(const ShortExactRow& row, const char* name) {
    const auto& i = row.inject;
    const auto& p = row.project;
    if (!(i.target() == p.source())) {
        throw NotExact(std::string(name) + ": maps do not compose");
    }
    auto hi = analyze_hom(i);
    auto hp = analyze_hom(p);
    if (!hi.kernel.is_trivial()) {
        throw NotExact(std::string(name) + ": first map is not injective");
    }
    if (!hp.cokernel.is_trivial()) {
        throw NotExact(std::string(name) + ": second map is not surjective");
    }
    auto composite = i.then(p);
    for (const auto& im : composite.images()) {
        if (!composite.target().is_identity(im)) {
            throw NotExact(std::string(name) + ": composite is not trivial");
        }
    }
    // im(i) is inside ker(p); equal orders force equality
    if (hi.image.order() != hp.kernel.order()) {
        throw NotExact(std::string(name) + ": image and kernel differ in the middle");
    }
}

}  // namespace detail

inline IndexLemmaReport check_index_lemma(const IndexDiagram& d) {
    detail::check_row(d.top, "top row");
    detail::check_row(d.bottom, "bottom row");
    if (!(d.top.inject.then(d.beta) == d.alpha.then(d.bottom.inject))) {
        throw NotCommutative("left square does not commute");
    }
    if (!(d.top.project.then(d.gamma) == d.beta.then(d.bottom.project))) {
        throw NotCommutative("right square does not commute");
    }
    auto index_of = [](const GroupHom& f) {
        auto h = analyze_hom(f);
        return GeneralizedIndex{h.kernel.order(), h.cokernel.order()};
    };
    IndexLemmaReport r{index_of(d.alpha), index_of(d.beta), index_of(d.gamma), false};
    r.holds = r.b.value() == r.a.value() * r.c.value();
    return r;
}

/// Random element of Hom(source, target) given by a uniform choice of
/// admissible generator images.
inline GroupHom random_hom(std::mt19937_64& rng, const FinAbGroup& source, const FinAbGroup& target) {
    std::vector<Element> imgs;
    for (auto order : source.invariant_factors()) {
        Element e(target.rank());
        for (std::size_t j = 0; j < target.rank(); ++j) {
            std::int64_t dj = target.invariant_factors()[j];
            std::int64_t step = dj / std::gcd(dj, order);
            std::uniform_int_distribution<std::int64_t> pick(0, dj / step - 1);
            e[j] = step * pick(rng);
        }
        imgs.push_back(e);
    }
    return GroupHom(source, target, imgs);
}

/// Random finite abelian group whose order divides `max_order` loosely:
/// a product of up to three cyclic factors, order at most max_order.
inline FinAbGroup random_group(std::mt19937_64& rng, std::int64_t max_order) {
    std::uniform_int_distribution<int> nfac(0, 3);
    std::uniform_int_distribution<std::int64_t> size(2, 12);
    std::vector<std::vector<Int>> rows;
    std::int64_t order = 1;
    int k = nfac(rng);
    std::vector<std::int64_t> cyc;
    for (int i = 0; i < k; ++i) {
        std::int64_t n = size(rng);
        if (order * n > max_order) break;
        order *= n;
        cyc.push_back(n);
    }
    IntMatrix rel(cyc.size(), cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) rel(i, i) = to_int(cyc[i]);
    return group_from_relations(cyc.size(), rel);
}

/// Split exact rows B = A x C, B' = A' x C' with
/// beta(a, c) = (alpha(a) + phi(c), gamma(c)); commutes by construction.
/// When `injective` is set, alpha and gamma are coordinate embeddings into
/// larger groups; otherwise they are arbitrary homomorphisms.
inline IndexDiagram random_index_diagram(std::mt19937_64& rng, std::int64_t max_order = 4096,
                                         bool injective = true) {
    // |B'| = |A'| |C'| <= max_order
    std::int64_t half = 1;
    while (half * half < max_order) ++half;

    FinAbGroup a, a2, c, c2;
    GroupHom alpha = GroupHom::identity(FinAbGroup{});
    GroupHom gamma = alpha;

    auto embedding = [&](std::int64_t budget, FinAbGroup& small, FinAbGroup& big) {
        // small = prod Z/n_i, big = prod Z/(n_i m_i) x extra, n_i -> m_i
        std::uniform_int_distribution<int> nfac(0, 2);
        std::uniform_int_distribution<std::int64_t> sz(2, 6);
        std::uniform_int_distribution<std::int64_t> mult(1, 3);
        std::vector<std::int64_t> n, m;
        std::int64_t used = 1;
        int k = nfac(rng);
        for (int i = 0; i < k; ++i) {
            std::int64_t ni = sz(rng), mi = mult(rng);
            if (used * ni * mi > budget) break;
            used *= ni * mi;
            n.push_back(ni);
            m.push_back(mi);
        }
        std::int64_t extra = 1;
        if (used * 2 <= budget && nfac(rng) == 2) {
            extra = std::min<std::int64_t>(budget / used, sz(rng));
        }
        const std::size_t k_small = n.size();
        const std::size_t k_big = k_small + (extra > 1 ? 1 : 0);
        IntMatrix rs(k_small, k_small), rb(k_big, k_big);
        for (std::size_t i = 0; i < k_small; ++i) {
            rs(i, i) = to_int(n[i]);
            rb(i, i) = to_int(n[i] * m[i]);
        }
        if (extra > 1) rb(k_small, k_small) = to_int(extra);
        Presentation ps = present(k_small, rs);
        Presentation pb = present(k_big, rb);
        small = ps.group;
        big = pb.group;
        std::vector<Element> imgs;
        for (std::size_t j = 0; j < small.rank(); ++j) {
            auto v = ps.lift_generator(j);
            std::vector<Int> w(k_big);
            for (std::size_t i = 0; i < k_small; ++i) w[i] = v[i] * to_int(m[i]);
            imgs.push_back(pb.project(w));
        }
        return GroupHom(small, big, imgs);
    };

    if (injective) {
        alpha = embedding(half, a, a2);
        gamma = embedding(half, c, c2);
    } else {
        a = random_group(rng, half);
        a2 = random_group(rng, half);
        c = random_group(rng, half);
        c2 = random_group(rng, half);
        alpha = random_hom(rng, a, a2);
        gamma = random_hom(rng, c, c2);
    }
    GroupHom phi = random_hom(rng, c, a2);

    DirectProduct b = direct_product(a, c);
    DirectProduct b2 = direct_product(a2, c2);

    std::vector<Element> beta_imgs;
    for (std::size_t j = 0; j < b.group().rank(); ++j) {
        Element gen = b.group().identity();
        gen[j] = 1;
        auto [xa, xc] = b.split(gen);
        Element top = a2.add(alpha(xa), phi(xc));
        beta_imgs.push_back(b2.pair(top, gamma(xc)));
    }
    GroupHom beta(b.group(), b2.group(), beta_imgs);

    return IndexDiagram{ShortExactRow{b.inject_first(), b.project_second()},
                        ShortExactRow{b2.inject_first(), b2.project_second()}, alpha, beta, gamma};
}

}  // namespace ambig
