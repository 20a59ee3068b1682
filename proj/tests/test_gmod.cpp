#include <doctest.h>

#include "galcoh/error.hpp"
#include "support.hpp"

using namespace galcoh;
using support::FiniteComplex;

namespace {

const FiniteGroup c2 = groups::cyclic(2);

AbelianGammaModule z_negation() { return AbelianGammaModule(c2, {}, 1, {IntMatrix::identity(1), IntMatrix::from_rows({{-1}}, 1)}); }

IntVector flat(const Cochain& c) {
    IntVector out;
    for (const auto& v : c.values) out.insert(out.end(), v.begin(), v.end());
    return out;
}

bool normalized(const AbelianGammaModule& m, const Cochain& c) {
    const int n = m.gamma().order();
    const int e = m.gamma().identity();
    for (std::size_t k = 0; k < c.values.size(); ++k) {
        const bool touches = c.degree == 1 ? static_cast<int>(k) == e
                                           : static_cast<int>(k) / n == e || static_cast<int>(k) % n == e;
        if (touches && !m.equal(c.values[k], m.zero())) return false;
    }
    return true;
}

/// Lexicographically least normalized cocycle in the class of z, by brute force.
Cochain brute_canonical(const AbelianGammaModule& m, const Cochain& z) {
    const int n = m.gamma().order();
    std::optional<Cochain> best;
    const int len = z.degree == 1 ? 1 : n;
    support::for_each_map(len, static_cast<int>(m.size()), [&](const std::vector<int>& a) {
        Cochain ac{z.degree - 1, {}};
        for (int x : a) ac.values.push_back(m.element_at(x));
        Cochain w = cochain_add(m, z, differential(m, ac));
        for (auto& v : w.values) v = m.reduce(v);
        if (normalized(m, w) && (!best || flat(w) < flat(*best))) best = w;
        return true;
    });
    return *best;
}

}  // namespace

TEST_CASE("differential examples") {
    const AbelianGammaModule zneg = z_negation();
    CHECK(differential(zneg, zero_cochain(zneg, 1)) == zero_cochain(zneg, 2));
    const Cochain a{1, {{0}, {1}}};
    CHECK(differential(zneg, a).at(1, 1, 2) == ModElem{0});  // ᵞ1 - a(1) + 1 = -1 - 0 + 1
    const AbelianGammaModule f2 = AbelianGammaModule::trivial(c2, {2}, 0);
    CHECK(f2.equal(differential(f2, a).at(1, 1, 2), {0}));  // 1 + 1 = 0 mod 2
}

TEST_CASE("d o d = 0 on random modules and cochains") {
    for (int trial = 0; trial < 100; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const AbelianGammaModule m = support::random_finite_module(gamma);
        for (int degree = 0; degree <= 1; ++degree) {
            const Cochain c = support::random_cochain(m, degree);
            const Cochain dd = differential(m, differential(m, c));
            CHECK(cochain_equal(m, dd, zero_cochain(m, degree + 2)));
        }
    }
    const AbelianGammaModule zneg = z_negation();
    for (int trial = 0; trial < 20; ++trial) {
        const Cochain c = support::random_cochain(zneg, 1);
        CHECK(cochain_equal(zneg, differential(zneg, differential(zneg, c)), zero_cochain(zneg, 3)));
    }
}

TEST_CASE("the library differential matches the brute-force complex") {
    for (int trial = 0; trial < 50; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const AbelianGammaModule m = support::random_finite_module(gamma);
        const FiniteComplex fc(m);
        for (int degree = 0; degree <= 2; ++degree) {
            const Cochain c = support::random_cochain(m, degree);
            CHECK(fc.indices(differential(m, c)) == fc.d(fc.indices(c), degree));
        }
    }
}

TEST_CASE("known cohomology groups") {
    const AbelianGammaModule f2 = AbelianGammaModule::trivial(c2, {2}, 0);
    CHECK(cohomology(f2, 2).invariants() == AbelianInvariants{{2}, 0});
    CHECK(FiniteComplex(f2).h_order(2) == 2u);
    CHECK(cohomology(z_negation(), 1).invariants() == AbelianInvariants{{2}, 0});
    const std::vector<int> triv = {0};
    CHECK(cohomology(permutation_module(c2, triv), 1).invariants().trivial());
    // H⁰ with trivial action is the whole module
    const AbelianGammaModule m = AbelianGammaModule::trivial(groups::symmetric(3), {2, 6}, 1);
    CHECK(cohomology(m, 0).invariants() == AbelianInvariants{{2, 6}, 1});
    // H⁰ of ℤ with negation: fixed points are 0
    CHECK(cohomology(z_negation(), 0).invariants().trivial());
    // H²(C₂, ℤ trivial) = ℤ/2, H¹(C₂, ℤ trivial) = 0
    const AbelianGammaModule z = AbelianGammaModule::trivial(c2, {}, 1);
    CHECK(cohomology(z, 2).invariants() == AbelianInvariants{{2}, 0});
    CHECK(cohomology(z, 1).invariants().trivial());
}

TEST_CASE("cohomology orders agree with brute-force counting") {
    int compared = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const AbelianGammaModule m = support::random_finite_module(gamma, 2);
        const FiniteComplex fc(m);
        for (int degree = 0; degree <= 2; ++degree) {
            const auto brute = fc.h_order(degree, 200000);
            if (!brute) continue;
            CHECK(support::order_of(cohomology(m, degree).invariants()) == *brute);
            ++compared;
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("cohomology agrees with the Tate oracle for cyclic gamma") {
    for (int n = 1; n <= 6; ++n) {
        const FiniteGroup cn = groups::cyclic(n);
        for (int trial = 0; trial < 12; ++trial) {
            const AbelianGammaModule m = support::random_finite_module(cn, 3);
            for (int degree = 0; degree <= 2; ++degree) CHECK(cohomology(m, degree).invariants() == tate_cyclic_oracle(m, degree));
        }
        // lattices: permutation and sign modules
        const std::vector<int> triv = {0};
        const AbelianGammaModule reg = permutation_module(cn, triv);
        for (int degree = 0; degree <= 2; ++degree) CHECK(cohomology(reg, degree).invariants() == tate_cyclic_oracle(reg, degree));
    }
    for (int degree = 0; degree <= 2; ++degree) CHECK(cohomology(z_negation(), degree).invariants() == tate_cyclic_oracle(z_negation(), degree));
}

TEST_CASE("Tate oracle examples and errors") {
    CHECK(tate_cyclic_oracle(AbelianGammaModule::trivial(c2, {2}, 0), 2) == AbelianInvariants{{2}, 0});
    const std::vector<int> triv = {0};
    CHECK(tate_cyclic_oracle(permutation_module(c2, triv), 1).trivial());
    CHECK(tate_cyclic_oracle(z_negation(), 1) == AbelianInvariants{{2}, 0});
    try {
        tate_cyclic_oracle(AbelianGammaModule::trivial(groups::klein_four(), {2}, 0), 1);
        FAIL("expected NotCyclic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCyclic);
    }
}

TEST_CASE("permutation modules") {
    const FiniteGroup s3 = groups::symmetric(3);
    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    const AbelianGammaModule p = permutation_module(s3, all);
    CHECK(p.rank() == 1);
    for (int s = 0; s < 6; ++s) CHECK(p.action(s) == IntMatrix::identity(1));
    const std::vector<int> triv = {0};
    const AbelianGammaModule reg = permutation_module(c2, triv);
    CHECK(reg.action(1) == IntMatrix::from_rows({{0, 1}, {1, 0}}, 2));
    int t = 1;
    while (s3.element_order(t) != 2) ++t;
    const std::vector<int> sub = {0, t};
    const AbelianGammaModule nat = permutation_module(s3, sub);
    CHECK(nat.rank() == 3);
    for (int s = 0; s < 6; ++s) {
        // each action matrix is a permutation matrix, and the action is faithful
        int ones = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) ones += nat.action(s)(i, j) == 1;
        CHECK(ones == 3);
        CHECK((s == s3.identity()) == (nat.action(s) == IntMatrix::identity(3)));
    }
}

TEST_CASE("H1 of permutation lattices vanishes") {
    std::vector<FiniteGroup> gammas;
    for (int n = 1; n <= 6; ++n) gammas.push_back(groups::cyclic(n));
    gammas.push_back(groups::klein_four());
    gammas.push_back(groups::symmetric(3));
    for (const auto& g : gammas)
        for (const auto& h : support::all_subgroups(g)) CHECK(cohomology(permutation_module(g, h), 1).invariants().trivial());
}

TEST_CASE("is_coboundary2 examples and round trip") {
    const AbelianGammaModule f2 = AbelianGammaModule::trivial(c2, {2}, 0);
    const auto zero = is_coboundary2(f2, zero_cochain(f2, 2));
    REQUIRE(zero);
    CHECK(cochain_equal(f2, differential(f2, *zero), zero_cochain(f2, 2)));
    const Cochain quat{2, {{0}, {0}, {0}, {1}}};
    CHECK_FALSE(is_coboundary2(f2, quat));
    CHECK_FALSE(FiniteComplex(f2).is_coboundary(quat));
    try {
        is_coboundary2(f2, Cochain{2, {{0}, {0}, {1}, {1}}});
        FAIL("expected NotACocycle");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACocycle);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const AbelianGammaModule m = support::random_finite_module(gamma);
        const Cochain z = differential(m, support::random_cochain(m, 1));
        const auto a = is_coboundary2(m, z);
        REQUIRE(a);
        CHECK(cochain_equal(m, differential(m, *a), z));
    }
    const AbelianGammaModule zneg = z_negation();
    const Cochain z = differential(zneg, Cochain{1, {{0}, {7}}});
    REQUIRE(is_coboundary2(zneg, z));
}

TEST_CASE("nonzero H2 representatives are never coboundaries") {
    for (int trial = 0; trial < 60; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const AbelianGammaModule m = support::random_finite_module(gamma, 2);
        const CohomologyGroup h = cohomology(m, 2);
        const auto reps = h.representatives();
        CHECK(reps.size() == support::order_of(h.invariants()));
        for (const auto& r : reps) {
            CHECK(is_cocycle(m, r));
            CHECK(is_coboundary2(m, r).has_value() == h.is_trivial_class(r));
        }
        if (m.size() <= 8 && gamma.order() <= 3)
            for (const auto& r : reps) CHECK(FiniteComplex(m).is_coboundary(r) == h.is_trivial_class(r));
    }
}

TEST_CASE("representatives partition the cocycles") {
    for (int trial = 0; trial < 40; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const AbelianGammaModule m = support::random_finite_module(gamma, 2);
        for (int degree = 1; degree <= 2; ++degree) {
            const CohomologyGroup h = cohomology(m, degree);
            const auto reps = h.representatives();
            std::set<IntVector> classes;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                classes.insert(h.class_of(reps[i]));
                CHECK(h.representative_index(reps[i]) == i);
                CHECK(h.canonical(reps[i]) == reps[i]);
            }
            CHECK(classes.size() == reps.size());  // pairwise non-cohomologous
            for (std::size_t i = 1; i < reps.size(); ++i) CHECK(flat(reps[i - 1]) < flat(reps[i]));
            // a random cocycle resolves to exactly one representative
            const Cochain z = cochain_add(m, reps[support::pick(static_cast<int>(reps.size()))],
                                          differential(m, support::random_cochain(m, degree - 1)));
            const std::size_t k = h.representative_index(z);
            CHECK(h.class_of(z) == h.class_of(reps[k]));
            CHECK(h.canonical(z) == reps[k]);
        }
    }
}

TEST_CASE("canonical representative is the lexicographically least normalized cocycle") {
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const AbelianGammaModule m = support::random_finite_module(gamma, 1);
        if (m.size() > 6 || gamma.order() > 3) continue;
        for (int degree = 1; degree <= 2; ++degree) {
            const CohomologyGroup h = cohomology(m, degree);
            for (const auto& r : h.representatives()) {
                const Cochain z = cochain_add(m, r, differential(m, support::random_cochain(m, degree - 1)));
                CHECK(h.canonical(z) == brute_canonical(m, z));
                ++compared;
            }
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("class_of rejects non-cocycles and module validation") {
    const AbelianGammaModule f2 = AbelianGammaModule::trivial(c2, {2}, 0);
    CHECK_THROWS_AS(cohomology(f2, 2).class_of(Cochain{2, {{0}, {0}, {1}, {1}}}), Error);
    // the action must respect the torsion congruences
    CHECK_THROWS_AS(AbelianGammaModule(c2, {2, 3}, 0, {IntMatrix::identity(2), IntMatrix::from_rows({{0, 1}, {1, 0}}, 2)}), Error);
    // and be multiplicative
    CHECK_THROWS_AS(AbelianGammaModule(groups::cyclic(3), {}, 1,
                                       {IntMatrix::identity(1), IntMatrix::from_rows({{-1}}, 1), IntMatrix::from_rows({{-1}}, 1)}),
                    Error);
    CHECK_THROWS_AS(AbelianGammaModule::trivial(c2, {1}, 0), Error);
}
