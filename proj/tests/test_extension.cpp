#include <doctest.h>

#include "galcoh/error.hpp"
#include "support.hpp"

using namespace galcoh;
using support::mu4_extension;

TEST_CASE("connecting map on the mu4 extensions") {
    const CentralExtension triv = mu4_extension(false);
    CHECK(cochain_equal(triv.Z(), connecting_delta(triv, {0, 0}), zero_cochain(triv.Z(), 2)));
    // lift c̃(γ) = i: z_{γ,γ} = i · i = -1
    const Cochain d = delta_of_lift(triv, {0, 1});
    CHECK(triv.Z().equal(d.at(1, 1, 2), {1}));
    CHECK(cohomology(triv.Z(), 2).class_of(connecting_delta(triv, {0, 1})) == IntVector{1});
    CHECK_FALSE(is_coboundary2(triv.Z(), d));
    const CentralExtension inv = mu4_extension(true);
    const Cochain di = delta_of_lift(inv, {0, 1});  // i · (-i) = 1
    CHECK(cochain_equal(inv.Z(), di, zero_cochain(inv.Z(), 2)));
    CHECK_THROWS_AS(connecting_delta(triv, {1, 0}), Error);
}

TEST_CASE("lifting on the mu4 extensions") {
    CHECK(lifts_to_cocycle(mu4_extension(false), {0, 0}) == Cochain1{0, 0});
    CHECK_FALSE(lifts_to_cocycle(mu4_extension(false), {0, 1}));
    const auto lift = lifts_to_cocycle(mu4_extension(true), {0, 1});
    REQUIRE(lift);
    CHECK(is_cocycle1(mu4_extension(true).G(), *lift));
    CHECK(mu4_extension(true).proj()((*lift)[1]) == 1);
}

TEST_CASE("extension validation") {
    const FiniteGroup c2 = groups::cyclic(2), c4 = groups::cyclic(4);
    const AbelianGammaModule z = AbelianGammaModule::trivial(c2, {BigInt(2)}, 0);
    // embedding with the wrong order
    CHECK_THROWS_AS(CentralExtension(z, {1}, GammaGroup::trivial(c2, c4), GammaGroup::trivial(c2, c2),
                                     make_hom(c4, c2, {0, 1, 0, 1})),
                    Error);
    // non-central image
    const FiniteGroup s3 = groups::symmetric(3);
    int t = 1;
    while (s3.element_order(t) != 2) ++t;
    CHECK_THROWS_AS(CentralExtension(z, {t}, GammaGroup::trivial(c2, s3), GammaGroup::trivial(c2, s3), identity_hom(s3)),
                    Error);
    // proj not equivariant: G with inversion over a Gbar acted on nontrivially is fine, but
    // a Z module whose action disagrees with G's is rejected
    const AbelianGammaModule zsign(c2, {4}, 0, {IntMatrix::identity(1), IntMatrix::from_rows({{3}}, 1)});
    const FiniteGroup c1;
    try {
        CentralExtension(zsign, {1}, GammaGroup::trivial(c2, c4), GammaGroup::trivial(c2, c1), trivial_hom(c4, c1));
        FAIL("expected NotEquivariant");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotEquivariant);
    }
    // section must be a section
    CHECK_THROWS_AS(mu4_extension(false).with_section({0, 2}), Error);
    CHECK(mu4_extension(false).with_section({0, 3}).section() == std::vector<int>{0, 3});
}

TEST_CASE("center extension and central modules") {
    const GammaGroup q = GammaGroup::trivial(groups::cyclic(2), groups::quaternion());
    const CentralExtension e = center_extension(q);
    CHECK(e.Z().invariant_factors() == std::vector<BigInt>{2});
    CHECK(e.Gbar().group().order() == 4);
    CHECK(e.z_basis() == std::vector<int>{4});
    for (int x = 0; x < 8; ++x) CHECK(e.proj()(e.section()[e.proj()(x)]) == e.proj()(x));
    const GammaGroup c6 = GammaGroup::trivial(groups::cyclic(2), groups::cyclic(6));
    std::vector<int> all = {0, 1, 2, 3, 4, 5};
    const CentralModule cm = central_module(c6, all);
    CHECK(cm.module.invariant_factors() == std::vector<BigInt>{6});
}

TEST_CASE("delta lands in Z, is a cocycle and is section and class independent") {
    for (int trial = 0; trial < 120; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const CentralExtension e = support::random_extension(gamma);
        const Cochain1 c = support::random_cocycle(e.Gbar());
        const Cochain d = connecting_delta(e, c);
        CHECK(support::FiniteComplex(e.Z()).is_zero(support::FiniteComplex(e.Z()).d(support::FiniteComplex(e.Z()).indices(d), 2)));
        const CentralExtension e2 = e.with_section(support::random_section(e));
        const Cochain d2 = connecting_delta(e2, c);
        CHECK(is_coboundary2(e.Z(), cochain_sub(e.Z(), d, d2)));
        const int b = support::pick(e.Gbar().group().order());
        const Cochain d3 = connecting_delta(e, act_on_cocycle(e.Gbar(), b, c));
        CHECK(is_coboundary2(e.Z(), cochain_sub(e.Z(), d, d3)));
    }
}

TEST_CASE("lifting is exact and agrees with brute force") {
    int lifted = 0, blocked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const CentralExtension e = support::random_extension(gamma);
        const Cochain1 c = support::random_cocycle(e.Gbar());
        const auto lift = lifts_to_cocycle(e, c);
        CHECK(lift.has_value() == is_coboundary2(e.Z(), connecting_delta(e, c)).has_value());
        CHECK(lift.has_value() == support::brute_lift(e, c).has_value());
        if (lift) {
            ++lifted;
            CHECK(support::naive_is_cocycle1(e.G(), *lift));
            for (int s = 0; s < gamma.order(); ++s) CHECK(e.proj()((*lift)[s]) == c[s]);
        } else {
            ++blocked;
        }
    }
    CHECK(lifted > 0);
    CHECK(blocked > 0);
}

TEST_CASE("pushforward along kappa") {
    const CentralExtension e = mu4_extension(false);
    const Cochain d = connecting_delta(e, {0, 1});
    const GammaGroup z_as_a = support::module_as_gamma_group(e.Z());
    const Twisted2Cocycle same = pushforward2(e.Z(), z_as_a, identity_hom(z_as_a.group()), d);
    CHECK(same.values == std::vector<int>{0, 0, 0, 1});
    const GammaGroup c4 = GammaGroup::trivial(groups::cyclic(2), groups::cyclic(4));
    const Twisted2Cocycle triv = pushforward2(e.Z(), c4, trivial_hom(z_as_a.group(), c4.group()), d);
    CHECK(triv.values == std::vector<int>{0, 0, 0, 0});
    CHECK(is_neutral2(triv).witness);
    // μ₂ ⊂ C₄ with trivial action: 2 lies in the norm image 2·C₄, so the class dies
    const Twisted2Cocycle into = pushforward2(e.Z(), c4, make_hom(z_as_a.group(), c4.group(), {0, 2}), d);
    CHECK(is_neutral2(into).witness);
    CHECK(support::brute_neutral(into));
    // with C₂ inverting C₄ the norm is zero and the class survives
    const FiniteGroup c2 = groups::cyclic(2), g4 = groups::cyclic(4);
    const GammaGroup c4inv(c2, g4, {Automorphism::identity(g4), Automorphism(g4, {0, 3, 2, 1})});
    const Twisted2Cocycle into_inv = pushforward2(e.Z(), c4inv, make_hom(z_as_a.group(), g4, {0, 2}), d);
    CHECK_FALSE(is_neutral2(into_inv).witness);
    CHECK_FALSE(support::brute_neutral(into_inv));
    // non-equivariant κ is rejected
    const AbelianGammaModule zneg(c2, {4}, 0, {IntMatrix::identity(1), IntMatrix::from_rows({{3}}, 1)});
    try {
        pushforward2(zneg, c4, identity_hom(zneg.as_group()), zero_cochain(zneg, 2));
        FAIL("expected NotEquivariant");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotEquivariant);
    }
}

TEST_CASE("quotient extensions and the lambda map") {
    for (int trial = 0; trial < 40; ++trial) {
        const FiniteGroup gamma = support::pick_from(support::small_gammas());
        const CentralExtension et = support::random_extension(gamma);
        std::vector<int> zt;
        for (std::size_t i = 0; i < et.Z().size(); ++i) zt.push_back(et.incl(et.Z().element_at(i)));
        std::sort(zt.begin(), zt.end());
        const GammaGroup g = et.G();
        std::vector<std::vector<int>> candidates;
        for (const auto& s : support::stable_central_subgroups(g))
            if (std::includes(zt.begin(), zt.end(), s.begin(), s.end())) candidates.push_back(s);
        const auto& k = support::pick_from(candidates);
        const QuotientExtension q = quotient_extension(et, k);
        CHECK(q.extension.Z().size() * k.size() == et.Z().size());
        CHECK(is_equivariant_module_hom(et.Z(), q.extension.Z(), q.lambda));
        const Cochain1 c = support::random_cocycle(et.Gbar());
        const Cochain pushed = push_cochain(q.lambda, et.Z(), q.extension.Z(), connecting_delta(et, c));
        CHECK(is_coboundary2(q.extension.Z(), cochain_sub(q.extension.Z(), pushed, connecting_delta(q.extension, c))));
    }
}
