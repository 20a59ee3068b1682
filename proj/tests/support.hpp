#pragma once

// Random instance generators and brute-force oracles shared by the unit
// tests and the acceptance binary. The oracles use only group tables and
// module arithmetic, never the library's cohomology or search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "galcoh/deciders.hpp"

namespace support {

using namespace galcoh;

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20240611);
    return r;
}

inline int pick(int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng())); }

template <class T>
const T& pick_from(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(pick(static_cast<int>(v.size())))];
}

inline std::vector<FiniteGroup> small_gammas() {
    return {groups::cyclic(2), groups::cyclic(3), groups::klein_four(), groups::symmetric(3)};
}

/// Coefficient groups of order at most 12.
inline const std::vector<FiniteGroup>& small_groups() {
    static const std::vector<FiniteGroup> g = [] {
        std::vector<FiniteGroup> out;
        for (int n = 1; n <= 12; ++n) out.push_back(groups::cyclic(n));
        out.push_back(groups::klein_four());
        out.push_back(groups::symmetric(3));
        out.push_back(groups::dihedral(4));
        out.push_back(groups::quaternion());
        out.push_back(groups::product(groups::cyclic(2), groups::cyclic(4)));
        out.push_back(groups::dihedral(5));
        out.push_back(groups::dihedral(6));
        out.push_back(groups::alternating(4));
        out.push_back(groups::dicyclic(3));
        out.push_back(groups::product(groups::cyclic(2), groups::cyclic(6)));
        return out;
    }();
    return g;
}

/// A uniformly chosen action of Γ on `group` (actions are memoized).
inline const std::vector<GammaGroup>& actions_of(const FiniteGroup& gamma, const FiniteGroup& group) {
    static std::map<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>, std::vector<GammaGroup>> memo;
    auto key = std::make_pair(gamma.table(), group.table());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), enumerate_actions(gamma, group)).first;
    return it->second;
}

inline GammaGroup random_action(const FiniteGroup& gamma, const FiniteGroup& group) {
    return pick_from(actions_of(gamma, group));
}

inline Cochain1 random_map(int gamma_order, int group_order) {
    Cochain1 c(static_cast<std::size_t>(gamma_order));
    for (auto& x : c) x = pick(group_order);
    return c;
}

// ---------------------------------------------------------------------------
// oracles

/// c_{st} = c_s · ˢc_t, checked on every pair.
inline bool naive_is_cocycle1(const GammaGroup& a, const Cochain1& c) {
    const FiniteGroup& g = a.group();
    const FiniteGroup& gam = a.gamma();
    for (int s = 0; s < gam.order(); ++s)
        for (int t = 0; t < gam.order(); ++t)
            if (c[gam.mul(s, t)] != g.mul(c[s], a.action(s).images()[c[t]])) return false;
    return true;
}

/// Every 1-cochain, in lexicographic order.
inline void for_each_map(int length, int range, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> x(static_cast<std::size_t>(length), 0);
    while (true) {
        if (!f(x)) return;
        int i = length - 1;
        while (i >= 0 && ++x[i] == range) x[i--] = 0;
        if (i < 0) return;
    }
}

/// Brute-force coboundary operator on full (not normalized) cochains of a
/// finite module, with elements written as indices.
struct FiniteComplex {
    const AbelianGammaModule& m;
    int n;        // |Γ|
    int size;     // |M|
    std::vector<std::vector<int>> add;  // index table
    std::vector<std::vector<int>> act;  // act[s][x]
    std::vector<int> neg;

    explicit FiniteComplex(const AbelianGammaModule& mod)
        : m(mod), n(mod.gamma().order()), size(static_cast<int>(mod.size())) {
        add.assign(size, std::vector<int>(size));
        neg.resize(size);
        for (int x = 0; x < size; ++x) {
            const ModElem ex = m.element_at(x);
            for (int y = 0; y < size; ++y) add[x][y] = static_cast<int>(m.index_of(m.add(ex, m.element_at(y))));
            neg[x] = static_cast<int>(m.index_of(m.neg(ex)));
        }
        act.assign(n, std::vector<int>(size));
        for (int s = 0; s < n; ++s)
            for (int x = 0; x < size; ++x) act[s][x] = static_cast<int>(m.index_of(m.act(s, m.element_at(x))));
    }

    int sum(std::initializer_list<int> xs) const {
        int acc = 0;
        for (int x : xs) acc = add[acc][x];
        return acc;
    }

    // degree-k cochain values indexed by base-n digits
    std::vector<int> d(const std::vector<int>& c, int degree) const {
        const FiniteGroup& g = m.gamma();
        if (degree == 0) {
            std::vector<int> out(n);
            for (int s = 0; s < n; ++s) out[s] = add[act[s][c[0]]][neg[c[0]]];
            return out;
        }
        if (degree == 1) {
            std::vector<int> out(static_cast<std::size_t>(n) * n);
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) out[s * n + t] = sum({act[s][c[t]], neg[c[g.mul(s, t)]], c[s]});
            return out;
        }
        std::vector<int> out(static_cast<std::size_t>(n) * n * n);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int u = 0; u < n; ++u)
                    out[(s * n + t) * n + u] = sum({act[s][c[t * n + u]], neg[c[g.mul(s, t) * n + u]],
                                                    c[s * n + g.mul(t, u)], neg[c[s * n + t]]});
        return out;
    }

    bool is_zero(const std::vector<int>& v) const {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    }

    /// |Hⁿ| by counting cocycles and coboundaries; nullopt if too large.
    std::optional<std::size_t> h_order(int degree, std::size_t limit = 3'000'000) const {
        auto count_maps = [&](int len) -> std::optional<std::size_t> {
            std::size_t total = 1;
            for (int i = 0; i < len; ++i) {
                total *= static_cast<std::size_t>(size);
                if (total > limit) return std::nullopt;
            }
            return total;
        };
        const int len = degree == 0 ? 1 : degree == 1 ? n : n * n;
        const int prev_len = degree == 1 ? 1 : n;
        if (!count_maps(len) || (degree > 0 && !count_maps(prev_len))) return std::nullopt;
        std::size_t cocycles = 0;
        for_each_map(len, size, [&](const std::vector<int>& c) {
            if (is_zero(d(c, degree))) ++cocycles;
            return true;
        });
        if (degree == 0) return cocycles;
        std::set<std::vector<int>> boundaries;
        for_each_map(prev_len, size, [&](const std::vector<int>& a) {
            boundaries.insert(d(a, degree - 1));
            return true;
        });
        return cocycles / boundaries.size();
    }

    std::vector<int> indices(const Cochain& c) const {
        std::vector<int> out;
        for (const auto& v : c.values) out.push_back(static_cast<int>(m.index_of(v)));
        return out;
    }

    /// Brute force: is z = d(a) for some 1-cochain a?
    bool is_coboundary(const Cochain& z) const {
        const std::vector<int> target = indices(z);
        bool found = false;
        for_each_map(n, size, [&](const std::vector<int>& a) {
            found = d(a, 1) == target;
            return !found;
        });
        return found;
    }
};

inline std::size_t order_of(const AbelianInvariants& inv) {
    std::size_t out = 1;
    for (const auto& t : inv.torsion) out *= t.get_ui();
    return out;
}

/// Brute force: some c̃: Γ → G with proj ∘ c̃ = c and the cocycle law.
inline std::optional<Cochain1> brute_lift(const CentralExtension& e, const Cochain1& c) {
    const int n = e.G().gamma().order();
    std::vector<std::vector<int>> fibres(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        for (int x = 0; x < e.G().group().order(); ++x)
            if (e.proj()(x) == c[s]) fibres[s].push_back(x);
    const int f = static_cast<int>(fibres[0].size());
    std::optional<Cochain1> out;
    for_each_map(n, f, [&](const std::vector<int>& pos) {
        Cochain1 lift(n);
        for (int s = 0; s < n; ++s) lift[s] = fibres[s][pos[s]];
        if (naive_is_cocycle1(e.G(), lift)) out = lift;
        return !out;
    });
    return out;
}

/// Brute force: a_s · ˢa_t · w_{s,t} · a_{st}⁻¹ = 1 for some a.
inline bool brute_neutral(const Twisted2Cocycle& w) {
    const GammaGroup& a = w.coefficients;
    const FiniteGroup& g = a.group();
    const FiniteGroup& gam = a.gamma();
    const int n = gam.order();
    bool found = false;
    for_each_map(n, g.order(), [&](const std::vector<int>& x) {
        bool ok = true;
        for (int s = 0; s < n && ok; ++s)
            for (int t = 0; t < n && ok; ++t)
                ok = g.mul(g.mul(g.mul(x[s], a.act(s, x[t])), w.at(s, t)), g.inv(x[gam.mul(s, t)])) == g.identity();
        found = ok;
        return !found;
    });
    return found;
}

/// Brute force: is σ2 = twist of σ1 by a 1-cocycle of H (pure inner form)?
inline bool brute_pure_inner(const GammaGroup& s1, const GammaGroup& s2) {
    const FiniteGroup& h = s1.group();
    const FiniteGroup& gam = s1.gamma();
    bool found = false;
    for_each_map(gam.order(), h.order(), [&](const std::vector<int>& c) {
        if (!naive_is_cocycle1(s1, c)) return true;
        bool same = true;
        for (int s = 0; s < gam.order() && same; ++s)
            for (int x = 0; x < h.order() && same; ++x)
                same = s2.act(s, x) == h.mul(h.mul(c[s], s1.act(s, x)), h.inv(c[s]));
        found = same;
        return !found;
    });
    return found;
}

// ---------------------------------------------------------------------------
// random structures

/// Random finite module with at most `max_gens` cyclic factors: trivial,
/// sign-type, permutation or the center of a random Γ-group.
inline AbelianGammaModule random_finite_module(const FiniteGroup& gamma, int max_gens = 3) {
    switch (pick(3)) {
        case 0: {
            std::vector<BigInt> f;
            const int k = 1 + pick(max_gens);
            for (int i = 0; i < k; ++i) f.push_back(2 + pick(4));
            std::sort(f.begin(), f.end());
            return AbelianGammaModule::trivial(gamma, f, 0);
        }
        case 1: {
            // abelian coefficient group with a random action, read as a module
            static const std::vector<FiniteGroup> ab = {groups::cyclic(2), groups::cyclic(3),  groups::cyclic(4),
                                                        groups::cyclic(5), groups::cyclic(6),  groups::klein_four(),
                                                        groups::product(groups::cyclic(2), groups::cyclic(4)),
                                                        groups::cyclic(8)};
            const GammaGroup a = random_action(gamma, pick_from(ab));
            std::vector<int> all(a.group().order());
            for (int i = 0; i < a.group().order(); ++i) all[i] = i;
            return central_module(a, all).module;
        }
        default: {
            // ℤ/m ⊗ permutation module on cosets of a cyclic subgroup
            const int m = 2 + pick(3);
            const std::vector<int> gen = {pick(gamma.order())};
            const std::vector<int> sub = generated_subgroup(gamma, gen);
            const AbelianGammaModule p = permutation_module(gamma, sub);
            if (p.rank() > static_cast<std::size_t>(max_gens)) return AbelianGammaModule::trivial(gamma, {BigInt(m)}, 0);
            std::vector<IntMatrix> action;
            for (int s = 0; s < gamma.order(); ++s) action.push_back(p.action(s));
            return AbelianGammaModule(gamma, std::vector<BigInt>(p.rank(), BigInt(m)), 0, action);
        }
    }
}

inline ModElem random_elem(const AbelianGammaModule& m, int spread = 5) {
    ModElem x(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) {
        const BigInt mod = m.modulus(i);
        x[i] = mod == 0 ? BigInt(pick(2 * spread + 1) - spread) : BigInt(pick(static_cast<int>(mod.get_si())));
    }
    return x;
}

inline Cochain random_cochain(const AbelianGammaModule& m, int degree) {
    const int n = m.gamma().order();
    std::size_t len = 1;
    for (int i = 0; i < degree; ++i) len *= static_cast<std::size_t>(n);
    Cochain c{degree, {}};
    for (std::size_t k = 0; k < len; ++k) c.values.push_back(random_elem(m));
    return c;
}

/// Every subgroup of g (as sorted element lists), found by closing pairs.
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a; b < g.order(); ++b) {
            const std::vector<int> gens = {a, b};
            found.insert(generated_subgroup(g, gens));
        }
    // close under joins once more for groups needing three generators
    std::vector<std::vector<int>> v(found.begin(), found.end());
    for (const auto& x : v)
        for (const auto& y : v) {
            std::vector<int> gens = x;
            gens.insert(gens.end(), y.begin(), y.end());
            found.insert(generated_subgroup(g, gens));
        }
    return {found.begin(), found.end()};
}

/// Γ-stable subgroups of the center of a Γ-group.
inline std::vector<std::vector<int>> stable_central_subgroups(const GammaGroup& g) {
    const Subgroup z = center(g.group());
    std::vector<std::vector<int>> out;
    for (const auto& sub : all_subgroups(z.group)) {
        std::vector<int> parent;
        for (int x : sub) parent.push_back(z.elements[x]);
        std::sort(parent.begin(), parent.end());
        bool stable = true;
        for (int s = 0; s < g.gamma().order() && stable; ++s)
            for (int x : parent) stable = stable && std::binary_search(parent.begin(), parent.end(), g.act(s, x));
        if (stable) out.push_back(parent);
    }
    return out;
}

/// Central extension Z → G → G/Z for a random Γ-group G and a random
/// Γ-stable central subgroup Z.
inline CentralExtension random_extension(const FiniteGroup& gamma) {
    static const std::vector<FiniteGroup> tops = {
        groups::cyclic(4),  groups::cyclic(6),   groups::cyclic(8),       groups::quaternion(),
        groups::dihedral(4), groups::dihedral(6), groups::dicyclic(3),     groups::klein_four(),
        groups::product(groups::cyclic(2), groups::cyclic(4)), groups::cyclic(9), groups::product(groups::cyclic(2), groups::symmetric(3))};
    while (true) {
        const GammaGroup g = random_action(gamma, pick_from(tops));
        const auto subs = stable_central_subgroups(g);
        std::vector<std::vector<int>> nontrivial;
        for (const auto& s : subs)
            if (s.size() > 1) nontrivial.push_back(s);
        if (nontrivial.empty()) continue;
        const auto& z = pick_from(nontrivial);
        const CentralModule cm = central_module(g, z);
        const GammaQuotient q = gamma_quotient(g, z);
        return CentralExtension(cm.module, cm.basis, g, q.group, q.projection);
    }
}

inline Cochain1 random_cocycle(const GammaGroup& a) {
    const auto all = enumerate_cocycles1(a);
    return pick_from(all);
}

/// A random section: any preimage of each element, identity over identity.
inline std::vector<int> random_section(const CentralExtension& e) {
    std::vector<std::vector<int>> fibres(e.Gbar().group().order());
    for (int x = 0; x < e.G().group().order(); ++x) fibres[e.proj()(x)].push_back(x);
    std::vector<int> s;
    for (int b = 0; b < e.Gbar().group().order(); ++b)
        s.push_back(b == e.Gbar().group().identity() ? e.G().group().identity() : pick_from(fibres[b]));
    return s;
}

/// The module's additive group as a Γ-group (elements in index_of order).
inline GammaGroup module_as_gamma_group(const AbelianGammaModule& m) {
    const FiniteGroup g = m.as_group();
    std::vector<Automorphism> action;
    for (int s = 0; s < m.gamma().order(); ++s) {
        std::vector<int> images(g.order());
        for (int x = 0; x < g.order(); ++x) images[x] = static_cast<int>(m.index_of(m.act(s, m.element_at(x))));
        action.emplace_back(g, images);
    }
    return GammaGroup(m.gamma(), g, action);
}

/// μ₂ → μ₄ → C₂ over Γ = C₂, with Γ acting on μ₄ trivially or by inversion.
inline CentralExtension mu4_extension(bool inversion) {
    const FiniteGroup c2 = groups::cyclic(2);
    const FiniteGroup c4 = groups::cyclic(4);
    const GammaGroup g = inversion ? GammaGroup(c2, c4, {Automorphism::identity(c4), Automorphism(c4, {0, 3, 2, 1})})
                                   : GammaGroup::trivial(c2, c4);
    const AbelianGammaModule z = AbelianGammaModule::trivial(c2, {BigInt(2)}, 0);
    return CentralExtension(z, {2}, g, GammaGroup::trivial(c2, c2), make_hom(c4, c2, {0, 1, 0, 1}));
}

/// A compatible pair Ẽ → E with A = Z(E) and κ = identity, κ̃ = λ.
struct Compatible {
    TitsProblem tits;
    ModelExistenceProblem model;
};

inline Compatible random_compatible(const FiniteGroup& gamma) {
    while (true) {
        const CentralExtension et = random_extension(gamma);
        std::vector<int> zt;
        for (std::size_t i = 0; i < et.Z().size(); ++i) zt.push_back(et.incl(et.Z().element_at(i)));
        std::sort(zt.begin(), zt.end());
        std::vector<std::vector<int>> candidates;
        for (const auto& s : stable_central_subgroups(et.G()))
            if (std::includes(zt.begin(), zt.end(), s.begin(), s.end())) candidates.push_back(s);
        const auto& k = pick_from(candidates);
        const QuotientExtension q = quotient_extension(et, k);
        const GammaGroup a = module_as_gamma_group(q.extension.Z());
        const Cochain1 c = random_cocycle(et.Gbar());
        const GroupHom kappa = identity_hom(a.group());
        Compatible out;
        out.tits = TitsProblem{et, a, q.lambda, c, q.extension, q.lambda, kappa};
        out.model = ModelExistenceProblem{q.extension, a, kappa, c};
        return out;
    }
}

inline GammaGroup q8_inn_i() {
    const FiniteGroup q8 = groups::quaternion();
    return GammaGroup(groups::cyclic(2), q8, {Automorphism::identity(q8), inner_automorphism(q8, 1)});
}

}  // namespace support
