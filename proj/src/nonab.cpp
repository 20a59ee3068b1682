#include "galcoh/nonab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "galcoh/error.hpp"
#include "galcoh/kernels.hpp"

namespace galcoh {

namespace {

std::string pair_str(int s, int t) { return "(" + std::to_string(s) + ", " + std::to_string(t) + ")"; }

void check_cochain(const GammaGroup& a, const Cochain1& c) {
    if (static_cast<int>(c.size()) != a.gamma().order())
        fail(ErrorKind::InvalidInput, "1-cochain needs one value per element of gamma");
    for (int v : c)
        if (!a.group().valid(v)) fail(ErrorKind::InvalidInput, "1-cochain value out of range: " + std::to_string(v));
}

}  // namespace

GammaGroup::GammaGroup(FiniteGroup gamma, FiniteGroup group, std::vector<Automorphism> action)
    : gamma_(std::move(gamma)), group_(std::move(group)), action_(std::move(action)) {
    if (static_cast<int>(action_.size()) != gamma_.order())
        fail(ErrorKind::InvalidInput, "need one automorphism per element of gamma");
    for (const auto& a : action_)
        if (static_cast<int>(a.images().size()) != group_.order())
            fail(ErrorKind::InvalidInput, "automorphism acts on a group of the wrong order");
    if (!action_[gamma_.identity()].is_identity())
        fail(ErrorKind::InvalidInput, "identity of gamma does not act trivially");
    for (int s = 0; s < gamma_.order(); ++s)
        for (int t = 0; t < gamma_.order(); ++t)
            if (action_[gamma_.mul(s, t)].images() != action_[s].after(action_[t]).images())
                fail(ErrorKind::InvalidInput, "action is not a homomorphism at " + pair_str(s, t));
}

GammaGroup GammaGroup::trivial(FiniteGroup gamma, FiniteGroup group) {
    std::vector<Automorphism> action(gamma.order(), Automorphism::identity(group));
    return GammaGroup(std::move(gamma), std::move(group), std::move(action));
}

bool is_cocycle1(const GammaGroup& a, const Cochain1& c) {
    check_cochain(a, c);
    const FiniteGroup& g = a.group();
    const FiniteGroup& gam = a.gamma();
    for (int s = 0; s < gam.order(); ++s)
        for (int t = 0; t < gam.order(); ++t)
            if (c[gam.mul(s, t)] != g.mul(c[s], a.act(s, c[t]))) return false;
    return true;
}

Cochain1 act_on_cocycle(const GammaGroup& a, int b, const Cochain1& c) {
    const FiniteGroup& g = a.group();
    Cochain1 out(c.size());
    for (int s = 0; s < a.gamma().order(); ++s) out[s] = g.mul(g.mul(g.inv(b), c[s]), a.act(s, b));
    return out;
}

std::optional<int> cohomologous1(const GammaGroup& a, const Cochain1& c, const Cochain1& c2) {
    if (!is_cocycle1(a, c) || !is_cocycle1(a, c2)) fail(ErrorKind::NotACocycle, "cohomologous1 needs two 1-cocycles");
    return kernels::omp::find_conjugator(a, c, c2);
}

std::vector<Cochain1> enumerate_cocycles1(const GammaGroup& a, std::uint64_t budget) {
    const auto r = kernels::omp::find_all({&a, {}}, budget);
    if (r.budget_exceeded)
        fail(ErrorKind::SearchBudgetExceeded,
             "cocycle enumeration exceeded the budget of " + std::to_string(budget) + " assignments");
    std::vector<Cochain1> out = r.solutions;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cochain1> h1_classes(const GammaGroup& a, std::uint64_t budget) {
    std::set<Cochain1> covered;
    std::vector<Cochain1> reps;
    for (const auto& c : enumerate_cocycles1(a, budget)) {
        if (covered.count(c)) continue;
        reps.push_back(c);
        for (int b = 0; b < a.group().order(); ++b) covered.insert(act_on_cocycle(a, b, c));
    }
    return reps;
}

GammaGroup twist_inner(const GammaGroup& a, const Cochain1& c) {
    if (!is_cocycle1(a, c)) fail(ErrorKind::NotACocycle, "twisting map is not a 1-cocycle");
    std::vector<Automorphism> action;
    for (int s = 0; s < a.gamma().order(); ++s)
        action.push_back(inner_automorphism(a.group(), c[s]).after(a.action(s)));
    return GammaGroup(a.gamma(), a.group(), std::move(action));
}

GammaGroup twist_by_automorphisms(const GammaGroup& a, const std::vector<Automorphism>& c) {
    if (static_cast<int>(c.size()) != a.gamma().order())
        fail(ErrorKind::InvalidInput, "twisting map needs one automorphism per element of gamma");
    std::vector<Automorphism> action;
    for (int s = 0; s < a.gamma().order(); ++s) {
        if (!(c[s].group() == a.group())) fail(ErrorKind::InvalidInput, "twisting automorphism of a different group");
        action.push_back(c[s].after(a.action(s)));
    }
    try {
        return GammaGroup(a.gamma(), a.group(), std::move(action));
    } catch (const Error& e) {
        fail(ErrorKind::NotACocycle, std::string("twisting map is not a 1-cocycle: ") + e.what());
    }
}

Cochain1 inverse_cocycle(const GammaGroup& a, const Cochain1& c) {
    Cochain1 out(c.size());
    for (std::size_t s = 0; s < c.size(); ++s) out[s] = a.group().inv(c[s]);
    return out;
}

Twisted2Cocycle make_twisted2(GammaGroup coefficients, std::vector<int> values) {
    const FiniteGroup& gam = coefficients.gamma();
    const FiniteGroup& g = coefficients.group();
    const int n = gam.order();
    if (values.size() != static_cast<std::size_t>(n) * n)
        fail(ErrorKind::InvalidInput, "2-cochain needs |gamma|^2 values");
    for (int v : values) {
        if (!g.valid(v)) fail(ErrorKind::InvalidInput, "2-cochain value out of range: " + std::to_string(v));
        for (int x = 0; x < g.order(); ++x)
            if (g.mul(v, x) != g.mul(x, v))
                fail(ErrorKind::NotACocycle, "2-cochain value " + std::to_string(v) + " is not central");
    }
    Twisted2Cocycle w{std::move(coefficients), std::move(values)};
    const GammaGroup& a = w.coefficients;
    const FiniteGroup& gm = a.group();
    const FiniteGroup& gam2 = a.gamma();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u) {
                const int lhs = gm.mul(a.act(s, w.at(t, u)), w.at(s, gam2.mul(t, u)));
                const int rhs = gm.mul(w.at(s, t), w.at(gam2.mul(s, t), u));
                if (lhs != rhs)
                    fail(ErrorKind::NotACocycle, "2-cocycle law fails at (" + std::to_string(s) + ", " +
                                                     std::to_string(t) + ", " + std::to_string(u) + ")");
            }
    return w;
}

bool is_neutral_witness(const Twisted2Cocycle& w, const Cochain1& a) {
    const GammaGroup& coef = w.coefficients;
    check_cochain(coef, a);
    const FiniteGroup& g = coef.group();
    const FiniteGroup& gam = coef.gamma();
    for (int s = 0; s < gam.order(); ++s)
        for (int t = 0; t < gam.order(); ++t) {
            const int v = g.mul(g.mul(g.mul(a[s], coef.act(s, a[t])), w.at(s, t)), g.inv(a[gam.mul(s, t)]));
            if (v != g.identity()) return false;
        }
    return true;
}

NeutralitySearch is_neutral2(const Twisted2Cocycle& w, std::uint64_t budget) {
    NeutralitySearch out;
    const int n = w.coefficients.gamma().order();
    out.bound = std::pow(static_cast<double>(w.coefficients.group().order()), n - 1);
    const auto r = kernels::omp::find_first({&w.coefficients, w.values}, budget);
    out.explored = r.explored;
    if (r.budget_exceeded)
        fail(ErrorKind::SearchBudgetExceeded,
             "neutrality search exceeded the budget of " + std::to_string(budget) + " assignments (explored " +
                 std::to_string(r.explored) + ", exhaustive bound |A|^(|Gamma|-1) = " +
                 std::to_string(static_cast<unsigned long long>(out.bound)) + ")");
    if (r.solution) {
        if (!is_neutral_witness(w, *r.solution))
            fail(ErrorKind::InternalInvariantViolation, "search returned an invalid neutrality witness");
        out.witness = r.solution;
    }
    return out;
}

std::vector<GammaGroup> enumerate_actions(const FiniteGroup& gamma, const FiniteGroup& group, std::size_t limit) {
    const std::vector<Automorphism> auts = automorphism_list(group);
    const std::vector<int>& gens = gamma.generators();
    const WordTree tree = word_tree(gamma, gens);
    std::vector<std::vector<Automorphism>> found;
    std::vector<std::size_t> choice(gens.size(), 0);
    // odometer over generator images
    while (true) {
        std::vector<Automorphism> phi(gamma.order());
        phi[gamma.identity()] = Automorphism::identity(group);
        for (std::size_t k = 1; k < tree.bfs_order.size(); ++k) {
            const int x = tree.bfs_order[k];
            phi[x] = phi[tree.parent[x]].after(auts[choice[tree.generator[x]]]);
        }
        bool hom = true;
        for (int s = 0; s < gamma.order() && hom; ++s)
            for (int t = 0; t < gamma.order() && hom; ++t)
                hom = phi[gamma.mul(s, t)] == phi[s].after(phi[t]);
        if (hom) {
            found.push_back(std::move(phi));
            if (found.size() > limit)
                fail(ErrorKind::SearchBudgetExceeded, "more than " + std::to_string(limit) + " actions");
        }
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == auts.size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i] == y[i])) return x[i] < y[i];
        return false;
    });
    std::vector<GammaGroup> out;
    for (auto& phi : found) out.emplace_back(gamma, group, std::move(phi));
    return out;
}

}  // namespace galcoh
