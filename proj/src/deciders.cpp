#include "galcoh/deciders.hpp"

#include <algorithm>
#include <string>

#include "galcoh/error.hpp"
#include "galcoh/kernels.hpp"

namespace galcoh {

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

void require_cocycle(const GammaGroup& g, const Cochain1& c) {
    if (!is_cocycle1(g, c)) fail(ErrorKind::NotACocycle, "c is not a 1-cocycle of Gbar");
}

// Exhaustive search for a 1-cochain a with da = z, independent of the
// Smith-form solver. Returns nullopt when the space is too large to scan.
std::optional<bool> brute_force_bounds(const AbelianGammaModule& m, const Cochain& z, std::size_t limit = 200000) {
    const std::size_t size = m.size();
    const int n = m.gamma().order();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > limit / size) return std::nullopt;
        total *= size;
    }
    Cochain a = zero_cochain(m, 1);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int s = 0; s < n; ++s) {
            a.values[s] = m.element_at(rem % size);
            rem /= size;
        }
        if (cochain_equal(m, differential(m, a), z)) return true;
    }
    return false;
}

Cochain1 section_lift(const CentralExtension& e, const Cochain1& c) {
    Cochain1 lift(c.size());
    for (std::size_t s = 0; s < c.size(); ++s) lift[s] = e.section()[c[s]];
    return lift;
}

bool projects_to(const CentralExtension& e, const Cochain1& lift, const Cochain1& c) {
    if (lift.size() != c.size()) return false;
    for (std::size_t s = 0; s < c.size(); ++s)
        if (!e.G().group().valid(lift[s]) || e.proj()(lift[s]) != c[s]) return false;
    return true;
}

std::vector<Check> verify_neutrality(const Twisted2Cocycle& recomputed, const Twisted2Cocycle& claimed,
                                     const std::optional<Cochain1>& witness, bool yes, std::uint64_t budget) {
    std::vector<Check> out;
    out.push_back({"pushed 2-cocycle equals kappa of delta", recomputed.values == claimed.values});
    out.push_back({"answer matches the presence of a witness", yes == witness.has_value()});
    if (witness) {
        out.push_back({"witness satisfies a_s * s(a_t) * kappa(z_st) * a_st^-1 = 1",
                       is_neutral_witness(recomputed, *witness)});
    } else {
        const auto r = kernels::serial::find_first({&recomputed.coefficients, recomputed.values}, budget);
        out.push_back({"independent serial search finds no witness", !r.budget_exceeded && !r.solution});
    }
    return out;
}

GammaGroup restrict_to(const GammaGroup& g, std::span<const int> elements) {
    Subgroup sub = make_subgroup(g.group(), elements);
    std::vector<Automorphism> action;
    for (int s = 0; s < g.gamma().order(); ++s) {
        std::vector<int> images(sub.elements.size());
        for (std::size_t i = 0; i < sub.elements.size(); ++i) images[i] = sub.index_of(g.act(s, sub.elements[i]));
        action.emplace_back(sub.group, std::move(images));
    }
    return GammaGroup(g.gamma(), sub.group, std::move(action));
}

}  // namespace

// ---------------------------------------------------------------------------

ModelVerdict decide_model_existence(const ModelExistenceProblem& p, std::uint64_t budget) {
    const CentralExtension& e = p.extension;
    require_cocycle(e.Gbar(), p.cocycle);
    ModelVerdict v;
    v.lift = section_lift(e, p.cocycle);
    v.delta = delta_of_lift(e, v.lift);
    v.delta_class = cohomology(e.Z(), 2).class_of(v.delta);
    v.pushed = pushforward2(e.Z(), p.aut_group, p.kappa, v.delta);
    const NeutralitySearch s = is_neutral2(v.pushed, budget);
    v.witness = s.witness;
    v.yes = s.witness.has_value();
    v.explored = s.explored;
    v.bound = s.bound;
    return v;
}

std::vector<Check> verify(const ModelExistenceProblem& p, const ModelVerdict& v, std::uint64_t budget) {
    const CentralExtension& e = p.extension;
    std::vector<Check> out;
    out.push_back({"c is a 1-cocycle of Gbar", is_cocycle1(e.Gbar(), p.cocycle)});
    out.push_back({"lift projects to c", projects_to(e, v.lift, p.cocycle)});
    const Cochain delta = delta_of_lift(e, v.lift);
    out.push_back({"delta equals c~_s * s(c~_t) * c~_st^-1", cochain_equal(e.Z(), delta, v.delta)});
    out.push_back({"delta satisfies the 2-cocycle law", is_cocycle(e.Z(), delta)});
    const Twisted2Cocycle pushed = pushforward2(e.Z(), p.aut_group, p.kappa, delta);
    for (auto& c : verify_neutrality(pushed, v.pushed, v.witness, v.yes, budget)) out.push_back(std::move(c));
    return out;
}

// ---------------------------------------------------------------------------

TitsClass tits_class(const CentralExtension& etilde, const Cochain1& c) {
    TitsClass t;
    t.delta = connecting_delta(etilde, c);
    const CohomologyGroup h2 = cohomology(etilde.Z(), 2);
    t.coordinates = h2.class_of(t.delta);
    t.h2 = h2.invariants();
    t.canonical = h2.canonical(t.delta);
    t.trivial = std::all_of(t.coordinates.begin(), t.coordinates.end(), [](const BigInt& x) { return x == 0; });
    return t;
}

namespace {

// λ_*(δ̃) − δ as a cochain of Z.
Cochain lambda_defect(const TitsProblem& p, const Cochain& delta_tilde) {
    const CentralExtension& e = *p.extension;
    const Cochain pushed = push_cochain(*p.lambda, p.etilde.Z(), e.Z(), delta_tilde);
    return cochain_sub(e.Z(), pushed, connecting_delta(e, p.cocycle));
}

}  // namespace

TitsVerdict decide_tits(const TitsProblem& p, std::uint64_t budget) {
    TitsVerdict v;
    v.tits = tits_class(p.etilde, p.cocycle);
    if (p.lambda && p.extension) {
        const CentralExtension& e = *p.extension;
        if (!(e.Gbar() == p.etilde.Gbar())) fail(ErrorKind::InvalidInput, "both extensions must share Gbar");
        make_hom(p.etilde.Z().as_group(), e.Z().as_group(), p.lambda->images);
        if (!is_equivariant_module_hom(p.etilde.Z(), e.Z(), *p.lambda))
            fail(ErrorKind::NotEquivariant, "lambda is not equivariant");
        if (p.kappa) {
            for (std::size_t x = 0; x < p.etilde.Z().size(); ++x)
                if (p.kappa_tilde(static_cast<int>(x)) != (*p.kappa)((*p.lambda)(static_cast<int>(x))))
                    fail(ErrorKind::InvalidInput, "kappa_tilde is not kappa after lambda");
        }
        v.lambda_correction = is_coboundary2(e.Z(), lambda_defect(p, v.tits.delta));
        if (!v.lambda_correction)
            fail(ErrorKind::InternalInvariantViolation, "lambda_*(delta~) and delta are not cohomologous");
        v.lambda_checked = true;
    }
    v.pushed = pushforward2(p.etilde.Z(), p.aut_group, p.kappa_tilde, v.tits.delta);
    const NeutralitySearch s = is_neutral2(v.pushed, budget);
    v.witness = s.witness;
    v.yes = s.witness.has_value();
    v.explored = s.explored;
    v.bound = s.bound;
    return v;
}

std::vector<Check> verify(const TitsProblem& p, const TitsVerdict& v, std::uint64_t budget) {
    std::vector<Check> out;
    const Cochain delta = connecting_delta(p.etilde, p.cocycle);
    out.push_back({"Tits cocycle equals delta~ of c", cochain_equal(p.etilde.Z(), delta, v.tits.delta)});
    out.push_back({"Tits cocycle satisfies the 2-cocycle law", is_cocycle(p.etilde.Z(), delta)});
    const CohomologyGroup h2 = cohomology(p.etilde.Z(), 2);
    out.push_back({"Tits class coordinates", h2.class_of(delta) == v.tits.coordinates});
    if (v.lambda_checked) {
        const Cochain defect = lambda_defect(p, delta);
        out.push_back({"lambda_*(delta~) - delta = d(correction)",
                       v.lambda_correction &&
                           cochain_equal(p.extension->Z(), differential(p.extension->Z(), *v.lambda_correction), defect)});
    }
    const Twisted2Cocycle pushed = pushforward2(p.etilde.Z(), p.aut_group, p.kappa_tilde, delta);
    for (auto& c : verify_neutrality(pushed, v.pushed, v.witness, v.yes, budget)) out.push_back(std::move(c));
    return out;
}

// ---------------------------------------------------------------------------

ModelExistenceProblem hxh_model_problem(const GammaGroup& sigma1, const Cochain1& cbar) {
    const FiniteGroup& h = sigma1.group();
    const DirectProduct dp = direct_product(h, h);
    std::vector<Automorphism> action;
    for (int s = 0; s < sigma1.gamma().order(); ++s) {
        std::vector<int> images(dp.group.order());
        for (int x = 0; x < dp.group.order(); ++x)
            images[x] = dp.pair(sigma1.act(s, dp.left_of(x)), sigma1.act(s, dp.right_of(x)));
        action.emplace_back(dp.group, std::move(images));
    }
    const GammaGroup g1(sigma1.gamma(), dp.group, std::move(action));
    const CentralExtension eh = center_extension(sigma1);
    CentralExtension e1 = center_extension(g1);

    Cochain1 c(cbar.size());
    for (std::size_t s = 0; s < cbar.size(); ++s) c[s] = e1.proj()(dp.pair(h.identity(), eh.section()[cbar[s]]));

    const Subgroup zg1 = center(dp.group);
    const GammaGroup zgg = restrict_to(g1, zg1.elements);
    const Subgroup zh = center(h);
    std::vector<int> diagonal;
    for (int z : zh.elements) diagonal.push_back(zg1.index_of(dp.pair(z, z)));
    std::sort(diagonal.begin(), diagonal.end());
    GammaQuotient a1 = gamma_quotient(zgg, diagonal);

    const AbelianGammaModule& zm = e1.Z();
    std::vector<int> kappa(zm.size());
    for (std::size_t idx = 0; idx < zm.size(); ++idx)
        kappa[idx] = a1.projection(zg1.index_of(e1.incl(zm.element_at(idx))));
    GroupHom k{zm.as_group(), a1.group.group(), std::move(kappa)};
    return {std::move(e1), std::move(a1.group), std::move(k), std::move(c)};
}

namespace {

std::optional<int> relating_element(const GammaGroup& s1, const GammaGroup& s2, int gamma) {
    const FiniteGroup& h = s1.group();
    for (int w = 0; w < h.order(); ++w) {
        const int wi = h.inv(w);
        bool ok = true;
        for (int x = 0; x < h.order() && ok; ++x) ok = s2.act(gamma, x) == h.mul(h.mul(w, s1.act(gamma, x)), wi);
        if (ok) return w;
    }
    return std::nullopt;
}

}  // namespace

HxhVerdict decide_hxh(const HxhProblem& p, std::uint64_t budget) {
    if (!(p.sigma1.group() == p.sigma2.group()) || !(p.sigma1.gamma() == p.sigma2.gamma()))
        fail(ErrorKind::InvalidInput, "both actions must be on the same H and gamma");
    HxhVerdict v;
    const int n = p.sigma1.gamma().order();
    for (int s = 0; s < n; ++s) {
        const auto w = relating_element(p.sigma1, p.sigma2, s);
        if (!w) {
            v.failing_gamma = s;
            v.w.clear();
            return v;
        }
        v.w.push_back(*w);
    }
    v.inner_form = true;
    const CentralExtension e = center_extension(p.sigma1);
    v.cocycle.resize(n);
    for (int s = 0; s < n; ++s) v.cocycle[s] = e.proj()(v.w[s]);
    if (!is_cocycle1(e.Gbar(), v.cocycle))
        fail(ErrorKind::InternalInvariantViolation, "classes of w do not form a cocycle");
    v.delta = connecting_delta(e, v.cocycle);
    v.delta_class = cohomology(e.Z(), 2).class_of(v.delta);
    v.lift = lifts_to_cocycle(e, v.cocycle);
    v.yes = v.lift.has_value();
    const ModelVerdict reduced = decide_model_existence(hxh_model_problem(p.sigma1, v.cocycle), budget);
    v.reduction_agrees = reduced.yes == v.yes;
    return v;
}

std::vector<Check> verify(const HxhProblem& p, const HxhVerdict& v) {
    std::vector<Check> out;
    const FiniteGroup& h = p.sigma1.group();
    const int n = p.sigma1.gamma().order();
    if (!v.inner_form) {
        out.push_back({"answer is no", !v.yes});
        const bool in_range = v.failing_gamma >= 0 && v.failing_gamma < n;
        out.push_back({"sigma2 o sigma1^-1 is not inner at the failing element",
                       in_range && !relating_element(p.sigma1, p.sigma2, v.failing_gamma)});
        return out;
    }
    bool related = static_cast<int>(v.w.size()) == n;
    for (int s = 0; s < n && related; ++s)
        related = h.valid(v.w[s]) &&
                  p.sigma2.action(s) == inner_automorphism(h, v.w[s]).after(p.sigma1.action(s));
    out.push_back({"sigma2(g) = inn(w_g) o sigma1(g)", related});
    const CentralExtension e = center_extension(p.sigma1);
    bool image = related;
    for (int s = 0; s < n && image; ++s) image = e.proj()(v.w[s]) == v.cocycle[s];
    out.push_back({"c is w modulo the center", image});
    out.push_back({"c is a 1-cocycle of H/Z(H)", is_cocycle1(e.Gbar(), v.cocycle)});
    const Cochain delta = connecting_delta(e, v.cocycle);
    out.push_back({"delta recomputed", cochain_equal(e.Z(), delta, v.delta)});
    if (v.lift) {
        out.push_back({"answer is yes", v.yes});
        out.push_back({"lift is a 1-cocycle of H", is_cocycle1(p.sigma1, *v.lift)});
        out.push_back({"lift projects to c", projects_to(e, *v.lift, v.cocycle)});
        out.push_back({"twist of sigma1 by the lift equals sigma2", twist_inner(p.sigma1, *v.lift) == p.sigma2});
    } else {
        out.push_back({"answer is no", !v.yes});
        const auto brute = brute_force_bounds(e.Z(), delta);
        out.push_back({"delta is not a coboundary", brute ? !*brute : !is_coboundary2(e.Z(), delta)});
    }
    if (v.reduction_agrees) out.push_back({"(HxH)/Delta model problem agrees", *v.reduction_agrees});
    return out;
}

// ---------------------------------------------------------------------------

GuVerdict decide_gu(const GuProblem& p) {
    GuVerdict v;
    v.delta = connecting_delta(p.extension, p.cocycle);
    v.delta_class = cohomology(p.extension.Z(), 2).class_of(v.delta);
    v.lift = lifts_to_cocycle(p.extension, p.cocycle);
    v.yes = v.lift.has_value();
    return v;
}

std::vector<Check> verify(const GuProblem& p, const GuVerdict& v) {
    const CentralExtension& e = p.extension;
    std::vector<Check> out;
    out.push_back({"c is a 1-cocycle of Gbar", is_cocycle1(e.Gbar(), p.cocycle)});
    const Cochain delta = connecting_delta(e, p.cocycle);
    out.push_back({"delta recomputed", cochain_equal(e.Z(), delta, v.delta)});
    out.push_back({"answer matches the presence of a lift", v.yes == v.lift.has_value()});
    if (v.lift) {
        out.push_back({"lift is a 1-cocycle of G", is_cocycle1(e.G(), *v.lift)});
        out.push_back({"lift projects to c", projects_to(e, *v.lift, p.cocycle)});
    } else {
        const auto brute = brute_force_bounds(e.Z(), delta);
        out.push_back({"delta is not a coboundary", brute ? !*brute : !is_coboundary2(e.Z(), delta)});
    }
    return out;
}

}  // namespace galcoh
