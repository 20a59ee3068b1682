#include "galcoh/extension.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

bool stable(const GammaGroup& g, std::span<const int> subgroup) {
    std::vector<char> in(g.group().order(), 0);
    for (int x : subgroup) in[x] = 1;
    for (int s = 0; s < g.gamma().order(); ++s)
        for (int x : subgroup)
            if (!in[g.act(s, x)]) return false;
    return true;
}

bool central_in(const FiniteGroup& g, int z) {
    for (int x = 0; x < g.order(); ++x)
        if (g.mul(z, x) != g.mul(x, z)) return false;
    return true;
}

}  // namespace

CentralExtension::CentralExtension(AbelianGammaModule z, std::vector<int> z_basis, GammaGroup g, GammaGroup gbar,
                                   GroupHom proj, std::vector<int> section)
    : z_(std::move(z)), z_basis_(std::move(z_basis)), g_(std::move(g)), gbar_(std::move(gbar)),
      proj_(std::move(proj)) {
    const FiniteGroup& G = g_.group();
    const FiniteGroup& B = gbar_.group();
    if (!z_.is_finite()) fail(ErrorKind::InvalidInput, "the kernel of an extension must be finite");
    if (!(z_.gamma() == g_.gamma()) || !(g_.gamma() == gbar_.gamma()))
        fail(ErrorKind::InvalidInput, "Z, G and Gbar must carry the same gamma");
    if (z_basis_.size() != z_.rank()) fail(ErrorKind::InvalidInput, "need one element of G per generator of Z");
    for (std::size_t i = 0; i < z_basis_.size(); ++i) {
        const int b = z_basis_[i];
        if (!G.valid(b)) fail(ErrorKind::InvalidInput, "embedding index out of range");
        if (G.pow(b, z_.modulus(i).get_si()) != G.identity())
            fail(ErrorKind::InvalidInput, "embedded generator " + std::to_string(i) + " has the wrong order");
        if (!central_in(G, b)) fail(ErrorKind::InvalidInput, "image of Z is not central in G");
    }
    proj_ = make_hom(G, B, proj_.images);
    if (!proj_.is_surjective()) fail(ErrorKind::InvalidInput, "proj is not surjective");

    const std::size_t n = z_.size();
    incl_.resize(n);
    z_index_.assign(G.order(), -1);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const ModElem x = z_.element_at(idx);
        int v = G.identity();
        for (std::size_t i = 0; i < x.size(); ++i) v = G.mul(v, G.pow(z_basis_[i], x[i].get_si()));
        if (z_index_[v] >= 0) fail(ErrorKind::InvalidInput, "embedding of Z is not injective");
        incl_[idx] = v;
        z_index_[v] = static_cast<int>(idx);
    }
    std::vector<int> image(incl_);
    std::sort(image.begin(), image.end());
    if (image != proj_.kernel()) fail(ErrorKind::InvalidInput, "image of Z is not the kernel of proj");

    for (int s = 0; s < g_.gamma().order(); ++s) {
        for (int x = 0; x < G.order(); ++x)
            if (proj_(g_.act(s, x)) != gbar_.act(s, proj_(x)))
                fail(ErrorKind::NotEquivariant, "proj is not equivariant for gamma element " + std::to_string(s));
        for (std::size_t idx = 0; idx < n; ++idx)
            if (incl(z_.act(s, z_.element_at(idx))) != g_.act(s, incl_[idx]))
                fail(ErrorKind::NotEquivariant, "embedding of Z is not equivariant for gamma element " +
                                                    std::to_string(s));
    }

    if (section.empty()) {
        section_.assign(B.order(), -1);
        for (int x = G.order() - 1; x >= 0; --x) section_[proj_(x)] = x;
    } else {
        if (static_cast<int>(section.size()) != B.order())
            fail(ErrorKind::InvalidInput, "section needs one value per element of Gbar");
        for (int y = 0; y < B.order(); ++y)
            if (!G.valid(section[y]) || proj_(section[y]) != y)
                fail(ErrorKind::InvalidInput, "section is not a lift at element " + std::to_string(y));
        section_ = std::move(section);
    }
}

std::optional<ModElem> CentralExtension::to_module(int g) const {
    if (z_index_[g] < 0) return std::nullopt;
    return z_.element_at(static_cast<std::size_t>(z_index_[g]));
}

CentralExtension CentralExtension::with_section(std::vector<int> section) const {
    return CentralExtension(z_, z_basis_, g_, gbar_, proj_, std::move(section));
}

CentralModule central_module(const GammaGroup& g, std::span<const int> subgroup) {
    const FiniteGroup& G = g.group();
    if (!is_subgroup(G, subgroup)) fail(ErrorKind::InvalidInput, "not a subgroup");
    for (int x : subgroup)
        if (!central_in(G, x)) fail(ErrorKind::InvalidInput, "subgroup is not central");
    if (!stable(g, subgroup)) fail(ErrorKind::NotEquivariant, "subgroup is not stable under gamma");

    std::vector<int> sorted(subgroup.begin(), subgroup.end());
    std::sort(sorted.begin(), sorted.end());

    // polycyclic generators and their relations
    std::vector<int> gens;
    std::map<int, IntVector> span{{G.identity(), IntVector{}}};
    std::vector<IntVector> relations;
    for (int x : sorted) {
        if (span.count(x)) continue;
        const std::size_t i = gens.size();
        gens.push_back(x);
        for (auto& [elem, coords] : span) coords.resize(i + 1);
        int order = 1, power = x;
        while (!span.count(power)) {
            power = G.mul(power, x);
            ++order;
        }
        IntVector rel = span.at(power);
        for (auto& v : rel) v = -v;
        rel[i] += order;
        for (auto& r : relations) r.resize(i + 1);
        relations.push_back(std::move(rel));
        std::map<int, IntVector> grown;
        for (const auto& [elem, coords] : span) {
            int y = elem;
            for (int k = 0; k < order; ++k) {
                IntVector c = coords;
                c[i] = k;
                grown.emplace(y, std::move(c));
                y = G.mul(y, x);
            }
        }
        span = std::move(grown);
    }
    const std::size_t k = gens.size();
    std::vector<BigInt> factors;
    std::vector<int> basis;
    if (k > 0) {
        const SmithForm snf = smith(IntMatrix::from_rows(relations, k));
        for (std::size_t j = 0; j < k; ++j) {
            if (snf.diagonal[j] == 1) continue;
            if (snf.diagonal[j] == 0) fail(ErrorKind::InternalInvariantViolation, "finite subgroup with free part");
            int h = G.identity();
            for (std::size_t i = 0; i < k; ++i)
                h = G.mul(h, G.pow(gens[i], snf.right_inverse(j, i).get_si()));
            factors.push_back(snf.diagonal[j]);
            basis.push_back(h);
        }
    }
    // provisional trivial-action module, used only for enumeration
    const AbelianGammaModule shape = AbelianGammaModule::trivial(g.gamma(), factors, 0);
    std::vector<int> index_of_elem(G.order(), -1);
    for (std::size_t idx = 0; idx < shape.size(); ++idx) {
        const ModElem y = shape.element_at(idx);
        int v = G.identity();
        for (std::size_t j = 0; j < y.size(); ++j) v = G.mul(v, G.pow(basis[j], y[j].get_si()));
        index_of_elem[v] = static_cast<int>(idx);
    }
    std::vector<IntMatrix> action;
    for (int s = 0; s < g.gamma().order(); ++s) {
        IntMatrix a(basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const ModElem y = shape.element_at(static_cast<std::size_t>(index_of_elem[g.act(s, basis[j])]));
            for (std::size_t i = 0; i < basis.size(); ++i) a(i, j) = y[i];
        }
        action.push_back(std::move(a));
    }
    return {AbelianGammaModule(g.gamma(), factors, 0, std::move(action)), basis};
}

GammaQuotient gamma_quotient(const GammaGroup& g, std::span<const int> normal_subgroup) {
    if (!stable(g, normal_subgroup)) fail(ErrorKind::NotEquivariant, "normal subgroup is not stable under gamma");
    Quotient q = quotient(g.group(), normal_subgroup);
    std::vector<Automorphism> action;
    for (int s = 0; s < g.gamma().order(); ++s) {
        std::vector<int> images(q.group.order());
        for (int y = 0; y < q.group.order(); ++y) images[y] = q.projection(g.act(s, q.coset_min[y]));
        action.emplace_back(q.group, std::move(images));
    }
    return {GammaGroup(g.gamma(), q.group, std::move(action)), q.projection};
}

CentralExtension center_extension(const GammaGroup& h) {
    const Subgroup z = center(h.group());
    CentralModule cm = central_module(h, z.elements);
    GammaQuotient q = gamma_quotient(h, z.elements);
    return CentralExtension(std::move(cm.module), std::move(cm.basis), h, q.group, q.projection);
}

QuotientExtension quotient_extension(const CentralExtension& et, std::span<const int> kernel) {
    for (int x : kernel)
        if (!et.to_module(x)) fail(ErrorKind::InvalidInput, "kernel must lie in the center part Z");
    GammaQuotient q = gamma_quotient(et.G(), kernel);
    const AbelianGammaModule& zt = et.Z();
    std::vector<int> zimg;
    for (std::size_t idx = 0; idx < zt.size(); ++idx) zimg.push_back(q.projection(et.incl(zt.element_at(idx))));
    std::sort(zimg.begin(), zimg.end());
    zimg.erase(std::unique(zimg.begin(), zimg.end()), zimg.end());
    CentralModule cm = central_module(q.group, zimg);

    std::vector<int> proj_images(q.group.group().order());
    for (int x = 0; x < et.G().group().order(); ++x) proj_images[q.projection(x)] = et.proj()(x);
    std::vector<int> section(et.Gbar().group().order());
    for (std::size_t y = 0; y < section.size(); ++y) section[y] = q.projection(et.section()[y]);
    CentralExtension e(std::move(cm.module), std::move(cm.basis), q.group, et.Gbar(),
                       GroupHom{q.group.group(), et.Gbar().group(), proj_images}, section);

    std::vector<int> lambda(zt.size());
    for (std::size_t idx = 0; idx < zt.size(); ++idx) {
        const auto m = e.to_module(q.projection(et.incl(zt.element_at(idx))));
        lambda[idx] = static_cast<int>(e.Z().index_of(*m));
    }
    GroupHom lam = make_hom(zt.as_group(), e.Z().as_group(), std::move(lambda));
    return {std::move(e), std::move(lam)};
}

Cochain delta_of_lift(const CentralExtension& e, const Cochain1& lift) {
    const FiniteGroup& gam = e.G().gamma();
    const FiniteGroup& G = e.G().group();
    const int n = gam.order();
    Cochain z = zero_cochain(e.Z(), 2);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const int v = G.mul(G.mul(lift[s], e.G().act(s, lift[t])), G.inv(lift[gam.mul(s, t)]));
            auto m = e.to_module(v);
            if (!m)
                fail(ErrorKind::InternalInvariantViolation,
                     "connecting cochain escapes Z at (" + std::to_string(s) + ", " + std::to_string(t) + ")");
            z.values[s * n + t] = std::move(*m);
        }
    if (!is_cocycle(e.Z(), z)) fail(ErrorKind::InternalInvariantViolation, "connecting cochain is not a 2-cocycle");
    return z;
}

Cochain connecting_delta(const CentralExtension& e, const Cochain1& c) {
    if (!is_cocycle1(e.Gbar(), c)) fail(ErrorKind::NotACocycle, "c is not a 1-cocycle of Gbar");
    Cochain1 lift(c.size());
    for (std::size_t s = 0; s < c.size(); ++s) lift[s] = e.section()[c[s]];
    return delta_of_lift(e, lift);
}

std::optional<Cochain1> lifts_to_cocycle(const CentralExtension& e, const Cochain1& c) {
    const Cochain z = connecting_delta(e, c);
    const auto a = is_coboundary2(e.Z(), z);
    if (!a) return std::nullopt;
    const FiniteGroup& G = e.G().group();
    Cochain1 lift(c.size());
    for (std::size_t s = 0; s < c.size(); ++s) lift[s] = G.mul(e.incl(e.Z().neg(a->values[s])), e.section()[c[s]]);
    if (!is_cocycle1(e.G(), lift))
        fail(ErrorKind::InternalInvariantViolation, "corrected lift is not a 1-cocycle");
    for (std::size_t s = 0; s < c.size(); ++s)
        if (e.proj()(lift[s]) != c[s]) fail(ErrorKind::InternalInvariantViolation, "corrected lift does not project to c");
    return lift;
}

Cochain push_cochain(const GroupHom& f, const AbelianGammaModule& source, const AbelianGammaModule& target,
                     const Cochain& z) {
    Cochain out{z.degree, {}};
    for (const auto& v : z.values) out.values.push_back(target.element_at(f(static_cast<int>(source.index_of(v)))));
    return out;
}

bool is_equivariant_module_hom(const AbelianGammaModule& source, const AbelianGammaModule& target,
                               const GroupHom& f) {
    for (int s = 0; s < source.gamma().order(); ++s)
        for (std::size_t idx = 0; idx < source.size(); ++idx) {
            const std::size_t lhs = f(static_cast<int>(source.index_of(source.act(s, source.element_at(idx)))));
            const std::size_t rhs = target.index_of(target.act(s, target.element_at(f(static_cast<int>(idx)))));
            if (lhs != rhs) return false;
        }
    return true;
}

void check_equivariant(const AbelianGammaModule& z, const GammaGroup& a, const GroupHom& kappa) {
    if (kappa.images.size() != z.size()) fail(ErrorKind::InvalidInput, "kappa needs one image per element of Z");
    make_hom(z.as_group(), a.group(), kappa.images);
    for (int s = 0; s < z.gamma().order(); ++s)
        for (std::size_t idx = 0; idx < z.size(); ++idx)
            if (kappa(static_cast<int>(z.index_of(z.act(s, z.element_at(idx))))) !=
                a.act(s, kappa(static_cast<int>(idx))))
                fail(ErrorKind::NotEquivariant, "kappa is not equivariant for gamma element " + std::to_string(s));
}

Twisted2Cocycle pushforward2(const AbelianGammaModule& z_module, const GammaGroup& a, const GroupHom& kappa,
                             const Cochain& z) {
    check_equivariant(z_module, a, kappa);
    if (!is_cocycle(z_module, z)) fail(ErrorKind::NotACocycle, "z is not a 2-cocycle");
    std::vector<int> values;
    for (const auto& v : z.values) values.push_back(kappa(static_cast<int>(z_module.index_of(v))));
    return make_twisted2(a, std::move(values));
}

}  // namespace galcoh
