#pragma once

// Central extensions 1 → Z → G → Ḡ → 1 of Γ-groups, the connecting map
// δ: H¹(Γ, Ḡ) → H²(Γ, Z), lifting of 1-cocycles, and pushforward along κ.

#include <optional>
#include <vector>

#include "galcoh/gmod.hpp"
#include "galcoh/nonab.hpp"

namespace galcoh {

class CentralExtension {
public:
    CentralExtension() = default;
    /// `z_basis[i]` is the element of G corresponding to the i-th unit vector
    /// of Z. An empty `section` selects the least preimage of each element.
    CentralExtension(AbelianGammaModule z, std::vector<int> z_basis, GammaGroup g, GammaGroup gbar, GroupHom proj,
                     std::vector<int> section = {});

    const AbelianGammaModule& Z() const { return z_; }
    const std::vector<int>& z_basis() const { return z_basis_; }
    const GammaGroup& G() const { return g_; }
    const GammaGroup& Gbar() const { return gbar_; }
    const GroupHom& proj() const { return proj_; }
    const std::vector<int>& section() const { return section_; }

    /// Element of G for a module element.
    int incl(const ModElem& x) const { return incl_[z_.index_of(x)]; }
    /// Module coordinates of an element of G lying in Z.
    std::optional<ModElem> to_module(int g) const;

    /// Same extension with another section.
    CentralExtension with_section(std::vector<int> section) const;

private:
    AbelianGammaModule z_;
    std::vector<int> z_basis_;
    GammaGroup g_;
    GammaGroup gbar_;
    GroupHom proj_;
    std::vector<int> section_;
    std::vector<int> incl_;      // module index -> element of G
    std::vector<int> z_index_;  // element of G -> module index, or -1
};

/// A Γ-stable central subgroup of G written as a module Z ≅ ⊕ ℤ/dᵢ.
struct CentralModule {
    AbelianGammaModule module;
    std::vector<int> basis;  // elements of G for the unit vectors
};
CentralModule central_module(const GammaGroup& g, std::span<const int> subgroup);

/// G/N with the induced action; N normal and Γ-stable.
struct GammaQuotient {
    GammaGroup group;
    GroupHom projection;
};
GammaQuotient gamma_quotient(const GammaGroup& g, std::span<const int> normal_subgroup);

/// 1 → Z(H) → H → H/Z(H) → 1.
CentralExtension center_extension(const GammaGroup& h);

/// For Ẽ = (Z̃ → G̃ → Ḡ) and a Γ-stable subgroup K ⊂ Z̃ (given as elements
/// of G̃), the extension E = (Z̃/K → G̃/K → Ḡ) together with λ: Z̃ → Z̃/K.
struct QuotientExtension {
    CentralExtension extension;
    GroupHom lambda;  // Ẽ.Z().as_group() -> E.Z().as_group()
};
QuotientExtension quotient_extension(const CentralExtension& etilde, std::span<const int> kernel);

/// z_{s,t} = c̃_s · ˢc̃_t · c̃_{st}⁻¹ for an arbitrary lift c̃ of a cocycle.
Cochain delta_of_lift(const CentralExtension& e, const Cochain1& lift);

/// δ of a cocycle of Ḡ, computed with the section of `e`. Throws NotACocycle.
Cochain connecting_delta(const CentralExtension& e, const Cochain1& c);

/// A 1-cocycle of G projecting onto c, or nullopt. Throws NotACocycle.
std::optional<Cochain1> lifts_to_cocycle(const CentralExtension& e, const Cochain1& c);

/// Valuewise image of a module cochain under a homomorphism of the
/// underlying groups (elements in `index_of` order).
Cochain push_cochain(const GroupHom& f, const AbelianGammaModule& source, const AbelianGammaModule& target,
                     const Cochain& z);

/// κ must be Γ-equivariant from Z (as a group) to A. Throws NotEquivariant.
void check_equivariant(const AbelianGammaModule& z, const GammaGroup& a, const GroupHom& kappa);
bool is_equivariant_module_hom(const AbelianGammaModule& source, const AbelianGammaModule& target,
                               const GroupHom& f);

/// (τ, κ ∘ z). Throws NotEquivariant.
Twisted2Cocycle pushforward2(const AbelianGammaModule& z_module, const GammaGroup& a, const GroupHom& kappa,
                             const Cochain& z);

}  // namespace galcoh
