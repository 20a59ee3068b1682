#pragma once

// Decision procedures for equivariant models under inner twists. Every
// verdict carries a certificate that verify() re-checks from its defining
// identities.

#include <optional>
#include <string>
#include <vector>

#include "galcoh/extension.hpp"

namespace galcoh {

struct Check {
    std::string name;
    bool pass = false;
};
bool all_pass(const std::vector<Check>& checks);

struct ModelExistenceProblem {
    CentralExtension extension;
    GammaGroup aut_group;  // A with its action τ
    GroupHom kappa;        // Z (as a group) -> A
    Cochain1 cocycle;      // in Gbar
};

struct ModelVerdict {
    bool yes = false;
    Cochain1 lift;             // section lift c̃ of c
    Cochain delta;             // c̃_s · ˢc̃_t · c̃_{st}⁻¹ in Z
    IntVector delta_class;     // coordinates of [δ] in H²(Γ, Z)
    Twisted2Cocycle pushed;    // (τ, κ ∘ δ)
    std::optional<Cochain1> witness;
    std::uint64_t explored = 0;
    double bound = 0;
};

ModelVerdict decide_model_existence(const ModelExistenceProblem& p, std::uint64_t budget = kDefaultBudget);
/// Yes: the witness satisfies the neutrality identity for the recomputed
/// pushed cocycle. No: an independent serial search finds no witness.
std::vector<Check> verify(const ModelExistenceProblem& p, const ModelVerdict& v,
                          std::uint64_t budget = kDefaultBudget);

struct TitsClass {
    Cochain delta;          // in Z̃
    IntVector coordinates;  // in H²(Γ, Z̃)
    AbelianInvariants h2;
    Cochain canonical;
    bool trivial = false;
};
TitsClass tits_class(const CentralExtension& etilde, const Cochain1& c);

struct TitsProblem {
    CentralExtension etilde;
    GammaGroup aut_group;
    GroupHom kappa_tilde;  // Z̃ -> A
    Cochain1 cocycle;
    // optional data for the λ-diagram
    std::optional<CentralExtension> extension;
    std::optional<GroupHom> lambda;  // Z̃ -> Z
    std::optional<GroupHom> kappa;   // Z -> A
};

struct TitsVerdict {
    bool yes = false;
    TitsClass tits;
    Twisted2Cocycle pushed;
    std::optional<Cochain1> witness;
    std::uint64_t explored = 0;
    double bound = 0;
    // λ-diagram: λ_*(δ̃) - δ = d(lambda_correction)
    std::optional<Cochain> lambda_correction;
    bool lambda_checked = false;
};

/// Throws InvalidInput when κ̃ ≠ κ ∘ λ, InternalInvariantViolation when the
/// λ-diagram fails.
TitsVerdict decide_tits(const TitsProblem& p, std::uint64_t budget = kDefaultBudget);
std::vector<Check> verify(const TitsProblem& p, const TitsVerdict& v, std::uint64_t budget = kDefaultBudget);

struct HxhProblem {
    GammaGroup sigma1;
    GammaGroup sigma2;  // same Γ and group
};

struct HxhVerdict {
    bool yes = false;
    bool inner_form = false;
    int failing_gamma = -1;        // when not an inner form
    std::vector<int> w;            // σ2(γ) = inn(w_γ) ∘ σ1(γ)
    Cochain1 cocycle;              // w_γ modulo the center
    Cochain delta;                 // in Z(H)
    IntVector delta_class;
    std::optional<Cochain1> lift;  // pure-inner cocycle in H
    std::optional<bool> reduction_agrees;  // through the (H×H)/Δ model problem
};

HxhVerdict decide_hxh(const HxhProblem& p, std::uint64_t budget = kDefaultBudget);
std::vector<Check> verify(const HxhProblem& p, const HxhVerdict& v);

struct GuProblem {
    CentralExtension extension;
    Cochain1 cocycle;
};

struct GuVerdict {
    bool yes = false;
    Cochain delta;
    IntVector delta_class;
    std::optional<Cochain1> lift;
};

inline constexpr const char* kGuAssumption =
    "kappa_* : H^2(Gamma, Z) -> H^2(Gamma, A) is injective (quasi-trivial maximal torus)";

GuVerdict decide_gu(const GuProblem& p);
std::vector<Check> verify(const GuProblem& p, const GuVerdict& v);

/// The (H×H)/Δ model problem for the pair: G₁ = H×H with σ1×σ1, c = (1, c̄),
/// A₁ = Z(G₁)/Z(Δ).
ModelExistenceProblem hxh_model_problem(const GammaGroup& sigma1, const Cochain1& cbar);

}  // namespace galcoh
