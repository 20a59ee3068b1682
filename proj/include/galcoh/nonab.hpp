#pragma once

// Γ-groups with nonabelian coefficients: 1-cocycles, H¹, twisting and
// neutrality of pushed-forward 2-cocycles.

#include <cstdint>
#include <optional>
#include <vector>

#include "galcoh/fingrp.hpp"

namespace galcoh {

class GammaGroup {
public:
    GammaGroup() = default;
    /// `action[s]` is the automorphism by which s acts. Validated as a
    /// homomorphism Γ → Aut(group).
    GammaGroup(FiniteGroup gamma, FiniteGroup group, std::vector<Automorphism> action);

    static GammaGroup trivial(FiniteGroup gamma, FiniteGroup group);

    const FiniteGroup& gamma() const { return gamma_; }
    const FiniteGroup& group() const { return group_; }
    const Automorphism& action(int s) const { return action_[s]; }
    const std::vector<Automorphism>& actions() const { return action_; }
    int act(int s, int x) const { return action_[s](x); }

    bool operator==(const GammaGroup& o) const { return action_ == o.action_ && group_ == o.group_; }

private:
    FiniteGroup gamma_;
    FiniteGroup group_;
    std::vector<Automorphism> action_;
};

/// Values of a 1-cochain, indexed by Γ-element.
using Cochain1 = std::vector<int>;

/// c_{st} = c_s · ˢc_t for all s, t.
bool is_cocycle1(const GammaGroup& a, const Cochain1& c);

/// Least b with c'_γ = b⁻¹ · c_γ · ᵞb for all γ, if any.
std::optional<int> cohomologous1(const GammaGroup& a, const Cochain1& c, const Cochain1& c2);

/// c'_γ = b⁻¹ · c_γ · ᵞb
Cochain1 act_on_cocycle(const GammaGroup& a, int b, const Cochain1& c);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All 1-cocycles in lexicographic order. Throws SearchBudgetExceeded.
std::vector<Cochain1> enumerate_cocycles1(const GammaGroup& a, std::uint64_t budget = kDefaultBudget);

/// One representative per class (the lexicographically least cocycle), in
/// lexicographic order.
std::vector<Cochain1> h1_classes(const GammaGroup& a, std::uint64_t budget = kDefaultBudget);

/// New action γ ↦ inn(c_γ) ∘ action(γ). Throws NotACocycle.
GammaGroup twist_inner(const GammaGroup& a, const Cochain1& c);

/// New action γ ↦ c_γ ∘ action(γ) for c with values in Aut(group), where Γ
/// acts on Aut(group) by conjugation with the action. Throws NotACocycle.
GammaGroup twist_by_automorphisms(const GammaGroup& a, const std::vector<Automorphism>& c);

/// γ ↦ c_γ⁻¹, a cocycle for the inner twist by c.
Cochain1 inverse_cocycle(const GammaGroup& a, const Cochain1& c);

/// A 2-cocycle (τ, w) with central values in the coefficient group, indexed
/// by s·|Γ| + t.
struct Twisted2Cocycle {
    GammaGroup coefficients;
    std::vector<int> values;

    int at(int s, int t) const { return values[static_cast<std::size_t>(s) * coefficients.gamma().order() + t]; }
};

/// Checks centrality of the values and ˢw_{t,u} · w_{s,tu} = w_{s,t} · w_{st,u}.
/// Throws NotACocycle.
Twisted2Cocycle make_twisted2(GammaGroup coefficients, std::vector<int> values);

/// a_s · ˢa_t · w_{s,t} · a_{st}⁻¹ = 1 for all s, t.
bool is_neutral_witness(const Twisted2Cocycle& w, const Cochain1& a);

struct NeutralitySearch {
    std::optional<Cochain1> witness;  // least under the search order
    std::uint64_t explored = 0;       // assignment attempts
    double bound = 0;                 // |A|^(|Γ|-1)
};

/// Exhaustive backtracking for a neutrality witness. Throws
/// SearchBudgetExceeded when more than `budget` assignments are tried.
NeutralitySearch is_neutral2(const Twisted2Cocycle& w, std::uint64_t budget = kDefaultBudget);

/// Every action of Γ on `group` (homomorphisms Γ → Aut(group)), in order of
/// their automorphism image lists.
std::vector<GammaGroup> enumerate_actions(const FiniteGroup& gamma, const FiniteGroup& group,
                                          std::size_t limit = 4096);

}  // namespace galcoh
