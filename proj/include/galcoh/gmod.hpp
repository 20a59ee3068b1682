#pragma once

// Abelian Γ-modules (finitely generated abelian groups with a Γ-action given
// by integer matrices) and their cohomology in degrees 0, 1, 2.

#include <optional>
#include <vector>

#include "galcoh/fingrp.hpp"
#include "galcoh/intlin.hpp"

namespace galcoh {

/// Coordinates of a module element: torsion coordinates first (reduced into
/// [0, m)), then free coordinates.
using ModElem = IntVector;

class AbelianGammaModule {
public:
    AbelianGammaModule() = default;
    /// `action[s]` acts on column vectors. Validated: congruences respected,
    /// identity acts trivially, action multiplicative modulo the torsion.
    AbelianGammaModule(FiniteGroup gamma, std::vector<BigInt> invariant_factors, int free_rank,
                       std::vector<IntMatrix> action);

    static AbelianGammaModule trivial(FiniteGroup gamma, std::vector<BigInt> invariant_factors, int free_rank);

    const FiniteGroup& gamma() const { return gamma_; }
    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    int free_rank() const { return free_rank_; }
    std::size_t rank() const { return factors_.size() + static_cast<std::size_t>(free_rank_); }
    std::size_t torsion_count() const { return factors_.size(); }
    const IntMatrix& action(int s) const { return action_[s]; }

    /// Modulus of coordinate i (0 on free coordinates).
    BigInt modulus(std::size_t i) const { return i < factors_.size() ? factors_[i] : BigInt(0); }

    ModElem zero() const { return ModElem(rank()); }
    ModElem reduce(ModElem v) const;
    ModElem act(int s, const ModElem& v) const;
    ModElem add(const ModElem& a, const ModElem& b) const;
    ModElem sub(const ModElem& a, const ModElem& b) const;
    ModElem neg(const ModElem& a) const;
    bool equal(const ModElem& a, const ModElem& b) const { return reduce(a) == reduce(b); }

    bool is_finite() const { return free_rank_ == 0; }
    /// Number of elements (finite modules only).
    std::size_t size() const;
    /// Mixed-radix enumeration of a finite module: index = sum x_i * prod_{j<i} m_j.
    std::size_t index_of(const ModElem& v) const;
    ModElem element_at(std::size_t index) const;
    /// The underlying additive group, with elements in `index_of` order.
    FiniteGroup as_group() const;

private:
    FiniteGroup gamma_;
    std::vector<BigInt> factors_;
    int free_rank_ = 0;
    std::vector<IntMatrix> action_;
};

/// Inhomogeneous cochain: values on Γ^degree, indexed by the base-|Γ| digits
/// of the tuple (first entry most significant).
struct Cochain {
    int degree = 0;
    std::vector<ModElem> values;

    const ModElem& at(int s) const { return values[s]; }
    const ModElem& at(int s, int t, int order) const { return values[s * order + t]; }
    bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const AbelianGammaModule& m, int degree);
bool cochain_equal(const AbelianGammaModule& m, const Cochain& a, const Cochain& b);
Cochain cochain_add(const AbelianGammaModule& m, const Cochain& a, const Cochain& b);
Cochain cochain_sub(const AbelianGammaModule& m, const Cochain& a, const Cochain& b);

/// Bar-resolution differential d: C^n -> C^{n+1}, n in {0, 1, 2}.
Cochain differential(const AbelianGammaModule& m, const Cochain& c);
bool is_cocycle(const AbelianGammaModule& m, const Cochain& c);

struct AbelianInvariants {
    std::vector<BigInt> torsion;  // each > 1, each dividing the next
    int free_rank = 0;
    bool operator==(const AbelianInvariants&) const = default;
    bool trivial() const { return torsion.empty() && free_rank == 0; }
};

/// Integer matrix of the differential on normalized cochains of degree n
/// (columns: normalized n-tuples × coordinates; rows: (n+1)-tuples × coordinates).
IntMatrix normalized_differential_matrix(const AbelianGammaModule& m, int degree);

class CohomologyGroup {
public:
    int degree() const { return degree_; }
    const AbelianInvariants& invariants() const { return invariants_; }
    bool is_finite() const { return invariants_.free_rank == 0; }

    /// Cocycles generating each cyclic factor (torsion ones first).
    const std::vector<Cochain>& generators() const { return generators_; }

    /// Coordinates of the class of a cocycle: residues modulo each invariant
    /// factor, then integers for the free part. Throws NotACocycle.
    IntVector class_of(const Cochain& cocycle) const;
    bool is_trivial_class(const Cochain& cocycle) const;

    /// Canonical cocycle of the class: normalized, then each pivot coordinate
    /// reduced modulo the coboundary lattice.
    Cochain canonical(const Cochain& cocycle) const;

    /// One canonical cocycle per class, in lexicographic order.
    std::vector<Cochain> representatives(std::size_t limit = 4096) const;
    /// Position of the class of `cocycle` in representatives().
    std::size_t representative_index(const Cochain& cocycle) const;

    const AbelianGammaModule& module() const { return module_; }

private:
    friend CohomologyGroup cohomology(const AbelianGammaModule& m, int degree);

    Cochain from_normalized(const IntVector& flat) const;
    IntVector to_normalized(const Cochain& c) const;

    AbelianGammaModule module_;
    int degree_ = 0;
    AbelianInvariants invariants_;
    Lattice cocycles_;      // normalized cocycle lattice K
    Lattice coboundaries_;  // B + torsion lattice, inside K
    IntMatrix snf_right_;   // K coordinates -> adapted coordinates
    std::vector<BigInt> snf_diagonal_;
    std::size_t first_nontrivial_ = 0;
    std::vector<Cochain> generators_;
};

CohomologyGroup cohomology(const AbelianGammaModule& m, int degree);

/// A 1-cochain a with d(a) = z, or nullopt. Throws NotACocycle.
std::optional<Cochain> is_coboundary2(const AbelianGammaModule& m, const Cochain& z);

/// Cohomology of a cyclic Γ via the norm map: n=0 gives M^Γ, odd n gives
/// ker N / (σ-1)M, even n ≥ 2 gives M^Γ / N M. Throws NotCyclic.
AbelianInvariants tate_cyclic_oracle(const AbelianGammaModule& m, int degree);

/// ℤ[Γ/H] with Γ permuting left cosets (ordered by least element).
AbelianGammaModule permutation_module(const FiniteGroup& gamma, std::span<const int> subgroup);

/// Invariants of the subquotient {x : A x ∈ L_target} / (span(image_gens) + L_source),
/// where L are the torsion lattices of the coordinate moduli.
AbelianInvariants subquotient_invariants(const IntMatrix& kernel_map, const std::vector<BigInt>& source_moduli,
                                         const std::vector<BigInt>& target_moduli,
                                         const std::vector<IntVector>& image_generators);

}  // namespace galcoh
