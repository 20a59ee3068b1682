#pragma once

// Search and assembly kernels. Each has a serial reference and an OpenMP
// version; both return identical results, including explored counts.

#include <cstdint>
#include <optional>
#include <vector>

#include "galcoh/gmod.hpp"
#include "galcoh/nonab.hpp"

namespace galcoh {

namespace detail {
std::vector<int> non_identity(const FiniteGroup& g);
std::size_t normalized_size(const AbelianGammaModule& m, int degree);
IntVector differential_column(const AbelianGammaModule& m, int degree, std::size_t column);
}  // namespace detail

namespace kernels {

/// Unknowns a_s (s ∈ Γ) in a Γ-group A subject to
///   a_{st} = a_s · τ_s(a_t) · twist_{s,t}.
/// An empty twist means the identity, so solutions are the 1-cocycles.
struct LiftProblem {
    const GammaGroup* coefficients = nullptr;
    std::vector<int> twist;
};

struct FirstSolution {
    std::optional<std::vector<int>> solution;
    std::uint64_t explored = 0;
    bool budget_exceeded = false;
};

struct AllSolutions {
    std::vector<std::vector<int>> solutions;
    std::uint64_t explored = 0;
    bool budget_exceeded = false;
};

namespace serial {
FirstSolution find_first(const LiftProblem& p, std::uint64_t budget);
AllSolutions find_all(const LiftProblem& p, std::uint64_t budget);
std::optional<int> find_conjugator(const GammaGroup& a, const std::vector<int>& c, const std::vector<int>& c2);
IntMatrix differential_matrix(const AbelianGammaModule& m, int degree);
}  // namespace serial

namespace omp {
FirstSolution find_first(const LiftProblem& p, std::uint64_t budget);
AllSolutions find_all(const LiftProblem& p, std::uint64_t budget);
std::optional<int> find_conjugator(const GammaGroup& a, const std::vector<int>& c, const std::vector<int>& c2);
IntMatrix differential_matrix(const AbelianGammaModule& m, int degree);
}  // namespace omp

int max_threads();

}  // namespace kernels
}  // namespace galcoh
