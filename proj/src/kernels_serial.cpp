#include "galcoh/kernels.hpp"

#include "lift_solver.hpp"

namespace galcoh::kernels::serial {

FirstSolution find_first(const LiftProblem& p, std::uint64_t budget) {
    LiftSolver solver(p);
    LiftSolver::State st;
    FirstSolution out;
    if (!solver.init(st)) return out;
    Walk walk(solver, budget, true);
    walk.run(st);
    out.explored = walk.explored;
    out.budget_exceeded = walk.exceeded;
    if (!walk.exceeded && !walk.found.empty()) out.solution = std::move(walk.found.front());
    return out;
}

AllSolutions find_all(const LiftProblem& p, std::uint64_t budget) {
    LiftSolver solver(p);
    LiftSolver::State st;
    AllSolutions out;
    if (!solver.init(st)) return out;
    Walk walk(solver, budget, false);
    walk.run(st);
    out.explored = walk.explored;
    out.budget_exceeded = walk.exceeded;
    if (!walk.exceeded) out.solutions = std::move(walk.found);
    return out;
}

std::optional<int> find_conjugator(const GammaGroup& a, const std::vector<int>& c, const std::vector<int>& c2) {
    const FiniteGroup& g = a.group();
    for (int b = 0; b < g.order(); ++b) {
        bool ok = true;
        for (int s = 0; s < a.gamma().order() && ok; ++s) ok = g.mul(g.mul(g.inv(b), c[s]), a.act(s, b)) == c2[s];
        if (ok) return b;
    }
    return std::nullopt;
}

IntMatrix differential_matrix(const AbelianGammaModule& m, int degree) {
    const std::size_t cols = detail::normalized_size(m, degree);
    const std::size_t rows = detail::normalized_size(m, degree + 1);
    IntMatrix d(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const IntVector col = detail::differential_column(m, degree, j);
        for (std::size_t i = 0; i < rows; ++i) d(i, j) = col[i];
    }
    return d;
}

}  // namespace galcoh::kernels::serial
