#include "galcoh/kernels.hpp"

#include <omp.h>

#include <climits>

#include "lift_solver.hpp"

namespace galcoh::kernels {

int max_threads() { return omp_get_max_threads(); }

namespace omp {

namespace {

struct Branch {
    std::uint64_t explored = 0;
    bool exceeded = false;
    std::vector<std::vector<int>> found;
};

// Splits the walk on the first branching variable and runs every branch
// independently. Branches are recombined in order so that solutions and
// explored counts match the serial walk exactly.
template <class Out>
Out split_walk(const LiftProblem& p, std::uint64_t budget, bool stop_at_first) {
    LiftSolver solver(p);
    LiftSolver::State root;
    Out out;
    if (!solver.init(root)) return out;
    const int v = solver.next_var(root);
    if (v < 0) {
        if constexpr (requires { out.solution; })
            out.solution = root.value;
        else
            out.solutions.push_back(root.value);
        return out;
    }
    const int width = solver.domain();
    std::vector<Branch> branches(width);
#pragma omp parallel for schedule(dynamic)
    for (int x = 0; x < width; ++x) {
        LiftSolver::State st = root;
        Walk walk(solver, budget, stop_at_first);
        walk.explored = 1;
        if (budget == 0) {
            walk.exceeded = true;
        } else if (solver.assign(st, v, x)) {
            walk.run(st);
        }
        branches[x] = {walk.explored, walk.exceeded, std::move(walk.found)};
    }
    std::uint64_t total = 0;
    for (int x = 0; x < width; ++x) {
        total += branches[x].explored;
        if (branches[x].exceeded || total > budget) {
            out.explored = budget + 1;
            out.budget_exceeded = true;
            if constexpr (requires { out.solution; })
                out.solution.reset();
            else
                out.solutions.clear();
            return out;
        }
        if constexpr (requires { out.solution; }) {
            if (!branches[x].found.empty()) {
                out.solution = std::move(branches[x].found.front());
                out.explored = total;
                return out;
            }
        } else {
            for (auto& s : branches[x].found) out.solutions.push_back(std::move(s));
        }
    }
    out.explored = total;
    return out;
}

}  // namespace

FirstSolution find_first(const LiftProblem& p, std::uint64_t budget) {
    return split_walk<FirstSolution>(p, budget, true);
}

AllSolutions find_all(const LiftProblem& p, std::uint64_t budget) { return split_walk<AllSolutions>(p, budget, false); }

std::optional<int> find_conjugator(const GammaGroup& a, const std::vector<int>& c, const std::vector<int>& c2) {
    const FiniteGroup& g = a.group();
    const int n = a.gamma().order();
    int best = INT_MAX;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (int b = 0; b < g.order(); ++b) {
        bool ok = true;
        for (int s = 0; s < n && ok; ++s) ok = g.mul(g.mul(g.inv(b), c[s]), a.act(s, b)) == c2[s];
        if (ok && b < best) best = b;
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

IntMatrix differential_matrix(const AbelianGammaModule& m, int degree) {
    const std::size_t cols = detail::normalized_size(m, degree);
    const std::size_t rows = detail::normalized_size(m, degree + 1);
    std::vector<IntVector> columns(cols);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t j = 0; j < cols; ++j) columns[j] = detail::differential_column(m, degree, j);
    IntMatrix d(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) d(i, j) = columns[j][i];
    return d;
}

}  // namespace omp
}  // namespace galcoh::kernels
