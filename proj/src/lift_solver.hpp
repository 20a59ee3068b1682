#pragma once

// Constraint propagation for a_{st} = a_s · τ_s(a_t) · w_{s,t}, shared by the
// serial and OpenMP search kernels.

#include <cstdint>
#include <vector>

#include "galcoh/kernels.hpp"

namespace galcoh::kernels {

class LiftSolver {
public:
    struct State {
        std::vector<int> value;  // -1 when unassigned
        std::vector<int> trail;
        std::vector<int> queue;
    };

    explicit LiftSolver(const LiftProblem& p) {
        const GammaGroup& a = *p.coefficients;
        n_ = a.gamma().order();
        m_ = a.group().order();
        gamma_ = a.gamma();
        group_ = a.group();
        act_.resize(static_cast<std::size_t>(n_) * m_);
        for (int s = 0; s < n_; ++s)
            for (int x = 0; x < m_; ++x) act_[static_cast<std::size_t>(s) * m_ + x] = a.act(s, x);
        twist_ = p.twist.empty() ? std::vector<int>(static_cast<std::size_t>(n_) * n_, group_.identity()) : p.twist;
    }

    int domain() const { return m_; }
    int unknowns() const { return n_; }

    /// Fresh state with a_e forced by the (e, e) relation.
    bool init(State& st) const {
        st.value.assign(n_, -1);
        st.trail.clear();
        const int e = gamma_.identity();
        return assign(st, e, group_.inv(twist_[static_cast<std::size_t>(e) * n_ + e]));
    }

    int next_var(const State& st) const {
        for (int s = 0; s < n_; ++s)
            if (st.value[s] < 0) return s;
        return -1;
    }

    /// Assigns and propagates; on failure the caller undoes to its mark.
    bool assign(State& st, int var, int x) const {
        if (st.value[var] >= 0) return st.value[var] == x;
        set(st, var, x);
        st.queue.clear();
        st.queue.push_back(var);
        while (!st.queue.empty()) {
            const int v = st.queue.back();
            st.queue.pop_back();
            for (int u = 0; u < n_; ++u) {
                if (st.value[u] < 0) continue;
                if (!check(st, v, u) || !check(st, u, v)) return false;
            }
        }
        return true;
    }

    void undo(State& st, std::size_t mark) const {
        while (st.trail.size() > mark) {
            st.value[st.trail.back()] = -1;
            st.trail.pop_back();
        }
    }

private:
    void set(State& st, int var, int x) const {
        st.value[var] = x;
        st.trail.push_back(var);
    }

    bool check(State& st, int s, int t) const {
        const int rhs = group_.mul(group_.mul(st.value[s], act_[static_cast<std::size_t>(s) * m_ + st.value[t]]),
                                   twist_[static_cast<std::size_t>(s) * n_ + t]);
        const int p = gamma_.mul(s, t);
        if (st.value[p] < 0) {
            set(st, p, rhs);
            st.queue.push_back(p);
            return true;
        }
        return st.value[p] == rhs;
    }

    int n_ = 0;
    int m_ = 0;
    FiniteGroup gamma_;
    FiniteGroup group_;
    std::vector<int> act_;
    std::vector<int> twist_;
};

/// Depth-first search below `st`. `explored` counts assignment attempts and
/// stops at budget + 1. `stop_at_first` ends the walk at the first solution.
struct Walk {
    Walk(const LiftSolver& s, std::uint64_t b, bool first) : solver(s), budget(b), stop_at_first(first) {}

    const LiftSolver& solver;
    std::uint64_t budget;
    bool stop_at_first;
    std::uint64_t explored = 0;
    bool exceeded = false;
    std::vector<std::vector<int>> found;

    bool run(LiftSolver::State& st) {
        const int v = solver.next_var(st);
        if (v < 0) {
            found.push_back(st.value);
            return stop_at_first;
        }
        for (int x = 0; x < solver.domain(); ++x) {
            if (++explored > budget) {
                exceeded = true;
                return true;
            }
            const std::size_t mark = st.trail.size();
            if (solver.assign(st, v, x) && run(st)) return true;
            solver.undo(st, mark);
        }
        return false;
    }
};

}  // namespace galcoh::kernels
