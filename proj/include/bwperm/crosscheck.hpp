#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bwperm/chain_solver.hpp"
#include "bwperm/instance_io.hpp"
#include "bwperm/model.hpp"
#include "bwperm/oracle.hpp"
#include "bwperm/piece_solver.hpp"

namespace bwperm {

// Deletes one vertex and closes the gap in the labels and bottom positions.
inline Permutation remove_label(const Permutation& p, int label) {
    if (p.size() <= 1) throw std::invalid_argument("cannot remove the last vertex");
    p.pos(label); // range check
    std::vector<int> bottom;
    for (int v : p.bottom()) {
        if (v == label) continue;
        bottom.push_back(v > label ? v - 1 : v);
    }
    return Permutation(std::move(bottom));
}

// Greedily removes one label at a time while `still_fails` holds.
inline Permutation shrink(Permutation p, const std::function<bool(const Permutation&)>& still_fails) {
    bool progress = true;
    while (progress && p.size() > 1) {
        progress = false;
        for (int label = 1; label <= p.size(); ++label) {
            Permutation smaller = remove_label(p, label);
            if (still_fails(smaller)) {
                p = std::move(smaller);
                progress = true;
                break;
            }
        }
    }
    return p;
}

inline constexpr int kPieceCheckLimit = 12;

// True when the solve paths and the oracle disagree on p.
inline bool solvers_disagree(const Permutation& p, SolveOptions opts = {}) {
    const Frontier chain = chain_frontier(p, opts);
    if (chain != oracle_frontier(adjacency(p))) return true;
    if (p.size() <= kPieceCheckLimit) {
        PieceSolver pieces(p);
        if (pieces.table(pieces.extreme_piece()) != chain) return true;
    }
    return false;
}

struct CrosscheckReport {
    int trials = 0;
    int passed = 0;
    std::optional<int> failed_trial;
    std::optional<Permutation> failing;
    std::optional<Permutation> minimized;
};

// Trial t uses the t-th output of splitmix64(seed) as its generator seed.
inline CrosscheckReport crosscheck(int n, int trials, std::uint64_t seed,
                                   const std::function<bool(const Permutation&)>& disagree =
                                       [](const Permutation& p) { return solvers_disagree(p); }) {
    CrosscheckReport report;
    report.trials = trials;
    SplitMix64 seeds(seed);
    for (int t = 0; t < trials; ++t) {
        const Permutation p = generate_random({n, seeds.next()});
        if (disagree(p)) {
            report.failed_trial = t;
            report.failing = p;
            report.minimized = shrink(p, disagree);
            return report;
        }
        ++report.passed;
    }
    return report;
}

} // namespace bwperm
