#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bwperm/frontier.hpp"
#include "bwperm/model.hpp"

namespace bwperm {

struct PieceSolverOptions {
    // Shrink piece borders onto the segments they contain before the memo
    // lookup, so pieces with the same contents share one table.
    bool tighten = true;
};

struct PieceSolverStats {
    size_t tables = 0;  // distinct memo keys computed
    size_t lookups = 0; // calls to table()
    size_t cuts = 0;    // cut scanlines combined
};

// Feasibility tables for pieces: a piece is colored entirely black, entirely
// white, or split by a cut scanline whose crossing segments stay uncolored.
class PieceSolver {
public:
    explicit PieceSolver(const Permutation& p, PieceSolverOptions opts = {})
        : p_(p), counts_(p), opts_(opts) {}

    const Frontier& table(const Piece& piece) {
        if (!piece.well_formed()) throw std::invalid_argument("piece borders are not ordered");
        const int n = p_.size();
        if (piece.lo.a < 0 || piece.lo.b < 0 || piece.hi.a > n || piece.hi.b > n) {
            throw std::out_of_range("piece borders outside 0.." + std::to_string(n));
        }
        ++stats_.lookups;
        const Piece pc = opts_.tighten ? tightened(piece) : piece;
        const std::uint64_t k = key(pc);
        if (auto it = memo_.find(k); it != memo_.end()) {
            if (!it->second.done) {
                throw std::logic_error("piece memo key revisited while under construction");
            }
            return it->second.frontier;
        }
        memo_.emplace(k, Entry{});
        Frontier f = compute(pc);
        Entry& e = memo_.at(k);
        e.frontier = std::move(f);
        e.done = true;
        ++stats_.tables;
        return e.frontier;
    }

    const PieceSolverStats& stats() const { return stats_; }
    const Permutation& permutation() const { return p_; }

    Piece extreme_piece() const { return {{0, 0}, {p_.size(), p_.size()}}; }

private:
    struct Entry {
        bool done = false;
        Frontier frontier;
    };

    std::uint64_t key(const Piece& pc) const {
        const std::uint64_t w = static_cast<std::uint64_t>(p_.size()) + 1;
        return ((static_cast<std::uint64_t>(pc.lo.a) * w + pc.lo.b) * w + pc.hi.a) * w + pc.hi.b;
    }

    // Smallest piece with the same inside set; empty pieces collapse to ((0,0),(0,0)).
    Piece tightened(const Piece& pc) const {
        int min_top = p_.size() + 1, max_top = 0, min_bot = p_.size() + 1, max_bot = 0;
        for (int k = pc.lo.a + 1; k <= pc.hi.a; ++k) {
            const int bk = p_.pos(k);
            if (bk <= pc.lo.b || bk > pc.hi.b) continue;
            min_top = std::min(min_top, k);
            max_top = std::max(max_top, k);
            min_bot = std::min(min_bot, bk);
            max_bot = std::max(max_bot, bk);
        }
        if (max_top == 0) return {{0, 0}, {0, 0}};
        return {{min_top - 1, min_bot - 1}, {max_top, max_bot}};
    }

    Frontier compute(const Piece& pc) {
        const int m = counts_.inside(pc);
        if (m == 0) return Frontier();

        // all black, all white
        std::vector<int> acc(static_cast<size_t>(m) + 1, 0);
        acc[0] = m;

        for (int a = pc.lo.a; a <= pc.hi.a; ++a) {
            for (int b = pc.lo.b; b <= pc.hi.b; ++b) {
                const Scanline cut{a, b};
                if (cut == pc.lo || cut == pc.hi) continue;
                const Piece left{pc.lo, cut};
                const Piece right{cut, pc.hi};
                const int m1 = counts_.inside(left);
                const int m2 = counts_.inside(right);
                if (m1 + m2 == 0) continue;
                // a cut that separates nothing reproduces this piece under tightening
                if (opts_.tighten && (m1 == m || m2 == m)) continue;
                ++stats_.cuts;
                const Frontier& f1 = table(left);
                const Frontier& f2 = table(right);
                const auto v1 = f1.values();
                const auto v2 = f2.values();
                for (size_t i = 0; i < v1.size(); ++i)
                    for (size_t j = 0; j < v2.size(); ++j) acc[i + j] = std::max(acc[i + j], v1[i] + v2[j]);
            }
        }
        return Frontier(std::move(acc));
    }

    Permutation p_;
    DominanceCounts counts_;
    PieceSolverOptions opts_;
    PieceSolverStats stats_;
    std::unordered_map<std::uint64_t, Entry> memo_;
};

inline Frontier piece_table(const Permutation& p, const Piece& pc, PieceSolverOptions opts = {}) {
    PieceSolver solver(p, opts);
    return solver.table(pc);
}

} // namespace bwperm
