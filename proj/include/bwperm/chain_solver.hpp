#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "bwperm/frontier.hpp"
#include "bwperm/model.hpp"

namespace bwperm {

struct SolveOptions {
    // Scanlines on one anti-diagonal a + b = d are independent and may be
    // filled concurrently. Results do not depend on this value.
    int threads = 1;
};

struct WitnessBlock {
    Scanline lo;
    Scanline hi;
    Color color = Color::Uncolored;
    std::vector<int> members; // segments strictly between lo and hi
};

struct Witness {
    Coloring coloring;   // exactly the requested counts
    Coloring dominating; // block coloring before surplus vertices were uncolored
    ScanlineChain chain; // interior scanlines; the extremes (0,0) and (n,n) are implicit
    std::vector<WitnessBlock> blocks;
};

// Dynamic program over single scanlines. best(s)[b] is the largest white count
// of a coloring of the segments Left of s that uses exactly b black vertices
// and is built from a chain (0,0) = s_0 < s_1 < ... < s_k = s with each region
// between consecutive scanlines colored in one color. Runs in O(n^5).
class ChainSolver {
public:
    explicit ChainSolver(const Permutation& p, SolveOptions opts = {})
        : p_(p), counts_(p), n_(p.size()), width_(static_cast<size_t>(n_) + 1),
          best_(width_ * width_ * width_, kInfeasible) {
        best_[0] = 0; // s = (0,0): nothing colored
        const int threads = std::max(1, opts.threads);
        for (int d = 1; d <= 2 * n_; ++d) {
            const int a_lo = std::max(0, d - n_);
            const int a_hi = std::min(d, n_);
            const int layer = a_hi - a_lo + 1;
            if (threads == 1 || layer < 2 * threads) {
                for (int a = a_lo; a <= a_hi; ++a) fill_row({a, d - a});
                continue;
            }
            std::vector<std::jthread> pool;
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back([this, t, threads, a_lo, a_hi, d] {
                    for (int a = a_lo + t; a <= a_hi; a += threads) fill_row({a, d - a});
                });
            }
        }
        std::vector<int> last(row({n_, n_}).begin(), row({n_, n_}).end());
        frontier_ = Frontier::close(std::move(last));
    }

    const Frontier& frontier() const { return frontier_; }
    const Permutation& permutation() const { return p_; }

    bool decide(int b, int w) const { return frontier_.contains(b, w); }

    std::optional<Witness> witness(int b, int w) const {
        if (!decide(b, w)) return std::nullopt;
        const auto final_row = row({n_, n_});
        int target_b = b;
        while (final_row[target_b] < w) ++target_b; // terminates: closure guarantees a dominating entry
        int target_w = final_row[target_b];

        Witness out;
        out.dominating = Coloring(n_);
        Scanline s{n_, n_};
        while (s != Scanline{0, 0}) {
            bool found = false;
            // lexicographically smallest predecessor; black before white
            for (int a = 0; a <= s.a && !found; ++a) {
                for (int bb = 0; bb <= s.b && !found; ++bb) {
                    const Scanline pred{a, bb};
                    if (pred == s) continue;
                    const int k = counts_.inside({pred, s});
                    const auto r = row(pred);
                    Color color = Color::Uncolored;
                    if (target_b >= k && r[target_b - k] == target_w) {
                        color = Color::Black;
                        target_b -= k;
                    } else if (target_w >= k && r[target_b] == target_w - k) {
                        color = Color::White;
                        target_w -= k;
                    } else {
                        continue;
                    }
                    WitnessBlock block{pred, s, color, inside(p_, {pred, s})};
                    for (int v : block.members) out.dominating.set(v, color);
                    out.blocks.push_back(std::move(block));
                    s = pred;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("chain table has no predecessor for a reachable state");
        }
        std::reverse(out.blocks.begin(), out.blocks.end());
        for (size_t i = 1; i < out.blocks.size(); ++i) out.chain.push_back(out.blocks[i].lo);

        // drop surplus, lowest labels first
        out.coloring = out.dominating;
        int surplus_black = out.coloring.count(Color::Black) - b;
        int surplus_white = out.coloring.count(Color::White) - w;
        for (int v = 1; v <= n_; ++v) {
            if (out.coloring[v] == Color::Black && surplus_black > 0) {
                out.coloring.set(v, Color::Uncolored);
                --surplus_black;
            } else if (out.coloring[v] == Color::White && surplus_white > 0) {
                out.coloring.set(v, Color::Uncolored);
                --surplus_white;
            }
        }
        return out;
    }

private:
    static constexpr int kInfeasible = -1;

    size_t offset(const Scanline& s) const { return (static_cast<size_t>(s.a) * width_ + s.b) * width_; }

    std::span<const int> row(const Scanline& s) const { return {best_.data() + offset(s), width_}; }

    void fill_row(const Scanline& s) {
        int* out = best_.data() + offset(s);
        for (int a = 0; a <= s.a; ++a) {
            for (int b = 0; b <= s.b; ++b) {
                const Scanline pred{a, b};
                if (pred == s) continue;
                const int k = counts_.inside({pred, s});
                const int* in = best_.data() + offset(pred);
                const int limit = counts_.left_of(pred);
                for (int used = 0; used <= limit; ++used) {
                    const int whites = in[used];
                    if (whites == kInfeasible) continue;
                    out[used + k] = std::max(out[used + k], whites);
                    out[used] = std::max(out[used], whites + k);
                }
            }
        }
    }

    Permutation p_;
    DominanceCounts counts_;
    int n_;
    size_t width_;
    std::vector<int> best_;
    Frontier frontier_;
};

inline Frontier chain_frontier(const Permutation& p, SolveOptions opts = {}) {
    return ChainSolver(p, opts).frontier();
}

inline bool decide(const Permutation& p, int b, int w) { return chain_frontier(p).contains(b, w); }

inline std::optional<Witness> witness(const Permutation& p, int b, int w) { return ChainSolver(p).witness(b, w); }

} // namespace bwperm
