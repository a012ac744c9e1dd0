#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bwperm/bwperm.hpp"

namespace bwperm::testing {

inline Permutation figure_instance() { return Permutation({3, 5, 1, 4, 2}); }

template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
    return generate_random({n, rng()});
}

inline Piece random_piece(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> gap(0, n);
    int a1 = gap(rng), a2 = gap(rng), b1 = gap(rng), b2 = gap(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return {{a1, b1}, {a2, b2}};
}

inline Frontier oracle_for(const Permutation& p) { return oracle_frontier(adjacency(p)); }

// Mirror the diagram left to right: vertex k becomes n+1-k, bottom position j
// becomes n+1-j.
inline Permutation mirrored(const Permutation& p) {
    const int n = p.size();
    std::vector<int> b(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) b[j - 1] = n + 1 - p.at_bottom(n + 1 - j);
    return Permutation(std::move(b));
}

// Disjoint union placing q to the right of p.
inline Permutation direct_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> b(p.bottom().begin(), p.bottom().end());
    for (int v : q.bottom()) b.push_back(v + p.size());
    return Permutation(std::move(b));
}

// Sub-permutation on the given vertices, relabelled in top order.
inline Permutation restricted(const Permutation& p, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    std::vector<int> rank(static_cast<size_t>(p.size()) + 1, 0);
    for (size_t i = 0; i < labels.size(); ++i) rank[labels[i]] = static_cast<int>(i) + 1;
    std::vector<int> b;
    for (int v : p.bottom())
        if (rank[v] != 0) b.push_back(rank[v]);
    return Permutation(std::move(b));
}

inline Coloring all_colored(int n, Color c) {
    Coloring out(n);
    for (int v = 1; v <= n; ++v) out.set(v, c);
    return out;
}

// Decodes a base-3 index into a coloring (digit 0 uncolored, 1 black, 2 white).
inline Coloring coloring_from_index(int n, long long index) {
    Coloring c(n);
    for (int v = 1; v <= n; ++v) {
        c.set(v, static_cast<Color>(index % 3));
        index /= 3;
    }
    return c;
}

inline long long pow3(int n) {
    long long r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

// Every uncolored vertex has both a black and a white neighbor.
inline bool is_maximal(const Permutation& p, const Coloring& c) {
    for (int v = 1; v <= p.size(); ++v) {
        if (c[v] != Color::Uncolored) continue;
        bool black = false, white = false;
        for (int u = 1; u <= p.size(); ++u) {
            if (u == v || !crosses(p, u, v)) continue;
            black |= c[u] == Color::Black;
            white |= c[u] == Color::White;
        }
        if (!(black && white)) return false;
    }
    return true;
}

} // namespace bwperm::testing
