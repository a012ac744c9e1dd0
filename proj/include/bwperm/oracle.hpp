#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwperm/frontier.hpp"
#include "bwperm/graph.hpp"
#include "bwperm/text.hpp"

namespace bwperm {

// Thrown when an exhaustive solver is asked for an instance above its size guard.
class OracleGuardError : public std::length_error {
public:
    OracleGuardError(int n, int guard)
        : std::length_error("exhaustive oracle refuses n = " + std::to_string(n) + " (guard " +
                            std::to_string(guard) + "); shrink the instance"),
          n_(n), guard_(guard) {}

    int n() const { return n_; }
    int guard() const { return guard_; }

private:
    int n_;
    int guard_;
};

inline constexpr int kOracleGuard = 20;
inline constexpr int kExhaustiveGuard = 10;

// Enumerates every black set B; the best white set is everything outside the
// closed neighborhood N[B]. O(2^n * n).
inline Frontier oracle_frontier(const Graph& g, int guard = kOracleGuard) {
    const int n = g.size();
    if (n > guard || n > 26) throw OracleGuardError(n, guard);
    std::vector<std::uint32_t> closed(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) {
        closed[v - 1] = std::uint32_t{1} << (v - 1);
        for (int u : g.neighbors(v)) closed[v - 1] |= std::uint32_t{1} << (u - 1);
    }
    const std::uint32_t total = std::uint32_t{1} << n;
    // cover[mask] = N[mask], built from mask without its lowest bit
    std::vector<std::uint32_t> cover(total, 0);
    std::vector<int> best(static_cast<size_t>(n) + 1, -1);
    best[0] = n;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const int low = std::countr_zero(mask);
        cover[mask] = cover[mask & (mask - 1)] | closed[low];
        const int b = std::popcount(mask);
        const int w = n - std::popcount(cover[mask]);
        if (w > best[b]) best[b] = w;
    }
    return Frontier(std::move(best));
}

inline bool oracle_decide(const Graph& g, int b, int w, int guard = kOracleGuard) {
    const Frontier f = oracle_frontier(g, guard);
    return f.contains(b, w);
}

// Second oracle: all 3^n colorings, keeping the valid ones.
inline Frontier exhaustive_check(const Graph& g) {
    const int n = g.size();
    if (n > kExhaustiveGuard) throw OracleGuardError(n, kExhaustiveGuard);
    const auto edges = g.edges();
    std::vector<int> color(static_cast<size_t>(n), 0); // 0 none, 1 black, 2 white
    std::vector<int> best(static_cast<size_t>(n) + 1, -1);
    while (true) {
        bool valid = true;
        for (auto [u, v] : edges) {
            const int cu = color[u - 1];
            const int cv = color[v - 1];
            if (cu != 0 && cv != 0 && cu != cv) {
                valid = false;
                break;
            }
        }
        if (valid) {
            int b = 0, w = 0;
            for (int c : color) {
                b += c == 1;
                w += c == 2;
            }
            best[b] = std::max(best[b], w);
        }
        int i = 0;
        while (i < n && color[i] == 2) color[i++] = 0;
        if (i == n) break;
        ++color[i];
    }
    return Frontier::close(std::move(best));
}

// Edge-list format: "n m" then m lines "u v", 1-based labels.
inline Graph parse_edge_list(std::string_view text) {
    const auto tokens = detail::tokenize(text);
    if (tokens.size() < 2) throw ParseError("edge list: expected header \"n m\"");
    const long long n = detail::to_integer(tokens[0]);
    const long long m = detail::to_integer(tokens[1]);
    if (n < 0) throw ParseError(detail::where(tokens[0]) + ": negative vertex count");
    if (m < 0) throw ParseError(detail::where(tokens[1]) + ": negative edge count");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m) {
        throw ParseError("edge list: expected " + std::to_string(m) + " edges (" + std::to_string(2 * m) +
                         " labels), got " + std::to_string(tokens.size() - 2) + " labels");
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 2; i < tokens.size(); i += 2) {
        const long long u = detail::to_integer(tokens[i]);
        const long long v = detail::to_integer(tokens[i + 1]);
        for (size_t j : {i, i + 1}) {
            const long long x = j == i ? u : v;
            if (x < 1 || x > n) {
                throw ParseError(detail::where(tokens[j]) + ": vertex " + std::to_string(x) + " outside 1.." +
                                 std::to_string(n));
            }
        }
        if (u == v) throw ParseError(detail::where(tokens[i]) + ": self-loop on vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

inline std::string format_edge_list(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.size()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace bwperm
