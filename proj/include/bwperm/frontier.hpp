#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwperm {

// Downward-closed set of feasible (black, white) count pairs over a scope of m
// vertices, stored as the largest white count for each black count 0..m.
class Frontier {
public:
    // The point frontier {(0, 0)}.
    Frontier() : maxw_{0} {}

    explicit Frontier(std::vector<int> maxw) : maxw_(std::move(maxw)) {
        if (maxw_.empty()) throw std::invalid_argument("frontier needs at least one entry");
        const int m = scope();
        for (int b = 0; b <= m; ++b) {
            if (maxw_[b] < 0 || maxw_[b] > m - b) {
                throw std::invalid_argument("frontier entry maxw[" + std::to_string(b) + "] = " +
                                            std::to_string(maxw_[b]) + " outside 0.." + std::to_string(m - b));
            }
            if (b > 0 && maxw_[b] > maxw_[b - 1]) {
                throw std::invalid_argument("frontier must be non-increasing at b = " + std::to_string(b));
            }
        }
    }

    // Closes a raw table downward. raw[b] is the best white count seen with
    // exactly b black vertices, or -1 if none; raw.back() must be feasible.
    static Frontier close(std::vector<int> raw) {
        for (int b = static_cast<int>(raw.size()) - 2; b >= 0; --b) raw[b] = std::max(raw[b], raw[b + 1]);
        return Frontier(std::move(raw));
    }

    // Frontier of the edgeless graph on m vertices: b + w <= m.
    static Frontier independent(int m) {
        std::vector<int> v(static_cast<size_t>(m) + 1);
        for (int b = 0; b <= m; ++b) v[b] = m - b;
        return Frontier(std::move(v));
    }

    int scope() const { return static_cast<int>(maxw_.size()) - 1; }

    int max_white(int b) const {
        if (b < 0 || b > scope()) throw std::out_of_range("black count outside frontier scope");
        return maxw_[b];
    }

    bool contains(int b, int w) const { return b >= 0 && w >= 0 && b <= scope() && w <= maxw_[b]; }

    std::span<const int> values() const { return maxw_; }

    friend bool operator==(const Frontier&, const Frontier&) = default;

private:
    std::vector<int> maxw_;
};

// Adds a monochromatic block of db black or dw white vertices.
inline Frontier frontier_shift(const Frontier& f, int db, int dw) {
    if (db < 0 || dw < 0) throw std::invalid_argument("shift amounts must be non-negative");
    if (db > 0 && dw > 0) throw std::invalid_argument("a block is a single color");
    const int m = f.scope() + db + dw;
    std::vector<int> out(static_cast<size_t>(m) + 1, 0);
    // (b, 0) is feasible for every b in scope, so entries past f.scope() + db stay 0
    for (int b = 0; b <= f.scope() + db; ++b) out[b] = f.max_white(std::max(b - db, 0)) + dw;
    return Frontier(std::move(out));
}

inline Frontier frontier_union(const Frontier& f, const Frontier& g) {
    if (f.scope() != g.scope()) {
        throw std::invalid_argument("frontier union over different scopes (" + std::to_string(f.scope()) +
                                    " vs " + std::to_string(g.scope()) + ")");
    }
    std::vector<int> out(f.values().begin(), f.values().end());
    for (int b = 0; b <= g.scope(); ++b) out[b] = std::max(out[b], g.max_white(b));
    return Frontier(std::move(out));
}

// Max-plus convolution: colorings of two disjoint, mutually non-adjacent parts.
inline Frontier frontier_convolve(const Frontier& f, const Frontier& g) {
    const auto fv = f.values();
    const auto gv = g.values();
    std::vector<int> out(fv.size() + gv.size() - 1, 0);
    for (size_t i = 0; i < fv.size(); ++i)
        for (size_t j = 0; j < gv.size(); ++j) out[i + j] = std::max(out[i + j], fv[i] + gv[j]);
    return Frontier(std::move(out));
}

} // namespace bwperm
