#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwperm/graph.hpp"
#include "bwperm/text.hpp"

namespace bwperm {

// A permutation diagram. Vertex k is the segment joining top position k to
// bottom position pos(k); the instance is the label order along the bottom rail.
class Permutation {
public:
    explicit Permutation(std::vector<int> bottom) : bottom_(std::move(bottom)) {
        const int n = size();
        if (n < 1) throw std::invalid_argument("permutation must have at least one element");
        pos_.assign(bottom_.size(), 0);
        for (int k = 1; k <= n; ++k) {
            const int label = bottom_[k - 1];
            if (label < 1 || label > n) {
                throw std::invalid_argument("label " + std::to_string(label) + " at bottom position " +
                                            std::to_string(k) + " outside 1.." + std::to_string(n));
            }
            if (pos_[label - 1] != 0) {
                throw std::invalid_argument("duplicate label " + std::to_string(label) +
                                            " at bottom position " + std::to_string(k));
            }
            pos_[label - 1] = k;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> b(static_cast<size_t>(std::max(n, 0)));
        for (int k = 0; k < n; ++k) b[k] = k + 1;
        return Permutation(std::move(b));
    }

    static Permutation reversal(int n) {
        std::vector<int> b(static_cast<size_t>(std::max(n, 0)));
        for (int k = 0; k < n; ++k) b[k] = n - k;
        return Permutation(std::move(b));
    }

    int size() const { return static_cast<int>(bottom_.size()); }

    // Label at bottom position k (1-based).
    int at_bottom(int k) const {
        check(k);
        return bottom_[k - 1];
    }

    // Bottom position of vertex `label` (1-based).
    int pos(int label) const {
        check(label);
        return pos_[label - 1];
    }

    std::span<const int> bottom() const { return bottom_; }

    friend bool operator==(const Permutation& x, const Permutation& y) { return x.bottom_ == y.bottom_; }

private:
    void check(int k) const {
        if (k < 1 || k > size()) {
            throw std::out_of_range("label " + std::to_string(k) + " outside 1.." + std::to_string(size()));
        }
    }

    std::vector<int> bottom_;
    std::vector<int> pos_;
};

namespace detail {

inline Permutation labels_from_tokens(const std::vector<Token>& tokens, size_t first, long long n) {
    std::vector<int> bottom;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (size_t i = first; i < tokens.size(); ++i) {
        const long long label = to_integer(tokens[i]);
        if (label < 1 || label > n) {
            throw ParseError(where(tokens[i]) + ": label " + std::to_string(label) + " outside 1.." +
                             std::to_string(n));
        }
        if (seen[label]) throw ParseError(where(tokens[i]) + ": duplicate label " + std::to_string(label));
        seen[label] = 1;
        bottom.push_back(static_cast<int>(label));
    }
    return Permutation(std::move(bottom));
}

} // namespace detail

// Parses "n" followed by n labels (the bottom order). Lines starting with '#'
// are comments.
inline Permutation parse_permutation(std::string_view text) {
    const auto tokens = detail::tokenize(text);
    if (tokens.empty()) throw ParseError("empty permutation input: expected n followed by n labels");
    const long long n = detail::to_integer(tokens[0]);
    if (n < 1) throw ParseError(detail::where(tokens[0]) + ": n must be at least 1, got " + std::to_string(n));
    if (static_cast<long long>(tokens.size()) != n + 1) {
        throw ParseError("expected " + std::to_string(n) + " labels after n, got " +
                         std::to_string(tokens.size() - 1));
    }
    return detail::labels_from_tokens(tokens, 1, n);
}

// Parses a bare label list such as "3 5 1 4 2"; n is the number of labels.
inline Permutation parse_label_list(std::string_view text) {
    const auto tokens = detail::tokenize(text);
    if (tokens.empty()) throw ParseError("empty label list");
    return detail::labels_from_tokens(tokens, 0, static_cast<long long>(tokens.size()));
}

inline std::string format_permutation(const Permutation& p) {
    std::string out = std::to_string(p.size()) + "\n";
    for (int k = 1; k <= p.size(); ++k) {
        if (k > 1) out += ' ';
        out += std::to_string(p.at_bottom(k));
    }
    out += '\n';
    return out;
}

// Segments i and j cross iff the pair is inverted.
inline bool crosses(const Permutation& p, int i, int j) {
    const int pi = p.pos(i);
    const int pj = p.pos(j);
    if (i == j) throw std::invalid_argument("crosses: a segment is not compared with itself");
    return (i < j) != (pi < pj);
}

inline Graph adjacency(const Permutation& p) {
    std::vector<std::pair<int, int>> edges;
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (p.pos(i) > p.pos(j)) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

// A scanline in gap coordinates: it passes between top positions a and a+1 and
// between bottom positions b and b+1.
struct Scanline {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Scanline&, const Scanline&) = default;
};

// Componentwise order; comparable scanlines do not cross.
inline bool precedes(const Scanline& s, const Scanline& t) { return s.a <= t.a && s.b <= t.b; }

inline bool compatible(const Scanline& s, const Scanline& t) { return precedes(s, t) || precedes(t, s); }

inline std::vector<Scanline> all_scanlines(int n) {
    std::vector<Scanline> out;
    out.reserve(static_cast<size_t>(n + 1) * (n + 1));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) out.push_back({a, b});
    return out;
}

enum class Side { Left, Right, Crossing };

inline Side segment_side(const Permutation& p, const Scanline& s, int k) {
    const int n = p.size();
    if (s.a < 0 || s.a > n || s.b < 0 || s.b > n) {
        throw std::out_of_range("scanline gap outside 0.." + std::to_string(n));
    }
    const int bk = p.pos(k);
    if (k <= s.a && bk <= s.b) return Side::Left;
    if (k > s.a && bk > s.b) return Side::Right;
    return Side::Crossing;
}

struct Piece {
    Scanline lo;
    Scanline hi;

    bool well_formed() const { return precedes(lo, hi); }

    friend auto operator<=>(const Piece&, const Piece&) = default;
};

inline std::vector<int> inside(const Permutation& p, const Piece& pc) {
    if (!pc.well_formed()) throw std::invalid_argument("piece borders are not ordered");
    std::vector<int> out;
    for (int k = pc.lo.a + 1; k <= pc.hi.a; ++k) {
        const int bk = p.pos(k);
        if (bk > pc.lo.b && bk <= pc.hi.b) out.push_back(k);
    }
    return out;
}

// O(1) rectangle counts over the points (k, pos(k)).
class DominanceCounts {
public:
    explicit DominanceCounts(const Permutation& p) : n_(p.size()), table_(static_cast<size_t>(n_ + 1) * (n_ + 1), 0) {
        for (int a = 1; a <= n_; ++a) {
            const int bk = p.pos(a);
            for (int b = 0; b <= n_; ++b) {
                at(a, b) = at(a - 1, b) + (bk <= b ? 1 : 0);
            }
        }
    }

    // Number of segments Left of scanline (a, b).
    int left_of(int a, int b) const { return table_[idx(a, b)]; }
    int left_of(const Scanline& s) const { return left_of(s.a, s.b); }

    int inside(const Piece& pc) const {
        return left_of(pc.hi.a, pc.hi.b) - left_of(pc.lo.a, pc.hi.b) - left_of(pc.hi.a, pc.lo.b) +
               left_of(pc.lo.a, pc.lo.b);
    }

private:
    size_t idx(int a, int b) const { return static_cast<size_t>(a) * (n_ + 1) + b; }
    int& at(int a, int b) { return table_[idx(a, b)]; }

    int n_;
    std::vector<int> table_;
};

enum class Color : std::uint8_t { Uncolored, Black, White };

// Per-vertex colors, indexed by label.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int n) : colors_(static_cast<size_t>(n), Color::Uncolored) {}

    static Coloring from_sets(int n, const std::vector<int>& black, const std::vector<int>& white) {
        Coloring c(n);
        for (int v : black) c.set(v, Color::Black);
        for (int v : white) {
            if (c[v] == Color::Black) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " listed as both black and white");
            }
            c.set(v, Color::White);
        }
        return c;
    }

    int size() const { return static_cast<int>(colors_.size()); }

    Color operator[](int v) const {
        check(v);
        return colors_[v - 1];
    }

    void set(int v, Color c) {
        check(v);
        colors_[v - 1] = c;
    }

    int count(Color c) const { return static_cast<int>(std::count(colors_.begin(), colors_.end(), c)); }

    std::vector<int> labels(Color c) const {
        std::vector<int> out;
        for (int v = 1; v <= size(); ++v)
            if (colors_[v - 1] == c) out.push_back(v);
        return out;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    void check(int v) const {
        if (v < 1 || v > size()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(size()));
        }
    }

    std::vector<Color> colors_;
};

// Sorted, pairwise comparable scanlines.
using ScanlineChain = std::vector<Scanline>;

inline bool is_valid_chain(const ScanlineChain& chain) {
    for (size_t i = 1; i < chain.size(); ++i) {
        if (!(precedes(chain[i - 1], chain[i]) && chain[i - 1] != chain[i])) return false;
    }
    return true;
}

// Segments crossing at least one scanline of the chain, ascending.
inline std::vector<int> crossing_set(const Permutation& p, const ScanlineChain& chain) {
    std::vector<int> out;
    for (int k = 1; k <= p.size(); ++k) {
        for (const auto& s : chain) {
            if (segment_side(p, s, k) == Side::Crossing) {
                out.push_back(k);
                break;
            }
        }
    }
    return out;
}

struct ColoringCheck {
    bool valid = true;
    int black = 0;
    int white = 0;
    std::optional<std::pair<int, int>> conflict; // first black-white edge, smaller label first
};

inline ColoringCheck verify_coloring(const Permutation& p, const Coloring& c) {
    if (c.size() != p.size()) {
        throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " entries, permutation has " +
                                    std::to_string(p.size()));
    }
    ColoringCheck out;
    out.black = c.count(Color::Black);
    out.white = c.count(Color::White);
    for (int i = 1; i <= p.size() && out.valid; ++i) {
        for (int j = i + 1; j <= p.size(); ++j) {
            const Color ci = c[i];
            const Color cj = c[j];
            if (ci == Color::Uncolored || cj == Color::Uncolored || ci == cj) continue;
            if (crosses(p, i, j)) {
                out.valid = false;
                out.conflict = std::make_pair(i, j);
                break;
            }
        }
    }
    return out;
}

// Connected components of the subgraph induced by `active`, each sorted, ordered
// by their smallest label (= leftmost top position).
inline std::vector<std::vector<int>> components(const Permutation& p, const std::vector<int>& active) {
    const int n = p.size();
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    for (int v : active) {
        if (v < 1 || v > n) throw std::out_of_range("active vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= n; ++start) {
        if (!in[start] || seen[start]) continue;
        std::vector<int> comp{start};
        seen[start] = 1;
        for (size_t head = 0; head < comp.size(); ++head) {
            const int u = comp[head];
            for (int v = 1; v <= n; ++v) {
                if (in[v] && !seen[v] && v != u && crosses(p, u, v)) {
                    seen[v] = 1;
                    comp.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Builds the chain that separates consecutive components of the colored
// vertices. Returns nullopt when the coloring is invalid.
inline std::optional<ScanlineChain> separating_chain(const Permutation& p, const Coloring& c) {
    if (!verify_coloring(p, c).valid) return std::nullopt;
    std::vector<int> colored;
    for (int v = 1; v <= p.size(); ++v)
        if (c[v] != Color::Uncolored) colored.push_back(v);
    const auto comps = components(p, colored);
    ScanlineChain chain;
    int max_top = 0;
    int max_bottom = 0;
    for (size_t i = 0; i + 1 < comps.size(); ++i) {
        for (int v : comps[i]) {
            max_top = std::max(max_top, v);
            max_bottom = std::max(max_bottom, p.pos(v));
        }
        const Scanline s{max_top, max_bottom};
        if (chain.empty() || chain.back() != s) chain.push_back(s);
    }
    return chain;
}

} // namespace bwperm
