#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bwperm/chain_solver.hpp"
#include "bwperm/frontier.hpp"
#include "bwperm/model.hpp"
#include "bwperm/oracle.hpp"
#include "bwperm/text.hpp"

namespace bwperm {

// splitmix64 with the published constants.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

struct GeneratorConfig {
    int n = 1;
    std::uint64_t seed = 0;
};

// Fisher-Yates from the top index down: for i = n-1 .. 1, swap slot i with
// slot next() % (i + 1), starting from the identity 1..n.
inline Permutation generate_random(const GeneratorConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("generator needs n >= 1, got " + std::to_string(cfg.n));
    std::vector<int> bottom(static_cast<size_t>(cfg.n));
    for (int k = 0; k < cfg.n; ++k) bottom[k] = k + 1;
    SplitMix64 rng(cfg.seed);
    for (int i = cfg.n - 1; i >= 1; --i) {
        const auto j = static_cast<size_t>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(bottom[i], bottom[j]);
    }
    return Permutation(std::move(bottom));
}

inline std::string export_edges(const Permutation& p) { return format_edge_list(adjacency(p)); }

inline std::string format_frontier_tsv(const Frontier& f) {
    std::string out = "b\tmax_w\n";
    for (int b = 0; b <= f.scope(); ++b) out += std::to_string(b) + "\t" + std::to_string(f.max_white(b)) + "\n";
    return out;
}

namespace detail {

inline std::string join_labels(const std::vector<int>& labels) {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(labels[i]);
    }
    return out;
}

inline std::string line_with(std::string_view key, const std::string& rest) {
    std::string out(key);
    out += ':';
    if (!rest.empty()) out += " " + rest;
    out += '\n';
    return out;
}

} // namespace detail

inline std::string format_coloring(const Coloring& c, const ScanlineChain& chain) {
    std::string scan;
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) scan += ' ';
        scan += "(" + std::to_string(chain[i].a) + "," + std::to_string(chain[i].b) + ")";
    }
    return detail::line_with("black", detail::join_labels(c.labels(Color::Black))) +
           detail::line_with("white", detail::join_labels(c.labels(Color::White))) +
           detail::line_with("uncolored", detail::join_labels(c.labels(Color::Uncolored))) +
           detail::line_with("scanlines", scan);
}

inline std::string format_witness(const Witness& w) { return format_coloring(w.coloring, w.chain); }

struct ColoringFile {
    Coloring coloring;
    std::optional<ScanlineChain> chain;
};

// Reads the witness text format. Vertices not listed are uncolored; the
// "uncolored" and "scanlines" lines are optional.
inline ColoringFile parse_coloring(std::string_view text, int n) {
    ColoringFile out{Coloring(n), std::nullopt};
    std::vector<char> listed(static_cast<size_t>(n) + 1, 0);
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto colon = line.find(':');
        const std::string here = "coloring line " + std::to_string(line_no);
        if (colon == std::string::npos) throw ParseError(here + ": expected '<key>: <values>'");
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        const std::string rest = line.substr(colon + 1);

        if (key == "scanlines") {
            ScanlineChain chain;
            std::string cleaned = rest;
            for (char& ch : cleaned)
                if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
            const auto tokens = detail::tokenize(cleaned);
            if (tokens.size() % 2 != 0) throw ParseError(here + ": scanlines need (a,b) pairs");
            for (size_t i = 0; i < tokens.size(); i += 2) {
                const long long a = detail::to_integer(tokens[i]);
                const long long b = detail::to_integer(tokens[i + 1]);
                if (a < 0 || a > n || b < 0 || b > n) {
                    throw ParseError(here + ": scanline gap outside 0.." + std::to_string(n));
                }
                chain.push_back({static_cast<int>(a), static_cast<int>(b)});
            }
            out.chain = std::move(chain);
            continue;
        }

        Color color;
        if (key == "black") color = Color::Black;
        else if (key == "white") color = Color::White;
        else if (key == "uncolored") color = Color::Uncolored;
        else throw ParseError(here + ": unknown key '" + key + "'");

        for (const auto& t : detail::tokenize(rest)) {
            const long long v = detail::to_integer(t);
            if (v < 1 || v > n) {
                throw ParseError(here + ": vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            }
            if (listed[v]) throw ParseError(here + ": vertex " + std::to_string(v) + " listed twice");
            listed[v] = 1;
            out.coloring.set(static_cast<int>(v), color);
        }
    }
    return out;
}

// SVG drawing of the diagram: top rail above, bottom rail below, one segment
// per vertex, dashed scanlines through gap midpoints.
inline std::string render_diagram(const Permutation& p, const std::optional<Coloring>& coloring = std::nullopt,
                                  const std::optional<ScanlineChain>& chain = std::nullopt) {
    constexpr int step = 40;
    constexpr int top = 40;
    constexpr int bottom = 160;
    const int n = p.size();
    if (coloring && coloring->size() != n) throw std::invalid_argument("coloring size does not match permutation");
    const int width = step * (n + 1);
    auto x_of = [&](int position) { return step * position; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"200\""
        << " viewBox=\"0 0 " << width << " 200\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"200\" fill=\"#c8d2dc\"/>\n"
        << "  <line class=\"rail\" x1=\"" << step / 2 << "\" y1=\"" << top << "\" x2=\"" << width - step / 2
        << "\" y2=\"" << top << "\" stroke=\"#404040\" stroke-width=\"1\"/>\n"
        << "  <line class=\"rail\" x1=\"" << step / 2 << "\" y1=\"" << bottom << "\" x2=\"" << width - step / 2
        << "\" y2=\"" << bottom << "\" stroke=\"#404040\" stroke-width=\"1\"/>\n";

    for (int k = 1; k <= n; ++k) {
        std::string cls = "plain";
        std::string stroke = "#202020";
        if (coloring) {
            switch ((*coloring)[k]) {
            case Color::Black: cls = "black"; stroke = "#000000"; break;
            case Color::White: cls = "white"; stroke = "#ffffff"; break;
            case Color::Uncolored: cls = "uncolored"; stroke = "#8c8c8c"; break;
            }
        }
        svg << "  <line class=\"segment " << cls << "\" data-label=\"" << k << "\" x1=\"" << x_of(k) << "\" y1=\""
            << top << "\" x2=\"" << x_of(p.pos(k)) << "\" y2=\"" << bottom << "\" stroke=\"" << stroke
            << "\" stroke-width=\"3\"/>\n";
        svg << "  <text x=\"" << x_of(k) - 4 << "\" y=\"" << top - 8 << "\" font-size=\"12\">" << k << "</text>\n";
        svg << "  <text x=\"" << x_of(k) - 4 << "\" y=\"" << bottom + 18 << "\" font-size=\"12\">" << p.at_bottom(k)
            << "</text>\n";
    }
    if (chain) {
        for (const auto& s : *chain) {
            svg << "  <line class=\"scanline\" x1=\"" << x_of(s.a) + step / 2 << "\" y1=\"" << top
                << "\" x2=\"" << x_of(s.b) + step / 2 << "\" y2=\"" << bottom
                << "\" stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace bwperm
