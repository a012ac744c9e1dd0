#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "test_support.hpp"

namespace bwperm {
namespace {

using testing::figure_instance;

std::string read_golden(const std::string& name) {
    std::ifstream f(std::string(BWPERM_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Minimal well-formedness check: balanced, properly nested tags and quoted
// attributes. Enough for the flat documents the renderer emits.
bool well_formed_xml(const std::string& doc) {
    std::vector<std::string> stack;
    size_t i = 0;
    bool saw_root = false;
    while ((i = doc.find('<', i)) != std::string::npos) {
        const size_t close = doc.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = doc.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?') {
            if (tag.back() != '?') return false;
            continue;
        }
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        const bool self_closing = tag.back() == '/';
        const std::string name = tag.substr(0, tag.find_first_of(" /"));
        if (stack.empty()) {
            if (saw_root) return false;
            saw_root = true;
        }
        if (!self_closing) stack.push_back(name);
    }
    return saw_root && stack.empty();
}

size_t count_of(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

TEST(GenerateRandom, Deterministic) {
    EXPECT_EQ(generate_random({20, 1234}), generate_random({20, 1234}));
    EXPECT_NE(generate_random({20, 1234}), generate_random({20, 1235}));
    EXPECT_EQ(generate_random({1, 99}), Permutation({1}));
    EXPECT_THROW(generate_random({0, 1}), std::invalid_argument);
}

TEST(GenerateRandom, GoldenInstance) {
    EXPECT_EQ(format_permutation(generate_random({8, 42})), read_golden("gen_n8_seed42.txt"));
}

TEST(GenerateRandom, AlwaysBijective) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 1 + static_cast<int>(seed % 40);
        const Permutation p = generate_random({n, seed});
        for (int k = 1; k <= n; ++k) ASSERT_EQ(p.pos(p.at_bottom(k)), k);
        ASSERT_EQ(parse_permutation(format_permutation(p)), p);
    }
}

TEST(SplitMix64, ReferenceSequence) {
    // first outputs for seed 0 as published with the generator
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
}

TEST(ExportEdges, Examples) {
    EXPECT_EQ(export_edges(figure_instance()), "5 6\n1 3\n1 5\n2 3\n2 4\n2 5\n4 5\n");
    EXPECT_EQ(export_edges(Permutation::identity(3)), "3 0\n");
    EXPECT_EQ(export_edges(Permutation::reversal(3)), "3 3\n1 2\n1 3\n2 3\n");
}

TEST(ExportEdges, RoundTripsThroughEdgeListParser) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation p = testing::random_permutation(rng, 1 + trial % 20);
        ASSERT_EQ(parse_edge_list(export_edges(p)), adjacency(p));
    }
}

TEST(FrontierTsv, Format) {
    EXPECT_EQ(format_frontier_tsv(Frontier({2, 1, 0})), "b\tmax_w\n0\t2\n1\t1\n2\t0\n");
}

TEST(ColoringText, FormatAndParse) {
    const Coloring c = Coloring::from_sets(5, {1, 3}, {4});
    const ScanlineChain chain{{1, 3}, {3, 3}};
    const std::string text = format_coloring(c, chain);
    EXPECT_EQ(text, "black: 1 3\nwhite: 4\nuncolored: 2 5\nscanlines: (1,3) (3,3)\n");
    const auto parsed = parse_coloring(text, 5);
    EXPECT_EQ(parsed.coloring, c);
    ASSERT_TRUE(parsed.chain.has_value());
    EXPECT_EQ(*parsed.chain, chain);

    EXPECT_EQ(format_coloring(Coloring(2), {}), "black:\nwhite:\nuncolored: 1 2\nscanlines:\n");
    const auto minimal = parse_coloring("# partial\nwhite: 2\n", 3);
    EXPECT_EQ(minimal.coloring, Coloring::from_sets(3, {}, {2}));
    EXPECT_FALSE(minimal.chain.has_value());

    EXPECT_THROW(parse_coloring("black: 1\nwhite: 1\n", 3), ParseError);
    EXPECT_THROW(parse_coloring("black: 4\n", 3), ParseError);
    EXPECT_THROW(parse_coloring("red: 1\n", 3), ParseError);
    EXPECT_THROW(parse_coloring("black 1\n", 3), ParseError);
    EXPECT_THROW(parse_coloring("scanlines: (1,2) (3\n", 3), ParseError);
}

TEST(RenderDiagram, FigureWithoutColoring) {
    const std::string svg = render_diagram(figure_instance());
    EXPECT_TRUE(well_formed_xml(svg));
    EXPECT_EQ(count_of(svg, "class=\"segment plain\""), 5u);
    EXPECT_EQ(count_of(svg, "class=\"rail\""), 2u);
    EXPECT_EQ(count_of(svg, "stroke-dasharray"), 0u);
    // segment 3 goes from top position 3 to bottom position 1
    EXPECT_NE(svg.find("data-label=\"3\" x1=\"120\" y1=\"40\" x2=\"40\" y2=\"160\""), std::string::npos);
}

TEST(RenderDiagram, Singleton) {
    const std::string svg = render_diagram(Permutation({1}));
    EXPECT_TRUE(well_formed_xml(svg));
    EXPECT_EQ(count_of(svg, "class=\"segment"), 1u);
}

TEST(RenderDiagram, Witness) {
    const Permutation p = figure_instance();
    const auto w = witness(p, 2, 1);
    ASSERT_TRUE(w.has_value());
    const std::string svg = render_diagram(p, w->coloring, w->chain);
    EXPECT_TRUE(well_formed_xml(svg));
    EXPECT_EQ(count_of(svg, "class=\"segment black\""), 2u);
    EXPECT_EQ(count_of(svg, "class=\"segment white\""), 1u);
    EXPECT_EQ(count_of(svg, "class=\"segment uncolored\""), 2u);
    EXPECT_GE(count_of(svg, "stroke-dasharray"), 1u);
    EXPECT_EQ(count_of(svg, "class=\"scanline\""), w->chain.size());
}

TEST(RenderDiagram, TotalOnRandomInputs) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const Permutation p = testing::random_permutation(rng, 1 + trial % 15);
        const ChainSolver solver(p);
        const int b = static_cast<int>(rng() % (p.size() + 1));
        const auto w = solver.witness(b, solver.frontier().max_white(b));
        ASSERT_TRUE(w.has_value());
        ASSERT_TRUE(well_formed_xml(render_diagram(p, w->coloring, w->chain)));
    }
    EXPECT_THROW(render_diagram(figure_instance(), Coloring(3)), std::invalid_argument);
}

TEST(XmlChecker, RejectsBrokenDocuments) {
    EXPECT_FALSE(well_formed_xml("<svg><line/>"));
    EXPECT_FALSE(well_formed_xml("<svg><g></svg></g>"));
    EXPECT_FALSE(well_formed_xml("<svg a=\"1></svg>"));
    EXPECT_TRUE(well_formed_xml("<svg><g><line/></g></svg>"));
}

} // namespace
} // namespace bwperm
