#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "bwperm/bwperm.hpp"
#include "bwperm/crosscheck.hpp"

namespace bwperm::cli {
namespace {

constexpr int kUsageError = 2;

struct InputOptions {
    std::string perm;
    std::string input;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* perm = cmd->add_option("--perm", in.perm, "bottom label order, e.g. \"3 5 1 4 2\"");
    auto* file = cmd->add_option("--input", in.input, "permutation file (\"-\" for stdin)");
    perm->excludes(file);
    file->excludes(perm);
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Permutation load(const InputOptions& in) {
    if (!in.perm.empty()) return parse_label_list(in.perm);
    if (!in.input.empty()) return parse_permutation(read_file(in.input));
    throw ParseError("one of --perm or --input is required");
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Black-and-white coloring of permutation graphs"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for the chain solver")->check(CLI::PositiveNumber);

    InputOptions in;
    int black = 0;
    int white = 0;

    auto* decide_cmd = app.add_subcommand("decide", "print YES if b black and w white vertices fit");
    add_input_options(decide_cmd, in);
    decide_cmd->add_option("-b", black, "black count")->required()->check(CLI::NonNegativeNumber);
    decide_cmd->add_option("-w", white, "white count")->required()->check(CLI::NonNegativeNumber);

    std::string path = "chain";
    auto* frontier_cmd = app.add_subcommand("frontier", "print max white count per black count (TSV)");
    add_input_options(frontier_cmd, in);
    frontier_cmd->add_option("--path", path, "solve path")->check(CLI::IsMember({"chain", "piece"}));

    auto* witness_cmd = app.add_subcommand("witness", "print a coloring with exactly b black and w white vertices");
    add_input_options(witness_cmd, in);
    witness_cmd->add_option("-b", black, "black count")->required()->check(CLI::NonNegativeNumber);
    witness_cmd->add_option("-w", white, "white count")->required()->check(CLI::NonNegativeNumber);

    std::string coloring_path;
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring file against a permutation");
    add_input_options(verify_cmd, in);
    verify_cmd->add_option("--coloring", coloring_path, "coloring file")->required();

    int n = 0;
    std::uint64_t seed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "print a random permutation");
    gen_cmd->add_option("-n", n, "size")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", seed, "64-bit seed");

    int trials = 100;
    auto* cross_cmd = app.add_subcommand("crosscheck", "compare the solve paths with the exhaustive oracle");
    cross_cmd->add_option("-n", n, "size")->required()->check(CLI::Range(1, kOracleGuard));
    cross_cmd->add_option("--trials", trials, "number of instances")->check(CLI::NonNegativeNumber);
    cross_cmd->add_option("--seed", seed, "64-bit seed");

    auto* bench_cmd = app.add_subcommand("bench", "time each solve path");
    bench_cmd->add_option("-n", n, "size")->required()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--trials", trials, "number of instances")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", seed, "64-bit seed");

    auto* render_cmd = app.add_subcommand("render", "draw the diagram as SVG");
    add_input_options(render_cmd, in);
    render_cmd->add_option("--coloring", coloring_path, "coloring file (witness format)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsageError;
    }

    const SolveOptions opts{threads};
    try {
        if (*decide_cmd) {
            const Permutation p = load(in);
            out << (ChainSolver(p, opts).decide(black, white) ? "YES" : "NO") << "\n";
        } else if (*frontier_cmd) {
            const Permutation p = load(in);
            if (path == "piece") {
                PieceSolver solver(p);
                out << format_frontier_tsv(solver.table(solver.extreme_piece()));
            } else {
                out << format_frontier_tsv(ChainSolver(p, opts).frontier());
            }
        } else if (*witness_cmd) {
            const Permutation p = load(in);
            const auto w = ChainSolver(p, opts).witness(black, white);
            out << (w ? format_witness(*w) : std::string("NONE\n"));
        } else if (*verify_cmd) {
            const Permutation p = load(in);
            const auto file = parse_coloring(read_file(coloring_path), p.size());
            const auto check = verify_coloring(p, file.coloring);
            if (check.valid) {
                out << "VALID b=" << check.black << " w=" << check.white << "\n";
            } else {
                out << "INVALID: edge " << check.conflict->first << "-" << check.conflict->second << "\n";
            }
        } else if (*gen_cmd) {
            out << format_permutation(generate_random({n, seed}));
        } else if (*cross_cmd) {
            const auto report = crosscheck(n, trials, seed,
                                           [&](const Permutation& p) { return solvers_disagree(p, opts); });
            if (report.failed_trial) {
                const Permutation& small = *report.minimized;
                out << "MISMATCH on trial " << *report.failed_trial << "\n"
                    << "original instance:\n" << format_permutation(*report.failing)
                    << "minimized instance:\n" << format_permutation(small)
                    << "chain frontier:\n" << format_frontier_tsv(chain_frontier(small))
                    << "oracle frontier:\n" << format_frontier_tsv(oracle_frontier(adjacency(small)));
                return 1;
            }
            out << "OK " << report.passed << "/" << report.trials << "\n";
        } else if (*bench_cmd) {
            struct Timing {
                std::string path;
                std::vector<double> ms;
            };
            std::vector<Timing> timings{{"chain", {}}};
            const bool with_piece = n <= 16;
            const bool with_oracle = n <= kOracleGuard;
            if (with_piece) timings.push_back({"piece", {}});
            if (with_oracle) timings.push_back({"oracle", {}});
            SplitMix64 seeds(seed);
            for (int t = 0; t < trials; ++t) {
                const Permutation p = generate_random({n, seeds.next()});
                auto start = std::chrono::steady_clock::now();
                (void)ChainSolver(p, opts).frontier();
                timings[0].ms.push_back(ms_since(start));
                size_t slot = 1;
                if (with_piece) {
                    start = std::chrono::steady_clock::now();
                    PieceSolver solver(p);
                    (void)solver.table(solver.extreme_piece());
                    timings[slot++].ms.push_back(ms_since(start));
                }
                if (with_oracle) {
                    start = std::chrono::steady_clock::now();
                    (void)oracle_frontier(adjacency(p));
                    timings[slot++].ms.push_back(ms_since(start));
                }
            }
            out << "path\tn\ttrials\tmin_ms\tmean_ms\tmax_ms\n";
            out.setf(std::ios::fixed);
            out.precision(3);
            for (const auto& t : timings) {
                const auto [lo, hi] = std::minmax_element(t.ms.begin(), t.ms.end());
                const double mean = std::accumulate(t.ms.begin(), t.ms.end(), 0.0) / t.ms.size();
                out << t.path << "\t" << n << "\t" << trials << "\t" << *lo << "\t" << mean << "\t" << *hi << "\n";
            }
        } else if (*render_cmd) {
            const Permutation p = load(in);
            if (coloring_path.empty()) {
                out << render_diagram(p);
            } else {
                const auto file = parse_coloring(read_file(coloring_path), p.size());
                out << render_diagram(p, file.coloring, file.chain);
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return 0;
}

} // namespace bwperm::cli
