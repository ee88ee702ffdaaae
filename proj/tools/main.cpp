#include <algorithm>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pivotseq/errors.hpp"
#include "pivotseq/io.hpp"
#include "pivotseq/oracle.hpp"
#include "pivotseq/simplex.hpp"

namespace {

using namespace pivotseq;

// Exit codes, also documented in the README and --help.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrimalInfeasible = 3;
constexpr int kExitUnbounded = 4;
constexpr int kExitVerifyFailed = 5;
constexpr int kExitDefect = 6;

std::string format_index_set(const IndexSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        out += std::to_string(s[i] + 1);
        if (i + 1 < s.size()) {
            out += ",";
        }
    }
    return out + "}";
}

std::string format_pivots(const PivotSequence& pivots) {
    std::string out;
    for (size_t i = 0; i < pivots.size(); ++i) {
        out += "(" + std::to_string(pivots[i].first + 1) + "," +
               std::to_string(pivots[i].second + 1) + ")";
        if (i + 1 < pivots.size()) {
            out += " ";
        }
    }
    return out.empty() ? "(none)" : out;
}

std::string format_vector(const RationalVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        out += to_string(v[i]);
        if (i + 1 < v.size()) {
            out += ", ";
        }
    }
    return out + ")";
}

struct Options {
    int m = 2;
    int n = 2;
    std::uint64_t seed = 1;
    int range = 9;
    int cap = 4;
    int count = 100;
    std::string input;
    std::string output;
    std::string trace_path;
    std::string direction = "dec";
    std::string step_sign = "pos";
    bool verbose = false;
};

StepSign parse_step_sign(const std::string& s) {
    return s == "neg" ? StepSign::Negative : StepSign::Positive;
}

GammaDirection parse_direction(const std::string& s) {
    return s == "inc" ? GammaDirection::Increasing : GammaDirection::Decreasing;
}

int status_exit(SolveStatus status) {
    switch (status) {
    case SolveStatus::Optimal:
        return kExitOk;
    case SolveStatus::PrimalInfeasible:
        return kExitPrimalInfeasible;
    case SolveStatus::DualInfeasible:
        return kExitUnbounded;
    }
    return kExitDefect;
}

int cmd_gen(const Options& opt) {
    const Instance instance = generate_instance(opt.m, opt.n, opt.seed, opt.range);
    if (opt.output.empty()) {
        std::cerr << "gen: --output is required (machine formats only go to files)\n";
        return kExitParse;
    }
    write_file(opt.output, instance_to_json(instance));
    std::cout << "wrote feasible-pair instance m=" << opt.m << " n=" << opt.n
              << " seed=" << opt.seed << " to " << opt.output << "\n";
    return kExitOk;
}

int cmd_solve(const Options& opt) {
    const Instance instance = instance_from_json(read_file(opt.input));
    const SolveOutcome outcome = solve_canonical(instance.lp, opt.verbose);
    if (opt.verbose) {
        for (const auto& line : outcome.pivot_log) {
            std::cout << line << "\n";
        }
    }
    std::cout << "status: " << to_string(outcome.status) << "\n";
    if (outcome.status != SolveStatus::Optimal) {
        return status_exit(outcome.status);
    }
    const PartitionCertificate& cert = *outcome.certificate;
    std::cout << "objective: " << to_string(cert.objective) << "\n";
    std::cout << "R+: " << format_index_set(cert.partition.row_support)
              << "  C+: " << format_index_set(cert.partition.col_support) << "\n";
    std::cout << "x: " << format_vector(cert.pair.x) << "  y: " << format_vector(cert.pair.y)
              << "\n";
    return kExitOk;
}

int cmd_decompose(const Options& opt) {
    const Instance instance = instance_from_json(read_file(opt.input));
    const SolveOutcome outcome = solve_canonical(instance.lp);
    std::cout << "status: " << to_string(outcome.status) << "\n";
    if (outcome.status != SolveStatus::Optimal) {
        return status_exit(outcome.status);
    }
    const DecompositionTrace trace =
        decompose(instance.lp, *outcome.certificate, parse_step_sign(opt.step_sign));
    const ReplayResult rep = replay(instance.lp, trace.pivots);
    if (!rep.ok || rep.trace.levels.size() != trace.levels.size()) {
        throw InternalInvariantError("replay failed to reproduce the decomposition");
    }
    for (size_t k = 0; k < trace.levels.size(); ++k) {
        if (rep.trace.levels[k].x != trace.levels[k].x ||
            rep.trace.levels[k].y != trace.levels[k].y ||
            rep.trace.levels[k].objective != trace.levels[k].objective) {
            throw InternalInvariantError("replay disagrees with the decomposition");
        }
    }

    std::cout << "r: " << trace.r << " (min(m,n) = " << std::min(trace.m, trace.n) << ")\n";
    std::cout << "pivots: " << format_pivots(trace.pivots) << "\n";
    for (size_t k = 0; k < trace.levels.size(); ++k) {
        const TraceLevel& level = trace.levels[k];
        std::cout << "level " << (k + 1) << ": R=" << format_index_set(level.rows)
                  << " C=" << format_index_set(level.cols)
                  << " objective=" << to_string(level.objective);
        if (level.tag.has_value()) {
            std::cout << " case=" << to_string(*level.tag)
                      << " inner=" << level.inner_iterations;
        }
        std::cout << "\n";
    }
    if (!opt.output.empty()) {
        write_file(opt.output, trace_to_json(trace));
        std::cout << "trace written to " << opt.output << "\n";
    }
    return kExitOk;
}

int cmd_game(const Options& opt) {
    const MatrixGame game = game_from_text(read_file(opt.input));
    const GameCertificate cert = solve_game(game);
    const GameTrace trace = game_decompose(game, cert, parse_direction(opt.direction));
    std::cout << "gamma: " << to_string(cert.gamma) << "\n";
    std::cout << "direction: " << to_string(trace.direction) << "\n";
    std::cout << "pivots: " << format_pivots(trace.pivots) << "\n";
    std::cout << "gamma sequence:";
    for (const auto& level : trace.levels) {
        std::cout << " " << to_string(level.gamma);
    }
    std::cout << "\n";
    if (opt.verbose) {
        for (size_t k = 0; k < trace.levels.size(); ++k) {
            const GameTraceLevel& level = trace.levels[k];
            std::cout << "level " << (k + 1) << ": R=" << format_index_set(level.rows)
                      << " C=" << format_index_set(level.cols) << " u=" << format_vector(level.u)
                      << " v=" << format_vector(level.v) << "\n";
        }
    }
    if (!opt.output.empty()) {
        write_file(opt.output, game_trace_to_json(trace));
        std::cout << "trace written to " << opt.output << "\n";
    }
    return kExitOk;
}

int check_trace_file(const Options& opt) {
    const Instance instance = instance_from_json(read_file(opt.input));
    const DecompositionTrace stored = trace_from_json(read_file(opt.trace_path));
    if (stored.m != instance.lp.rows() || stored.n != instance.lp.cols()) {
        std::cout << "FAIL: trace dimensions do not match the instance\n";
        return kExitVerifyFailed;
    }
    const ReplayResult rep = replay(instance.lp, stored.pivots);
    if (!rep.ok) {
        std::cout << "FAIL: pivot list breaks at level " << rep.fail_level << " ("
                  << (rep.failure == ReplayFailure::SingularBasis ? "singular basis"
                                                                  : "negative component")
                  << ")\n";
        return kExitVerifyFailed;
    }
    for (size_t k = 0; k < stored.levels.size(); ++k) {
        const TraceLevel& ours = rep.trace.levels[k];
        const TraceLevel& theirs = stored.levels[k];
        if (ours.rows != theirs.rows || ours.cols != theirs.cols || ours.x != theirs.x ||
            ours.y != theirs.y || ours.objective != theirs.objective) {
            std::cout << "FAIL: stored level " << (k + 1) << " disagrees with the replay\n";
            return kExitVerifyFailed;
        }
    }
    std::cout << "PASS: trace matches the replay at every level\n";
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    if (!opt.trace_path.empty()) {
        return check_trace_file(opt);
    }

    int failures = 0;
    int oracle_checked = 0;
    int max_r = 0;
    std::map<std::string, int> case_histogram;
    std::map<int, int> inner_histogram;
    Rng dims_rng(opt.seed);

    for (int t = 0; t < opt.count; ++t) {
        const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
        const int m = opt.m > 0 ? opt.m : static_cast<int>(dims_rng.next_int(1, 8));
        const int n = opt.n > 0 ? opt.n : static_cast<int>(dims_rng.next_int(1, 8));
        const Instance instance = generate_instance(m, n, seed, opt.range);
        auto complain = [&](const std::string& what) {
            ++failures;
            std::cout << "FAIL seed=" << seed << " m=" << m << " n=" << n << ": " << what << "\n";
        };
        try {
            const SolveOutcome outcome = solve_canonical(instance.lp);
            if (outcome.status != SolveStatus::Optimal) {
                complain("generated feasible pair reported " +
                         std::string(to_string(outcome.status)));
                continue;
            }
            const DecompositionTrace trace =
                decompose(instance.lp, *outcome.certificate, parse_step_sign(opt.step_sign));
            max_r = std::max(max_r, trace.r);
            if (trace.r > std::min(m, n)) {
                complain("trace length exceeds min(m,n)");
            }
            for (const auto& level : trace.levels) {
                if (level.tag.has_value()) {
                    ++case_histogram[to_string(*level.tag)];
                    ++inner_histogram[level.inner_iterations];
                }
            }
            const ReplayResult rep = replay(instance.lp, trace.pivots);
            bool same = rep.ok && rep.trace.levels.size() == trace.levels.size();
            for (size_t k = 0; same && k < trace.levels.size(); ++k) {
                same = rep.trace.levels[k].x == trace.levels[k].x &&
                       rep.trace.levels[k].y == trace.levels[k].y &&
                       rep.trace.levels[k].objective == trace.levels[k].objective;
            }
            if (!same) {
                complain("replay does not reproduce the decomposition");
            }
            if (m <= opt.cap && n <= opt.cap) {
                ++oracle_checked;
                const auto certificates = enumerate_certificates(instance.lp, opt.cap);
                if (certificates.empty()) {
                    complain("oracle found no certificate for a feasible pair");
                } else {
                    const Rational best = certificates.front().objective;
                    for (const auto& cert : certificates) {
                        if (cert.objective != best) {
                            complain("oracle certificates disagree on the objective");
                            break;
                        }
                    }
                    if (outcome.certificate->objective != best) {
                        complain("simplex objective differs from the oracle");
                    }
                }
                const auto sequences = enumerate_short_sequences(instance.lp, opt.cap);
                if (sequences.empty()) {
                    complain("oracle found no short sequence for a feasible pair");
                }
                if (std::find(sequences.begin(), sequences.end(), trace.pivots) ==
                    sequences.end()) {
                    complain("decomposition pivots missing from the oracle enumeration");
                }
            }
        } catch (const Error& e) {
            complain(e.what());
        }
    }

    std::cout << "verified " << opt.count << " instances (base seed " << opt.seed << ")\n";
    std::cout << "case tags:";
    for (const auto& [tag, count] : case_histogram) {
        std::cout << " " << tag << "=" << count;
    }
    std::cout << "\ninner iterations:";
    for (const auto& [iters, count] : inner_histogram) {
        std::cout << " " << iters << "->" << count;
    }
    std::cout << "\nmax r: " << max_r << "\noracle cross-checked: " << oracle_checked
              << " instances\n";
    if (failures > 0) {
        std::cout << "FAIL: " << failures << " failure(s)\n";
        return kExitVerifyFailed;
    }
    std::cout << "PASS\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for short pivot sequences of canonical primal-dual "
                 "pairs and monotone decompositions of matrix games"};
    app.require_subcommand(1);

    Options opt;
    opt.m = 0; // verify varies dimensions unless pinned
    opt.n = 0;

    auto* gen = app.add_subcommand("gen", "generate a feasible-pair instance file");
    gen->add_option("--m", opt.m, "rows")->check(CLI::PositiveNumber)->required();
    gen->add_option("--n", opt.n, "columns")->check(CLI::PositiveNumber)->required();
    gen->add_option("--seed", opt.seed, "generator seed");
    gen->add_option("--range", opt.range, "entry magnitude bound")->check(CLI::PositiveNumber);
    gen->add_option("--output", opt.output, "instance file to write")->required();

    auto* solve = app.add_subcommand("solve", "solve an instance and print its certificate");
    solve->add_option("--input", opt.input, "instance file")->required();
    solve->add_flag("--verbose", opt.verbose, "print the pivot log");

    auto* dec = app.add_subcommand("decompose", "solve, decompose and replay an instance");
    dec->add_option("--input", opt.input, "instance file")->required();
    dec->add_option("--output", opt.output, "trace file to write");
    dec->add_option("--step-sign", opt.step_sign, "ratio-test preference")
        ->check(CLI::IsMember({"pos", "neg"}));
    dec->add_flag("--verbose", opt.verbose, "verbose output");

    auto* game = app.add_subcommand("game", "solve a matrix game and build a monotone trace");
    game->add_option("--input", opt.input, "matrix file (delimited text or JSON)")->required();
    game->add_option("--direction", opt.direction, "gamma direction along the reduction")
        ->check(CLI::IsMember({"dec", "inc"}))
        ->required();
    game->add_option("--output", opt.output, "trace file to write");
    game->add_flag("--verbose", opt.verbose, "print per-level strategies");

    auto* verify = app.add_subcommand("verify", "sweep seeded instances or check a trace file");
    verify->add_option("--count", opt.count, "number of instances")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "base seed");
    verify->add_option("--m", opt.m, "fixed row count (default: vary 1..8)");
    verify->add_option("--n", opt.n, "fixed column count (default: vary 1..8)");
    verify->add_option("--cap", opt.cap, "oracle size cap")->check(CLI::Range(1, 6));
    verify->add_option("--range", opt.range, "entry magnitude bound")->check(CLI::PositiveNumber);
    verify->add_option("--step-sign", opt.step_sign, "ratio-test preference")
        ->check(CLI::IsMember({"pos", "neg"}));
    verify->add_option("--input", opt.input, "instance file (trace-check mode)");
    verify->add_option("--trace", opt.trace_path, "trace file to check against --input");
    verify->add_flag("--verbose", opt.verbose, "verbose output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitParse;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(opt);
        }
        if (solve->parsed()) {
            return cmd_solve(opt);
        }
        if (dec->parsed()) {
            return cmd_decompose(opt);
        }
        if (game->parsed()) {
            return cmd_game(opt);
        }
        if (verify->parsed()) {
            if (opt.trace_path.empty() != opt.input.empty()) {
                std::cerr << "verify: --input and --trace must be given together\n";
                return kExitParse;
            }
            return cmd_verify(opt);
        }
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitDefect;
    } catch (const IdentityViolatedError& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitDefect;
    } catch (const PartitionRepairFailedError& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitDefect;
    } catch (const CertificateAssemblyFailedError& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitDefect;
    } catch (const InnerLoopCapExceededError& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return kExitDefect;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
