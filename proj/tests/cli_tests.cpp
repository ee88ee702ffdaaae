// Drives the installed binary end to end: exit codes, file round trips, and
// the human summaries the subcommands print.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "pivotseq/io.hpp"

namespace fs = std::filesystem;
using namespace pivotseq;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "[FAIL] " << what << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string g_cli;
fs::path g_dir;

RunResult run(const std::string& args) {
    const fs::path out_path = g_dir / "out.txt";
    const std::string command = g_cli + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = read_file(out_path.string());
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / "pivotseq_cli_tests";
    fs::remove_all(g_dir);
    fs::create_directories(g_dir);

    const std::string inst = (g_dir / "inst.json").string();
    const std::string inst2 = (g_dir / "inst2.json").string();

    // gen: deterministic per seed, parseable, witnesses present.
    {
        const RunResult a = run("gen --m 3 --n 4 --seed 9 --output " + inst);
        expect(a.exit_code == 0, "gen exits 0");
        const RunResult b = run("gen --m 3 --n 4 --seed 9 --output " + inst2);
        expect(b.exit_code == 0, "gen (second run) exits 0");
        expect(read_file(inst) == read_file(inst2), "gen is deterministic per seed");
        const Instance parsed = instance_from_json(read_file(inst));
        expect(parsed.lp.rows() == 3 && parsed.lp.cols() == 4, "generated instance parses");
        expect(parsed.primal_witness.has_value() && parsed.dual_witness.has_value(),
               "generated instance carries witnesses");
        expect(instance_to_json(parsed) == read_file(inst), "instance file round-trips bit-exactly");
    }

    // solve: optimal, infeasible and unbounded exit codes.
    {
        const RunResult ok = run("solve --input " + inst);
        expect(ok.exit_code == 0, "solve exits 0 on a feasible pair");
        expect(contains(ok.output, "status: optimal"), "solve prints the status");

        Instance infeasible;
        infeasible.lp = CanonicalLP(RationalMatrix(1, 1, {Rational(-1)}), {Rational(1)},
                                    {Rational(1)});
        const std::string path = (g_dir / "infeasible.json").string();
        write_file(path, instance_to_json(infeasible));
        const RunResult bad = run("solve --input " + path);
        expect(bad.exit_code == 3, "solve exits 3 on a primal-infeasible instance");
        expect(contains(bad.output, "primal infeasible"), "solve names the failing side");

        Instance unbounded;
        unbounded.lp = CanonicalLP(RationalMatrix(1, 1, {Rational(1)}), {Rational(0)},
                                   {Rational(-1)});
        const std::string upath = (g_dir / "unbounded.json").string();
        write_file(upath, instance_to_json(unbounded));
        const RunResult ub = run("solve --input " + upath);
        expect(ub.exit_code == 4, "solve exits 4 on an unbounded instance");
    }

    // decompose: worked 2x2 summary and trace file.
    const std::string trace_path = (g_dir / "trace.json").string();
    {
        Instance worked;
        worked.lp = CanonicalLP(
            RationalMatrix(2, 2, {Rational(2), Rational(1), Rational(1), Rational(2)}),
            {Rational(3), Rational(3)}, {Rational(3), Rational(3)});
        const std::string path = (g_dir / "worked.json").string();
        write_file(path, instance_to_json(worked));
        const RunResult res = run("decompose --input " + path + " --output " + trace_path);
        expect(res.exit_code == 0, "decompose exits 0");
        expect(contains(res.output, "r: 2"), "decompose prints r");
        expect(contains(res.output, "pivots: (2,1) (1,2)"), "decompose prints 1-based pivots");
        expect(contains(res.output, "objective=9"), "level-1 objective printed");
        expect(contains(res.output, "objective=6"), "level-2 objective printed");
        const DecompositionTrace trace = trace_from_json(read_file(trace_path));
        expect(trace.r == 2, "trace file parses");

        Instance origin;
        origin.lp = CanonicalLP(RationalMatrix(1, 1, {Rational(1)}), {Rational(-1)},
                                {Rational(1)});
        const std::string opath = (g_dir / "origin.json").string();
        write_file(opath, instance_to_json(origin));
        const RunResult res0 = run("decompose --input " + opath);
        expect(res0.exit_code == 0, "decompose exits 0 on an origin-optimal instance");
        expect(contains(res0.output, "r: 0"), "origin-optimal instance has r = 0");

        const RunResult bad = run("decompose --input " + (g_dir / "infeasible.json").string());
        expect(bad.exit_code == 3, "decompose exits 3 on infeasible input");
        expect(contains(bad.output, "primal infeasible"), "decompose prints a status line");
    }

    // game: matching pennies in both directions.
    {
        const std::string mpath = (g_dir / "pennies.txt").string();
        write_file(mpath, "1 -1\n-1 1\n");
        const RunResult dec = run("game --input " + mpath + " --direction dec");
        expect(dec.exit_code == 0, "game exits 0");
        expect(contains(dec.output, "gamma: 0"), "game prints gamma");
        expect(contains(dec.output, "gamma sequence: -1 0"), "decreasing gamma sequence");
        const RunResult inc = run("game --input " + mpath + " --direction inc --output " +
                                  (g_dir / "gametrace.json").string());
        expect(inc.exit_code == 0, "game (increasing) exits 0");
        expect(contains(inc.output, "gamma sequence: 1 0"), "increasing gamma sequence");
        const GameTrace gt = game_trace_from_json(read_file((g_dir / "gametrace.json").string()));
        expect(gt.levels.size() == 2, "game trace file parses");

        const RunResult missing = run("game --input " + mpath);
        expect(missing.exit_code == 2, "game without --direction exits 2");
    }

    // verify: sweep mode, trace-check mode, corrupted trace, cap refusal.
    {
        const RunResult sweep = run("verify --count 15 --seed 5 --cap 3");
        expect(sweep.exit_code == 0, "verify sweep exits 0");
        expect(contains(sweep.output, "PASS"), "verify sweep prints PASS");

        const std::string wpath = (g_dir / "worked.json").string();
        const RunResult check = run("verify --input " + wpath + " --trace " + trace_path);
        expect(check.exit_code == 0, "verify accepts a pristine trace");

        std::string corrupted = read_file(trace_path);
        const auto pos = corrupted.find("\"3\"");
        expect(pos != std::string::npos, "trace contains a replaceable value");
        corrupted.replace(pos, 3, "\"4\"");
        const std::string cpath = (g_dir / "corrupted.json").string();
        write_file(cpath, corrupted);
        const RunResult bad = run("verify --input " + wpath + " --trace " + cpath);
        expect(bad.exit_code == 5, "verify exits 5 on a corrupted trace");
        expect(contains(bad.output, "FAIL"), "verify reports the corruption");

        const RunResult cap = run("verify --count 1 --cap 9");
        expect(cap.exit_code == 2, "verify refuses an oversized cap");

        const RunResult lonely = run("verify --trace " + trace_path);
        expect(lonely.exit_code == 2, "verify requires --input with --trace");
    }

    // Flag hygiene: unknown flags and missing subcommands are rejected.
    {
        expect(run("decompose --input " + inst + " --bogus").exit_code == 2,
               "unknown flag exits 2");
        expect(run("").exit_code == 2, "missing subcommand exits 2");
        expect(run("gen --m 2 --n 2").exit_code != 0, "gen without --output fails");
    }

    if (failures == 0) {
        std::cout << "cli tests passed\n";
        return 0;
    }
    std::cerr << failures << " cli test failure(s)\n";
    return 1;
}
