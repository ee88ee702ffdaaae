#include "pivotseq/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pivotseq/errors.hpp"

namespace pivotseq {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

const Json& field(const Json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) {
        throw ParseError(std::string("field \"") + name + "\" must be an integer");
    }
    return v.get<int>();
}

Rational rational_from(const Json& v) {
    if (!v.is_string()) {
        throw ParseError("rationals must be strings");
    }
    return parse_rational(v.get<std::string>());
}

Json rationals_to_json(const RationalVector& values) {
    Json arr = Json::array();
    for (const auto& value : values) {
        arr.push_back(to_string(value));
    }
    return arr;
}

RationalVector rationals_from(const Json& arr, const char* what) {
    if (!arr.is_array()) {
        throw ParseError(std::string(what) + " must be an array");
    }
    RationalVector result;
    result.reserve(arr.size());
    for (const auto& v : arr) {
        result.push_back(rational_from(v));
    }
    return result;
}

Json matrix_to_json(const RationalMatrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.cols(); ++j) {
            row.push_back(to_string(a(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const Json& arr, int m, int n, const char* what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != m) {
        throw ParseError(std::string(what) + " must be an array of m rows");
    }
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(m) * n);
    for (const auto& row : arr) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ParseError(std::string(what) + " rows must have n entries");
        }
        for (const auto& v : row) {
            entries.push_back(rational_from(v));
        }
    }
    return RationalMatrix(m, n, std::move(entries));
}

// Index sets and pivots are 1-based on disk.
Json index_set_to_json(const IndexSet& s) {
    Json arr = Json::array();
    for (int v : s) {
        arr.push_back(v + 1);
    }
    return arr;
}

IndexSet index_set_from(const Json& arr, int bound, const char* what) {
    if (!arr.is_array()) {
        throw ParseError(std::string(what) + " must be an array");
    }
    IndexSet result;
    result.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer()) {
            throw ParseError(std::string(what) + " entries must be integers");
        }
        result.push_back(v.get<int>() - 1);
    }
    if (!is_index_set(result, bound)) {
        throw ParseError(std::string(what) + " must be ascending 1-based indices within range");
    }
    return result;
}

Json pivots_to_json(const PivotSequence& pivots) {
    Json arr = Json::array();
    for (const auto& [i, j] : pivots) {
        arr.push_back(Json::array({i + 1, j + 1}));
    }
    return arr;
}

PivotSequence pivots_from(const Json& arr, int m, int n) {
    if (!arr.is_array()) {
        throw ParseError("pivots must be an array of [row, col] pairs");
    }
    PivotSequence result;
    result.reserve(arr.size());
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw ParseError("pivots must be an array of [row, col] pairs");
        }
        const int i = p[0].get<int>() - 1;
        const int j = p[1].get<int>() - 1;
        if (i < 0 || i >= m || j < 0 || j >= n) {
            throw ParseError("pivot index out of range");
        }
        result.emplace_back(i, j);
    }
    return result;
}

std::string case_label(const std::optional<ReductionCase>& tag) {
    return tag.has_value() ? to_string(*tag) : "-";
}

std::optional<ReductionCase> case_from(const Json& v) {
    if (!v.is_string()) {
        throw ParseError("case tags must be strings");
    }
    const std::string s = v.get<std::string>();
    if (s == "-") {
        return std::nullopt;
    }
    if (s == "y_zero") {
        return ReductionCase::YZero;
    }
    if (s == "x_zero") {
        return ReductionCase::XZero;
    }
    if (s == "strict_positive") {
        return ReductionCase::StrictPositive;
    }
    throw ParseError("unknown case tag \"" + s + "\"");
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace

std::string instance_to_json(const Instance& instance) {
    Json j;
    j["m"] = instance.lp.rows();
    j["n"] = instance.lp.cols();
    j["A"] = matrix_to_json(instance.lp.A);
    j["b"] = rationals_to_json(instance.lp.b);
    j["c"] = rationals_to_json(instance.lp.c);
    if (instance.primal_witness.has_value()) {
        j["xstar"] = rationals_to_json(*instance.primal_witness);
    }
    if (instance.dual_witness.has_value()) {
        j["ystar"] = rationals_to_json(*instance.dual_witness);
    }
    if (instance.seed.has_value()) {
        j["seed"] = *instance.seed;
    }
    return dump(j);
}

Instance instance_from_json(const std::string& text) {
    const Json j = parse_json(text);
    const int m = int_field(j, "m");
    const int n = int_field(j, "n");
    if (m < 1 || n < 1) {
        throw ParseError("instance needs m >= 1 and n >= 1");
    }
    Instance instance;
    RationalMatrix A = matrix_from_json(field(j, "A"), m, n, "A");
    RationalVector b = rationals_from(field(j, "b"), "b");
    RationalVector c = rationals_from(field(j, "c"), "c");
    if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n) {
        throw ParseError("b/c lengths must match m/n");
    }
    instance.lp = CanonicalLP(std::move(A), std::move(b), std::move(c));
    if (j.contains("xstar")) {
        instance.primal_witness = rationals_from(j["xstar"], "xstar");
        if (instance.primal_witness->size() != static_cast<size_t>(n)) {
            throw ParseError("xstar length must be n");
        }
    }
    if (j.contains("ystar")) {
        instance.dual_witness = rationals_from(j["ystar"], "ystar");
        if (instance.dual_witness->size() != static_cast<size_t>(m)) {
            throw ParseError("ystar length must be m");
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            throw ParseError("seed must be an integer");
        }
        instance.seed = j["seed"].get<std::uint64_t>();
    }
    return instance;
}

std::string trace_to_json(const DecompositionTrace& trace) {
    Json j;
    j["m"] = trace.m;
    j["n"] = trace.n;
    j["r"] = trace.r;
    j["pivots"] = pivots_to_json(trace.pivots);
    Json levels = Json::array();
    for (size_t idx = 0; idx < trace.levels.size(); ++idx) {
        const TraceLevel& level = trace.levels[idx];
        Json lj;
        lj["k"] = static_cast<int>(idx) + 1;
        lj["R"] = index_set_to_json(level.rows);
        lj["C"] = index_set_to_json(level.cols);
        lj["x"] = rationals_to_json(level.x);
        lj["y"] = rationals_to_json(level.y);
        lj["objective"] = to_string(level.objective);
        lj["case"] = case_label(level.tag);
        lj["inner_iterations"] = level.inner_iterations;
        levels.push_back(std::move(lj));
    }
    j["levels"] = std::move(levels);
    return dump(j);
}

DecompositionTrace trace_from_json(const std::string& text) {
    const Json j = parse_json(text);
    DecompositionTrace trace;
    trace.m = int_field(j, "m");
    trace.n = int_field(j, "n");
    trace.r = int_field(j, "r");
    trace.pivots = pivots_from(field(j, "pivots"), trace.m, trace.n);
    const Json& levels = field(j, "levels");
    if (!levels.is_array() || static_cast<int>(levels.size()) != trace.r ||
        static_cast<int>(trace.pivots.size()) != trace.r) {
        throw ParseError("trace must carry r levels and r pivots");
    }
    for (const auto& lj : levels) {
        TraceLevel level;
        level.rows = index_set_from(field(lj, "R"), trace.m, "R");
        level.cols = index_set_from(field(lj, "C"), trace.n, "C");
        level.x = rationals_from(field(lj, "x"), "x");
        level.y = rationals_from(field(lj, "y"), "y");
        level.objective = rational_from(field(lj, "objective"));
        level.tag = case_from(field(lj, "case"));
        level.inner_iterations = int_field(lj, "inner_iterations");
        if (level.x.size() != level.cols.size() || level.y.size() != level.rows.size()) {
            throw ParseError("level vectors must match their index sets");
        }
        trace.levels.push_back(std::move(level));
    }
    return trace;
}

std::string game_trace_to_json(const GameTrace& trace) {
    Json j;
    j["m"] = trace.m;
    j["n"] = trace.n;
    j["r"] = trace.r;
    j["direction"] = to_string(trace.direction);
    j["gamma"] = to_string(trace.gamma);
    j["pivots"] = pivots_to_json(trace.pivots);
    Json levels = Json::array();
    for (size_t idx = 0; idx < trace.levels.size(); ++idx) {
        const GameTraceLevel& level = trace.levels[idx];
        Json lj;
        lj["k"] = static_cast<int>(idx) + 1;
        lj["R"] = index_set_to_json(level.rows);
        lj["C"] = index_set_to_json(level.cols);
        lj["u"] = rationals_to_json(level.u);
        lj["v"] = rationals_to_json(level.v);
        lj["gamma"] = to_string(level.gamma);
        lj["case"] = case_label(level.tag);
        lj["inner_iterations"] = level.inner_iterations;
        levels.push_back(std::move(lj));
    }
    j["levels"] = std::move(levels);
    return dump(j);
}

GameTrace game_trace_from_json(const std::string& text) {
    const Json j = parse_json(text);
    GameTrace trace;
    trace.m = int_field(j, "m");
    trace.n = int_field(j, "n");
    trace.r = int_field(j, "r");
    const Json& dir = field(j, "direction");
    if (!dir.is_string()) {
        throw ParseError("direction must be a string");
    }
    const std::string dir_s = dir.get<std::string>();
    if (dir_s == "decreasing") {
        trace.direction = GammaDirection::Decreasing;
    } else if (dir_s == "increasing") {
        trace.direction = GammaDirection::Increasing;
    } else {
        throw ParseError("unknown direction \"" + dir_s + "\"");
    }
    trace.gamma = rational_from(field(j, "gamma"));
    trace.pivots = pivots_from(field(j, "pivots"), trace.m, trace.n);
    const Json& levels = field(j, "levels");
    if (!levels.is_array() || static_cast<int>(levels.size()) != trace.r ||
        static_cast<int>(trace.pivots.size()) != trace.r) {
        throw ParseError("trace must carry r levels and r pivots");
    }
    for (const auto& lj : levels) {
        GameTraceLevel level;
        level.rows = index_set_from(field(lj, "R"), trace.m, "R");
        level.cols = index_set_from(field(lj, "C"), trace.n, "C");
        level.u = rationals_from(field(lj, "u"), "u");
        level.v = rationals_from(field(lj, "v"), "v");
        level.gamma = rational_from(field(lj, "gamma"));
        level.tag = case_from(field(lj, "case"));
        level.inner_iterations = int_field(lj, "inner_iterations");
        if (level.u.size() != level.cols.size() || level.v.size() != level.rows.size()) {
            throw ParseError("level vectors must match their index sets");
        }
        trace.levels.push_back(std::move(level));
    }
    return trace;
}

std::string report_to_json(const EnumerationReport& report) {
    Json j;
    j["instance"] = report.instance_id;
    j["m"] = report.m;
    j["n"] = report.n;
    j["certificate_count"] = report.certificate_count();
    j["sequence_count"] = report.sequence_count();
    j["wall_ms"] = report.wall_ms;
    Json certs = Json::array();
    for (const auto& cert : report.certificates) {
        Json cj;
        cj["R"] = index_set_to_json(cert.partition.row_support);
        cj["C"] = index_set_to_json(cert.partition.col_support);
        cj["x"] = rationals_to_json(cert.pair.x);
        cj["y"] = rationals_to_json(cert.pair.y);
        cj["objective"] = to_string(cert.objective);
        certs.push_back(std::move(cj));
    }
    j["certificates"] = std::move(certs);
    Json seqs = Json::array();
    for (const auto& sequence : report.sequences) {
        seqs.push_back(pivots_to_json(sequence));
    }
    j["sequences"] = std::move(seqs);
    return dump(j);
}

std::string report_summary_row(const EnumerationReport& report) {
    std::ostringstream out;
    out << report.instance_id << "," << report.m << "," << report.n << ","
        << report.certificate_count() << "," << report.sequence_count() << "," << report.wall_ms;
    return out.str();
}

RationalMatrix matrix_from_text(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        for (auto& ch : line) {
            if (ch == ',' || ch == ';' || ch == '\t') {
                ch = ' ';
            }
        }
        std::istringstream tokens(line);
        std::vector<Rational> row;
        std::string token;
        while (tokens >> token) {
            row.push_back(parse_rational(token));
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        throw ParseError("matrix text contains no entries");
    }
    return RationalMatrix::from_rows(rows);
}

MatrixGame game_from_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const Json j = parse_json(text);
        const int m = int_field(j, "m");
        const int n = int_field(j, "n");
        const char* key = j.contains("M") ? "M" : "A";
        return MatrixGame(matrix_from_json(field(j, key), m, n, key));
    }
    return MatrixGame(matrix_from_text(text));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open \"" + path + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open \"" + path + "\" for writing");
    }
    out << content;
    if (!out) {
        throw Error("failed writing \"" + path + "\"");
    }
}

} // namespace pivotseq
