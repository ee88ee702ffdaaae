#ifndef PIVOTSEQ_IO_HPP
#define PIVOTSEQ_IO_HPP

#include <string>

#include "pivotseq/decompose.hpp"
#include "pivotseq/game.hpp"
#include "pivotseq/lp.hpp"
#include "pivotseq/oracle.hpp"

namespace pivotseq {

// Structured text formats. Rationals travel as canonical "p/q" strings and
// every index is 1-based on disk; parse(serialize(v)) == v exactly, and
// serialize(parse(s)) == s for files this toolkit writes.

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string trace_to_json(const DecompositionTrace& trace);
DecompositionTrace trace_from_json(const std::string& text);

std::string game_trace_to_json(const GameTrace& trace);
GameTrace game_trace_from_json(const std::string& text);

std::string report_to_json(const EnumerationReport& report);
// "id,m,n,certificates,sequences,wall_ms"
std::string report_summary_row(const EnumerationReport& report);

// Rows of whitespace- or comma-separated rational literals.
RationalMatrix matrix_from_text(const std::string& text);

// Accepts either the delimited text form or a JSON object with an "M" field
// (the instance format carrying only the game matrix).
MatrixGame game_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pivotseq

#endif
