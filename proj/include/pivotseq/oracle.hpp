#ifndef PIVOTSEQ_ORACLE_HPP
#define PIVOTSEQ_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pivotseq/decompose.hpp"
#include "pivotseq/game.hpp"
#include "pivotseq/lp.hpp"

namespace pivotseq {

// Brute-force ground truth on tiny instances. Enumeration is factorial, so
// the caps are hard: the effective cap never exceeds 6 and defaults to 4;
// larger inputs are refused with InstanceTooLargeError.

// All equal-size (R, C) pairs, the empty pair included, whose basic pair
// passes every optimality condition.
std::vector<PartitionCertificate> enumerate_certificates(const CanonicalLP& lp, int cap = 4);

// Depth-first search over ordered pivot lists with distinct rows and
// columns, pruning prefixes that fail the per-level checks; returns every
// sequence whose final level is optimal for the full pair (the empty
// sequence included when the origin is optimal).
std::vector<PivotSequence> enumerate_short_sequences(const CanonicalLP& lp, int cap = 4);

// All (R, C) with a nonsingular bordered matrix whose pair satisfies every
// optimality condition. All returned certificates share one gamma value
// (asserted).
std::vector<GameCertificate> enumerate_game_bases(const MatrixGame& game, int cap = 4);

struct EnumerationReport {
    std::string instance_id;
    int m = 0;
    int n = 0;
    std::vector<PartitionCertificate> certificates;
    std::vector<PivotSequence> sequences;
    std::int64_t wall_ms = 0;

    int certificate_count() const { return static_cast<int>(certificates.size()); }
    int sequence_count() const { return static_cast<int>(sequences.size()); }
};

EnumerationReport run_enumeration(const CanonicalLP& lp, const std::string& instance_id, int cap = 4);

} // namespace pivotseq

#endif
