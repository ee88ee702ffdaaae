#include "pivotseq/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "pivotseq/errors.hpp"
#include "pivotseq/linsolve.hpp"

namespace pivotseq {

namespace {

constexpr int kHardCap = 6;

void require_size(int m, int n, int cap) {
    const int effective = std::min(cap, kHardCap);
    if (m > effective || n > effective) {
        throw InstanceTooLargeError("instance exceeds the enumeration cap of " +
                                    std::to_string(effective));
    }
}

// All size-k ascending subsets of {0..bound-1}.
void for_each_subset(int bound, int k, const std::function<void(const IndexSet&)>& visit) {
    IndexSet subset(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            visit(subset);
            return;
        }
        for (int v = start; v <= bound - (k - depth); ++v) {
            subset[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

std::vector<PartitionCertificate> enumerate_certificates(const CanonicalLP& lp, int cap) {
    require_size(lp.rows(), lp.cols(), cap);
    std::vector<PartitionCertificate> found;

    const int limit = std::min(lp.rows(), lp.cols());
    for (int k = 0; k <= limit; ++k) {
        for_each_subset(lp.rows(), k, [&](const IndexSet& rows) {
            for_each_subset(lp.cols(), k, [&](const IndexSet& cols) {
                PartitionCertificate cert;
                cert.partition.row_support = rows;
                cert.partition.col_support = cols;
                if (k > 0) {
                    if (!is_nonsingular(lp.A.submatrix(rows, cols))) {
                        return;
                    }
                    cert.pair = basic_pair(lp, rows, cols);
                    cert.objective =
                        dot(restrict_to(lp.c, full_index_set(lp.cols()), cols), cert.pair.x);
                }
                if (check_certificate(lp, cert).ok) {
                    found.push_back(std::move(cert));
                }
            });
        });
    }
    return found;
}

std::vector<PivotSequence> enumerate_short_sequences(const CanonicalLP& lp, int cap) {
    require_size(lp.rows(), lp.cols(), cap);
    std::vector<PivotSequence> found;
    const int depth_limit = std::min(lp.rows(), lp.cols());

    PivotSequence path;
    IndexSet rows;
    IndexSet cols;

    // The current (rows, cols) level is known valid (nonsingular basis,
    // nonnegative pair) when this is called; record it when it is optimal for
    // the full pair and extend.
    std::function<void()> dfs = [&]() {
        PartitionCertificate cert;
        cert.partition.row_support = rows;
        cert.partition.col_support = cols;
        if (!rows.empty()) {
            cert.pair = basic_pair(lp, rows, cols);
            cert.objective = dot(restrict_to(lp.c, full_index_set(lp.cols()), cols), cert.pair.x);
        }
        if (check_certificate(lp, cert).ok) {
            found.push_back(path);
        }
        if (static_cast<int>(path.size()) == depth_limit) {
            return;
        }
        for (int i = 0; i < lp.rows(); ++i) {
            if (position_of(rows, i) >= 0) {
                continue;
            }
            for (int j = 0; j < lp.cols(); ++j) {
                if (position_of(cols, j) >= 0) {
                    continue;
                }
                const IndexSet next_rows = with_value(rows, i);
                const IndexSet next_cols = with_value(cols, j);
                if (!is_nonsingular(lp.A.submatrix(next_rows, next_cols))) {
                    continue;
                }
                const BasicPair pair = basic_pair(lp, next_rows, next_cols);
                if (!all_nonnegative(pair.x) || !all_nonnegative(pair.y)) {
                    continue;
                }
                path.emplace_back(i, j);
                rows = next_rows;
                cols = next_cols;
                dfs();
                path.pop_back();
                rows = without_value(rows, i);
                cols = without_value(cols, j);
            }
        }
    };
    dfs();
    return found;
}

std::vector<GameCertificate> enumerate_game_bases(const MatrixGame& game, int cap) {
    require_size(game.rows(), game.cols(), cap);
    std::vector<GameCertificate> found;

    const int limit = std::min(game.rows(), game.cols());
    for (int k = 1; k <= limit; ++k) {
        for_each_subset(game.rows(), k, [&](const IndexSet& rows) {
            for_each_subset(game.cols(), k, [&](const IndexSet& cols) {
                if (!is_nonsingular(bordered_matrix(game.M.submatrix(rows, cols)))) {
                    return;
                }
                GameCertificate cert;
                cert.partition.row_support = rows;
                cert.partition.col_support = cols;
                cert.pair = bordered_pair(game, rows, cols);
                cert.gamma = cert.pair.alpha;
                if (check_game_certificate(game, cert).ok) {
                    found.push_back(std::move(cert));
                }
            });
        });
    }

    for (const auto& cert : found) {
        if (cert.gamma != found.front().gamma) {
            throw InternalInvariantError("enumerated optimal bases disagree on gamma");
        }
    }
    return found;
}

EnumerationReport run_enumeration(const CanonicalLP& lp, const std::string& instance_id, int cap) {
    const auto start = std::chrono::steady_clock::now();
    EnumerationReport report;
    report.instance_id = instance_id;
    report.m = lp.rows();
    report.n = lp.cols();
    report.certificates = enumerate_certificates(lp, cap);
    report.sequences = enumerate_short_sequences(lp, cap);
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

} // namespace pivotseq
