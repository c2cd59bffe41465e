#ifndef ROBIN_MEASURES_HPP_
#define ROBIN_MEASURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "robin/membership.hpp"

namespace robin {

/// The four stability measures, all expressed as distances in [0, 1] with
/// 0 meaning identical partitions.
enum class MeasureKind { vi, nmi, split_join, ari };

std::string to_string(MeasureKind kind);
MeasureKind measure_from_string(std::string_view name);

/// Co-occurrence counts between two partitions of the same node set.
struct ConfusionTable {
    std::vector<std::vector<long long>> counts;  // K1 x K2
    std::vector<long long> row_marginals;        // sizes of a's communities
    std::vector<long long> col_marginals;        // sizes of b's communities
    long long total = 0;
};

/// counts[i][j] = |{v : a(v)=i and b(v)=j}|. Throws std::invalid_argument on
/// length mismatch or empty input.
ConfusionTable confusion_table(const Membership& a, const Membership& b);

/// Normalized partition distance:
///   vi          (H(a)+H(b)-2I)/ln(n), natural-log entropies
///   nmi         1 - 2I/(H(a)+H(b)); both entropies zero -> 0, one zero -> 1
///   split_join  (2n - sum_i max_j n_ij - sum_j max_i n_ij) / (2n)
///   ari         1 - adjusted Rand index, clamped into [0, 1]
/// Single-node partitions have distance 0 for every kind.
double distance(const Membership& a, const Membership& b, MeasureKind kind);

}  // namespace robin

#endif  // ROBIN_MEASURES_HPP_
