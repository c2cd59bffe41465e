#include "robin/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace robin {

std::string to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::vi: return "vi";
        case MeasureKind::nmi: return "nmi";
        case MeasureKind::split_join: return "split-join";
        case MeasureKind::ari: return "ari";
    }
    return "?";
}

MeasureKind measure_from_string(std::string_view name) {
    if (name == "vi") return MeasureKind::vi;
    if (name == "nmi") return MeasureKind::nmi;
    if (name == "split-join" || name == "split_join") return MeasureKind::split_join;
    if (name == "ari") return MeasureKind::ari;
    throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

ConfusionTable confusion_table(const Membership& a, const Membership& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("membership lengths differ");
    }
    if (a.size() == 0) {
        throw std::invalid_argument("empty memberships");
    }
    ConfusionTable table;
    const int k1 = a.community_count();
    const int k2 = b.community_count();
    table.counts.assign(static_cast<std::size_t>(k1),
                        std::vector<long long>(static_cast<std::size_t>(k2), 0));
    table.row_marginals.assign(static_cast<std::size_t>(k1), 0);
    table.col_marginals.assign(static_cast<std::size_t>(k2), 0);
    table.total = a.size();
    for (int v = 0; v < a.size(); ++v) {
        ++table.counts[static_cast<std::size_t>(a[v])][static_cast<std::size_t>(b[v])];
        ++table.row_marginals[static_cast<std::size_t>(a[v])];
        ++table.col_marginals[static_cast<std::size_t>(b[v])];
    }
    return table;
}

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double entropy(const std::vector<long long>& marginals, double n) {
    double h = 0.0;
    for (long long count : marginals) {
        if (count > 0) {
            const double p = static_cast<double>(count) / n;
            h -= p * std::log(p);
        }
    }
    return h;
}

double mutual_information(const ConfusionTable& t) {
    const double n = static_cast<double>(t.total);
    double mi = 0.0;
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
            const long long nij = t.counts[i][j];
            if (nij > 0) {
                const double joint = static_cast<double>(nij) / n;
                const double expected =
                    static_cast<double>(t.row_marginals[i]) / n *
                    static_cast<double>(t.col_marginals[j]) / n;
                mi += joint * std::log(joint / expected);
            }
        }
    }
    return mi;
}

double vi_distance(const ConfusionTable& t) {
    const double n = static_cast<double>(t.total);
    const double vi = entropy(t.row_marginals, n) + entropy(t.col_marginals, n) -
                      2.0 * mutual_information(t);
    return clamp01(vi / std::log(n));
}

double nmi_distance(const ConfusionTable& t) {
    const double n = static_cast<double>(t.total);
    const double ha = entropy(t.row_marginals, n);
    const double hb = entropy(t.col_marginals, n);
    if (ha == 0.0 && hb == 0.0) return 0.0;  // both trivial single-cluster
    const double nmi = 2.0 * mutual_information(t) / (ha + hb);
    return clamp01(1.0 - nmi);
}

double split_join_distance(const ConfusionTable& t) {
    long long row_best = 0;
    for (const auto& row : t.counts) {
        row_best += *std::max_element(row.begin(), row.end());
    }
    long long col_best = 0;
    for (std::size_t j = 0; j < t.col_marginals.size(); ++j) {
        long long best = 0;
        for (std::size_t i = 0; i < t.counts.size(); ++i) {
            best = std::max(best, t.counts[i][j]);
        }
        col_best += best;
    }
    const double two_n = 2.0 * static_cast<double>(t.total);
    return clamp01((two_n - static_cast<double>(row_best) - static_cast<double>(col_best)) /
                   two_n);
}

double pairs(long long c) { return static_cast<double>(c) * static_cast<double>(c - 1) / 2.0; }

double ari_distance(const ConfusionTable& t) {
    double sum_cells = 0.0;
    for (const auto& row : t.counts) {
        for (long long nij : row) sum_cells += pairs(nij);
    }
    double sum_rows = 0.0;
    for (long long r : t.row_marginals) sum_rows += pairs(r);
    double sum_cols = 0.0;
    for (long long c : t.col_marginals) sum_cols += pairs(c);

    const double total_pairs = pairs(t.total);
    const double expected = sum_rows * sum_cols / total_pairs;
    const double maximum = 0.5 * (sum_rows + sum_cols);
    if (maximum == expected) {
        // Degenerate only when both partitions are all-singletons or both are
        // one cluster; either way they are the same partition.
        return 0.0;
    }
    const double ari = (sum_cells - expected) / (maximum - expected);
    return clamp01(1.0 - ari);
}

}  // namespace

double distance(const Membership& a, const Membership& b, MeasureKind kind) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("membership lengths differ");
    }
    if (a.size() <= 1) return 0.0;  // a single node has a unique partition
    // Canonical argument order makes symmetry exact, not just up to rounding.
    if (b.assignment() < a.assignment()) return distance(b, a, kind);
    const ConfusionTable t = confusion_table(a, b);
    switch (kind) {
        case MeasureKind::vi: return vi_distance(t);
        case MeasureKind::nmi: return nmi_distance(t);
        case MeasureKind::split_join: return split_join_distance(t);
        case MeasureKind::ari: return ari_distance(t);
    }
    throw std::invalid_argument("unknown measure kind");
}

}  // namespace robin
