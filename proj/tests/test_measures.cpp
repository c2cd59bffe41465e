#include <doctest.h>

#include <cmath>

#include "robin/measures.hpp"
#include "oracles.hpp"

using namespace robin;

namespace {

const MeasureKind kAllKinds[] = {MeasureKind::vi, MeasureKind::nmi, MeasureKind::split_join,
                                 MeasureKind::ari};

std::vector<int> random_labels(Rng& rng, int n, int max_communities) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] =
            static_cast<int>(rng.index(static_cast<std::size_t>(max_communities)));
    }
    return labels;
}

}  // namespace

TEST_CASE("confusion table basics") {
    SUBCASE("diagonal for equal partitions") {
        const Membership m({0, 0, 1, 1});
        const ConfusionTable t = confusion_table(m, m);
        CHECK(t.counts == std::vector<std::vector<long long>>{{2, 0}, {0, 2}});
        CHECK(t.total == 4);
    }
    SUBCASE("crossed partitions") {
        const ConfusionTable t =
            confusion_table(Membership({0, 0, 1, 1}), Membership({0, 1, 0, 1}));
        CHECK(t.counts == std::vector<std::vector<long long>>{{1, 1}, {1, 1}});
    }
    SUBCASE("row vector") {
        const ConfusionTable t = confusion_table(Membership({0, 0, 0}), Membership({0, 1, 2}));
        CHECK(t.counts == std::vector<std::vector<long long>>{{1, 1, 1}});
        CHECK(t.row_marginals == std::vector<long long>{3});
        CHECK(t.col_marginals == std::vector<long long>{1, 1, 1});
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(confusion_table(Membership({0}), Membership({0, 1})),
                        std::invalid_argument);
        CHECK_THROWS_AS(distance(Membership({0}), Membership({0, 1}), MeasureKind::vi),
                        std::invalid_argument);
    }
}

TEST_CASE("identical partitions have distance zero under every measure") {
    const Membership m({0, 1, 0, 2, 1, 0});
    for (MeasureKind kind : kAllKinds) {
        CHECK(distance(m, m, kind) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("vi of fully independent partitions is 1") {
    const double d =
        distance(Membership({0, 0, 1, 1}), Membership({0, 1, 0, 1}), MeasureKind::vi);
    CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("split-join worked example") {
    const double d = distance(Membership({0, 0, 0, 1, 1}), Membership({0, 0, 1, 1, 1}),
                              MeasureKind::split_join);
    CHECK(d == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("nmi degenerate cases") {
    CHECK(distance(Membership({0, 0, 0}), Membership({1, 1, 1}), MeasureKind::nmi) == 0.0);
    CHECK(distance(Membership({0, 0, 0}), Membership({0, 1, 2}), MeasureKind::nmi) == 1.0);
}

TEST_CASE("negative ari clamps to distance 1") {
    const Membership a({0, 0, 1, 1});
    const Membership b({0, 1, 0, 1});
    CHECK(distance(a, b, MeasureKind::ari) == 1.0);
    CHECK(oracle::ari_brute(a.assignment(), b.assignment()) == 1.0);
}

TEST_CASE("single-node partitions have distance zero") {
    for (MeasureKind kind : kAllKinds) {
        CHECK(distance(Membership({4}), Membership({9}), kind) == 0.0);
    }
}

TEST_CASE("symmetry, range and relabel invariance on random partitions") {
    Rng rng(RngSeed{2024});
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.index(30));
        const auto raw_a = random_labels(rng, n, 5);
        const auto raw_b = random_labels(rng, n, 5);
        const Membership a(raw_a);
        const Membership b(raw_b);

        // permuted community ids of a
        auto permuted = raw_a;
        for (int& label : permuted) label = 7 - label;
        const Membership a_relabeled(permuted);

        for (MeasureKind kind : kAllKinds) {
            const double ab = distance(a, b, kind);
            CHECK(ab >= 0.0);
            CHECK(ab <= 1.0);
            CHECK(ab == distance(b, a, kind));
            CHECK(distance(a_relabeled, b, kind) == doctest::Approx(ab).epsilon(1e-12));
        }
    }
}

TEST_CASE("distance zero iff equal after canonical relabeling") {
    Rng rng(RngSeed{77});
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.index(12));
        const Membership a(random_labels(rng, n, 4));
        const Membership b(random_labels(rng, n, 4));
        const bool equal = a == b;  // both already canonical
        CHECK((distance(a, b, MeasureKind::vi) == 0.0) == equal);
        CHECK((distance(a, b, MeasureKind::split_join) == 0.0) == equal);
    }
}

TEST_CASE("unnormalized vi satisfies the triangle inequality") {
    Rng rng(RngSeed{31337});
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng.index(48));
        const auto a = random_labels(rng, n, 6);
        const auto b = random_labels(rng, n, 6);
        const auto c = random_labels(rng, n, 6);
        const double ac = oracle::vi_unnormalized(a, c);
        const double ab = oracle::vi_unnormalized(a, b);
        const double bc = oracle::vi_unnormalized(b, c);
        CHECK(ac <= ab + bc + 1e-9);

        // and the library agrees with the brute-force value after normalization
        const double lib = distance(Membership(a), Membership(c), MeasureKind::vi);
        CHECK(lib == doctest::Approx(std::clamp(ac / std::log(n), 0.0, 1.0)).epsilon(1e-9));
    }
}

TEST_CASE("kernel matches brute force on every partition pair up to 5 elements") {
    for (int n = 1; n <= 5; ++n) {
        const auto partitions = oracle::all_partitions(n);
        for (const auto& a : partitions) {
            for (const auto& b : partitions) {
                const Membership ma(a);
                const Membership mb(b);
                for (MeasureKind kind : kAllKinds) {
                    const double lib = distance(ma, mb, kind);
                    const double brute = oracle::distance_brute(a, b, kind);
                    CHECK(std::abs(lib - brute) < 1e-10);
                }
            }
        }
    }
}
