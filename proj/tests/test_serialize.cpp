#include <doctest.h>

#include <sstream>

#include "robin/errors.hpp"
#include "robin/serialize.hpp"
#include "robin/svg.hpp"
#include "oracles.hpp"

using namespace robin;

namespace {

RobustResult tiny_robust_result() {
    const Graph g = oracle::disjoint_cliques(2, 4);
    PerturbationPlan plan;
    plan.levels = {0.1, 0.3, 0.5};
    plan.base_reps = 3;
    plan.derived_reps = 1;
    plan.seed = RngSeed{42};
    return robin_robust(g, null_configuration_model(g, RngSeed{1}),
                        DetectorSpec::builtin(DetectorKind::louvain, RngSeed{2}),
                        MeasureKind::split_join, plan);
}

}  // namespace

TEST_CASE("analysis record json round trip") {
    const RobustResult result = tiny_robust_result();
    const Graph g = oracle::disjoint_cliques(2, 4);
    const AnalysisRecord record = make_record(result, graph_fingerprint(g));

    const nlohmann::ordered_json doc = to_json(record);
    const AnalysisRecord back = record_from_json(nlohmann::json::parse(doc.dump()));

    CHECK(back.kind == "robust");
    CHECK(back.measure == MeasureKind::split_join);
    CHECK(back.strategy == PerturbStrategy::independent);
    CHECK(back.levels == record.levels);
    CHECK(back.seed == 42);
    CHECK(back.series.size() == 2);
    CHECK(back.series[0].name == "real");
    CHECK(back.series[0].grand_mean == record.series[0].grand_mean);
    CHECK(back.series[1].group_means == record.series[1].group_means);
}

TEST_CASE("csv and json encode the same numbers") {
    const RobustResult result = tiny_robust_result();
    const AnalysisRecord record = make_record(result, "abc");
    const std::string csv = to_csv(record);

    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "series,replicate,level,value");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        const std::string series = line.substr(0, c1);
        const std::size_t rep = std::stoul(line.substr(c1 + 1, c2 - c1 - 1));
        const double level = std::stod(line.substr(c2 + 1, c3 - c2 - 1));
        const double value = std::stod(line.substr(c3 + 1));
        const CurveSeries& s = series == "real" ? record.series[0] : record.series[1];
        const std::size_t level_idx =
            rows % record.levels.size();
        CHECK(level == record.levels[level_idx]);  // bit-exact after round trip
        CHECK(value == s.group_means[rep][level_idx]);
        ++rows;
    }
    CHECK(rows == 2 * 3 * 3);  // series x replicates x levels
}

TEST_CASE("malformed result documents are rejected") {
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse("{}")), Error);
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(
                        R"({"kind":"robust","measure":"vi","strategy":"independent",
                            "levels":[0.1],"detectors":["louvain"],"seed":1,
                            "graph_fingerprint":"x","series":[]})")),
                    Error);
}

TEST_CASE("fingerprints are stable and discriminating") {
    const Graph a = oracle::disjoint_cliques(2, 4);
    const Graph b = oracle::disjoint_cliques(2, 5);
    CHECK(graph_fingerprint(a) == graph_fingerprint(a));
    CHECK(graph_fingerprint(a) != graph_fingerprint(b));
    CHECK(graph_fingerprint(a).size() == 16);
}

TEST_CASE("test-result json shapes") {
    const std::vector<double> levels = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::vector<double> m1, m2;
    for (double t : levels) {
        m1.push_back(0.2 + t);
        m2.push_back(0.2 + t);
    }
    const auto gp = to_json(robin_gp_test(m1, m2, levels), "f1");
    CHECK(gp.at("test") == "gp");
    CHECK(gp.at("bf").get<double>() == 0.0);

    const AUCResult auc = robin_auc(m1, m2, levels);
    const auto auc_doc = to_json(auc, "f2");
    CHECK(auc_doc.at("ratio").get<double>() == doctest::Approx(1.0));

    AUCResult undefined;
    undefined.area1 = 0.0;
    undefined.area2 = 1.0;
    const auto undef_doc = to_json(undefined, "f3");
    CHECK(undef_doc.at("ratio").is_null());
}

TEST_CASE("svg rendering is deterministic and timestamp-free") {
    CurvePlot plot;
    plot.title = "stability";
    plot.x_label = "perturbation level";
    plot.y_label = "vi";
    plot.series.push_back({"real", {0.1, 0.2, 0.3}, {0.05, 0.1, 0.2}, {0.01, 0.01, 0.02}});
    plot.series.push_back({"null", {0.1, 0.2, 0.3}, {0.3, 0.35, 0.4}, {}});
    const std::string svg1 = render_line_svg(plot);
    const std::string svg2 = render_line_svg(plot);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") != std::string::npos);
    CHECK(svg1.find("polyline") != std::string::npos);
    CHECK(svg1.find("real") != std::string::npos);

    const std::string bars = render_bar_svg("p-values", "component", "p", {0.2, 0.01}, 0.05);
    CHECK(bars.find("rect") != std::string::npos);
}
