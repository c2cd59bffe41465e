#include "robin/serialize.hpp"

#include <cinttypes>
#include <cstdio>

#include "robin/errors.hpp"
#include "robin/graph_io.hpp"

namespace robin {

namespace {

CurveSeries make_series(std::string name, const RobustnessCurves& curves) {
    CurveSeries series;
    series.name = std::move(name);
    series.group_means = curves.group_means;
    series.grand_mean = curves.grand_mean;
    return series;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

AnalysisRecord make_record(const RobustResult& result, const std::string& fingerprint) {
    AnalysisRecord record;
    record.kind = "robust";
    record.measure = result.measure;
    record.strategy = result.plan.strategy;
    record.levels = result.plan.levels;
    record.detectors = {result.detector.display_name()};
    record.seed = result.plan.seed.value;
    record.graph_fingerprint = fingerprint;
    record.series.push_back(make_series("real", result.real));
    record.series.push_back(make_series("null", result.null_model));
    return record;
}

AnalysisRecord make_record(const CompareResult& result, const std::string& fingerprint) {
    AnalysisRecord record;
    record.kind = "compare";
    record.measure = result.measure;
    record.strategy = result.plan.strategy;
    record.levels = result.plan.levels;
    record.detectors = {result.detector1.display_name(), result.detector2.display_name()};
    record.seed = result.plan.seed.value;
    record.graph_fingerprint = fingerprint;
    record.series.push_back(make_series(record.detectors[0], result.curves1));
    record.series.push_back(make_series(record.detectors[1], result.curves2));
    // Two detectors with the same display name still need distinct series keys.
    if (record.series[0].name == record.series[1].name) {
        record.series[0].name += "#1";
        record.series[1].name += "#2";
    }
    return record;
}

nlohmann::ordered_json to_json(const AnalysisRecord& record) {
    nlohmann::ordered_json doc;
    doc["kind"] = record.kind;
    doc["measure"] = to_string(record.measure);
    doc["strategy"] = to_string(record.strategy);
    doc["levels"] = record.levels;
    doc["detectors"] = record.detectors;
    doc["seed"] = record.seed;
    doc["graph_fingerprint"] = record.graph_fingerprint;
    doc["series"] = nlohmann::ordered_json::array();
    for (const CurveSeries& series : record.series) {
        nlohmann::ordered_json s;
        s["name"] = series.name;
        s["group_means"] = series.group_means;
        s["grand_mean"] = series.grand_mean;
        doc["series"].push_back(std::move(s));
    }
    return doc;
}

AnalysisRecord record_from_json(const nlohmann::json& doc) {
    try {
        AnalysisRecord record;
        record.kind = doc.at("kind").get<std::string>();
        if (record.kind != "robust" && record.kind != "compare") {
            throw Error("unknown record kind '" + record.kind + "'");
        }
        record.measure = measure_from_string(doc.at("measure").get<std::string>());
        record.strategy = strategy_from_string(doc.at("strategy").get<std::string>());
        record.levels = doc.at("levels").get<std::vector<double>>();
        record.detectors = doc.at("detectors").get<std::vector<std::string>>();
        record.seed = doc.at("seed").get<std::uint64_t>();
        record.graph_fingerprint = doc.at("graph_fingerprint").get<std::string>();
        for (const auto& s : doc.at("series")) {
            CurveSeries series;
            series.name = s.at("name").get<std::string>();
            series.group_means = s.at("group_means").get<std::vector<std::vector<double>>>();
            series.grand_mean = s.at("grand_mean").get<std::vector<double>>();
            if (series.grand_mean.size() != record.levels.size()) {
                throw Error("grand_mean length does not match levels");
            }
            for (const auto& row : series.group_means) {
                if (row.size() != record.levels.size()) {
                    throw Error("group_means row length does not match levels");
                }
            }
            record.series.push_back(std::move(series));
        }
        if (record.series.size() != 2) {
            throw Error("expected exactly two series");
        }
        return record;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed result document: ") + e.what());
    }
}

std::string to_csv(const AnalysisRecord& record) {
    std::string out = "series,replicate,level,value\n";
    for (const CurveSeries& series : record.series) {
        for (std::size_t rep = 0; rep < series.group_means.size(); ++rep) {
            for (std::size_t level = 0; level < record.levels.size(); ++level) {
                out += series.name;
                out += ',';
                out += std::to_string(rep);
                out += ',';
                out += format_double(record.levels[level]);
                out += ',';
                out += format_double(series.group_means[rep][level]);
                out += '\n';
            }
        }
    }
    return out;
}

std::string fingerprint_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, hash);
    return buf;
}

std::string graph_fingerprint(const Graph& g) { return fingerprint_hex(write_edgelist(g)); }

std::string record_inputs_fingerprint(const AnalysisRecord& record) {
    nlohmann::ordered_json doc;
    doc["levels"] = record.levels;
    doc["series"] = nlohmann::ordered_json::array();
    for (const CurveSeries& series : record.series) {
        nlohmann::ordered_json s;
        s["group_means"] = series.group_means;
        s["grand_mean"] = series.grand_mean;
        doc["series"].push_back(std::move(s));
    }
    return fingerprint_hex(doc.dump());
}

namespace {

nlohmann::ordered_json hyper_to_json(const GPFit& fit) {
    nlohmann::ordered_json doc;
    doc["signal_variance"] = fit.hyper.signal_variance;
    doc["lengthscale"] = fit.hyper.lengthscale;
    doc["noise_variance"] = fit.hyper.noise_variance;
    doc["log_marginal"] = fit.log_marginal;
    return doc;
}

}  // namespace

nlohmann::ordered_json to_json(const BayesFactorResult& result,
                               const std::string& inputs_fingerprint) {
    nlohmann::ordered_json doc;
    doc["test"] = "gp";
    doc["inputs_fingerprint"] = inputs_fingerprint;
    doc["bf"] = result.bf;
    doc["fit_signal"] = hyper_to_json(result.fit_signal);
    doc["fit_noise"] = hyper_to_json(result.fit_noise);
    doc["profile"] = result.profile;
    return doc;
}

nlohmann::ordered_json to_json(const ITPResult& result, const std::string& inputs_fingerprint) {
    nlohmann::ordered_json doc;
    doc["test"] = "itp";
    doc["inputs_fingerprint"] = inputs_fingerprint;
    doc["raw"] = result.component_pvalues;
    doc["adjusted"] = result.adjusted_pvalues;
    doc["B"] = result.permutations;
    doc["K"] = result.basis_size;
    return doc;
}

nlohmann::ordered_json to_json(const AUCResult& result, const std::string& inputs_fingerprint) {
    nlohmann::ordered_json doc;
    doc["test"] = "auc";
    doc["inputs_fingerprint"] = inputs_fingerprint;
    doc["area1"] = result.area1;
    doc["area2"] = result.area2;
    if (result.ratio.has_value()) {
        doc["ratio"] = *result.ratio;
    } else {
        doc["ratio"] = nullptr;
    }
    return doc;
}

}  // namespace robin
