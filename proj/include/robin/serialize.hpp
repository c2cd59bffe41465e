#ifndef ROBIN_SERIALIZE_HPP_
#define ROBIN_SERIALIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "robin/robustness.hpp"
#include "robin/stats.hpp"

namespace robin {

/// One named stability curve with its replicate structure.
struct CurveSeries {
    std::string name;
    std::vector<std::vector<double>> group_means;
    std::vector<double> grand_mean;
};

/// Serializable form of a robin_robust / robin_compare run. The series pair
/// is (real, null) for robust runs and (detector1, detector2) for compare
/// runs.
struct AnalysisRecord {
    std::string kind;  // "robust" | "compare"
    MeasureKind measure = MeasureKind::vi;
    PerturbStrategy strategy = PerturbStrategy::independent;
    std::vector<double> levels;
    std::vector<std::string> detectors;
    std::uint64_t seed = 0;
    std::string graph_fingerprint;
    std::vector<CurveSeries> series;
};

AnalysisRecord make_record(const RobustResult& result, const std::string& graph_fingerprint);
AnalysisRecord make_record(const CompareResult& result, const std::string& graph_fingerprint);

nlohmann::ordered_json to_json(const AnalysisRecord& record);

/// Parses and validates a serialized record. Throws Error on malformed input.
AnalysisRecord record_from_json(const nlohmann::json& doc);

/// CSV form of the same numbers: header then one row per
/// (series, replicate, level) holding the replicate's group mean, printed
/// with enough digits to round-trip exactly.
std::string to_csv(const AnalysisRecord& record);

/// 64-bit FNV-1a digest, hex encoded.
std::string fingerprint_hex(std::string_view bytes);

/// Fingerprint of a graph's canonical edge-list serialization.
std::string graph_fingerprint(const Graph& g);

/// Fingerprint of the curve data a statistical test consumed.
std::string record_inputs_fingerprint(const AnalysisRecord& record);

nlohmann::ordered_json to_json(const BayesFactorResult& result,
                               const std::string& inputs_fingerprint);
nlohmann::ordered_json to_json(const ITPResult& result, const std::string& inputs_fingerprint);
nlohmann::ordered_json to_json(const AUCResult& result, const std::string& inputs_fingerprint);

}  // namespace robin

#endif  // ROBIN_SERIALIZE_HPP_
