#ifndef ROBIN_ROBUSTNESS_HPP_
#define ROBIN_ROBUSTNESS_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "robin/detect.hpp"
#include "robin/graph.hpp"
#include "robin/measures.hpp"
#include "robin/rng.hpp"

namespace robin {

/// independent: every base replicate at level p rewires the original graph by
/// p. dependent: each base replicate walks a chain across the level grid,
/// rewiring the previous chain graph by the level increment.
enum class PerturbStrategy { independent, dependent };

std::string to_string(PerturbStrategy s);
PerturbStrategy strategy_from_string(std::string_view name);

/// Level grid and replicate scheme shared by both workflows. The defaults
/// reproduce the 12-level grid 0.05..0.60 with 10 base graphs per level plus
/// 9 derivatives each (1% extra rewiring), i.e. 100 graphs per level.
struct PerturbationPlan {
    std::vector<double> levels = default_levels();
    PerturbStrategy strategy = PerturbStrategy::independent;
    int base_reps = 10;
    int derived_reps = 9;
    double derived_extra_fraction = 0.01;
    RngSeed seed{0};
    bool include_zero_level = false;  // permits a leading 0.0 level

    static std::vector<double> default_levels();

    int replicates_per_group() const { return 1 + derived_reps; }
    int total_replicates() const { return base_reps * replicates_per_group(); }

    /// Throws std::invalid_argument when the grid is not strictly increasing
    /// inside (0,1] (or [0,1] with include_zero_level), or the replicate
    /// counts are out of range.
    void validate() const;
};

/// Stability-measure curves for one graph/detector pairing. group_means has
/// one row per base replicate (the functional replicates consumed by the ITP
/// test); grand_mean is their column-wise mean (the plotted curve); raw keeps
/// every per-graph measure, row index = base_rep * (1+derived_reps) + d.
struct RobustnessCurves {
    std::vector<double> levels;
    std::vector<std::vector<double>> group_means;
    std::vector<double> grand_mean;
    std::vector<std::vector<double>> raw;
};

/// Workflow 1 output: real-versus-null curves for one detector.
struct RobustResult {
    RobustnessCurves real;
    RobustnessCurves null_model;
    MeasureKind measure = MeasureKind::vi;
    DetectorSpec detector;
    PerturbationPlan plan;
};

/// Workflow 2 output: one graph, two detectors, paired perturbed ensemble.
struct CompareResult {
    RobustnessCurves curves1;
    RobustnessCurves curves2;
    MeasureKind measure = MeasureKind::vi;
    DetectorSpec detector1;
    DetectorSpec detector2;
    PerturbationPlan plan;
};

/// Generates the perturbed ensemble sequentially and hands each graph to the
/// visitor as (level_index, replicate_index, graph), replicate_index =
/// base_rep * (1+derived_reps) + d. Every graph's RNG stream is derived from
/// (plan.seed, level_index, replicate_index) only, so the sequence is
/// reproducible cell by cell.
void for_each_perturbed(const Graph& g, const PerturbationPlan& plan,
                        const std::function<void(int, int, const Graph&)>& visit);

/// Workflow 1 (real graph versus null model). Detects the reference partition
/// of each graph once, measures every perturbed replicate against it, and
/// aggregates group means per the plan. threads > 1 evaluates independent
/// cells in parallel; results are identical for every thread count.
RobustResult robin_robust(const Graph& g, const Graph& g_null, const DetectorSpec& detector,
                          MeasureKind measure, const PerturbationPlan& plan, int threads = 1);

/// Workflow 2 (two detectors on one graph). Both detectors see the identical
/// perturbed ensemble (paired design).
CompareResult robin_compare(const Graph& g, const DetectorSpec& detector1,
                            const DetectorSpec& detector2, MeasureKind measure,
                            const PerturbationPlan& plan, int threads = 1);

}  // namespace robin

#endif  // ROBIN_ROBUSTNESS_HPP_
