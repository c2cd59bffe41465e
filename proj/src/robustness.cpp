#include "robin/robustness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace robin {

std::string to_string(PerturbStrategy s) {
    return s == PerturbStrategy::independent ? "independent" : "dependent";
}

PerturbStrategy strategy_from_string(std::string_view name) {
    if (name == "independent") return PerturbStrategy::independent;
    if (name == "dependent") return PerturbStrategy::dependent;
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::vector<double> PerturbationPlan::default_levels() {
    std::vector<double> levels;
    for (int i = 1; i <= 12; ++i) levels.push_back(0.05 * i);
    return levels;
}

void PerturbationPlan::validate() const {
    if (levels.empty()) throw std::invalid_argument("no perturbation levels");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 0.0 || levels[i] > 1.0) {
            throw std::invalid_argument("levels must lie in (0, 1]");
        }
        if (levels[i] == 0.0 && !(i == 0 && include_zero_level)) {
            throw std::invalid_argument("level 0 requires include_zero_level");
        }
        if (i > 0 && levels[i] <= levels[i - 1]) {
            throw std::invalid_argument("levels must be strictly increasing");
        }
    }
    if (base_reps < 1) throw std::invalid_argument("base_reps must be >= 1");
    if (derived_reps < 0) throw std::invalid_argument("derived_reps must be >= 0");
    if (derived_extra_fraction < 0.0 || derived_extra_fraction > 1.0) {
        throw std::invalid_argument("derived_extra_fraction must lie in [0, 1]");
    }
}

namespace {

// Seed-derivation domains, so perturbation streams and detector streams never
// collide even when the user passes the same base seed for both.
constexpr std::uint64_t kDomainPerturb = 1;
constexpr std::uint64_t kDomainDetect = 2;
constexpr std::uint64_t kSideNull = 0x6c6c756e;  // distinct stream for the null graph

RngSeed perturb_seed(RngSeed base, std::uint64_t side, int level, int replicate) {
    return derive_seed(base, {kDomainPerturb, side, static_cast<std::uint64_t>(level),
                              static_cast<std::uint64_t>(replicate)});
}

RngSeed detect_seed(RngSeed base, std::uint64_t side, int level, int replicate) {
    return derive_seed(base, {kDomainDetect, side, static_cast<std::uint64_t>(level),
                              static_cast<std::uint64_t>(replicate)});
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    pool.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// Walks one base replicate of the ensemble: for the independent strategy each
// level rewires the original; for the dependent strategy the chain graph is
// rewired by the level increment. Yields the base graph and its derivatives
// at every level.
void walk_group(const Graph& g, const PerturbationPlan& plan, std::uint64_t side,
                int base_rep, const std::function<void(int, int, const Graph&)>& visit) {
    const int group_size = plan.replicates_per_group();
    Graph chain = g;
    for (int level = 0; level < static_cast<int>(plan.levels.size()); ++level) {
        const int base_replicate = base_rep * group_size;
        Graph base;
        if (plan.strategy == PerturbStrategy::independent) {
            base = rewire_fraction(g, plan.levels[static_cast<std::size_t>(level)],
                                   perturb_seed(plan.seed, side, level, base_replicate));
        } else {
            const double previous =
                level == 0 ? 0.0 : plan.levels[static_cast<std::size_t>(level - 1)];
            const double increment =
                plan.levels[static_cast<std::size_t>(level)] - previous;
            chain = rewire_fraction(chain, increment,
                                    perturb_seed(plan.seed, side, level, base_replicate));
            base = chain;
        }
        visit(level, base_replicate, base);
        for (int d = 1; d < group_size; ++d) {
            const int replicate = base_replicate + d;
            visit(level, replicate,
                  rewire_fraction(base, plan.derived_extra_fraction,
                                  perturb_seed(plan.seed, side, level, replicate)));
        }
    }
}

struct SideJob {
    const Graph* graph = nullptr;
    const DetectorSpec* detector = nullptr;
    const Membership* reference = nullptr;
    std::uint64_t side = 0;
    std::vector<std::vector<double>>* raw = nullptr;  // total_replicates x n_levels
};

// Evaluates every (level, replicate) cell of the given sides. Work units are
// base-replicate walks, independent of each other; each cell derives its own
// perturbation and detection streams, so scheduling cannot change results.
void run_sides(const std::vector<SideJob>& sides, MeasureKind measure,
               const PerturbationPlan& plan, int threads) {
    const std::size_t units = sides.size() * static_cast<std::size_t>(plan.base_reps);
    parallel_for(units, threads, [&](std::size_t unit) {
        const SideJob& job = sides[unit / static_cast<std::size_t>(plan.base_reps)];
        const int base_rep = static_cast<int>(unit % static_cast<std::size_t>(plan.base_reps));
        walk_group(*job.graph, plan, job.side, base_rep,
                   [&](int level, int replicate, const Graph& perturbed) {
                       DetectorSpec cell = *job.detector;
                       cell.seed = detect_seed(job.detector->seed, job.side, level, replicate);
                       const Membership partition = detect(perturbed, cell);
                       (*job.raw)[static_cast<std::size_t>(replicate)]
                                 [static_cast<std::size_t>(level)] =
                           distance(partition, *job.reference, measure);
                   });
    });
}

RobustnessCurves curves_from_raw(const PerturbationPlan& plan,
                                 std::vector<std::vector<double>> raw) {
    RobustnessCurves curves;
    curves.levels = plan.levels;
    const std::size_t n_levels = plan.levels.size();
    const int group_size = plan.replicates_per_group();
    curves.group_means.assign(static_cast<std::size_t>(plan.base_reps),
                              std::vector<double>(n_levels, 0.0));
    curves.grand_mean.assign(n_levels, 0.0);
    for (int i = 0; i < plan.base_reps; ++i) {
        for (std::size_t level = 0; level < n_levels; ++level) {
            double sum = 0.0;
            for (int d = 0; d < group_size; ++d) {
                sum += raw[static_cast<std::size_t>(i * group_size + d)][level];
            }
            curves.group_means[static_cast<std::size_t>(i)][level] = sum / group_size;
        }
    }
    for (std::size_t level = 0; level < n_levels; ++level) {
        double sum = 0.0;
        for (int i = 0; i < plan.base_reps; ++i) {
            sum += curves.group_means[static_cast<std::size_t>(i)][level];
        }
        curves.grand_mean[level] = sum / plan.base_reps;
    }
    curves.raw = std::move(raw);
    return curves;
}

std::vector<std::vector<double>> make_raw(const PerturbationPlan& plan) {
    return std::vector<std::vector<double>>(
        static_cast<std::size_t>(plan.total_replicates()),
        std::vector<double>(plan.levels.size(), 0.0));
}

}  // namespace

void for_each_perturbed(const Graph& g, const PerturbationPlan& plan,
                        const std::function<void(int, int, const Graph&)>& visit) {
    plan.validate();
    for (int base_rep = 0; base_rep < plan.base_reps; ++base_rep) {
        walk_group(g, plan, /*side=*/0, base_rep, visit);
    }
}

RobustResult robin_robust(const Graph& g, const Graph& g_null, const DetectorSpec& detector,
                          MeasureKind measure, const PerturbationPlan& plan, int threads) {
    plan.validate();
    detector.validate();

    const Membership reference_real = detect(g, detector);
    const Membership reference_null = detect(g_null, detector);

    auto raw_real = make_raw(plan);
    auto raw_null = make_raw(plan);
    run_sides({{&g, &detector, &reference_real, 0, &raw_real},
               {&g_null, &detector, &reference_null, kSideNull, &raw_null}},
              measure, plan, threads);

    RobustResult result;
    result.real = curves_from_raw(plan, std::move(raw_real));
    result.null_model = curves_from_raw(plan, std::move(raw_null));
    result.measure = measure;
    result.detector = detector;
    result.plan = plan;
    return result;
}

CompareResult robin_compare(const Graph& g, const DetectorSpec& detector1,
                            const DetectorSpec& detector2, MeasureKind measure,
                            const PerturbationPlan& plan, int threads) {
    plan.validate();
    detector1.validate();
    detector2.validate();

    const Membership reference1 = detect(g, detector1);
    const Membership reference2 = detect(g, detector2);

    auto raw1 = make_raw(plan);
    auto raw2 = make_raw(plan);

    // One shared ensemble: each perturbed graph is generated once and fed to
    // both detectors (paired design).
    parallel_for(static_cast<std::size_t>(plan.base_reps), threads, [&](std::size_t unit) {
        walk_group(g, plan, /*side=*/0, static_cast<int>(unit),
                   [&](int level, int replicate, const Graph& perturbed) {
                       DetectorSpec cell1 = detector1;
                       cell1.seed = detect_seed(detector1.seed, 0, level, replicate);
                       DetectorSpec cell2 = detector2;
                       cell2.seed = detect_seed(detector2.seed, 0, level, replicate);
                       raw1[static_cast<std::size_t>(replicate)]
                           [static_cast<std::size_t>(level)] =
                           distance(detect(perturbed, cell1), reference1, measure);
                       raw2[static_cast<std::size_t>(replicate)]
                           [static_cast<std::size_t>(level)] =
                           distance(detect(perturbed, cell2), reference2, measure);
                   });
    });

    CompareResult result;
    result.curves1 = curves_from_raw(plan, std::move(raw1));
    result.curves2 = curves_from_raw(plan, std::move(raw2));
    result.measure = measure;
    result.detector1 = detector1;
    result.detector2 = detector2;
    result.plan = plan;
    return result;
}

}  // namespace robin
