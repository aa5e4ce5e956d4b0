#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamlab/oracles.hpp"
#include "hamlab/seed.hpp"
#include "hamlab/structures.hpp"

namespace hamlab {

inline constexpr double kZ95 = 1.959963984540054;

// Commutative tally of Bernoulli trials; aggregation order never matters.
struct Tally {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;

    Tally& operator+=(const Tally& other) {
        trials += other.trials;
        successes += other.successes;
        return *this;
    }
    friend Tally operator+(Tally a, const Tally& b) { return a += b; }
    friend bool operator==(const Tally&, const Tally&) = default;
};

struct Estimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double pointEstimate = 0.0;
    double ciLow = 0.0;   // Wilson 95%
    double ciHigh = 0.0;

    double half_width() const { return (ciHigh - ciLow) / 2.0; }
    friend bool operator==(const Estimate&, const Estimate&) = default;
};

Estimate wilson_estimate(const Tally& tally, double z = kZ95);

enum class Model {
    Hyper,            // H^(k)_{n,p}; G_{n,p} when k = 2
    DirHyper,         // D^(k)_{n,p}; D_{n,p} when k = 2
    ColoredGraph,     // G^c_{n,p}
    ColoredDigraph,   // D^c_{n,p}
    Chain,            // Gamma_i
    ChainColored,     // colored Gamma_i
    PipelineLoose,    // multi-round contraction pipeline for loose cycles
    PipelineRainbow,  // contraction pipeline for rainbow cycles (direct search for even n)
};

enum class Event {
    LooseHC,
    DirLooseHC,
    RainbowHC,
    RainbowDirHC,
    SlotPresence,     // the first slot (or its first orientation) is present
    PipelineSuccess,
};

struct ExperimentConfig {
    Model model = Model::Hyper;
    std::optional<Event> event;  // defaults to natural_event(model)
    int n = 6;
    int k = 3;
    double p = 0.5;
    std::vector<double> pGrid;
    int c = 0;  // 0 means c = n
    int f = 3;
    std::uint64_t i = 0;
    std::uint64_t trials = 1000;
    std::uint64_t masterSeed = 1;
    unsigned workers = 0;  // 0 means hardware concurrency
    OracleLimits limits{};
};

Event natural_event(Model model);
Event event_for(const ExperimentConfig& cfg);
int colors_for(const ExperimentConfig& cfg);
void validate(const ExperimentConfig& cfg);

// Parameter regimes expressed symbolically.
// thm2: p = t log n / n^(k-1).
double preset_thm2_p(int n, int k, double t);
// thm3: p = K log n / n.
double preset_thm3_p(int n, double multiplier);
// thm4: p = (1 + eps) log n / n and c = n + ceil(slack n / log log n).
double preset_thm4_p(int n, double epsilon);
int preset_thm4_c(int n, double slack);

// Seed for trial t: (masterSeed, "trial", t).
Seed trial_seed(std::uint64_t masterSeed, std::uint64_t trialIndex);

// One independent run of cfg's model at probability p.
bool run_trial(const ExperimentConfig& cfg, Event event, double p, std::uint64_t trialIndex);

Tally run_trials(const ExperimentConfig& cfg, Event event, double p);

Estimate estimate(const ExperimentConfig& cfg);

struct DominanceReport {
    Estimate estimateA;  // the side claimed to be smaller
    Estimate estimateB;
    bool consistent;
};

// consistent iff B's point estimate is not below A's by more than the sum of
// the two Wilson half-widths.
DominanceReport dominance_test(const ExperimentConfig& cfgA, const ExperimentConfig& cfgB, std::uint64_t trials);

struct SweepRow {
    double p;
    Estimate estimate;
};

// Trial t uses the same seed at every grid point, so each trial's structure
// grows monotonically with p.
std::vector<SweepRow> sweep(const ExperimentConfig& cfg);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// True when each point is at least the previous one minus both half-widths.
bool nondecreasing_within_ci(const std::vector<SweepRow>& rows);

struct ExactSuiteReport {
    std::vector<double> ps;
    std::vector<std::vector<double>> table;  // table[row][i], i = 0..6
    bool nondecreasing = true;
};

// Exact Pr[Gamma_i has a directed Hamilton cycle] for n = 4, k = 2, i = 0..6.
ExactSuiteReport exact_dominance_suite(const std::vector<double>& ps = {0.2, 0.5, 0.8});
std::string exact_suite_csv(const ExactSuiteReport& report);

// Runs the finder on a uniformly relabeled copy and maps the witness back, so
// that ties are broken uniformly at random rather than lexicographically.
std::optional<DirLooseCycle> find_dir_loose_hc_relabeled(const DirHypergraph& d, const Seed& seed,
                                                         const OracleLimits& limits = {});

std::vector<VertexId> random_permutation(int n, const Seed& seed);

// Upper-tail p-value of Pearson's statistic against equal expected counts.
double chi_square_uniform_p_value(std::span<const std::uint64_t> counts);

}  // namespace hamlab
