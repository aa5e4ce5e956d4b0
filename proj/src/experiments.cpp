#include "hamlab/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

#include "hamlab/coupling.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/reductions.hpp"

namespace hamlab {

Estimate wilson_estimate(const Tally& tally, double z) {
    Estimate e;
    e.trials = tally.trials;
    e.successes = tally.successes;
    if (tally.trials == 0) {
        e.ciHigh = 1.0;
        return e;
    }
    const double n = static_cast<double>(tally.trials);
    const double phat = static_cast<double>(tally.successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double margin = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    e.pointEstimate = phat;
    e.ciLow = std::clamp(center - margin, 0.0, phat);
    e.ciHigh = std::clamp(center + margin, phat, 1.0);
    return e;
}

Event natural_event(Model model) {
    switch (model) {
        case Model::Hyper: return Event::LooseHC;
        case Model::DirHyper: return Event::DirLooseHC;
        case Model::ColoredGraph: return Event::RainbowHC;
        case Model::ColoredDigraph: return Event::RainbowDirHC;
        case Model::Chain: return Event::DirLooseHC;
        case Model::ChainColored: return Event::RainbowDirHC;
        case Model::PipelineLoose:
        case Model::PipelineRainbow: return Event::PipelineSuccess;
    }
    return Event::LooseHC;
}

Event event_for(const ExperimentConfig& cfg) { return cfg.event.value_or(natural_event(cfg.model)); }

int colors_for(const ExperimentConfig& cfg) { return cfg.c > 0 ? cfg.c : cfg.n; }

void validate(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw ParameterError("trials must be at least 1");
    for (std::size_t g = 1; g < cfg.pGrid.size(); ++g)
        if (cfg.pGrid[g] < cfg.pGrid[g - 1]) throw ParameterError("probability grid must be sorted ascending");
    const Event event = event_for(cfg);
    auto bad = [&] { throw ParameterError("event is not defined for the selected model"); };
    switch (cfg.model) {
        case Model::Hyper:
            if (event != Event::LooseHC && event != Event::SlotPresence) bad();
            break;
        case Model::DirHyper:
        case Model::Chain:
            if (event != Event::DirLooseHC && event != Event::LooseHC && event != Event::SlotPresence) bad();
            break;
        case Model::ColoredGraph:
            if (event != Event::RainbowHC && event != Event::SlotPresence) bad();
            break;
        case Model::ColoredDigraph:
        case Model::ChainColored:
            if (event != Event::RainbowDirHC && event != Event::RainbowHC && event != Event::SlotPresence) bad();
            break;
        case Model::PipelineLoose:
        case Model::PipelineRainbow:
            if (event != Event::PipelineSuccess) bad();
            break;
    }
}

double preset_thm2_p(int n, int k, double t) {
    return std::min(1.0, t * std::log(static_cast<double>(n)) / std::pow(static_cast<double>(n), k - 1));
}

double preset_thm3_p(int n, double multiplier) {
    return std::min(1.0, multiplier * std::log(static_cast<double>(n)) / n);
}

double preset_thm4_p(int n, double epsilon) {
    return std::min(1.0, (1.0 + epsilon) * std::log(static_cast<double>(n)) / n);
}

int preset_thm4_c(int n, double slack) {
    const double loglog = std::log(std::log(static_cast<double>(n)));
    if (!(loglog > 0.0)) throw ParameterError("the thm4 preset needs n >= 3");
    return n + static_cast<int>(std::ceil(slack * n / loglog));
}

Seed trial_seed(std::uint64_t masterSeed, std::uint64_t trialIndex) {
    return Seed(masterSeed).derive("trial").derive(trialIndex);
}

namespace {

// Forgets orientations, keeping the color of the lexicographically first arc of a pair.
ColoredGraph undirected_view(const ColoredDigraph& d) {
    std::vector<ColoredEdge> edges;
    for (const auto& a : d.arcs()) {
        if (a.u < a.v || !d.color(a.v, a.u)) edges.push_back({std::min(a.u, a.v), std::max(a.u, a.v), a.color});
    }
    return ColoredGraph(d.n(), d.c(), std::move(edges));
}

Tuple first_slot(int k) {
    Tuple t;
    for (int v = 0; v < k; ++v) t.push_back(static_cast<VertexId>(v));
    return t;
}

bool dir_event(const DirHypergraph& d, Event event, const OracleLimits& limits) {
    switch (event) {
        case Event::DirLooseHC: return find_dir_loose_hc(d, std::nullopt, limits).has_value();
        case Event::LooseHC: return find_loose_hc(d.underlying(), limits).has_value();
        case Event::SlotPresence: return d.contains(first_slot(d.k()));
        default: throw ParameterError("event is not defined for directed hypergraphs");
    }
}

bool colored_dir_event(const ColoredDigraph& d, Event event, const OracleLimits& limits) {
    switch (event) {
        case Event::RainbowDirHC: return find_rainbow_dir_hc(d, limits).has_value();
        case Event::RainbowHC: return find_rainbow_hc(undirected_view(d), limits).has_value();
        case Event::SlotPresence: return d.color(0, 1).has_value();
        default: throw ParameterError("event is not defined for colored digraphs");
    }
}

}  // namespace

bool run_trial(const ExperimentConfig& cfg, Event event, double p, std::uint64_t trialIndex) {
    const Seed seed = trial_seed(cfg.masterSeed, trialIndex);
    const OracleLimits& limits = cfg.limits;
    switch (cfg.model) {
        case Model::Hyper: {
            const Hypergraph h = gen_hyper(cfg.n, cfg.k, p, seed);
            if (event == Event::SlotPresence) return h.contains(first_slot(cfg.k));
            return find_loose_hc(h, limits).has_value();
        }
        case Model::DirHyper:
            return dir_event(gen_dir_hyper(cfg.n, cfg.k, p, seed), event, limits);
        case Model::Chain:
            return dir_event(chain_sample(cfg.n, cfg.k, p, cfg.i, seed).structure, event, limits);
        case Model::ColoredGraph: {
            const ColoredGraph g = gen_colored_graph(cfg.n, p, colors_for(cfg), seed);
            if (event == Event::SlotPresence) return g.color(0, 1).has_value();
            return find_rainbow_hc(g, limits).has_value();
        }
        case Model::ColoredDigraph:
            return colored_dir_event(gen_colored_digraph(cfg.n, p, colors_for(cfg), seed), event, limits);
        case Model::ChainColored:
            return colored_dir_event(chain_sample_colored(cfg.n, p, colors_for(cfg), cfg.i, seed).structure, event,
                                     limits);
        case Model::PipelineLoose: {
            PipelineOptions options;
            options.limits = limits;
            return pipeline_loose(cfg.n, cfg.k, p, cfg.f, seed, options).found;
        }
        case Model::PipelineRainbow:
            if (cfg.n % 2 == 0) return direct_rainbow(cfg.n, p, seed, limits).found;
            return pipeline_rainbow(cfg.n, p, seed, limits).found;
    }
    return false;
}

Tally run_trials(const ExperimentConfig& cfg, Event event, double p) {
    validate(cfg);
    const std::uint64_t trials = cfg.trials;
    std::vector<unsigned char> outcomes(trials, 0);
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failureMutex;
    auto work = [&] {
        while (true) {
            const std::uint64_t t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                outcomes[t] = run_trial(cfg, event, p, t) ? 1 : 0;
            } catch (...) {
                std::lock_guard lock(failureMutex);
                if (!failure) failure = std::current_exception();
                next.store(trials);
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    Tally tally;
    tally.trials = trials;
    for (unsigned char o : outcomes) tally.successes += o;
    return tally;
}

Estimate estimate(const ExperimentConfig& cfg) { return wilson_estimate(run_trials(cfg, event_for(cfg), cfg.p)); }

DominanceReport dominance_test(const ExperimentConfig& cfgA, const ExperimentConfig& cfgB, std::uint64_t trials) {
    ExperimentConfig a = cfgA;
    ExperimentConfig b = cfgB;
    a.trials = trials;
    b.trials = trials;
    DominanceReport report{estimate(a), estimate(b), false};
    report.consistent = report.estimateB.pointEstimate >=
                        report.estimateA.pointEstimate - (report.estimateA.half_width() + report.estimateB.half_width());
    return report;
}

std::vector<SweepRow> sweep(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<SweepRow> rows;
    rows.reserve(cfg.pGrid.size());
    for (double p : cfg.pGrid) rows.push_back({p, wilson_estimate(run_trials(cfg, event_for(cfg), p))});
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "p,trials,successes,phat,ci_lo,ci_hi\n";
    char line[256];
    for (const auto& row : rows) {
        const Estimate& e = row.estimate;
        std::snprintf(line, sizeof line, "%.10g,%llu,%llu,%.6f,%.6f,%.6f\n", row.p,
                      static_cast<unsigned long long>(e.trials), static_cast<unsigned long long>(e.successes),
                      e.pointEstimate, e.ciLow, e.ciHigh);
        out << line;
    }
    return out.str();
}

bool nondecreasing_within_ci(const std::vector<SweepRow>& rows) {
    for (std::size_t g = 1; g < rows.size(); ++g) {
        const Estimate& prev = rows[g - 1].estimate;
        const Estimate& cur = rows[g].estimate;
        if (cur.pointEstimate < prev.pointEstimate - (prev.half_width() + cur.half_width())) return false;
    }
    return true;
}

ExactSuiteReport exact_dominance_suite(const std::vector<double>& ps) {
    constexpr int n = 4;
    constexpr int k = 2;
    constexpr std::uint64_t slots = 6;
    ExactSuiteReport report;
    report.ps = ps;
    for (double p : ps) {
        std::vector<double> row;
        for (std::uint64_t i = 0; i <= slots; ++i) row.push_back(exact_event_probability(n, k, p, i, ChainEvent::DirHC));
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i] < row[i - 1] - 1e-12) report.nondecreasing = false;
        report.table.push_back(std::move(row));
    }
    return report;
}

std::string exact_suite_csv(const ExactSuiteReport& report) {
    std::ostringstream out;
    out << "p";
    const std::size_t columns = report.table.empty() ? 0 : report.table.front().size();
    for (std::size_t i = 0; i < columns; ++i) out << ",i" << i;
    out << '\n';
    char cell[64];
    for (std::size_t r = 0; r < report.table.size(); ++r) {
        std::snprintf(cell, sizeof cell, "%.10g", report.ps[r]);
        out << cell;
        for (double v : report.table[r]) {
            std::snprintf(cell, sizeof cell, ",%.12f", v);
            out << cell;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<VertexId> random_permutation(int n, const Seed& seed) {
    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = static_cast<VertexId>(v);
    // Fisher-Yates, one counter per position.
    for (int v = n - 1; v > 0; --v) {
        const auto j = static_cast<std::size_t>(seed.below(static_cast<std::uint64_t>(v), 0, static_cast<std::uint64_t>(v + 1)));
        std::swap(perm[static_cast<std::size_t>(v)], perm[j]);
    }
    return perm;
}

std::optional<DirLooseCycle> find_dir_loose_hc_relabeled(const DirHypergraph& d, const Seed& seed,
                                                         const OracleLimits& limits) {
    const auto perm = random_permutation(d.n(), seed);
    std::vector<VertexId> inverse(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) inverse[perm[v]] = static_cast<VertexId>(v);
    auto w = find_dir_loose_hc(relabel(d, perm), std::nullopt, limits);
    if (!w) return std::nullopt;
    return relabel(*w, inverse);
}

double chi_square_uniform_p_value(std::span<const std::uint64_t> counts) {
    if (counts.size() < 2) throw ParameterError("chi-square needs at least two categories");
    double total = 0.0;
    for (auto c : counts) total += static_cast<double>(c);
    if (total <= 0.0) throw ParameterError("chi-square needs at least one observation");
    const double expected = total / static_cast<double>(counts.size());
    double stat = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    const double df = static_cast<double>(counts.size() - 1);
    return boost::math::gamma_q(df / 2.0, stat / 2.0);
}

}  // namespace hamlab
