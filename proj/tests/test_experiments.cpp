#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hamlab/errors.hpp"
#include "hamlab/experiments.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/verify.hpp"

using namespace hamlab;

TEST_CASE("Wilson interval properties") {
    for (std::uint64_t n : {1ull, 7ull, 100ull, 10000ull}) {
        for (std::uint64_t s = 0; s <= n; s += std::max<std::uint64_t>(1, n / 13)) {
            const Estimate e = wilson_estimate({n, s});
            CHECK(0.0 <= e.ciLow);
            CHECK(e.ciLow <= e.pointEstimate);
            CHECK(e.pointEstimate <= e.ciHigh);
            CHECK(e.ciHigh <= 1.0);
            CHECK(e.pointEstimate == doctest::Approx(double(s) / n));
        }
    }
    const Estimate zero = wilson_estimate({100, 0});
    CHECK(zero.ciLow == 0.0);
    CHECK(zero.ciHigh > 0.0);
    const Estimate all = wilson_estimate({100, 100});
    CHECK(all.ciHigh == 1.0);
    CHECK(all.ciLow < 1.0);
    // 50 / 100 at 95%: center 0.5, half-width z sqrt(0.25/100 + z^2/40000) / (1 + z^2/100)
    const Estimate half = wilson_estimate({100, 50});
    CHECK(half.ciLow == doctest::Approx(0.40383153).epsilon(1e-7));
    CHECK(half.ciHigh == doctest::Approx(0.59616847).epsilon(1e-7));
}

TEST_CASE("Wilson interval covers a known slot probability in at least 93% of repetitions") {
    ExperimentConfig cfg;
    cfg.model = Model::Hyper;
    cfg.event = Event::SlotPresence;
    cfg.n = 5;
    cfg.k = 2;
    cfg.p = 0.3;
    cfg.trials = 200;
    cfg.workers = 1;
    int covered = 0;
    for (std::uint64_t rep = 0; rep < 1000; ++rep) {
        cfg.masterSeed = 1000 + rep;
        const Estimate e = estimate(cfg);
        covered += e.ciLow <= 0.3 && 0.3 <= e.ciHigh;
    }
    CHECK(covered >= 930);
}

TEST_CASE("aggregation order does not change the estimate") {
    std::vector<Tally> parts;
    for (std::uint64_t t = 1; t <= 20; ++t) parts.push_back({t * 3, t});
    Tally forward;
    for (const auto& p : parts) forward += p;
    auto shuffled = parts;
    std::mt19937 rng(5);
    for (int r = 0; r < 10; ++r) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Tally again;
        for (const auto& p : shuffled) again += p;
        CHECK(again == forward);
        CHECK(wilson_estimate(again) == wilson_estimate(forward));
    }

    ExperimentConfig cfg;
    cfg.model = Model::DirHyper;
    cfg.n = 6;
    cfg.p = 0.2;
    cfg.trials = 400;
    cfg.workers = 1;
    const Estimate serial = estimate(cfg);
    cfg.workers = 4;
    CHECK(estimate(cfg) == serial);
}

TEST_CASE("estimate endpoints and errors") {
    ExperimentConfig cfg;
    cfg.model = Model::Hyper;
    cfg.n = 6;
    cfg.k = 3;
    cfg.trials = 50;
    cfg.p = 1.0;
    CHECK(estimate(cfg).pointEstimate == 1.0);
    cfg.p = 0.0;
    CHECK(estimate(cfg).pointEstimate == 0.0);
    cfg.trials = 0;
    CHECK_THROWS_AS(estimate(cfg), ParameterError);
    cfg.trials = 10;
    cfg.n = 30;
    cfg.p = 0.5;
    CHECK_THROWS_AS(estimate(cfg), CapacityError);
    cfg.n = 6;
    cfg.event = Event::RainbowHC;
    CHECK_THROWS_AS(estimate(cfg), ParameterError);
}

TEST_CASE("Monte Carlo Hamiltonicity of G(4, 1/2) matches 10/64") {
    ExperimentConfig cfg;
    cfg.model = Model::Hyper;
    cfg.n = 4;
    cfg.k = 2;
    cfg.p = 0.5;
    cfg.trials = 100000;
    const Estimate e = estimate(cfg);
    CHECK(e.ciLow <= 10.0 / 64);
    CHECK(10.0 / 64 <= e.ciHigh);
}

TEST_CASE("dominance examples") {
    ExperimentConfig a;
    a.model = Model::Hyper;
    a.n = 6;
    a.k = 3;
    a.p = 0.3;
    ExperimentConfig b = a;
    b.model = Model::DirHyper;
    const DominanceReport loose = dominance_test(a, b, 10000);
    CHECK(loose.consistent);
    CHECK(loose.estimateA.trials == 10000);

    CHECK(dominance_test(a, a, 500).consistent);

    ExperimentConfig ra;
    ra.model = Model::ColoredGraph;
    ra.n = 5;
    ra.c = 5;
    ra.p = 0.8;
    ExperimentConfig rb = ra;
    rb.model = Model::ColoredDigraph;
    CHECK(dominance_test(ra, rb, 10000).consistent);

    // reversed claim on a clearly separated pair is rejected
    ExperimentConfig lo = a;
    lo.p = 0.05;
    ExperimentConfig hi = a;
    hi.p = 0.6;
    CHECK_FALSE(dominance_test(hi, lo, 2000).consistent);
}

TEST_CASE("sweep endpoints, monotonicity and determinism") {
    ExperimentConfig cfg;
    cfg.model = Model::Hyper;
    cfg.n = 8;
    cfg.k = 3;
    cfg.trials = 300;
    cfg.pGrid = {0.0, 1.0};
    const auto ends = sweep(cfg);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].estimate.pointEstimate == 0.0);
    CHECK(ends[1].estimate.pointEstimate == 1.0);

    cfg.pGrid = {0.0, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 1.0};
    const auto rows = sweep(cfg);
    CHECK(nondecreasing_within_ci(rows));
    // coupled trials: counts are monotone exactly, not just within sampling error
    for (std::size_t g = 1; g < rows.size(); ++g) CHECK(rows[g].estimate.successes >= rows[g - 1].estimate.successes);
    CHECK(sweep_csv(rows) == sweep_csv(sweep(cfg)));
    const std::string csv = sweep_csv(ends);
    CHECK(csv.rfind("p,trials,successes,phat,ci_lo,ci_hi\n", 0) == 0);
    CHECK(csv.find("\n0,300,0,0.000000,0.000000,") != std::string::npos);

    cfg.pGrid = {0.5, 0.2};
    CHECK_THROWS_AS(sweep(cfg), ParameterError);
}

TEST_CASE("presets") {
    CHECK(preset_thm2_p(12, 3, 1.0) == doctest::Approx(std::log(12.0) / 144));
    CHECK(preset_thm3_p(20, 2.0) == doctest::Approx(2 * std::log(20.0) / 20));
    CHECK(preset_thm4_p(10, 0.5) == doctest::Approx(1.5 * std::log(10.0) / 10));
    CHECK(preset_thm4_c(10, 1.0) == 10 + static_cast<int>(std::ceil(10 / std::log(std::log(10.0)))));
    CHECK(preset_thm2_p(3, 2, 1000.0) == 1.0);
    CHECK_THROWS_AS(preset_thm4_c(2, 1.0), ParameterError);
}

TEST_CASE("exact dominance suite") {
    const auto report = exact_dominance_suite();
    REQUIRE(report.table.size() == 3);
    CHECK(report.nondecreasing);
    CHECK(report.table[1][0] == doctest::Approx(10.0 / 64).epsilon(1e-12));
    CHECK(report.table[1][6] == doctest::Approx(1194.0 / 4096).epsilon(1e-12));
    CHECK(report.table[1][6] >= report.table[1][0]);

    const auto flat = exact_dominance_suite({0.0, 1.0});
    for (std::size_t r = 0; r < 2; ++r)
        for (double v : flat.table[r]) CHECK(v == flat.table[r][0]);
    CHECK(flat.table[0][0] == 0.0);
    CHECK(flat.table[1][0] == 1.0);
    CHECK(exact_suite_csv(report) == exact_suite_csv(exact_dominance_suite()));
}

TEST_CASE("relabeled finder returns verified witnesses in original labels") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const DirHypergraph d = gen_dir_hyper(8, 3, 0.05, Seed(20).derive(s));
        const auto w = find_dir_loose_hc_relabeled(d, Seed(21).derive(s));
        CHECK(w.has_value() == find_dir_loose_hc(d).has_value());
        if (w) CHECK(verify_dir_loose_hc(d, *w));
    }
    const auto perm = random_permutation(10, Seed(3));
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v = 0; v < 10; ++v) CHECK(sorted[v] == v);
}

TEST_CASE("chi-square p-value") {
    const std::vector<std::uint64_t> even{100, 100, 100, 100};
    CHECK(chi_square_uniform_p_value(even) == doctest::Approx(1.0));
    // statistic 4 with 1 degree of freedom
    const std::vector<std::uint64_t> skew{60, 40};
    CHECK(chi_square_uniform_p_value(skew) == doctest::Approx(0.0455002638964).epsilon(1e-9));
    const std::vector<std::uint64_t> lopsided{1000, 0, 0};
    CHECK(chi_square_uniform_p_value(lopsided) < 1e-100);
}
