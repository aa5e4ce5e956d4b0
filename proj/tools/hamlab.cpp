#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "hamlab/coupling.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/experiments.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/oracles.hpp"
#include "hamlab/reductions.hpp"
#include "hamlab/serialization.hpp"
#include "hamlab/verify.hpp"

using namespace hamlab;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, Model> kModels{
    {"hyper", Model::Hyper},
    {"dirhyper", Model::DirHyper},
    {"colored", Model::ColoredGraph},
    {"colored-di", Model::ColoredDigraph},
    {"chain", Model::Chain},
    {"chain-colored", Model::ChainColored},
    {"pipeline-loose", Model::PipelineLoose},
    {"pipeline-rainbow", Model::PipelineRainbow},
};

const std::map<std::string, Event> kEvents{
    {"loose", Event::LooseHC},
    {"dirloose", Event::DirLooseHC},
    {"rainbow", Event::RainbowHC},
    {"rainbow-di", Event::RainbowDirHC},
    {"slot", Event::SlotPresence},
    {"pipeline", Event::PipelineSuccess},
};

struct Options {
    int n = 6;
    int k = 3;
    double p = 0.5;
    int c = 0;
    int f = 3;
    std::uint64_t i = 0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    bool csv = false;
    bool json = false;
    std::string out;

    Model model = Model::Hyper;
    Model modelB = Model::DirHyper;
    std::optional<Event> event;
    std::string preset;
    double presetT = 1.0;
    double presetK = 1.0;
    double epsilon = 0.5;
    double slack = 1.0;
    std::vector<double> grid;

    std::string input;
    std::string witness;
    std::optional<VertexId> link;
    std::vector<VertexId> estar;
    std::optional<Color> c1;
    bool count = false;
    bool allRounds = false;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw ParameterError("cannot open output file " + o.out);
    file << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump() + "\n"); }

Json read_json(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ParameterError("cannot open input file " + path);
    try {
        return Json::parse(file);
    } catch (const Json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::string fmt(const char* spec, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, value);
    return buf;
}

Json estimate_json(const Estimate& e) {
    return Json{{"trials", e.trials},
                {"successes", e.successes},
                {"phat", e.pointEstimate},
                {"ci_lo", e.ciLow},
                {"ci_hi", e.ciHigh}};
}

void add_size_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--n", o.n, "vertex count");
    cmd->add_option("--k", o.k, "uniformity");
    cmd->add_option("--p", o.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--c", o.c, "number of colors (default n)");
    cmd->add_option("--seed", o.seed, "master seed");
}

void add_output_flags(CLI::App* cmd, Options& o, bool tabular) {
    cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
    if (tabular) {
        auto* json = cmd->add_flag("--json", o.json, "JSON output");
        cmd->add_flag("--csv", o.csv, "CSV output")->excludes(json);
    } else {
        cmd->add_flag("--json", o.json, "JSON output (default)");
    }
}

void add_model_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--model", o.model, "model")->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
    cmd->add_option("--event", o.event, "event")->transform(CLI::CheckedTransformer(kEvents, CLI::ignore_case));
    cmd->add_option("--f", o.f, "exposure rounds for pipelines");
    cmd->add_option("--i", o.i, "chain index");
    cmd->add_option("--trials", o.trials, "number of trials");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    cmd->add_option("--preset", o.preset, "parameter regime")->check(CLI::IsMember({"thm2", "thm3", "thm4"}));
    cmd->add_option("--t", o.presetT, "thm2 multiplier in p = t log n / n^(k-1)");
    cmd->add_option("--K", o.presetK, "thm3 multiplier in p = K log n / n");
    cmd->add_option("--epsilon", o.epsilon, "thm4 epsilon in p = (1 + eps) log n / n");
    cmd->add_option("--slack", o.slack, "thm4 color surplus multiplier");
}

ExperimentConfig config_from(const Options& o) {
    ExperimentConfig cfg;
    cfg.model = o.model;
    cfg.event = o.event;
    cfg.n = o.n;
    cfg.k = o.k;
    cfg.p = o.p;
    cfg.c = o.c;
    cfg.f = o.f;
    cfg.i = o.i;
    cfg.trials = o.trials;
    cfg.masterSeed = o.seed;
    cfg.workers = o.threads;
    cfg.pGrid = o.grid;
    if (o.preset == "thm2") {
        cfg.p = preset_thm2_p(o.n, o.k, o.presetT);
    } else if (o.preset == "thm3") {
        cfg.p = preset_thm3_p(o.n, o.presetK);
    } else if (o.preset == "thm4") {
        cfg.p = preset_thm4_p(o.n, o.epsilon);
        cfg.c = preset_thm4_c(o.n, o.slack);
    }
    return cfg;
}

int colors(const Options& o) { return o.c > 0 ? o.c : o.n; }

Json generate(const Options& o) {
    const Seed seed(o.seed);
    switch (o.model) {
        case Model::Hyper: return to_json(gen_hyper(o.n, o.k, o.p, seed));
        case Model::DirHyper: return to_json(gen_dir_hyper(o.n, o.k, o.p, seed));
        case Model::ColoredGraph: return to_json(gen_colored_graph(o.n, o.p, colors(o), seed));
        case Model::ColoredDigraph: return to_json(gen_colored_digraph(o.n, o.p, colors(o), seed));
        case Model::Chain: return to_json(chain_sample(o.n, o.k, o.p, o.i, seed).structure);
        case Model::ChainColored: return to_json(chain_sample_colored(o.n, o.p, colors(o), o.i, seed).structure);
        default: throw ParameterError("gen supports the structure and chain models only");
    }
}

Json structure_input(const Options& o) { return o.input.empty() ? generate(o) : read_json(o.input); }

int cmd_gen(const Options& o) {
    emit_json(o, generate(o));
    return kExitTrue;
}

int cmd_verify(const Options& o) {
    if (o.input.empty() || o.witness.empty()) throw ParameterError("verify needs --input and --witness");
    const Json s = read_json(o.input);
    // accepts a bare witness or the output of `find`
    Json w = read_json(o.witness);
    if (w.is_object() && w.contains("witness")) w = w["witness"];
    bool ok = false;
    switch (detect_kind(s)) {
        case StructureKind::Hypergraph: ok = verify_loose_hc(hypergraph_from_json(s), loose_cycle_from_json(w)); break;
        case StructureKind::DirHypergraph:
            ok = verify_dir_loose_hc(dir_hypergraph_from_json(s), dir_loose_cycle_from_json(w));
            break;
        case StructureKind::ColoredGraph:
            ok = verify_rainbow_hc(colored_graph_from_json(s), rainbow_cycle_from_json(w));
            break;
        case StructureKind::ColoredDigraph:
            ok = verify_rainbow_hc(colored_digraph_from_json(s), rainbow_cycle_from_json(w));
            break;
    }
    emit_json(o, Json{{"valid", ok}});
    return ok ? kExitTrue : kExitFalse;
}

int cmd_find(const Options& o) {
    const Json s = structure_input(o);
    Json result;
    bool found = false;
    switch (detect_kind(s)) {
        case StructureKind::Hypergraph: {
            const Hypergraph h = hypergraph_from_json(s);
            if (o.count) {
                const auto count = count_loose_hc(h);
                result["count"] = count;
                found = count > 0;
                break;
            }
            const auto w = find_loose_hc(h);
            found = w.has_value();
            if (w) result["witness"] = to_json(*w);
            break;
        }
        case StructureKind::DirHypergraph: {
            const auto w = find_dir_loose_hc(dir_hypergraph_from_json(s), o.link);
            found = w.has_value();
            if (w) result["witness"] = to_json(*w);
            break;
        }
        case StructureKind::ColoredGraph: {
            const auto w = find_rainbow_hc(colored_graph_from_json(s));
            found = w.has_value();
            if (w) result["witness"] = to_json(*w);
            break;
        }
        case StructureKind::ColoredDigraph: {
            const auto w = find_rainbow_dir_hc(colored_digraph_from_json(s));
            found = w.has_value();
            if (w) result["witness"] = to_json(*w);
            break;
        }
    }
    result["found"] = found;
    emit_json(o, result);
    return found ? kExitTrue : kExitFalse;
}

int cmd_chain(const Options& o) {
    const Seed seed(o.seed);
    Json j;
    if (o.model == Model::ChainColored) {
        const auto point = chain_sample_colored(o.n, o.p, colors(o), o.i, seed);
        j = Json{{"n", point.n}, {"c", point.c}, {"p", point.p}, {"i", point.i}, {"structure", to_json(point.structure)}};
    } else {
        const auto point = chain_sample(o.n, o.k, o.p, o.i, seed);
        j = Json{{"n", point.n}, {"k", point.k}, {"p", point.p}, {"i", point.i}, {"structure", to_json(point.structure)}};
    }
    emit_json(o, j);
    return kExitTrue;
}

int cmd_contract(const Options& o) {
    const Json s = structure_input(o);
    switch (detect_kind(s)) {
        case StructureKind::DirHypergraph: {
            const DirHypergraph d = dir_hypergraph_from_json(s);
            if (static_cast<int>(o.estar.size()) != d.k()) throw ParameterError("--estar must list k vertices");
            const LooseContraction ctr(d.n(), o.estar);
            emit_json(o, Json{{"star", ctr.star()}, {"contracted", to_json(contract_loose(d, ctr))}});
            return kExitTrue;
        }
        case StructureKind::ColoredDigraph: {
            const ColoredDigraph g = colored_digraph_from_json(s);
            if (o.estar.size() != 2 || !o.c1) throw ParameterError("colored contraction needs --estar x,y and --c1");
            const ColoredContraction ctr(g.n(), o.estar[0], o.estar[1], *o.c1, o.p);
            emit_json(o, Json{{"star", ctr.star()},
                              {"s_prime", ctr.s_prime()},
                              {"contracted", to_json(contract_colored(g, ctr))}});
            return kExitTrue;
        }
        default: throw ParameterError("contract needs a directed hypergraph or a colored digraph");
    }
}

int cmd_pipeline(const Options& o) {
    const Seed seed(o.seed);
    Json j;
    bool found = false;
    if (o.model == Model::PipelineRainbow) {
        if (o.n % 2 == 0) {
            const auto r = direct_rainbow(o.n, o.p, seed);
            found = r.found;
            j = Json{{"found", found}, {"params", {{"p", o.p}}}};
            if (r.witness) j["witness"] = to_json(*r.witness);
        } else {
            const auto r = pipeline_rainbow(o.n, o.p, seed);
            found = r.found;
            j = Json{{"found", found}, {"params", {{"p", r.p}, {"q", r.q}, {"s", r.s}}}};
            if (r.witness) j["witness"] = to_json(*r.witness);
        }
    } else {
        PipelineOptions options;
        options.stopAtFirstSuccess = !o.allRounds;
        const auto r = pipeline_loose(o.n, o.k, o.p, o.f, seed, options);
        found = r.found;
        j = Json{{"found", found},
                 {"params", {{"p", r.params.p}, {"q", r.params.q}, {"s", r.params.s}, {"f", r.params.f}}}};
        if (r.round) j["round"] = *r.round;
        if (r.witness) j["witness"] = to_json(*r.witness);
        if (o.allRounds) j["rounds"] = r.roundOutcomes;
    }
    emit_json(o, j);
    return found ? kExitTrue : kExitFalse;
}

int cmd_estimate(const Options& o) {
    const ExperimentConfig cfg = config_from(o);
    const Estimate e = estimate(cfg);
    if (o.csv) {
        std::ostringstream out;
        out << "p,trials,successes,phat,ci_lo,ci_hi\n";
        out << fmt("%.10g", cfg.p) << ',' << e.trials << ',' << e.successes << ',' << fmt("%.6f", e.pointEstimate)
            << ',' << fmt("%.6f", e.ciLow) << ',' << fmt("%.6f", e.ciHigh) << '\n';
        emit(o, out.str());
    } else {
        Json j = estimate_json(e);
        j["p"] = cfg.p;
        j["c"] = colors_for(cfg);
        emit_json(o, j);
    }
    return kExitTrue;
}

int cmd_dominance(const Options& o) {
    ExperimentConfig a = config_from(o);
    ExperimentConfig b = a;
    b.model = o.modelB;
    b.event.reset();
    if (o.event) throw ParameterError("dominance uses each model's own event; omit --event");
    a.event.reset();
    const DominanceReport r = dominance_test(a, b, o.trials);
    emit_json(o, Json{{"A", estimate_json(r.estimateA)}, {"B", estimate_json(r.estimateB)}, {"consistent", r.consistent}});
    return r.consistent ? kExitTrue : kExitFalse;
}

int cmd_sweep(const Options& o) {
    if (o.grid.empty()) throw ParameterError("sweep needs --grid");
    const auto rows = sweep(config_from(o));
    if (o.json) {
        Json j = Json::array();
        for (const auto& row : rows) {
            Json e = estimate_json(row.estimate);
            e["p"] = row.p;
            j.push_back(e);
        }
        emit_json(o, j);
    } else {
        emit(o, sweep_csv(rows));
    }
    return kExitTrue;
}

int cmd_exact(const Options& o) {
    const auto report = o.grid.empty() ? exact_dominance_suite() : exact_dominance_suite(o.grid);
    if (o.json) {
        emit_json(o, Json{{"p", report.ps}, {"table", report.table}, {"nondecreasing", report.nondecreasing}});
    } else {
        emit(o, exact_suite_csv(report));
    }
    return report.nondecreasing ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hamlab: random (hyper)graph Hamiltonicity experiments"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "sample a structure");
    add_size_flags(gen, o);
    add_model_flags(gen, o);
    add_output_flags(gen, o, false);

    auto* verify = app.add_subcommand("verify", "check a witness against a structure");
    verify->add_option("--input", o.input, "structure JSON")->required();
    verify->add_option("--witness", o.witness, "witness JSON")->required();
    add_output_flags(verify, o, false);

    auto* find = app.add_subcommand("find", "search a structure for a Hamilton cycle");
    add_size_flags(find, o);
    add_model_flags(find, o);
    find->add_option("--input", o.input, "structure JSON (otherwise sampled from the model flags)");
    find->add_option("--link", o.link, "required link vertex (directed hypergraphs)");
    find->add_flag("--count", o.count, "count loose Hamilton cycles (hypergraphs)");
    add_output_flags(find, o, false);

    auto* chain = app.add_subcommand("chain", "sample the interpolating structure at index i");
    add_size_flags(chain, o);
    add_model_flags(chain, o);
    add_output_flags(chain, o, false);

    auto* contract = app.add_subcommand("contract", "contract a fixed edge of a directed round");
    add_size_flags(contract, o);
    add_model_flags(contract, o);
    contract->add_option("--input", o.input, "round JSON (otherwise sampled from the model flags)");
    contract->add_option("--estar", o.estar, "contracted edge, in order")->delimiter(',')->required();
    contract->add_option("--c1", o.c1, "color of the contracted pair (colored rounds)");
    add_output_flags(contract, o, false);

    auto* pipeline = app.add_subcommand("pipeline", "run a contraction pipeline once");
    add_size_flags(pipeline, o);
    add_model_flags(pipeline, o);
    pipeline->add_flag("--all-rounds", o.allRounds, "search every round and report each outcome");
    add_output_flags(pipeline, o, false);

    auto* est = app.add_subcommand("estimate", "Monte Carlo estimate with a Wilson interval");
    add_size_flags(est, o);
    add_model_flags(est, o);
    add_output_flags(est, o, true);

    auto* dominance = app.add_subcommand("dominance", "compare the events of two models (B claimed larger)");
    add_size_flags(dominance, o);
    add_model_flags(dominance, o);
    dominance->add_option("--model-b", o.modelB, "the model claimed to dominate")
        ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
    add_output_flags(dominance, o, false);

    auto* sw = app.add_subcommand("sweep", "estimates over a probability grid");
    add_size_flags(sw, o);
    add_model_flags(sw, o);
    sw->add_option("--grid", o.grid, "comma-separated ascending probabilities")->delimiter(',');
    add_output_flags(sw, o, true);

    auto* exact = app.add_subcommand("exact", "exact chain table for n = 4, k = 2");
    exact->add_option("--grid", o.grid, "probabilities (default 0.2,0.5,0.8)")->delimiter(',');
    add_output_flags(exact, o, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitTrue : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*verify) return cmd_verify(o);
        if (*find) return cmd_find(o);
        if (*chain) return cmd_chain(o);
        if (*contract) return cmd_contract(o);
        if (*pipeline) return cmd_pipeline(o);
        if (*est) return cmd_estimate(o);
        if (*dominance) return cmd_dominance(o);
        if (*sw) return cmd_sweep(o);
        if (*exact) return cmd_exact(o);
    } catch (const std::exception& e) {
        std::cerr << "hamlab: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
