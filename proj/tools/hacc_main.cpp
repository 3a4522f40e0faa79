// Command-line front end: compute metrics from prediction files, derive
// parameters from rater annotations, run parameter sweeps and the
// confusion-matrix invariance battery, or bundle everything into one report.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hacc/analysis.hpp"
#include "hacc/csv.hpp"
#include "hacc/elicitation.hpp"
#include "hacc/format.hpp"
#include "hacc/metrics.hpp"
#include "hacc/report.hpp"
#include "hacc/rng.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_parameter = 3;
constexpr int exit_io = 4;

int exit_code_for(const hacc::error& e) {
    switch (e.code()) {
        case hacc::errc::io_error:
            return exit_io;
        case hacc::errc::invalid_parameter:
        case hacc::errc::tau_below_chance:
        case hacc::errc::tau_out_of_range:
        case hacc::errc::degenerate_at_one:
        case hacc::errc::prevalence_not_half:
        case hacc::errc::degenerate_raters:
            return exit_parameter;
        default:
            return exit_validation;
    }
}

struct common_options {
    std::string predictions;
    bool raw_scores = false;
    std::string format = "json";
    std::string out;
    std::string positive;
    std::string timestamp;
};

hacc::report_format parse_format(const std::string& f) {
    if (f == "json") return hacc::report_format::json;
    if (f == "tsv") return hacc::report_format::tsv;
    throw hacc::error(hacc::errc::invalid_parameter, "unknown format '" + f + "'");
}

void deliver(const std::string& content, const std::string& out) {
    if (out.empty())
        std::fwrite(content.data(), 1, content.size(), stdout);
    else
        hacc::write_file(out, content);
}

hacc::dataset load_predictions(const common_options& opts, hacc::report_doc* doc) {
    if (opts.predictions.empty())
        throw hacc::error(hacc::errc::invalid_parameter, "--predictions is required");
    auto ds = hacc::parse_predictions(
        opts.predictions,
        opts.raw_scores ? hacc::normalization::raw : hacc::normalization::simplex);
    if (doc) doc->inputs["predictions"] = hacc::digest_file(opts.predictions);
    return ds;
}

std::size_t resolve_positive(const hacc::dataset& ds, const std::string& flag) {
    if (flag.empty()) return ds.labels.size() - 1;
    auto idx = ds.labels.index_of(flag);
    if (!idx)
        throw hacc::error(hacc::errc::unknown_label,
                          "--positive label '" + flag + "' not in the dataset");
    return *idx;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::string item;
    for (char c : text + ",") {
        if (c == ',') {
            if (!item.empty()) values.push_back(hacc::parse_double(item, what));
            item.clear();
        } else {
            item += c;
        }
    }
    if (values.empty())
        throw hacc::error(hacc::errc::invalid_parameter, "empty list for " + what);
    return values;
}

// --priorities: uniform | preset:<name> | name=w,name=w | @file
hacc::priority_vector resolve_priorities(const std::string& spec, const hacc::dataset& ds,
                                         hacc::report_doc* doc, hacc::param_source* src) {
    if (spec == "uniform") {
        if (src) *src = {"flag", "uniform"};
        return hacc::priority_vector::uniform(ds.labels);
    }
    if (spec.rfind("preset:", 0) == 0) {
        const std::string name = spec.substr(7);
        hacc::priority_preset preset;
        if (name == "specificity")
            preset = hacc::priority_preset::favor_specificity;
        else if (name == "sensitivity")
            preset = hacc::priority_preset::favor_sensitivity;
        else if (name == "balanced")
            preset = hacc::priority_preset::balanced;
        else
            throw hacc::error(hacc::errc::invalid_parameter,
                              "unknown preset '" + name + "'");
        if (src) *src = {"preset", name};
        return hacc::priorities_from_preset(ds.labels, preset);
    }
    if (!spec.empty() && spec[0] == '@') {
        const std::string path = spec.substr(1);
        json parsed = json::parse(hacc::read_file(path));
        if (parsed.contains("priorities")) parsed = parsed["priorities"];
        if (parsed.contains("weights")) parsed = parsed["weights"];
        std::map<std::string, double> weights;
        for (const auto& [label, w] : parsed.items())
            weights[label] = w.get<double>();
        if (doc) doc->inputs["priorities"] = hacc::digest_file(path);
        if (src) *src = {"file", path};
        return hacc::priority_vector::from_map(ds.labels, weights);
    }
    if (src) *src = {"flag", ""};
    return hacc::priority_vector::from_map(ds.labels, hacc::parse_priority_pairs(spec));
}

// --complexity: const:<v> | @file.csv | @params.json
hacc::complexity_assignment resolve_complexity(const std::string& spec,
                                               hacc::report_doc* doc,
                                               hacc::param_source* src,
                                               std::optional<double>* const_value) {
    if (spec.rfind("const:", 0) == 0) {
        const double v = hacc::parse_double(spec.substr(6), "constant complexity");
        if (src) *src = {"flag", "const"};
        if (const_value) *const_value = v;
        return hacc::complexity_assignment::constant(v);
    }
    if (!spec.empty() && spec[0] == '@') {
        const std::string path = spec.substr(1);
        const std::string content = hacc::read_file(path);
        if (doc) doc->inputs["complexity"] = hacc::digest_file(path);
        if (src) *src = {"file", path};
        std::map<std::string, double> values;
        if (!content.empty() && content[0] == '{') {
            json parsed = json::parse(content);
            if (parsed.contains("complexity")) parsed = parsed["complexity"];
            if (parsed.contains("values")) parsed = parsed["values"];
            for (const auto& [id, v] : parsed.items()) values[id] = v.get<double>();
            return hacc::complexity_assignment::per_instance(values);
        }
        return hacc::complexity_assignment::per_instance(hacc::parse_complexity_csv(path));
    }
    throw hacc::error(hacc::errc::invalid_parameter,
                      "--complexity wants const:<v> or @<file>");
}

hacc::penalty_kind parse_penalty(const std::string& name) {
    if (name == "standard") return hacc::penalty_kind::standard;
    if (name == "risk") return hacc::penalty_kind::risk;
    throw hacc::error(hacc::errc::invalid_parameter, "unknown penalty '" + name + "'");
}

// ---- compute ----------------------------------------------------------

struct compute_options {
    common_options common;
    std::string tau;
    std::string priorities;
    std::string complexity;
    std::string penalty = "standard";
};

int run_compute(const compute_options& opts) {
    hacc::report_doc doc;
    doc.timestamp = opts.common.timestamp;
    auto ds = load_predictions(opts.common, &doc);
    const std::size_t positive = resolve_positive(ds, opts.common.positive);
    const bool binary = ds.labels.size() == 2;
    doc.positive_label = binary ? ds.labels.at(positive) : "";

    const hacc::penalty_kind penalty = parse_penalty(opts.penalty);
    doc.penalty = opts.penalty;

    double tau = ds.labels.chance();
    doc.tau_source = {"default", "chance"};
    if (!opts.tau.empty()) {
        tau = hacc::parse_double(opts.tau, "--tau");
        doc.tau_source = {"flag", ""};
    }
    doc.tau = tau;

    auto priorities = hacc::priority_vector::uniform(ds.labels);
    doc.priorities_source = {"default", "uniform"};
    if (!opts.priorities.empty())
        priorities = resolve_priorities(opts.priorities, ds, &doc, &doc.priorities_source);
    for (std::size_t c = 0; c < ds.labels.size(); ++c)
        doc.priorities[ds.labels.at(c)] = priorities.at(c);

    auto complexity = hacc::complexity_assignment::constant();
    doc.complexity_source = {"default", "const"};
    doc.complexity_const = 1.0;
    if (!opts.complexity.empty()) {
        doc.complexity_const.reset();
        complexity = resolve_complexity(opts.complexity, &doc, &doc.complexity_source,
                                        &doc.complexity_const);
    }

    doc.metrics["regular_accuracy"] = hacc::regular_accuracy(ds);
    doc.metrics["balanced_accuracy"] = hacc::balanced_accuracy(ds);
    if (binary) doc.metrics["auroc"] = hacc::auroc(ds, positive);

    doc.metrics["h_accuracy"] = hacc::h_accuracy(
        ds, {tau, priorities, complexity, penalty, positive});

    if (penalty == hacc::penalty_kind::standard) {
        if (!opts.tau.empty())
            doc.metrics["confident_accuracy"] = hacc::confident_accuracy(ds, tau);
        if (!opts.priorities.empty())
            doc.metrics["prioritized_accuracy"] = hacc::prioritized_accuracy(ds, priorities);
        if (!opts.complexity.empty())
            doc.metrics["practical_accuracy"] = hacc::practical_accuracy(ds, complexity);
    } else {
        const auto rates = hacc::risk_rates(ds, tau, positive);
        doc.metrics["net_benefit"] = hacc::net_benefit_via_ha(ds, tau, std::nullopt, positive);
        doc.metrics["standardized_net_benefit"] =
            doc.metrics["net_benefit"] / rates.prevalence;
        doc.metrics["youden_index"] = hacc::youden_index(rates);
    }

    deliver(hacc::emit_report(doc, parse_format(opts.common.format)), opts.common.out);
    return exit_ok;
}

// ---- elicit -----------------------------------------------------------

struct elicit_options {
    common_options common;
    std::string annotations;
    std::string gold;
    std::string decision;
    std::string positive_label = "1";
    double r = 0.5;
    std::string two_level;   // threshold, or empty for the auto median split
    std::string binarize;
    std::string quantiles = "0.5,0.33,0.2";
};

int run_elicit(const elicit_options& opts) {
    std::map<std::string, std::string> gold;
    std::optional<hacc::dataset> ds;
    if (!opts.gold.empty()) {
        gold = hacc::parse_gold(opts.gold);
    } else if (!opts.common.predictions.empty()) {
        ds = load_predictions(opts.common, nullptr);
        for (const auto& inst : ds->instances) gold[inst.id] = inst.true_label;
    } else {
        throw hacc::error(hacc::errc::invalid_parameter,
                          "gold labels needed: pass --gold or --predictions");
    }

    auto set = hacc::parse_annotations(opts.annotations, gold);
    const std::string decision = set.resolve_decision(opts.decision);

    const double tau = hacc::derive_tau_from_confidence(set, opts.r, decision);

    const auto performances =
        hacc::rater_performances(set, decision, opts.positive_label);
    const hacc::label_set binary({"0", "1"});
    const auto priorities = hacc::derive_priorities_from_raters(binary, performances);

    const auto profile = hacc::aggregate_complexity(set);
    const auto thresholds =
        hacc::quantile_thresholds(profile, parse_list(opts.quantiles, "--quantiles"));

    double d_threshold = thresholds.front();
    std::string d_kind = "two-level";
    std::string d_rule = "auto";
    if (!opts.binarize.empty()) {
        d_threshold = hacc::parse_double(opts.binarize, "--binary-threshold");
        d_kind = "binary";
        d_rule = "flag";
    } else if (!opts.two_level.empty()) {
        d_threshold = hacc::parse_double(opts.two_level, "--two-level-threshold");
        d_rule = "flag";
    }
    const auto complexity = d_kind == "binary"
                                ? hacc::binarize_complexity(profile, d_threshold)
                                : hacc::two_level_complexity(profile, d_threshold);

    if (ds) {
        for (const auto& label : hacc::zero_complexity_classes(*ds, complexity))
            std::fprintf(stderr,
                         "warning: class '%s' has zero complexity mass; "
                         "h-accuracy will reject this assignment\n",
                         label.c_str());
    }

    // parameters document; same deterministic formatting rules as reports
    std::string out = "{\"complexity\":{\"kind\":\"" + d_kind + "\",\"rule\":\"" + d_rule +
                      "\",\"threshold\":" + hacc::format_sig12(d_threshold) + ",\"values\":{";
    bool first = true;
    for (const auto& [id, mean] : profile.per_case_mean) {
        if (!first) out += ',';
        out += "\"" + id + "\":" + hacc::format_sig12(complexity.value_for(id));
        first = false;
    }
    out += "}},\"decision\":\"" + decision + "\",\"priorities\":{\"0\":" +
           hacc::format_sig12(priorities.at(0)) + ",\"1\":" +
           hacc::format_sig12(priorities.at(1)) + "},\"quantile_thresholds\":[";
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (i) out += ',';
        out += hacc::format_sig12(thresholds[i]);
    }
    out += "],\"r\":" + hacc::format_sig12(opts.r) +
           ",\"tau\":" + hacc::format_sig12(tau) + "}\n";

    deliver(out, opts.common.out);
    return exit_ok;
}

// ---- sweep ------------------------------------------------------------

struct sweep_options {
    common_options common;
    std::string kind;
    std::string taus;
    std::string p1s = "0.25,0.5,0.75";
    std::string proportions = "0,0.25,0.5,0.75,1";
    int samples = 100;
    std::uint64_t seed = 0;
    int threads = 1;
};

int run_sweep(const sweep_options& opts) {
    auto ds = load_predictions(opts.common, nullptr);
    hacc::sweep_table table;
    if (opts.kind == "tau") {
        table = hacc::tau_sweep(
            ds, opts.taus.empty() ? std::vector<double>{0.5, 0.6, 0.75, 0.8, 1.0}
                                  : parse_list(opts.taus, "--taus"));
    } else if (opts.kind == "priority") {
        table = hacc::priority_sweep(ds, parse_list(opts.p1s, "--p1s"));
    } else if (opts.kind == "surface") {
        table = hacc::complexity_surface(ds, parse_list(opts.proportions, "--proportions"),
                                         parse_list(opts.p1s, "--p1s"), opts.samples,
                                         opts.seed, opts.threads);
    } else if (opts.kind == "nbha") {
        table = hacc::nb_ha_curves(
            ds, opts.taus.empty() ? std::vector<double>{0.1, 0.25, 0.5, 0.75, 0.9}
                                  : parse_list(opts.taus, "--taus"));
    } else {
        throw hacc::error(hacc::errc::invalid_parameter,
                          "sweep kind must be tau|priority|surface|nbha");
    }
    deliver(hacc::emit_sweep(table, parse_format(opts.common.format)), opts.common.out);
    return exit_ok;
}

// ---- check ------------------------------------------------------------

struct check_options {
    int trials = 1000;
    std::uint64_t seed = 1;
};

int run_check(const check_options& opts) {
    using hacc::cm_transform_kind;
    struct property {
        std::string name;
        hacc::cm_metric metric;
        hacc::cm_transform transform;
        bool expect_invariant;
    };

    std::mt19937_64 gen(hacc::derive_subseed(opts.seed, 0));
    const double p1 = hacc::uniform_unit(gen);
    const double scale = 0.25 + 5.0 * hacc::uniform_unit(gen);

    const std::vector<property> battery = {
        {"I1 class-swap, prevalence-weighted priorities",
         hacc::prevalence_weighted_ha_metric(), {cm_transform_kind::class_swap, 0, 1, 1}, true},
        {"I2 add-tn, p(0)=0", hacc::prioritized_ha_metric(0, 1),
         {cm_transform_kind::add_tn, 7.25, 1, 1}, true},
        {"I3 add-tp, p(1)=0", hacc::prioritized_ha_metric(1, 0),
         {cm_transform_kind::add_tp, 7.25, 1, 1}, true},
        {"I4 add-fn, p(1)=0", hacc::prioritized_ha_metric(1, 0),
         {cm_transform_kind::add_fn, 3.5, 1, 1}, true},
        {"I5 add-fp, p(0)=0", hacc::prioritized_ha_metric(0, 1),
         {cm_transform_kind::add_fp, 3.5, 1, 1}, true},
        {"I6 uniform-scale, random fixed priorities",
         hacc::prioritized_ha_metric(1.0 - p1, p1),
         {cm_transform_kind::uniform_scale, 0, scale, 1}, true},
        {"I7 column-scale, balanced priorities", hacc::prioritized_ha_metric(0.5, 0.5),
         {cm_transform_kind::column_scale, 0, 2.0, 1.0}, false},
        {"I8 row-scale, p(0)=0", hacc::prioritized_ha_metric(0, 1),
         {cm_transform_kind::row_scale, 0, 2.5, 0.75}, true},
        {"I8 row-scale, p(1)=0", hacc::prioritized_ha_metric(1, 0),
         {cm_transform_kind::row_scale, 0, 2.5, 0.75}, true},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        const auto& prop = battery[i];
        const auto verdict = hacc::check_invariance(prop.metric, prop.transform, opts.trials,
                                                    hacc::derive_subseed(opts.seed, i + 1));
        const bool ok = verdict.invariant == prop.expect_invariant;
        all_ok = all_ok && ok;
        std::printf("[%s] %s: %s (expected %s, trials=%d, max|delta|=%s)\n",
                    ok ? "PASS" : "FAIL", prop.name.c_str(),
                    verdict.invariant ? "invariant" : "violated",
                    prop.expect_invariant ? "invariant" : "violated", opts.trials,
                    hacc::format_sig12(verdict.max_delta).c_str());
        if (!verdict.invariant && verdict.counterexample) {
            const auto& [before, after] = *verdict.counterexample;
            std::printf("       counterexample: (tp=%s, fn=%s, fp=%s, tn=%s) -> "
                        "(tp=%s, fn=%s, fp=%s, tn=%s)\n",
                        hacc::format_sig12(before.tp()).c_str(),
                        hacc::format_sig12(before.fn()).c_str(),
                        hacc::format_sig12(before.fp()).c_str(),
                        hacc::format_sig12(before.tn()).c_str(),
                        hacc::format_sig12(after.tp()).c_str(),
                        hacc::format_sig12(after.fn()).c_str(),
                        hacc::format_sig12(after.fp()).c_str(),
                        hacc::format_sig12(after.tn()).c_str());
        }
    }
    return all_ok ? exit_ok : exit_validation;
}

// ---- report -----------------------------------------------------------

struct report_options {
    compute_options compute;
    std::string annotations;
    std::string gold;
    std::string decision;
    std::string positive_label = "1";
    double r = 0.5;
    std::string taus;
    std::string p1s = "0.25,0.5,0.75";
    bool surface = false;
    std::string proportions = "0,0.25,0.5,0.75,1";
    int samples = 100;
    bool nbha = false;
    std::string nbha_taus = "0.1,0.25,0.5,0.75,0.9";
    std::uint64_t seed = 0;
};

int run_report(const report_options& opts) {
    hacc::report_doc doc;
    doc.timestamp = opts.compute.common.timestamp;
    doc.seed = opts.seed;
    doc.rng = hacc::rng_contract;

    auto ds = load_predictions(opts.compute.common, &doc);
    const std::size_t positive = resolve_positive(ds, opts.compute.common.positive);
    const bool binary = ds.labels.size() == 2;
    doc.positive_label = binary ? ds.labels.at(positive) : "";
    doc.penalty = opts.compute.penalty;
    const hacc::penalty_kind penalty = parse_penalty(opts.compute.penalty);

    // parameters: flags win, elicitation fills the gaps
    double tau = ds.labels.chance();
    doc.tau_source = {"default", "chance"};
    if (!opts.compute.tau.empty()) {
        tau = hacc::parse_double(opts.compute.tau, "--tau");
        doc.tau_source = {"flag", ""};
    }

    std::optional<hacc::priority_vector> priorities;
    if (!opts.compute.priorities.empty())
        priorities = resolve_priorities(opts.compute.priorities, ds, &doc,
                                        &doc.priorities_source);

    std::optional<hacc::complexity_assignment> complexity;
    doc.complexity_source = {"default", "const"};
    doc.complexity_const = 1.0;
    if (!opts.compute.complexity.empty()) {
        doc.complexity_const.reset();
        complexity = resolve_complexity(opts.compute.complexity, &doc,
                                        &doc.complexity_source, &doc.complexity_const);
    }

    if (!opts.annotations.empty()) {
        std::map<std::string, std::string> gold;
        if (!opts.gold.empty()) {
            gold = hacc::parse_gold(opts.gold);
            doc.inputs["gold"] = hacc::digest_file(opts.gold);
        } else {
            for (const auto& inst : ds.instances) gold[inst.id] = inst.true_label;
        }
        auto set = hacc::parse_annotations(opts.annotations, gold);
        doc.inputs["annotations"] = hacc::digest_file(opts.annotations);
        const std::string decision = set.resolve_decision(opts.decision);

        if (opts.compute.tau.empty()) {
            tau = hacc::derive_tau_from_confidence(set, opts.r, decision);
            doc.tau_source = {"derived", "confidence-tail r=" + hacc::format_sig12(opts.r)};
        }
        if (!priorities) {
            const auto performances =
                hacc::rater_performances(set, decision, opts.positive_label);
            // rater priorities come out in (negative, positive) order
            const auto derived = hacc::derive_priorities_from_raters(
                hacc::label_set({"0", "1"}), performances);
            std::vector<double> w(2);
            w[1 - positive] = derived.at(0);
            w[positive] = derived.at(1);
            priorities = hacc::priority_vector(ds.labels, w);
            doc.priorities_source = {"derived", "rater-performance"};
        }
        if (!complexity) {
            const auto profile = hacc::aggregate_complexity(set);
            const auto thresholds = hacc::quantile_thresholds(profile, {0.5});
            complexity = hacc::two_level_complexity(profile, thresholds.front());
            doc.complexity_source = {
                "derived", "two-level@" + hacc::format_sig12(thresholds.front())};
            doc.complexity_const.reset();
        }
    }

    if (!priorities) {
        priorities = hacc::priority_vector::uniform(ds.labels);
        doc.priorities_source = {"default", "uniform"};
    }
    if (!complexity) complexity = hacc::complexity_assignment::constant();

    doc.tau = tau;
    for (std::size_t c = 0; c < ds.labels.size(); ++c)
        doc.priorities[ds.labels.at(c)] = priorities->at(c);

    doc.metrics["regular_accuracy"] = hacc::regular_accuracy(ds);
    doc.metrics["balanced_accuracy"] = hacc::balanced_accuracy(ds);
    if (binary) doc.metrics["auroc"] = hacc::auroc(ds, positive);
    doc.metrics["h_accuracy"] =
        hacc::h_accuracy(ds, {tau, *priorities, *complexity, penalty, positive});
    if (penalty == hacc::penalty_kind::standard) {
        if (tau >= ds.labels.chance())
            doc.metrics["confident_accuracy"] = hacc::confident_accuracy(ds, tau);
        doc.metrics["prioritized_accuracy"] = hacc::prioritized_accuracy(ds, *priorities);
        doc.metrics["practical_accuracy"] = hacc::practical_accuracy(ds, *complexity);
    } else {
        const auto rates = hacc::risk_rates(ds, tau, positive);
        doc.metrics["net_benefit"] = hacc::net_benefit_via_ha(ds, tau, std::nullopt, positive);
        doc.metrics["standardized_net_benefit"] =
            doc.metrics["net_benefit"] / rates.prevalence;
        doc.metrics["youden_index"] = hacc::youden_index(rates);
    }

    // tau sweep defaults to five even steps from chance to 1
    std::vector<double> taus;
    if (opts.taus.empty()) {
        const double chance = ds.labels.chance();
        for (int i = 0; i <= 4; ++i) taus.push_back(chance + (1.0 - chance) * i / 4.0);
    } else {
        taus = parse_list(opts.taus, "--taus");
    }
    doc.sweeps.push_back({"tau", hacc::tau_sweep(ds, taus)});
    if (binary)
        doc.sweeps.push_back(
            {"priority", hacc::priority_sweep(ds, parse_list(opts.p1s, "--p1s"))});
    if (opts.surface && binary)
        doc.sweeps.push_back(
            {"surface",
             hacc::complexity_surface(ds, parse_list(opts.proportions, "--proportions"),
                                      parse_list(opts.p1s, "--p1s"), opts.samples,
                                      opts.seed)});
    if (opts.nbha && binary)
        doc.sweeps.push_back(
            {"nbha", hacc::nb_ha_curves(ds, parse_list(opts.nbha_taus, "--nbha-taus"))});

    deliver(hacc::emit_report(doc, parse_format(opts.compute.common.format)),
            opts.compute.common.out);
    return exit_ok;
}

void add_common(CLI::App* cmd, common_options& opts, bool needs_predictions = true) {
    auto* p = cmd->add_option("--predictions", opts.predictions,
                              "predictions CSV (instance_id,true_label,score:<label>,...)");
    if (needs_predictions) p->required();
    cmd->add_flag("--raw-scores", opts.raw_scores,
                  "accept score vectors that do not sum to 1");
    cmd->add_option("--format", opts.format, "output format: json|tsv");
    cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
    cmd->add_option("--positive", opts.positive,
                    "positive class label (default: last score column)");
    cmd->add_option("--timestamp", opts.timestamp,
                    "timestamp string to embed (omitted by default so runs stay "
                    "byte-reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"h-accuracy metrics engine"};
    app.require_subcommand(1);

    compute_options compute;
    auto* compute_cmd =
        app.add_subcommand("compute", "evaluate metrics on a predictions file");
    add_common(compute_cmd, compute.common);
    compute_cmd->add_option("--tau", compute.tau, "confidence or risk threshold");
    compute_cmd->add_option("--priorities", compute.priorities,
                            "uniform | preset:<name> | label=w,... | @file");
    compute_cmd->add_option("--complexity", compute.complexity, "const:<v> | @file");
    compute_cmd->add_option("--penalty", compute.penalty, "standard|risk");

    elicit_options elicit;
    auto* elicit_cmd = app.add_subcommand(
        "elicit", "derive tau, priorities and complexity from rater annotations");
    add_common(elicit_cmd, elicit.common, false);
    elicit_cmd->add_option("--annotations", elicit.annotations, "annotations CSV")
        ->required();
    elicit_cmd->add_option("--gold", elicit.gold, "gold CSV (instance_id,label)");
    elicit_cmd->add_option("--decision", elicit.decision,
                           "decision name (required with multi-decision studies)");
    elicit_cmd->add_option("--positive-label", elicit.positive_label,
                           "gold label treated as positive");
    elicit_cmd->add_option("--r", elicit.r,
                           "fraction of correct answers the tau tail must hold");
    elicit_cmd->add_option("--two-level-threshold", elicit.two_level,
                           "mean-complexity cutoff for the 1/2 vs 1 scale "
                           "(default: median split)");
    elicit_cmd->add_option("--binary-threshold", elicit.binarize,
                           "mean-complexity cutoff for a 0 vs 1 scale");
    elicit_cmd->add_option("--quantiles", elicit.quantiles,
                           "fractions for the complexity threshold table");

    sweep_options sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate a metric over a parameter grid");
    add_common(sweep_cmd, sweep.common);
    sweep_cmd->add_option("kind", sweep.kind, "tau|priority|surface|nbha")->required();
    sweep_cmd->add_option("--taus", sweep.taus, "tau grid");
    sweep_cmd->add_option("--p1s", sweep.p1s, "positive-priority grid");
    sweep_cmd->add_option("--proportions", sweep.proportions, "complex-case proportions");
    sweep_cmd->add_option("--samples", sweep.samples, "random draws per surface point");
    sweep_cmd->add_option("--seed", sweep.seed, "random seed");
    sweep_cmd->add_option("--threads", sweep.threads, "surface worker threads");

    check_options check;
    auto* check_cmd = app.add_subcommand(
        "check", "run the confusion-matrix invariance battery");
    check_cmd->add_option("--trials", check.trials, "random matrices per property");
    check_cmd->add_option("--seed", check.seed, "random seed");

    report_options report;
    auto* report_cmd = app.add_subcommand(
        "report", "metrics, elicited parameters and sweeps in one document");
    add_common(report_cmd, report.compute.common);
    report_cmd->add_option("--tau", report.compute.tau, "confidence or risk threshold");
    report_cmd->add_option("--priorities", report.compute.priorities,
                           "uniform | preset:<name> | label=w,... | @file");
    report_cmd->add_option("--complexity", report.compute.complexity, "const:<v> | @file");
    report_cmd->add_option("--penalty", report.compute.penalty, "standard|risk");
    report_cmd->add_option("--annotations", report.annotations,
                           "annotations CSV; fills parameters not given by flags");
    report_cmd->add_option("--gold", report.gold, "gold CSV for the annotations");
    report_cmd->add_option("--decision", report.decision, "decision name");
    report_cmd->add_option("--positive-label", report.positive_label,
                           "gold label treated as positive");
    report_cmd->add_option("--r", report.r, "tau tail fraction");
    report_cmd->add_option("--taus", report.taus, "tau sweep grid");
    report_cmd->add_option("--p1s", report.p1s, "priority sweep grid");
    report_cmd->add_flag("--surface", report.surface, "include the complexity surface");
    report_cmd->add_option("--proportions", report.proportions, "surface proportions");
    report_cmd->add_option("--samples", report.samples, "surface draws per point");
    report_cmd->add_flag("--nbha", report.nbha, "include the net-benefit curves");
    report_cmd->add_option("--nbha-taus", report.nbha_taus, "net-benefit tau grid");
    report_cmd->add_option("--seed", report.seed, "random seed");

    try {
        app.parse(argc, argv);
        if (*compute_cmd) return run_compute(compute);
        if (*elicit_cmd) return run_elicit(elicit);
        if (*sweep_cmd) return run_sweep(sweep);
        if (*check_cmd) return run_check(check);
        if (*report_cmd) return run_report(report);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parameter;
    } catch (const hacc::validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        for (const auto& i : e.issues()) {
            if (i.row > 0)
                std::fprintf(stderr, "  [%s] row %zu: %s\n", hacc::errc_name(i.code), i.row,
                             i.message.c_str());
            else
                std::fprintf(stderr, "  [%s] %s\n", hacc::errc_name(i.code), i.message.c_str());
        }
        return exit_code_for(e);
    } catch (const hacc::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_validation;
    }
    return exit_ok;
}
