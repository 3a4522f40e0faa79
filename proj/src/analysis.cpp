#include "hacc/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "hacc/elicitation.hpp"
#include "hacc/rng.hpp"

namespace hacc {

namespace {

void require_finite(const sweep_table& table) {
    for (const auto& r : table.rows)
        for (double v : r.values)
            if (!std::isfinite(v))
                throw error(errc::invalid_parameter, "sweep produced a non-finite value");
}

}  // namespace

sweep_table tau_sweep(const dataset& ds, std::vector<double> taus) {
    std::sort(taus.begin(), taus.end());
    sweep_table table{{"tau"}, {"confident_accuracy"}, {}};
    table.rows.reserve(taus.size());
    for (double tau : taus)
        table.rows.push_back({{tau}, {confident_accuracy(ds, tau)}});
    require_finite(table);
    return table;
}

sweep_table priority_sweep(const dataset& ds, std::vector<double> positive_priorities) {
    if (ds.labels.size() != 2)
        throw error(errc::not_binary, "priority sweeps are binary");
    std::sort(positive_priorities.begin(), positive_priorities.end());
    sweep_table table{{"p1"}, {"prioritized_accuracy"}, {}};
    table.rows.reserve(positive_priorities.size());
    for (double p1 : positive_priorities) {
        if (!(p1 >= 0.0 && p1 <= 1.0))
            throw error(errc::invalid_parameter, "positive priority outside [0,1]");
        table.rows.push_back(
            {{p1}, {prioritized_accuracy(ds, priority_vector(ds.labels, {1.0 - p1, p1}))}});
    }
    require_finite(table);
    return table;
}

sweep_table complexity_surface(const dataset& ds, std::vector<double> proportions,
                               std::vector<double> positive_priorities,
                               int samples_per_point, std::uint64_t seed, int threads) {
    if (ds.labels.size() != 2)
        throw error(errc::not_binary, "complexity surfaces are binary");
    if (samples_per_point < 1)
        throw error(errc::invalid_parameter, "samples_per_point must be >= 1");
    for (double q : proportions)
        if (!(q >= 0.0 && q <= 1.0))
            throw error(errc::invalid_parameter, "proportion outside [0,1]");
    for (double p1 : positive_priorities)
        if (!(p1 >= 0.0 && p1 <= 1.0))
            throw error(errc::invalid_parameter, "positive priority outside [0,1]");

    std::sort(proportions.begin(), proportions.end());
    std::sort(positive_priorities.begin(), positive_priorities.end());

    const std::size_t n = ds.instances.size();
    const std::size_t points = proportions.size() * positive_priorities.size();

    sweep_table table{{"proportion", "p1"}, {"ha_mean", "ha_variance"}, {}};
    table.rows.resize(points);

    auto eval_point = [&](std::size_t index) {
        const double q = proportions[index / positive_priorities.size()];
        const double p1 = positive_priorities[index % positive_priorities.size()];
        const std::size_t complex_count = static_cast<std::size_t>(
            std::floor(q * static_cast<double>(n)));

        std::mt19937_64 gen(derive_subseed(seed, index));
        const priority_vector priorities(ds.labels, {1.0 - p1, p1});

        std::vector<double> samples;
        samples.reserve(static_cast<std::size_t>(samples_per_point));
        std::map<std::string, double> d_values;
        for (int s = 0; s < samples_per_point; ++s) {
            for (const auto& inst : ds.instances) d_values[inst.id] = 0.5;
            for (std::size_t i : sample_without_replacement(gen, n, complex_count))
                d_values[ds.instances[i].id] = 1.0;
            samples.push_back(h_accuracy(
                ds, ha_params{ds.labels.chance(), priorities,
                              complexity_assignment::per_instance(d_values),
                              penalty_kind::standard}));
        }

        // Shifted accumulation keeps constant samples exact: identical draws
        // yield mean == value and variance == 0 bit-for-bit.
        const double base = samples.front();
        double shift_sum = 0.0;
        for (double v : samples) shift_sum += v - base;
        const double mean = base + shift_sum / static_cast<double>(samples.size());
        double var = 0.0;
        if (samples.size() > 1) {
            for (double v : samples) var += (v - mean) * (v - mean);
            var /= static_cast<double>(samples.size() - 1);
        }
        table.rows[index] = {{q, p1}, {mean, var}};
    };

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(points)));
    if (workers == 1) {
        for (std::size_t i = 0; i < points; ++i) eval_point(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < points; i = next.fetch_add(1))
                    eval_point(i);
            });
        for (auto& t : pool) t.join();
    }

    require_finite(table);
    return table;
}

sweep_table nb_ha_curves(const dataset& ds, std::vector<double> taus) {
    if (ds.labels.size() != 2)
        throw error(errc::not_binary, "net-benefit curves are binary");
    std::sort(taus.begin(), taus.end());

    const double pi = positive_prevalence(ds);
    sweep_table table{{"tau"},
                      {"net_benefit", "standardized_net_benefit", "confident_accuracy",
                       "risk_h_accuracy"},
                      {}};
    table.rows.reserve(taus.size());
    for (double tau : taus) {
        const double nb = net_benefit_via_ha(ds, tau);
        const double snb = nb / pi;
        const double ca = confident_accuracy(ds, std::max(tau, ds.labels.chance()));
        const double risk_ha =
            h_accuracy(ds, ha_params{tau, priorities_from_risk(ds.labels, tau, pi),
                                     complexity_assignment::constant(), penalty_kind::risk});
        table.rows.push_back({{tau}, {nb, snb, ca, risk_ha}});
    }
    require_finite(table);
    return table;
}

const char* cm_transform_name(cm_transform_kind kind) {
    switch (kind) {
        case cm_transform_kind::class_swap: return "class-swap";
        case cm_transform_kind::add_tn: return "add-tn";
        case cm_transform_kind::add_tp: return "add-tp";
        case cm_transform_kind::add_fn: return "add-fn";
        case cm_transform_kind::add_fp: return "add-fp";
        case cm_transform_kind::uniform_scale: return "uniform-scale";
        case cm_transform_kind::column_scale: return "column-scale";
        case cm_transform_kind::row_scale: return "row-scale";
    }
    return "unknown";
}

confusion_matrix apply_cm_transform(const confusion_matrix& cm, const cm_transform& t) {
    if (cm.classes() != 2)
        throw error(errc::not_binary, "transforms are defined on binary matrices");
    double tp = cm.tp(), fn = cm.fn(), fp = cm.fp(), tn = cm.tn();

    switch (t.kind) {
        case cm_transform_kind::class_swap:
            std::swap(tp, tn);
            std::swap(fn, fp);
            break;
        case cm_transform_kind::add_tn: tn += t.delta; break;
        case cm_transform_kind::add_tp: tp += t.delta; break;
        case cm_transform_kind::add_fn: fn += t.delta; break;
        case cm_transform_kind::add_fp: fp += t.delta; break;
        case cm_transform_kind::uniform_scale:
            if (!(t.k1 > 0.0)) throw error(errc::invalid_parameter, "scale factor must be > 0");
            tp *= t.k1; fn *= t.k1; fp *= t.k1; tn *= t.k1;
            break;
        case cm_transform_kind::column_scale:
            if (!(t.k1 > 0.0 && t.k2 > 0.0))
                throw error(errc::invalid_parameter, "scale factors must be > 0");
            tp *= t.k1; fp *= t.k1; fn *= t.k2; tn *= t.k2;
            break;
        case cm_transform_kind::row_scale:
            if (!(t.k1 > 0.0 && t.k2 > 0.0))
                throw error(errc::invalid_parameter, "scale factors must be > 0");
            tp *= t.k1; fn *= t.k1; fp *= t.k2; tn *= t.k2;
            break;
    }
    if (tp < 0.0 || fn < 0.0 || fp < 0.0 || tn < 0.0)
        throw error(errc::negative_cell, "transform drove a cell below 0");
    return confusion_matrix::binary(tp, fn, fp, tn, cm.labels()[0], cm.labels()[1]);
}

cm_metric prioritized_ha_metric(double p0, double p1) {
    if (std::abs(p0 + p1 - 1.0) > 1e-9)
        throw error(errc::invalid_parameter, "priorities must sum to 1");
    return [p0, p1](const confusion_matrix& cm) {
        return p0 * (cm.tn() / (cm.tn() + cm.fp())) + p1 * (cm.tp() / (cm.tp() + cm.fn()));
    };
}

cm_metric prevalence_weighted_ha_metric() {
    return [](const confusion_matrix& cm) {
        const double n = cm.total();
        const double p1 = (cm.tp() + cm.fn()) / n;
        const double p0 = (cm.fp() + cm.tn()) / n;
        return p0 * (cm.tn() / (cm.tn() + cm.fp())) + p1 * (cm.tp() / (cm.tp() + cm.fn()));
    };
}

invariance_verdict check_invariance(const cm_metric& metric, const cm_transform& t,
                                    int trials, std::uint64_t seed, double tolerance) {
    invariance_verdict verdict;
    std::mt19937_64 gen(seed);
    for (int trial = 0; trial < trials; ++trial) {
        // cells in [1, 100) keep every recall well-defined
        const double tp = 1.0 + 99.0 * uniform_unit(gen);
        const double fn = 1.0 + 99.0 * uniform_unit(gen);
        const double fp = 1.0 + 99.0 * uniform_unit(gen);
        const double tn = 1.0 + 99.0 * uniform_unit(gen);
        const auto cm = confusion_matrix::binary(tp, fn, fp, tn);
        const auto transformed = apply_cm_transform(cm, t);
        const double delta = std::abs(metric(cm) - metric(transformed));
        verdict.max_delta = std::max(verdict.max_delta, delta);
        if (delta > tolerance) {
            verdict.invariant = false;
            verdict.counterexample = {cm, transformed};
            return verdict;
        }
    }
    return verdict;
}

}  // namespace hacc
