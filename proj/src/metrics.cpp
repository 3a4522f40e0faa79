#include "hacc/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace hacc {

namespace {

std::vector<std::size_t> true_indices(const dataset& ds) {
    std::vector<std::size_t> out;
    out.reserve(ds.instances.size());
    for (const auto& inst : ds.instances) {
        auto idx = ds.labels.index_of(inst.true_label);
        if (!idx)
            throw error(errc::unknown_label,
                        "true label '" + inst.true_label + "' not in label set");
        out.push_back(*idx);
    }
    return out;
}

void require_binary(const dataset& ds, std::size_t positive_index = 1) {
    if (ds.labels.size() != 2)
        throw error(errc::not_binary, "operation is defined for binary datasets only");
    if (positive_index > 1)
        throw error(errc::invalid_parameter, "positive class index must be 0 or 1");
}

}  // namespace

double regular_accuracy(const dataset& ds) {
    if (ds.instances.empty()) throw error(errc::empty_dataset, "dataset has no instances");
    const auto truth = true_indices(ds);
    double correct = 0.0;
    for (std::size_t i = 0; i < ds.instances.size(); ++i)
        if (argmax_index(ds.instances[i].scores) == truth[i]) correct += 1.0;
    return correct / static_cast<double>(ds.instances.size());
}

double balanced_accuracy(const dataset& ds) {
    if (ds.instances.empty()) throw error(errc::empty_dataset, "dataset has no instances");
    const auto truth = true_indices(ds);
    const std::size_t k = ds.labels.size();
    std::vector<double> correct(k, 0.0), count(k, 0.0);
    for (std::size_t i = 0; i < ds.instances.size(); ++i) {
        count[truth[i]] += 1.0;
        if (argmax_index(ds.instances[i].scores) == truth[i]) correct[truth[i]] += 1.0;
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        if (count[c] == 0.0)
            throw error(errc::empty_class,
                        "class '" + ds.labels.at(c) + "' has no instances");
        sum += correct[c] / count[c];
    }
    return sum / static_cast<double>(k);
}

double h_accuracy(const dataset& ds, const ha_params& params) {
    if (ds.instances.empty()) throw error(errc::empty_dataset, "dataset has no instances");
    penalty_spec{params.penalty, params.tau}.validate(ds.labels);
    if (params.priorities.size() != ds.labels.size())
        throw error(errc::invalid_parameter, "priority vector does not match label set");
    params.complexity.validate_against(ds);

    const auto truth = true_indices(ds);
    const std::size_t k = ds.labels.size();

    // Per-class complexity mass, accumulated in dataset order.
    std::vector<double> d_sum(k, 0.0), count(k, 0.0);
    std::vector<double> d_value(ds.instances.size(), 0.0);
    for (std::size_t i = 0; i < ds.instances.size(); ++i) {
        d_value[i] = params.complexity.value_for(ds.instances[i].id);
        d_sum[truth[i]] += d_value[i];
        count[truth[i]] += 1.0;
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (count[c] == 0.0)
            throw error(errc::empty_class,
                        "class '" + ds.labels.at(c) + "' has no instances");
        if (!(d_sum[c] > 0.0))
            throw error(errc::zero_complexity_class,
                        "complexity of class '" + ds.labels.at(c) + "' sums to 0");
    }

    // Accumulate sum(d * sigma) per class and divide by the class mass once;
    // a constant d cancels, leaving the plain sigma mean.
    const bool constant_d = params.complexity.is_constant();
    std::vector<double> inner(k, 0.0);
    for (std::size_t i = 0; i < ds.instances.size(); ++i) {
        const auto& inst = ds.instances[i];
        const std::size_t c = truth[i];
        double sigma;
        if (params.penalty == penalty_kind::standard) {
            const double max_score = *std::max_element(inst.scores.begin(), inst.scores.end());
            sigma = sigma_standard(inst.scores[c], max_score, params.tau, k);
        } else {
            sigma = sigma_risk(inst.scores[c], c == params.positive_index, params.tau);
        }
        inner[c] += constant_d ? sigma : d_value[i] * sigma;
    }

    double result = 0.0;
    for (std::size_t c = 0; c < k; ++c)
        result += params.priorities.at(c) * (inner[c] / (constant_d ? count[c] : d_sum[c]));
    return result;
}

double confident_accuracy(const dataset& ds, double tau) {
    return h_accuracy(ds, ha_params{tau, priority_vector::uniform(ds.labels),
                                    complexity_assignment::constant(),
                                    penalty_kind::standard});
}

double prioritized_accuracy(const dataset& ds, const priority_vector& priorities) {
    return h_accuracy(ds, ha_params{ds.labels.chance(), priorities,
                                    complexity_assignment::constant(),
                                    penalty_kind::standard});
}

double practical_accuracy(const dataset& ds, const complexity_assignment& complexity) {
    return h_accuracy(ds, ha_params{ds.labels.chance(), priority_vector::uniform(ds.labels),
                                    complexity, penalty_kind::standard});
}

double net_benefit(const binary_rates& rates, double tau) {
    if (!(tau > 0.0 && tau < 1.0))
        throw error(errc::tau_out_of_range, "net benefit needs tau in (0,1)");
    const double pi = rates.prevalence;
    return rates.tpr * pi - (1.0 - pi) * (tau / (1.0 - tau)) * rates.fpr;
}

double standardized_net_benefit(const binary_rates& rates, double tau) {
    return net_benefit(rates, tau) / rates.prevalence;
}

double youden_index(const binary_rates& rates) { return rates.tpr - rates.fpr; }

binary_rates risk_rates(const dataset& ds, double tau, std::size_t positive_index) {
    require_binary(ds, positive_index);
    if (!(tau > 0.0 && tau < 1.0))
        throw error(errc::tau_out_of_range, "risk tau must lie in (0,1)");
    const auto truth = true_indices(ds);
    const std::size_t neg = 1 - positive_index;
    double pos_n = 0.0, neg_n = 0.0, tp = 0.0, fp = 0.0;
    for (std::size_t i = 0; i < ds.instances.size(); ++i) {
        const auto& scores = ds.instances[i].scores;
        if (truth[i] == positive_index) {
            pos_n += 1.0;
            if (scores[positive_index] >= tau) tp += 1.0;
        } else {
            neg_n += 1.0;
            if (scores[neg] <= 1.0 - tau) fp += 1.0;
        }
    }
    if (pos_n == 0.0 || neg_n == 0.0)
        throw error(errc::empty_class, "both classes need at least one instance");
    return binary_rates{tp / pos_n, fp / neg_n, pos_n / (pos_n + neg_n)};
}

double positive_prevalence(const dataset& ds, std::size_t positive_index) {
    require_binary(ds, positive_index);
    if (ds.instances.empty()) throw error(errc::empty_dataset, "dataset has no instances");
    const auto truth = true_indices(ds);
    double pos = 0.0;
    for (std::size_t t : truth)
        if (t == positive_index) pos += 1.0;
    return pos / static_cast<double>(ds.instances.size());
}

double net_benefit_via_ha(const dataset& ds, double tau,
                          std::optional<double> prevalence_override,
                          std::size_t positive_index) {
    require_binary(ds, positive_index);
    if (tau == 1.0)
        throw error(errc::degenerate_at_one, "net benefit diverges at tau = 1");
    if (!(tau > 0.0 && tau < 1.0))
        throw error(errc::tau_out_of_range, "net benefit needs tau in (0,1)");

    const double pi = prevalence_override.value_or(positive_prevalence(ds, positive_index));
    const double alpha = tau * (1.0 - pi) + (1.0 - tau) * pi;
    if (!(alpha > 0.0))
        throw error(errc::invalid_parameter, "degenerate prevalence/threshold combination");

    std::vector<double> w(2, 0.0);
    w[1 - positive_index] = tau * (1.0 - pi) / alpha;
    w[positive_index] = (1.0 - tau) * pi / alpha;

    const double ha = h_accuracy(ds, ha_params{tau, priority_vector(ds.labels, std::move(w)),
                                               complexity_assignment::constant(),
                                               penalty_kind::risk, positive_index});
    return (alpha / (1.0 - tau)) * ha - tau * (1.0 - pi) / (1.0 - tau);
}

double standardized_nb_via_ha(const dataset& ds, double tau,
                              double prevalence_tolerance,
                              std::size_t positive_index) {
    require_binary(ds, positive_index);
    if (!(tau > 0.0 && tau < 1.0))
        throw error(errc::tau_out_of_range, "risk tau must lie in (0,1)");
    const double pi = positive_prevalence(ds, positive_index);
    if (std::abs(pi - 0.5) > prevalence_tolerance)
        throw error(errc::prevalence_not_half,
                    "prevalence " + std::to_string(pi) + " is not 0.5");

    std::vector<double> w(2, 0.0);
    w[1 - positive_index] = tau;
    w[positive_index] = 1.0 - tau;
    const double ha = h_accuracy(ds, ha_params{tau, priority_vector(ds.labels, std::move(w)),
                                               complexity_assignment::constant(),
                                               penalty_kind::risk, positive_index});
    return (ha - tau) / (1.0 - tau);
}

std::vector<roc_point> roc_points(const dataset& ds, std::vector<double> thresholds,
                                  std::size_t positive_index) {
    require_binary(ds, positive_index);
    const auto truth = true_indices(ds);
    double pos_n = 0.0, neg_n = 0.0;
    for (std::size_t t : truth) (t == positive_index ? pos_n : neg_n) += 1.0;
    if (pos_n == 0.0 || neg_n == 0.0)
        throw error(errc::empty_class, "both classes need at least one instance");

    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    std::vector<roc_point> points;
    points.reserve(thresholds.size());
    for (double t : thresholds) {
        double tp = 0.0, fp = 0.0;
        for (std::size_t i = 0; i < ds.instances.size(); ++i) {
            if (ds.instances[i].scores[positive_index] >= t)
                (truth[i] == positive_index ? tp : fp) += 1.0;
        }
        points.push_back({fp / neg_n, tp / pos_n});
    }
    return points;
}

double auroc(const dataset& ds, std::size_t positive_index) {
    require_binary(ds, positive_index);
    const auto truth = true_indices(ds);

    std::vector<std::pair<double, bool>> scored;  // (positive score, is positive)
    scored.reserve(ds.instances.size());
    double pos_n = 0.0, neg_n = 0.0;
    for (std::size_t i = 0; i < ds.instances.size(); ++i) {
        const bool is_pos = truth[i] == positive_index;
        (is_pos ? pos_n : neg_n) += 1.0;
        scored.emplace_back(ds.instances[i].scores[positive_index], is_pos);
    }
    if (pos_n == 0.0 || neg_n == 0.0)
        throw error(errc::empty_class, "both classes need at least one instance");

    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    double area = 0.0, tp = 0.0, fp = 0.0, prev_tpr = 0.0, prev_fpr = 0.0;
    std::size_t i = 0;
    while (i < scored.size()) {
        const double score = scored[i].first;
        while (i < scored.size() && scored[i].first == score) {
            (scored[i].second ? tp : fp) += 1.0;
            ++i;
        }
        const double tpr = tp / pos_n, fpr = fp / neg_n;
        area += (fpr - prev_fpr) * (tpr + prev_tpr) * 0.5;
        prev_tpr = tpr;
        prev_fpr = fpr;
    }
    return area;
}

std::vector<std::string> zero_complexity_classes(const dataset& ds,
                                                 const complexity_assignment& complexity) {
    complexity.validate_against(ds);
    const auto truth = true_indices(ds);
    std::vector<double> d_sum(ds.labels.size(), 0.0);
    std::vector<bool> seen(ds.labels.size(), false);
    for (std::size_t i = 0; i < ds.instances.size(); ++i) {
        d_sum[truth[i]] += complexity.value_for(ds.instances[i].id);
        seen[truth[i]] = true;
    }
    std::vector<std::string> out;
    for (std::size_t c = 0; c < ds.labels.size(); ++c)
        if (seen[c] && !(d_sum[c] > 0.0)) out.push_back(ds.labels.at(c));
    return out;
}

}  // namespace hacc
