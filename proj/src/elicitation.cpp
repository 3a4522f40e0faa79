#include "hacc/elicitation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hacc {

std::vector<std::string> annotation_set::decisions() const {
    std::set<std::string> names;
    for (const auto& a : annotations)
        for (const auto& [decision, label] : a.assigned_labels) names.insert(decision);
    return {names.begin(), names.end()};
}

std::string annotation_set::resolve_decision(const std::string& requested) const {
    const auto names = decisions();
    if (!requested.empty()) {
        if (std::find(names.begin(), names.end(), requested) == names.end())
            throw error(errc::invalid_parameter, "no decision named '" + requested + "'");
        return requested;
    }
    if (names.size() == 1) return names.front();
    throw error(errc::invalid_parameter,
                "annotation set has " + std::to_string(names.size()) +
                    " decisions; name one explicitly");
}

void annotation_set::validate() const {
    std::vector<issue> issues;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < annotations.size(); ++i) {
        const auto& a = annotations[i];
        if (!gold.count(a.instance_id))
            issues.push_back({errc::unknown_instance, i + 1,
                              "annotated instance '" + a.instance_id + "' has no gold label"});
        if (a.confidence < 1 || a.confidence > confidence_scale_max)
            issues.push_back({errc::out_of_scale_ordinal, i + 1,
                              "confidence " + std::to_string(a.confidence) +
                                  " outside declared scale 1.." +
                                  std::to_string(confidence_scale_max)});
        if (a.complexity < 1 || a.complexity > complexity_scale_max)
            issues.push_back({errc::out_of_scale_ordinal, i + 1,
                              "complexity " + std::to_string(a.complexity) +
                                  " outside declared scale 1.." +
                                  std::to_string(complexity_scale_max)});
        if (!seen.insert({a.rater_id, a.instance_id}).second)
            issues.push_back({errc::duplicate_annotation, i + 1,
                              "rater '" + a.rater_id + "' annotated instance '" +
                                  a.instance_id + "' more than once"});
    }
    if (!issues.empty()) throw validation_error(std::move(issues));
}

priority_vector derive_priorities_from_raters(const label_set& labels,
                                              const std::vector<rater_performance>& performances) {
    if (labels.size() != 2)
        throw error(errc::not_binary, "rater-derived priorities are binary");
    if (performances.empty())
        throw error(errc::invalid_parameter, "no rater performances given");
    double tpr_sum = 0.0, tnr_sum = 0.0;
    for (const auto& p : performances) {
        if (!(p.tpr >= 0.0 && p.tpr <= 1.0) || !(p.tnr >= 0.0 && p.tnr <= 1.0))
            throw error(errc::invalid_parameter,
                        "rates of rater '" + p.rater_id + "' outside [0,1]");
        tpr_sum += p.tpr;
        tnr_sum += p.tnr;
    }
    const double n = static_cast<double>(performances.size());
    const double mean_tpr = tpr_sum / n, mean_tnr = tnr_sum / n;
    const double denom = mean_tpr + mean_tnr;
    if (!(denom > 0.0))
        throw error(errc::degenerate_raters, "mean TPR + mean TNR is 0");
    return priority_vector(labels, {mean_tnr / denom, mean_tpr / denom});
}

priority_vector priorities_from_preset(const label_set& labels, priority_preset preset) {
    if (labels.size() != 2)
        throw error(errc::not_binary, "priority presets are binary");
    switch (preset) {
        case priority_preset::favor_specificity: return priority_vector(labels, {0.75, 0.25});
        case priority_preset::favor_sensitivity: return priority_vector(labels, {0.25, 0.75});
        case priority_preset::balanced: return priority_vector(labels, {0.5, 0.5});
    }
    throw error(errc::invalid_parameter, "unknown priority preset");
}

priority_vector priorities_from_risk(const label_set& labels, double tau, double prevalence) {
    if (labels.size() != 2)
        throw error(errc::not_binary, "risk-derived priorities are binary");
    if (!(tau > 0.0 && tau < 1.0))
        throw error(errc::tau_out_of_range, "tau must lie in (0,1)");
    if (!(prevalence > 0.0 && prevalence < 1.0))
        throw error(errc::invalid_parameter, "prevalence must lie in (0,1)");
    const double w0 = tau * (1.0 - prevalence);
    const double w1 = (1.0 - tau) * prevalence;
    const double alpha = w0 + w1;
    return priority_vector(labels, {w0 / alpha, w1 / alpha});
}

std::vector<rater_performance> rater_performances(const annotation_set& set,
                                                  const std::string& decision,
                                                  const std::string& positive_label) {
    const std::string dec = set.resolve_decision(decision);

    struct counts {
        double pos = 0, pos_hit = 0, neg = 0, neg_hit = 0;
    };
    std::map<std::string, counts> by_rater;
    for (const auto& a : set.annotations) {
        auto it = a.assigned_labels.find(dec);
        if (it == a.assigned_labels.end()) continue;
        auto gold_it = set.gold.find(a.instance_id);
        if (gold_it == set.gold.end())
            throw error(errc::unknown_instance,
                        "annotated instance '" + a.instance_id + "' has no gold label");
        auto& c = by_rater[a.rater_id];
        const bool is_positive = gold_it->second == positive_label;
        const bool hit = it->second == gold_it->second;
        if (is_positive) {
            c.pos += 1.0;
            if (hit) c.pos_hit += 1.0;
        } else {
            c.neg += 1.0;
            if (hit) c.neg_hit += 1.0;
        }
    }
    if (by_rater.empty())
        throw error(errc::invalid_parameter, "no annotations for decision '" + dec + "'");

    std::vector<rater_performance> out;
    out.reserve(by_rater.size());
    for (const auto& [rater, c] : by_rater) {
        if (c.pos == 0.0 || c.neg == 0.0)
            throw error(errc::empty_class,
                        "rater '" + rater + "' saw no " +
                            (c.pos == 0.0 ? "positive" : "negative") + " gold cases");
        out.push_back({rater, c.pos_hit / c.pos, c.neg_hit / c.neg});
    }
    return out;
}

double derive_tau_from_confidence(const annotation_set& set, double r,
                                  const std::string& decision) {
    if (!(r > 0.0 && r <= 1.0))
        throw error(errc::invalid_parameter, "fraction r must lie in (0,1]");
    const std::string dec = set.resolve_decision(decision);

    // correct-annotation count per ordinal confidence level
    std::map<int, double> correct_by_level;
    double total_correct = 0.0;
    for (const auto& a : set.annotations) {
        auto it = a.assigned_labels.find(dec);
        if (it == a.assigned_labels.end()) continue;
        auto gold_it = set.gold.find(a.instance_id);
        if (gold_it == set.gold.end())
            throw error(errc::unknown_instance,
                        "annotated instance '" + a.instance_id + "' has no gold label");
        if (it->second == gold_it->second) {
            correct_by_level[a.confidence] += 1.0;
            total_correct += 1.0;
        }
    }
    if (total_correct == 0.0)
        throw error(errc::no_correct_annotations,
                    "no correctly classified annotations for decision '" + dec + "'");

    const double needed = r * total_correct;
    const double scale = static_cast<double>(set.confidence_scale_max);
    double tail = 0.0;
    for (auto it = correct_by_level.rbegin(); it != correct_by_level.rend(); ++it) {
        tail += it->second;
        if (tail >= needed) return static_cast<double>(it->first) / scale;
    }
    // r <= 1 guarantees the full tail qualifies
    return static_cast<double>(correct_by_level.begin()->first) / scale;
}

complexity_profile aggregate_complexity(const annotation_set& set) {
    std::map<std::string, std::pair<double, double>> sums;  // id -> (sum, count)
    for (const auto& a : set.annotations) {
        auto& s = sums[a.instance_id];
        s.first += static_cast<double>(a.complexity);
        s.second += 1.0;
    }
    complexity_profile profile;
    profile.scale_max = set.complexity_scale_max;
    for (const auto& [id, gold_label] : set.gold) {
        auto it = sums.find(id);
        if (it == sums.end())
            throw error(errc::missing_complexity,
                        "instance '" + id + "' has no complexity annotation");
        profile.per_case_mean[id] = it->second.first / it->second.second;
    }
    return profile;
}

complexity_assignment two_level_complexity(const complexity_profile& profile,
                                           double high_threshold) {
    if (high_threshold < 1.0 || high_threshold > static_cast<double>(profile.scale_max))
        throw error(errc::invalid_parameter,
                    "threshold outside the ordinal scale range 1.." +
                        std::to_string(profile.scale_max));
    std::map<std::string, double> values;
    for (const auto& [id, mean] : profile.per_case_mean)
        values[id] = mean > high_threshold ? 1.0 : 0.5;
    return complexity_assignment::per_instance(std::move(values));
}

complexity_assignment binarize_complexity(const complexity_profile& profile, double d_t) {
    std::map<std::string, double> values;
    for (const auto& [id, mean] : profile.per_case_mean)
        values[id] = mean > d_t ? 1.0 : 0.0;
    return complexity_assignment::per_instance(std::move(values));
}

std::vector<double> quantile_thresholds(const complexity_profile& profile,
                                        const std::vector<double>& fractions) {
    for (double q : fractions)
        if (!(q > 0.0 && q < 1.0))
            throw error(errc::invalid_parameter, "quantile fractions must lie in (0,1)");

    if (profile.per_case_mean.empty())
        throw error(errc::invalid_parameter, "empty complexity profile");

    std::vector<double> means;
    means.reserve(profile.per_case_mean.size());
    for (const auto& [id, mean] : profile.per_case_mean) means.push_back(mean);
    std::sort(means.begin(), means.end());
    const double n = static_cast<double>(means.size());

    std::vector<double> thresholds;
    thresholds.reserve(fractions.size());
    for (double q : fractions) {
        // smallest observed value t with count(mean > t) <= q*n
        double chosen = means.back();
        for (double t : means) {
            const auto above = means.end() - std::upper_bound(means.begin(), means.end(), t);
            if (static_cast<double>(above) <= q * n) {
                chosen = t;
                break;
            }
        }
        thresholds.push_back(chosen);
    }
    return thresholds;
}

}  // namespace hacc
