#include "hacc/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace hacc {

namespace {
constexpr double kSumTolerance = 1e-9;
}

label_set::label_set(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::vector<issue> issues;
    if (labels_.size() < 2)
        issues.push_back({errc::invalid_parameter, 0, "a label set needs at least 2 classes"});
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            issues.push_back({errc::invalid_parameter, 0, "empty label identifier"});
        if (!seen.insert(l).second)
            issues.push_back({errc::duplicate_id, 0, "duplicate label '" + l + "'"});
    }
    if (!issues.empty()) throw validation_error(std::move(issues));
}

std::optional<std::size_t> label_set::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

dataset validate_dataset(dataset ds, normalization mode) {
    std::vector<issue> issues;
    if (ds.instances.empty())
        issues.push_back({errc::empty_dataset, 0, "dataset has no instances"});

    std::unordered_set<std::string> ids;
    ids.reserve(ds.instances.size());
    const std::size_t k = ds.labels.size();

    for (std::size_t row = 0; row < ds.instances.size(); ++row) {
        const auto& inst = ds.instances[row];
        if (!ids.insert(inst.id).second)
            issues.push_back({errc::duplicate_id, row + 1,
                              "duplicate instance id '" + inst.id + "'"});
        if (!ds.labels.index_of(inst.true_label))
            issues.push_back({errc::unknown_label, row + 1,
                              "true label '" + inst.true_label + "' not in label set"});
        if (inst.scores.size() != k) {
            issues.push_back({errc::score_out_of_range, row + 1,
                              "instance '" + inst.id + "' has " +
                                  std::to_string(inst.scores.size()) + " scores, expected " +
                                  std::to_string(k)});
            continue;
        }
        double sum = 0.0;
        for (double s : inst.scores) {
            if (!(s >= 0.0 && s <= 1.0)) {
                issues.push_back({errc::score_out_of_range, row + 1,
                                  "score " + std::to_string(s) + " of instance '" + inst.id +
                                      "' outside [0,1]"});
            }
            sum += s;
        }
        if (mode == normalization::simplex && std::abs(sum - 1.0) > kSumTolerance)
            issues.push_back({errc::scores_not_normalized, row + 1,
                              "scores of instance '" + inst.id + "' sum to " +
                                  std::to_string(sum)});
    }

    if (!issues.empty()) throw validation_error(std::move(issues));
    return ds;
}

std::size_t argmax_index(const std::vector<double>& scores) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] > scores[best]) best = i;
    return best;
}

const std::string& argmax_label(const std::vector<double>& scores, const label_set& labels) {
    if (scores.size() != labels.size())
        throw error(errc::invalid_parameter, "score vector length does not match label set");
    return labels.at(argmax_index(scores));
}

priority_vector::priority_vector(const label_set& labels, std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.size() != labels.size())
        throw error(errc::invalid_parameter,
                    "priority vector must cover every label exactly once");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0))
            throw error(errc::invalid_parameter, "priority weight outside [0,1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw error(errc::invalid_parameter,
                    "priority weights sum to " + std::to_string(sum) + ", expected 1");
}

priority_vector priority_vector::uniform(const label_set& labels) {
    return priority_vector(labels,
                           std::vector<double>(labels.size(), 1.0 / static_cast<double>(labels.size())));
}

priority_vector priority_vector::from_map(const label_set& labels,
                                          const std::map<std::string, double>& weights) {
    if (weights.size() != labels.size())
        throw error(errc::invalid_parameter,
                    "priority map must cover every label exactly once");
    std::vector<double> w(labels.size(), 0.0);
    for (const auto& [label, weight] : weights) {
        auto idx = labels.index_of(label);
        if (!idx)
            throw error(errc::unknown_label, "priority for unknown label '" + label + "'");
        w[*idx] = weight;
    }
    return priority_vector(labels, std::move(w));
}

complexity_assignment complexity_assignment::constant(double value) {
    if (!(value > 0.0))
        throw error(errc::invalid_parameter, "constant complexity must be > 0");
    return complexity_assignment(value);
}

complexity_assignment complexity_assignment::per_instance(std::map<std::string, double> values) {
    for (const auto& [id, v] : values)
        if (!(v >= 0.0 && v <= 1.0))
            throw error(errc::invalid_parameter,
                        "complexity of '" + id + "' outside [0,1]");
    return complexity_assignment(std::move(values));
}

double complexity_assignment::value_for(const std::string& instance_id) const {
    if (is_constant()) return std::get<double>(values_);
    const auto& m = std::get<std::map<std::string, double>>(values_);
    auto it = m.find(instance_id);
    if (it == m.end())
        throw error(errc::missing_complexity,
                    "no complexity value for instance '" + instance_id + "'");
    return it->second;
}

void complexity_assignment::validate_against(const dataset& ds) const {
    if (is_constant()) return;
    const auto& m = std::get<std::map<std::string, double>>(values_);
    std::unordered_set<std::string> ids;
    ids.reserve(ds.instances.size());
    for (const auto& inst : ds.instances) ids.insert(inst.id);
    for (const auto& [id, v] : m)
        if (!ids.count(id))
            throw error(errc::unknown_instance,
                        "complexity given for unknown instance '" + id + "'");
    for (const auto& inst : ds.instances)
        if (!m.count(inst.id))
            throw error(errc::missing_complexity,
                        "no complexity value for instance '" + inst.id + "'");
}

void penalty_spec::validate(const label_set& labels) const {
    if (kind == penalty_kind::standard) {
        const double chance = labels.chance();
        if (tau < chance)
            throw error(errc::tau_below_chance,
                        "tau below chance level 1/k = " + std::to_string(chance));
        if (tau > 1.0)
            throw error(errc::tau_out_of_range, "tau above 1");
    } else {
        if (labels.size() != 2)
            throw error(errc::not_binary, "risk penalty is defined for binary tasks only");
        if (!(tau > 0.0 && tau < 1.0))
            throw error(errc::tau_out_of_range, "risk tau must lie in (0,1)");
    }
}

confusion_matrix::confusion_matrix(std::vector<std::string> labels, std::vector<double> counts)
    : labels_(std::move(labels)), counts_(std::move(counts)) {
    if (counts_.size() != labels_.size() * labels_.size())
        throw error(errc::invalid_parameter, "confusion matrix shape mismatch");
    double total = 0.0;
    for (double c : counts_) {
        if (c < 0.0) throw error(errc::negative_cell, "negative confusion cell");
        total += c;
    }
    if (!(total > 0.0)) throw error(errc::invalid_parameter, "confusion matrix sums to 0");
}

confusion_matrix confusion_matrix::binary(double tp, double fn, double fp, double tn,
                                          std::string negative_label,
                                          std::string positive_label) {
    // rows are (negative, positive) in label order
    return confusion_matrix({std::move(negative_label), std::move(positive_label)},
                            {tn, fp, fn, tp});
}

double confusion_matrix::at(std::size_t true_class, std::size_t predicted) const {
    return counts_.at(true_class * labels_.size() + predicted);
}

double& confusion_matrix::at(std::size_t true_class, std::size_t predicted) {
    return counts_.at(true_class * labels_.size() + predicted);
}

double confusion_matrix::total() const noexcept {
    double t = 0.0;
    for (double c : counts_) t += c;
    return t;
}

double confusion_matrix::binary_cell(std::size_t i, std::size_t j) const {
    if (labels_.size() != 2)
        throw error(errc::not_binary, "named cells exist for binary matrices only");
    return at(i, j);
}

confusion_matrix build_confusion_matrix(const dataset& ds) {
    const std::size_t k = ds.labels.size();
    std::vector<double> counts(k * k, 0.0);
    for (const auto& inst : ds.instances) {
        auto ti = ds.labels.index_of(inst.true_label);
        if (!ti)
            throw error(errc::unknown_label, "true label '" + inst.true_label + "' not in label set");
        counts[*ti * k + argmax_index(inst.scores)] += 1.0;
    }
    return confusion_matrix(ds.labels.labels(), std::move(counts));
}

}  // namespace hacc
