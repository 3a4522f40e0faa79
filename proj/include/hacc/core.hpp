#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hacc/errors.hpp"

namespace hacc {

/// Ordered set of class identifiers. The order is fixed at construction and
/// defines the column order of every score vector evaluated against it.
class label_set {
public:
    explicit label_set(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& at(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Chance level 1/k, the lower bound for confidence thresholds.
    double chance() const noexcept { return 1.0 / static_cast<double>(labels_.size()); }

    bool operator==(const label_set& other) const noexcept { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

/// One labeled instance with the per-class scores a model assigned to it.
/// `scores` is aligned with the owning dataset's label_set order.
struct instance {
    std::string id;
    std::string true_label;
    std::vector<double> scores;
};

struct dataset {
    label_set labels;
    std::vector<instance> instances;

    std::size_t size() const noexcept { return instances.size(); }
};

enum class normalization {
    simplex,  // scores must sum to 1 (tolerance 1e-9); the default
    raw,      // entries in [0,1], no sum constraint
};

/// Checks every dataset invariant under the given score-normalization mode
/// and returns the dataset unchanged. Throws validation_error carrying all
/// violations found, not just the first.
dataset validate_dataset(dataset ds, normalization mode = normalization::simplex);

/// Index of the maximal score; ties resolve to the first maximal entry in
/// label order, so the decision rule is deterministic.
std::size_t argmax_index(const std::vector<double>& scores);

const std::string& argmax_label(const std::vector<double>& scores, const label_set& labels);

/// Per-class importance weights aligned with a label_set, summing to 1.
class priority_vector {
public:
    priority_vector(const label_set& labels, std::vector<double> weights);

    static priority_vector uniform(const label_set& labels);
    static priority_vector from_map(const label_set& labels,
                                    const std::map<std::string, double>& weights);

    const std::vector<double>& weights() const noexcept { return weights_; }
    double at(std::size_t i) const { return weights_.at(i); }
    std::size_t size() const noexcept { return weights_.size(); }

private:
    std::vector<double> weights_;
};

/// Per-instance difficulty weights in [0,1], or a single positive constant
/// applied to every instance (the constant cancels out of the normalized
/// weighting, so any positive value is accepted).
class complexity_assignment {
public:
    static complexity_assignment constant(double value = 1.0);
    static complexity_assignment per_instance(std::map<std::string, double> values);

    bool is_constant() const noexcept { return std::holds_alternative<double>(values_); }
    double constant_value() const { return std::get<double>(values_); }
    const std::map<std::string, double>& values() const { return std::get<std::map<std::string, double>>(values_); }

    /// Weight for one instance; throws missing_complexity when a per-instance
    /// map does not cover the id.
    double value_for(const std::string& instance_id) const;

    /// Checks that map keys all exist in the dataset and that every dataset
    /// instance is covered.
    void validate_against(const dataset& ds) const;

private:
    explicit complexity_assignment(std::variant<double, std::map<std::string, double>> v)
        : values_(std::move(v)) {}

    std::variant<double, std::map<std::string, double>> values_;
};

enum class penalty_kind { standard, risk };

/// Which penalty applies and at what threshold. standard requires
/// tau in [1/k, 1]; risk requires a binary task and tau in (0, 1).
struct penalty_spec {
    penalty_kind kind = penalty_kind::standard;
    double tau = 0.5;

    void validate(const label_set& labels) const;
};

/// k x k confusion counts, rows = true class, columns = predicted class,
/// in label order. Entries are reals so multiplicative transforms stay exact.
class confusion_matrix {
public:
    confusion_matrix(std::vector<std::string> labels, std::vector<double> counts);

    /// Binary matrix from the conventional named cells. Row order follows
    /// (negative, positive) = label order, with positive the second label.
    static confusion_matrix binary(double tp, double fn, double fp, double tn,
                                   std::string negative_label = "0",
                                   std::string positive_label = "1");

    std::size_t classes() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    double at(std::size_t true_class, std::size_t predicted) const;
    double& at(std::size_t true_class, std::size_t predicted);

    double total() const noexcept;

    // Named cells for the binary case; positive class is the second label.
    double tp() const { return binary_cell(1, 1); }
    double fn() const { return binary_cell(1, 0); }
    double fp() const { return binary_cell(0, 1); }
    double tn() const { return binary_cell(0, 0); }

    bool operator==(const confusion_matrix& other) const noexcept {
        return labels_ == other.labels_ && counts_ == other.counts_;
    }

private:
    double binary_cell(std::size_t i, std::size_t j) const;

    std::vector<std::string> labels_;
    std::vector<double> counts_;  // row-major
};

/// Argmax-decision confusion counts of a validated dataset. The entry sum
/// always equals the dataset size.
confusion_matrix build_confusion_matrix(const dataset& ds);

/// One rater's answers for one case: the label they assigned per decision,
/// plus the ordinal confidence and complexity they reported for the case.
struct rater_annotation {
    std::string rater_id;
    std::string instance_id;
    std::map<std::string, std::string> assigned_labels;  // decision name -> label
    int confidence = 1;
    int complexity = 1;
};

struct rater_performance {
    std::string rater_id;
    double tpr = 0.0;
    double tnr = 0.0;
};

}  // namespace hacc
