#pragma once

#include <map>
#include <string>
#include <vector>

#include "hacc/core.hpp"

namespace hacc {

/// A rater study: per-rater annotations, the declared ordinal scale bounds,
/// and the gold labels correctness is judged against.
struct annotation_set {
    std::vector<rater_annotation> annotations;
    int confidence_scale_max = 1;
    int complexity_scale_max = 1;
    std::map<std::string, std::string> gold;  // instance id -> gold label

    /// Distinct decision names present, sorted.
    std::vector<std::string> decisions() const;

    /// The single decision when exactly one exists; otherwise requires the
    /// caller to name one.
    std::string resolve_decision(const std::string& requested) const;

    void validate() const;
};

/// Per-case mean of the ordinal complexity ratings, on the raw ordinal scale.
struct complexity_profile {
    std::map<std::string, double> per_case_mean;
    int scale_max = 1;
};

enum class priority_preset { favor_specificity, favor_sensitivity, balanced };

/// Class priorities from mean rater operating points:
///   p(0) = mean(TNR) / (mean(TPR) + mean(TNR)),  p(1) = mean(TPR) / (...).
priority_vector derive_priorities_from_raters(const label_set& labels,
                                              const std::vector<rater_performance>& performances);

/// <0.75, 0.25>, <0.25, 0.75> or <0.5, 0.5> in (negative, positive) order.
priority_vector priorities_from_preset(const label_set& labels, priority_preset preset);

/// Normalized <tau*(1-pi), (1-tau)*pi>, the priorities under which the
/// risk-penalized h-accuracy reproduces the net benefit.
priority_vector priorities_from_risk(const label_set& labels, double tau, double prevalence);

/// Per-rater TPR/TNR against the gold labels, for one decision. Raters are
/// returned in sorted id order.
std::vector<rater_performance> rater_performances(const annotation_set& set,
                                                  const std::string& decision,
                                                  const std::string& positive_label);

/// Confidence threshold from the distribution of correct answers: ordinal
/// levels normalize to level/scale_max, and tau is the maximum normalized
/// level whose right tail still holds at least r of all correct annotations.
double derive_tau_from_confidence(const annotation_set& set, double r,
                                  const std::string& decision = "");

/// Mean ordinal complexity per case; every gold instance must be covered.
complexity_profile aggregate_complexity(const annotation_set& set);

/// Two-level scale: 1 for mean complexity strictly above the threshold,
/// 1/2 otherwise.
complexity_assignment two_level_complexity(const complexity_profile& profile,
                                           double high_threshold);

/// Dichotomous scale: 1 strictly above d_t, 0 otherwise. Zeroed-out classes
/// surface later, when the assignment meets a dataset.
complexity_assignment binarize_complexity(const complexity_profile& profile, double d_t);

/// For each fraction q, the smallest observed mean-complexity value t such
/// that the proportion of cases with mean > t is at most q.
std::vector<double> quantile_thresholds(const complexity_profile& profile,
                                        const std::vector<double>& fractions);

}  // namespace hacc
