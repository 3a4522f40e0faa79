#pragma once

#include <cstddef>
#include <vector>

#include "hacc/core.hpp"

namespace hacc {

/// Confidence penalty for a prediction on an instance whose true class
/// scored `true_score` while the best class scored `max_score`.
///
/// Piecewise in the true-class score s with chance level 1/k:
///   s < max            -> 0
///   max <= s <= tau    -> (s - 1/k) / (tau - 1/k)
///   s > tau            -> 1
/// At tau = 1/k the middle branch degenerates and the penalty is the plain
/// argmax indicator 1[s >= max].
double sigma_standard(double true_score, double max_score, double tau, std::size_t num_classes);

double sigma_standard(const std::vector<double>& scores, const std::string& true_label,
                      double tau, const label_set& labels);

/// Risk-threshold penalty for binary tasks: a positive counts iff its
/// positive score reaches tau, a negative iff its negative score exceeds
/// 1 - tau (strictly). The asymmetric comparisons are deliberate; they are
/// what makes the induced rates equal TPR_tau and TNR_tau.
double sigma_risk(double true_score, bool is_positive, double tau);

double sigma_risk(const std::vector<double>& scores, const std::string& true_label,
                  double tau, const label_set& labels, std::size_t positive_index = 1);

}  // namespace hacc
