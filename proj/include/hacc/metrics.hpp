#pragma once

#include <optional>
#include <vector>

#include "hacc/core.hpp"
#include "hacc/penalty.hpp"

namespace hacc {

/// The (tau, p, d) parameter triple plus the penalty selector. `positive_index`
/// names the class treated as positive by the risk penalty (second label by
/// convention).
struct ha_params {
    double tau = 0.5;
    priority_vector priorities;
    complexity_assignment complexity = complexity_assignment::constant();
    penalty_kind penalty = penalty_kind::standard;
    std::size_t positive_index = 1;
};

/// Fraction of instances whose argmax prediction matches the true label.
double regular_accuracy(const dataset& ds);

/// Unweighted mean over classes of the per-class argmax-correct fraction.
/// Every class must have at least one instance.
double balanced_accuracy(const dataset& ds);

/// Priority-weighted, complexity-weighted, confidence-penalized accuracy:
///   sum_l p(l) * sum_{x: c(x)=l} [ d(x) / sum_{c(x)=l} d(x) ] * sigma(l-score of x | tau)
/// Instances are accumulated in dataset order and classes in label order,
/// so results are bit-reproducible.
double h_accuracy(const dataset& ds, const ha_params& params);

/// h_accuracy with uniform priorities and constant complexity.
double confident_accuracy(const dataset& ds, double tau);

/// h_accuracy at chance tau with constant complexity; equals the
/// priority-weighted combination of per-class recalls.
double prioritized_accuracy(const dataset& ds, const priority_vector& priorities);

/// h_accuracy at chance tau with uniform priorities and the given complexity.
double practical_accuracy(const dataset& ds, const complexity_assignment& complexity);

struct binary_rates {
    double tpr = 0.0;
    double fpr = 0.0;
    double prevalence = 0.5;
};

/// Net benefit at risk threshold tau: TPR*pi - (1-pi)*(tau/(1-tau))*FPR.
/// May be negative; never exceeds the prevalence.
double net_benefit(const binary_rates& rates, double tau);

/// Net benefit divided by the prevalence ("relative utility").
double standardized_net_benefit(const binary_rates& rates, double tau);

/// TPR - FPR.
double youden_index(const binary_rates& rates);

/// Rates induced by the risk penalty on a binary dataset: TPR_tau is the
/// fraction of positives whose positive score reaches tau; FPR_tau the
/// fraction of negatives whose negative score stays at or below 1 - tau.
binary_rates risk_rates(const dataset& ds, double tau, std::size_t positive_index = 1);

/// Positive-class fraction of the dataset.
double positive_prevalence(const dataset& ds, std::size_t positive_index = 1);

/// Net benefit computed through the h-accuracy route: with the priorities
/// p = <tau(1-pi), (1-tau)pi> / alpha, alpha = tau(1-pi) + (1-tau)pi, and the
/// risk penalty at constant complexity,
///   NB(tau) = (alpha / (1-tau)) * Ha - tau(1-pi)/(1-tau).
/// Equals net_benefit on the risk-induced rates identically.
double net_benefit_via_ha(const dataset& ds, double tau,
                          std::optional<double> prevalence_override = std::nullopt,
                          std::size_t positive_index = 1);

/// Standardized net benefit through h-accuracy, valid when the dataset is
/// balanced: (Ha(tau, p=<tau,1-tau>, const d, risk) - tau) / (1 - tau).
/// Rejects datasets whose prevalence strays from 0.5 beyond the tolerance;
/// pass a larger tolerance to relax the check.
double standardized_nb_via_ha(const dataset& ds, double tau,
                              double prevalence_tolerance = 1e-9,
                              std::size_t positive_index = 1);

struct roc_point {
    double fpr = 0.0;
    double tpr = 0.0;
};

/// ROC operating points for the given thresholds on the positive-class
/// score (predict positive iff score >= threshold), sorted by ascending FPR.
std::vector<roc_point> roc_points(const dataset& ds, std::vector<double> thresholds,
                                  std::size_t positive_index = 1);

/// Area under the ROC staircase over all distinct positive-score thresholds,
/// by the trapezoidal rule.
double auroc(const dataset& ds, std::size_t positive_index = 1);

/// Labels whose complexity mass is zero under the assignment; h_accuracy
/// rejects such configurations.
std::vector<std::string> zero_complexity_classes(const dataset& ds,
                                                 const complexity_assignment& complexity);

}  // namespace hacc
