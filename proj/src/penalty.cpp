#include "hacc/penalty.hpp"

#include <algorithm>

namespace hacc {

double sigma_standard(double true_score, double max_score, double tau, std::size_t num_classes) {
    const double chance = 1.0 / static_cast<double>(num_classes);
    if (tau < chance)
        throw error(errc::tau_below_chance, "tau must be at least 1/k");
    if (tau > 1.0)
        throw error(errc::tau_out_of_range, "tau above 1");

    if (tau == chance)
        return true_score >= max_score ? 1.0 : 0.0;

    if (true_score < max_score) return 0.0;
    if (true_score <= tau) return (true_score - chance) / (tau - chance);
    return 1.0;
}

double sigma_standard(const std::vector<double>& scores, const std::string& true_label,
                      double tau, const label_set& labels) {
    auto idx = labels.index_of(true_label);
    if (!idx) throw error(errc::unknown_label, "true label '" + true_label + "' not in label set");
    const double max_score = *std::max_element(scores.begin(), scores.end());
    return sigma_standard(scores.at(*idx), max_score, tau, labels.size());
}

double sigma_risk(double true_score, bool is_positive, double tau) {
    if (!(tau > 0.0 && tau < 1.0))
        throw error(errc::tau_out_of_range, "risk tau must lie in (0,1)");
    if (is_positive) return true_score >= tau ? 1.0 : 0.0;
    return true_score > 1.0 - tau ? 1.0 : 0.0;
}

double sigma_risk(const std::vector<double>& scores, const std::string& true_label,
                  double tau, const label_set& labels, std::size_t positive_index) {
    if (labels.size() != 2)
        throw error(errc::not_binary, "risk penalty is defined for binary tasks only");
    auto idx = labels.index_of(true_label);
    if (!idx) throw error(errc::unknown_label, "true label '" + true_label + "' not in label set");
    return sigma_risk(scores.at(*idx), *idx == positive_index, tau);
}

}  // namespace hacc
