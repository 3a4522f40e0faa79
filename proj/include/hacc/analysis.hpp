#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hacc/core.hpp"
#include "hacc/metrics.hpp"

namespace hacc {

/// A parameter sweep result: one row per grid point, rows sorted by the
/// parameter point, every value finite.
struct sweep_table {
    std::vector<std::string> axis_names;
    std::vector<std::string> value_names;

    struct row {
        std::vector<double> point;
        std::vector<double> values;
    };
    std::vector<row> rows;

    bool operator==(const sweep_table& other) const {
        if (axis_names != other.axis_names || value_names != other.value_names ||
            rows.size() != other.rows.size())
            return false;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].point != other.rows[i].point || rows[i].values != other.rows[i].values)
                return false;
        return true;
    }
};

/// Confident accuracy over a tau grid; non-increasing in tau.
sweep_table tau_sweep(const dataset& ds, std::vector<double> taus);

/// Prioritized accuracy over positive-class priorities p1, with
/// p = <1-p1, p1>; affine in p1. Binary datasets only.
sweep_table priority_sweep(const dataset& ds, std::vector<double> positive_priorities);

/// Mean (and sample variance) of h-accuracy over random two-level complexity
/// draws: at each (proportion q, priority p1) grid point, floor(q*n) random
/// instances get d = 1 and the rest d = 1/2, repeated `samples_per_point`
/// times. Each grid point runs on its own derived sub-seed, so serial and
/// parallel evaluation produce identical tables.
sweep_table complexity_surface(const dataset& ds, std::vector<double> proportions,
                               std::vector<double> positive_priorities,
                               int samples_per_point, std::uint64_t seed, int threads = 1);

/// NB, sNB, confident accuracy and risk-penalized h-accuracy (with the
/// net-benefit priorities) over a tau grid. For tau below chance the
/// confident-accuracy column is evaluated at the chance threshold.
sweep_table nb_ha_curves(const dataset& ds, std::vector<double> taus);

enum class cm_transform_kind {
    class_swap,     // (tp,fn,fp,tn) -> (tn,fp,fn,tp)
    add_tn,
    add_tp,
    add_fn,
    add_fp,
    uniform_scale,  // all four cells * factor
    column_scale,   // column 0 (tp,fp) * k1, column 1 (fn,tn) * k2
    row_scale,      // row 0 (tp,fn) * k1, row 1 (fp,tn) * k2
};

struct cm_transform {
    cm_transform_kind kind = cm_transform_kind::class_swap;
    double delta = 0.0;  // additive kinds
    double k1 = 1.0;     // scaling kinds (uniform uses k1 only)
    double k2 = 1.0;
};

const char* cm_transform_name(cm_transform_kind kind);

/// Applies the transform to a binary confusion matrix. Additive deltas must
/// keep every cell non-negative; scale factors must be positive.
confusion_matrix apply_cm_transform(const confusion_matrix& cm, const cm_transform& t);

/// Any scalar metric computable from a binary confusion matrix.
using cm_metric = std::function<double(const confusion_matrix&)>;

/// Prioritized h-accuracy read off a binary confusion matrix (the tau = 0.5,
/// constant-complexity setting): p0 * tn/(tn+fp) + p1 * tp/(tp+fn).
cm_metric prioritized_ha_metric(double p0, double p1);

/// Same, with priorities set to the class prevalences of the matrix itself;
/// collapses to regular accuracy (tp+tn)/N.
cm_metric prevalence_weighted_ha_metric();

struct invariance_verdict {
    bool invariant = true;
    double max_delta = 0.0;
    std::optional<std::pair<confusion_matrix, confusion_matrix>> counterexample;
};

/// Evaluates the metric on `trials` random non-degenerate matrices (all cells
/// in [1, 100)) and their transforms; invariant iff every pair agrees within
/// the tolerance. Returns the first counterexample otherwise.
invariance_verdict check_invariance(const cm_metric& metric, const cm_transform& t,
                                    int trials, std::uint64_t seed, double tolerance = 1e-12);

}  // namespace hacc
