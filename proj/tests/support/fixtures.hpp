#pragma once

#include "hacc/core.hpp"

namespace fixtures {

// Four binary instances, two per class, half of them argmax-correct:
//   x1 neg (0.9, 0.1)  correct, confident
//   x2 neg (0.4, 0.6)  wrong
//   x3 pos (0.35,0.65) correct, not confident
//   x4 pos (0.7, 0.3)  wrong
inline hacc::dataset e1() {
    hacc::dataset ds{hacc::label_set({"neg", "pos"}), {}};
    ds.instances = {
        {"x1", "neg", {0.9, 0.1}},
        {"x2", "neg", {0.4, 0.6}},
        {"x3", "pos", {0.35, 0.65}},
        {"x4", "pos", {0.7, 0.3}},
    };
    return ds;
}

// Binary dataset realizing a given confusion count with fully confident
// scores; used where only the argmax outcome matters.
inline hacc::dataset from_counts(std::size_t tp, std::size_t fn, std::size_t fp, std::size_t tn) {
    hacc::dataset ds{hacc::label_set({"neg", "pos"}), {}};
    std::size_t i = 0;
    auto add = [&](const char* truth, double pos_score, std::size_t count) {
        for (std::size_t c = 0; c < count; ++c)
            ds.instances.push_back(
                {"x" + std::to_string(i++), truth, {1.0 - pos_score, pos_score}});
    };
    add("pos", 1.0, tp);
    add("pos", 0.0, fn);
    add("neg", 1.0, fp);
    add("neg", 0.0, tn);
    return ds;
}

}  // namespace fixtures
