#include <doctest.h>

#include <cmath>

#include "hacc/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hacc;

TEST_CASE("regular and balanced accuracy on the four-instance fixture") {
    auto ds = fixtures::e1();
    CHECK(regular_accuracy(ds) == 0.5);
    CHECK(balanced_accuracy(ds) == 0.5);
}

TEST_CASE("regular accuracy extremes") {
    auto perfect = fixtures::from_counts(5, 0, 0, 5);
    CHECK(regular_accuracy(perfect) == 1.0);
    auto hopeless = fixtures::from_counts(0, 5, 5, 0);
    CHECK(regular_accuracy(hopeless) == 0.0);
}

TEST_CASE("balanced vs regular accuracy under imbalance") {
    // class neg: 10 instances all correct; class pos: 1 instance wrong
    auto ds = fixtures::from_counts(0, 1, 0, 10);
    CHECK(regular_accuracy(ds) == doctest::Approx(10.0 / 11.0).epsilon(1e-15));
    CHECK(balanced_accuracy(ds) == 0.5);

    // balanced dataset with equal per-class accuracy: the two coincide
    auto even = fixtures::from_counts(8, 2, 2, 8);
    CHECK(regular_accuracy(even) == 0.8);
    CHECK(balanced_accuracy(even) == 0.8);
}

TEST_CASE("balanced accuracy needs every class populated") {
    dataset ds{label_set({"neg", "pos"}), {{"x1", "neg", {0.9, 0.1}}}};
    CHECK_THROWS_AS(balanced_accuracy(ds), error);
}

TEST_CASE("h-accuracy on the fixture") {
    auto ds = fixtures::e1();
    const auto uniform = priority_vector::uniform(ds.labels);

    SUBCASE("chance tau reduces to balanced accuracy") {
        CHECK(h_accuracy(ds, {0.5, uniform, complexity_assignment::constant(),
                              penalty_kind::standard}) == 0.5);
    }
    SUBCASE("tau = 0.8 discounts the under-confident hit") {
        CHECK(h_accuracy(ds, {0.8, uniform, complexity_assignment::constant(),
                              penalty_kind::standard}) == 0.375);
    }
    SUBCASE("perfectly confident classifier scores 1 under any parameters") {
        auto perfect = fixtures::from_counts(3, 0, 0, 2);
        CHECK(h_accuracy(perfect, {0.9, priority_vector(perfect.labels, {0.3, 0.7}),
                                   complexity_assignment::constant(4.0),
                                   penalty_kind::standard}) == 1.0);
    }
}

TEST_CASE("h-accuracy error paths") {
    auto ds = fixtures::e1();
    const auto uniform = priority_vector::uniform(ds.labels);

    SUBCASE("zero complexity mass in a class") {
        auto dead_neg = complexity_assignment::per_instance(
            {{"x1", 0.0}, {"x2", 0.0}, {"x3", 1.0}, {"x4", 1.0}});
        CHECK_THROWS_AS(
            h_accuracy(ds, {0.5, uniform, dead_neg, penalty_kind::standard}), error);
    }
    SUBCASE("empty class") {
        dataset lonely{label_set({"neg", "pos"}), {{"x1", "neg", {0.9, 0.1}}}};
        CHECK_THROWS_AS(h_accuracy(lonely, {0.5, priority_vector::uniform(lonely.labels),
                                            complexity_assignment::constant(),
                                            penalty_kind::standard}),
                        error);
    }
    SUBCASE("tau below chance") {
        CHECK_THROWS_AS(h_accuracy(ds, {0.3, uniform, complexity_assignment::constant(),
                                        penalty_kind::standard}),
                        error);
    }
}

TEST_CASE("confident accuracy equals the dedicated h-accuracy instance") {
    auto ds = fixtures::e1();
    CHECK(confident_accuracy(ds, 0.5) == 0.5);
    CHECK(confident_accuracy(ds, 0.8) == 0.375);

    // when every correct prediction is fully confident, tau = 1 changes nothing
    auto perfect = fixtures::from_counts(2, 1, 1, 2);
    CHECK(confident_accuracy(perfect, 1.0) == balanced_accuracy(perfect));
}

TEST_CASE("prioritized accuracy is the weighted recall combination") {
    auto ds = fixtures::from_counts(8, 2, 4, 6);  // recall+ = 0.8, recall- = 0.6
    CHECK(prioritized_accuracy(ds, priority_vector(ds.labels, {0.25, 0.75}))
          == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(prioritized_accuracy(ds, priority_vector::uniform(ds.labels))
          == doctest::Approx(0.7).epsilon(1e-15));
    // all weight on the positive class: sensitivity
    CHECK(prioritized_accuracy(ds, priority_vector(ds.labels, {0.0, 1.0})) == 0.8);
}

TEST_CASE("prioritized accuracy is linear in the priorities") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto ds = oracle::random_dataset(1000 + trial, 40, trial % 2 ? 2 : 3);
        const std::size_t k = ds.labels.size();
        auto w1 = oracle::random_simplex(gen, k);
        auto w2 = oracle::random_simplex(gen, k);
        const double lambda = uniform_unit(gen);
        std::vector<double> mix(k);
        for (std::size_t c = 0; c < k; ++c)
            mix[c] = lambda * w1[c] + (1.0 - lambda) * w2[c];

        const double direct = prioritized_accuracy(ds, priority_vector(ds.labels, mix));
        const double combo = lambda * prioritized_accuracy(ds, priority_vector(ds.labels, w1)) +
                             (1.0 - lambda) * prioritized_accuracy(ds, priority_vector(ds.labels, w2));
        CHECK(std::abs(direct - combo) <= 1e-12);
    }
}

TEST_CASE("practical accuracy weighs instances by difficulty") {
    auto ds = fixtures::e1();

    SUBCASE("constant complexity collapses to balanced accuracy") {
        CHECK(practical_accuracy(ds, complexity_assignment::constant(0.5))
              == balanced_accuracy(ds));
    }
    SUBCASE("a zero-weight wrong instance vanishes") {
        auto d = complexity_assignment::per_instance(
            {{"x1", 1.0}, {"x2", 0.0}, {"x3", 1.0}, {"x4", 1.0}});
        // class neg keeps only its correct instance
        CHECK(practical_accuracy(ds, d) == 0.75);
    }
    SUBCASE("down-weighted correct instance") {
        auto d = complexity_assignment::per_instance(
            {{"x1", 0.5}, {"x2", 1.0}, {"x3", 1.0}, {"x4", 1.0}});
        // neg inner term = 0.5/1.5
        CHECK(practical_accuracy(ds, d)
              == doctest::Approx(0.5 * (0.5 / 1.5) + 0.5 * 0.5).epsilon(1e-15));
    }
}

TEST_CASE("net benefit closed-form cases") {
    CHECK(net_benefit({1.0, 0.0, 0.5}, 0.5) == 0.5);
    // J/2 coincidence at pi = 0.5, tau = 0.5
    const binary_rates r{0.8, 0.2, 0.5};
    CHECK(net_benefit(r, 0.5) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(net_benefit(r, 0.5) == doctest::Approx(youden_index(r) / 2.0).epsilon(1e-15));
    // strongly negative at a harsh threshold
    CHECK(net_benefit({0.0, 1.0, 0.5}, 0.9) == doctest::Approx(-4.5).epsilon(1e-12));
    CHECK_THROWS_AS(net_benefit(r, 0.0), error);
    CHECK_THROWS_AS(net_benefit(r, 1.0), error);
}

TEST_CASE("standardized net benefit divides by prevalence") {
    CHECK(standardized_net_benefit({1.0, 0.0, 0.5}, 0.5) == 1.0);
    CHECK(standardized_net_benefit({0.8, 0.2, 0.5}, 0.5)
          == doctest::Approx(0.6).epsilon(1e-15));
    // NB = 0.1 at pi = 0.25 -> 0.4
    const binary_rates r{0.4, 0.0, 0.25};
    CHECK(net_benefit(r, 0.5) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(standardized_net_benefit(r, 0.5) == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("youden index") {
    CHECK(youden_index({1.0, 0.0, 0.5}) == 1.0);
    CHECK(youden_index({0.7, 0.7, 0.5}) == 0.0);
    CHECK(youden_index({0.8, 0.2, 0.5}) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("risk-induced rates match direct counting") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto ds = oracle::random_balanced_binary(seed, 25);
        for (double tau : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const auto engine = risk_rates(ds, tau);
            const auto counted = oracle::risk_rates(ds, tau);
            CHECK(engine.tpr == counted.tpr);
            CHECK(engine.fpr == counted.fpr);
            CHECK(engine.prevalence == counted.pi);
        }
    }
}

TEST_CASE("net benefit via h-accuracy equals the direct formula") {
    SUBCASE("random datasets across the tau grid") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            auto ds = oracle::random_balanced_binary(seed, 25);
            for (int step = 1; step <= 19; ++step) {
                const double tau = 0.05 * step;
                const auto rates = oracle::risk_rates(ds, tau);
                const double direct = oracle::net_benefit(rates.tpr, rates.fpr, rates.pi, tau);
                CHECK(std::abs(net_benefit_via_ha(ds, tau) - direct) <= 1e-10);
            }
        }
    }
    SUBCASE("spec example: seeded n=50 dataset at tau = 0.3") {
        auto ds = oracle::random_balanced_binary(42, 25);
        const auto rates = oracle::risk_rates(ds, 0.3);
        const double direct = oracle::net_benefit(rates.tpr, rates.fpr, rates.pi, 0.3);
        CHECK(std::abs(net_benefit_via_ha(ds, 0.3) - direct) <= 1e-10);
    }
    SUBCASE("perfect confident classifier at tau 0.5") {
        auto ds = fixtures::from_counts(5, 0, 0, 5);
        CHECK(net_benefit_via_ha(ds, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("balanced dataset at tau 0.5 gives Ba - 0.5") {
        for (std::uint64_t seed = 100; seed < 110; ++seed) {
            auto ds = oracle::random_balanced_binary(seed, 20);
            CHECK(std::abs(net_benefit_via_ha(ds, 0.5) - (balanced_accuracy(ds) - 0.5)) <= 1e-12);
        }
    }
    SUBCASE("parameter errors") {
        auto ds = fixtures::e1();
        CHECK_THROWS_AS(net_benefit_via_ha(ds, 1.0), error);
        CHECK_THROWS_AS(net_benefit_via_ha(ds, 0.0), error);
        dataset three{label_set({"a", "b", "c"}),
                      {{"x1", "a", {0.8, 0.1, 0.1}},
                       {"x2", "b", {0.1, 0.8, 0.1}},
                       {"x3", "c", {0.1, 0.1, 0.8}}}};
        CHECK_THROWS_AS(net_benefit_via_ha(three, 0.5), error);
    }
}

TEST_CASE("standardized net benefit via h-accuracy") {
    SUBCASE("perfect confident classifier") {
        auto ds = fixtures::from_counts(5, 0, 0, 5);
        CHECK(standardized_nb_via_ha(ds, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("matches the direct formula on balanced data") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto ds = oracle::random_balanced_binary(seed, 25);
            for (double tau : {0.2, 0.4, 0.6, 0.8}) {
                const auto rates = oracle::risk_rates(ds, tau);
                const double direct =
                    oracle::net_benefit(rates.tpr, rates.fpr, rates.pi, tau) / rates.pi;
                CHECK(std::abs(standardized_nb_via_ha(ds, tau) - direct) <= 1e-10);
            }
        }
    }
    SUBCASE("tau 0.5 on balanced data equals the youden index") {
        auto ds = oracle::random_balanced_binary(77, 30);
        const auto rates = oracle::risk_rates(ds, 0.5);
        CHECK(std::abs(standardized_nb_via_ha(ds, 0.5) - (rates.tpr - rates.fpr)) <= 1e-10);
        CHECK(std::abs(standardized_nb_via_ha(ds, 0.5) -
                       2.0 * (balanced_accuracy(ds) - 0.5)) <= 1e-10);
    }
    SUBCASE("rejects skewed prevalence in strict mode") {
        auto ds = fixtures::from_counts(2, 1, 1, 6);
        CHECK_THROWS_AS(standardized_nb_via_ha(ds, 0.5), error);
        CHECK_NOTHROW(standardized_nb_via_ha(ds, 0.5, 0.5));
    }
}

TEST_CASE("confident accuracy is non-increasing in tau") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto ds = oracle::random_dataset(seed, 30, seed % 2 ? 2 : 3);
        const double chance = ds.labels.chance();
        double previous = 2.0;
        for (int step = 0; step <= 20; ++step) {
            const double tau = chance + (1.0 - chance) * step / 20.0;
            const double value = confident_accuracy(ds, tau);
            CHECK(value <= previous + 1e-12);
            previous = value;
        }
    }
}

TEST_CASE("roc points and auroc") {
    SUBCASE("perfect ranker") {
        dataset ds{label_set({"neg", "pos"}), {
            {"p1", "pos", {0.1, 0.9}},
            {"p2", "pos", {0.4, 0.6}},
            {"n1", "neg", {0.6, 0.4}},
            {"n2", "neg", {0.9, 0.1}},
        }};
        CHECK(auroc(ds) == 1.0);
        auto pts = roc_points(ds, {0.95, 0.5, 0.05});
        REQUIRE(pts.size() == 3);
        CHECK(pts[0].fpr == 0.0);  // threshold 0.95: nothing passes
        CHECK(pts[0].tpr == 0.0);
        CHECK(pts[1].fpr == 0.0);  // threshold 0.5: both positives, no negative
        CHECK(pts[1].tpr == 1.0);
        CHECK(pts[2].fpr == 1.0);  // threshold 0.05: everything passes
        CHECK(pts[2].tpr == 1.0);
    }
    SUBCASE("constant scores give chance area") {
        dataset ds{label_set({"neg", "pos"}), {
            {"p1", "pos", {0.5, 0.5}},
            {"n1", "neg", {0.5, 0.5}},
        }};
        CHECK(auroc(ds) == 0.5);
    }
    SUBCASE("anti-ranker") {
        dataset ds{label_set({"neg", "pos"}), {
            {"p1", "pos", {0.9, 0.1}},
            {"n1", "neg", {0.1, 0.9}},
        }};
        CHECK(auroc(ds) == 0.0);
    }
    SUBCASE("auroc agrees with pairwise counting") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto ds = oracle::random_balanced_binary(seed, 20);
            // probability a random positive outranks a random negative,
            // ties counted half
            double pairs = 0.0, wins = 0.0;
            for (const auto& a : ds.instances) {
                if (a.true_label != "pos") continue;
                for (const auto& b : ds.instances) {
                    if (b.true_label != "neg") continue;
                    pairs += 1.0;
                    if (a.scores[1] > b.scores[1]) wins += 1.0;
                    else if (a.scores[1] == b.scores[1]) wins += 0.5;
                }
            }
            CHECK(auroc(ds) == doctest::Approx(wins / pairs).epsilon(1e-12));
        }
    }
}

TEST_CASE("zero complexity class detection") {
    auto ds = fixtures::e1();
    auto dead_neg = complexity_assignment::per_instance(
        {{"x1", 0.0}, {"x2", 0.0}, {"x3", 1.0}, {"x4", 1.0}});
    auto zeroed = zero_complexity_classes(ds, dead_neg);
    REQUIRE(zeroed.size() == 1);
    CHECK(zeroed[0] == "neg");
    CHECK(zero_complexity_classes(ds, complexity_assignment::constant()).empty());
}
