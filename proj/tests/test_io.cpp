#include <doctest.h>

#include <json.hpp>

#include "hacc/csv.hpp"
#include "hacc/report.hpp"
#include "support/oracles.hpp"

using namespace hacc;

TEST_CASE("predictions parsing") {
    SUBCASE("well-formed file") {
        auto ds = parse_predictions_text(
            "instance_id,true_label,score:neg,score:pos\n"
            "a,neg,0.7,0.3\n"
            "b,pos,0.2,0.8\n",
            "inline");
        CHECK(ds.size() == 2);
        CHECK(ds.labels.labels() == std::vector<std::string>{"neg", "pos"});
        CHECK(ds.instances[1].scores[1] == 0.8);
    }
    SUBCASE("scientific notation is accepted") {
        auto ds = parse_predictions_text(
            "instance_id,true_label,score:neg,score:pos\n"
            "a,pos,5e-2,9.5e-1\n",
            "inline");
        CHECK(ds.instances[0].scores[1] == 0.95);
        CHECK(ds.instances[0].scores[0] == 0.05);
    }
    SUBCASE("malformed score column header") {
        CHECK_THROWS_WITH_AS(
            parse_predictions_text("instance_id,true_label,score:neg,pos\n"
                                   "a,neg,0.7,0.3\n",
                                   "inline"),
            doctest::Contains("'pos'"), error);
    }
    SUBCASE("row with wrong field count names the row") {
        CHECK_THROWS_WITH_AS(
            parse_predictions_text("instance_id,true_label,score:neg,score:pos\n"
                                   "a,neg,0.7\n",
                                   "inline"),
            doctest::Contains("inline:2"), error);
    }
    SUBCASE("validation failures carry the source row") {
        try {
            parse_predictions_text(
                "instance_id,true_label,score:neg,score:pos\n"
                "a,neg,0.7,0.3\n"
                "a,pos,1.2,-0.2\n",
                "inline");
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            CHECK(e.has(errc::duplicate_id));
            CHECK(e.has(errc::score_out_of_range));
            bool found_row3 = false;
            for (const auto& i : e.issues()) found_row3 |= i.row == 3;
            CHECK(found_row3);
        }
    }
    SUBCASE("raw mode skips the sum constraint") {
        const std::string text =
            "instance_id,true_label,score:neg,score:pos\n"
            "a,neg,0.9,0.9\n";
        CHECK_THROWS_AS(parse_predictions_text(text, "inline"), validation_error);
        CHECK_NOTHROW(parse_predictions_text(text, "inline", normalization::raw));
    }
}

TEST_CASE("predictions round-trip through emit and parse") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto ds = oracle::random_dataset(seed, 25, seed % 2 ? 2 : 3);
        auto back = parse_predictions_text(emit_predictions_csv(ds), "roundtrip");
        REQUIRE(back.size() == ds.size());
        CHECK(back.labels.labels() == ds.labels.labels());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(back.instances[i].id == ds.instances[i].id);
            CHECK(back.instances[i].true_label == ds.instances[i].true_label);
            CHECK(back.instances[i].scores == ds.instances[i].scores);  // bit-exact
        }
    }
}

TEST_CASE("annotations parsing") {
    const std::map<std::string, std::string> gold = {{"m1", "1"}, {"m2", "0"}};

    SUBCASE("scales header and multi-decision merge") {
        auto set = parse_annotations_text(
            "#scales confidence=4 complexity=5\n"
            "rater_id,instance_id,decision,assigned_label,confidence,complexity\n"
            "r1,m1,acl,1,3,2\n"
            "r1,m1,meniscus,0,3,2\n"
            "r2,m2,acl,0,4,1\n",
            "inline", gold);
        CHECK(set.confidence_scale_max == 4);
        CHECK(set.complexity_scale_max == 5);
        REQUIRE(set.annotations.size() == 2);  // r1/m1 rows merged
        CHECK(set.annotations[0].assigned_labels.size() == 2);
        CHECK(set.annotations[0].assigned_labels.at("meniscus") == "0");
        CHECK(set.decisions() == std::vector<std::string>{"acl", "meniscus"});
    }
    SUBCASE("out-of-scale ordinal names the row") {
        try {
            parse_annotations_text(
                "#scales confidence=4 complexity=5\n"
                "rater_id,instance_id,decision,assigned_label,confidence,complexity\n"
                "r1,m1,acl,1,5,2\n",
                "inline", gold);
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            REQUIRE(e.issues().size() == 1);
            CHECK(e.issues()[0].code == errc::out_of_scale_ordinal);
            CHECK(e.issues()[0].row == 3);
        }
    }
    SUBCASE("duplicate decision for one rater and instance") {
        try {
            parse_annotations_text(
                "#scales confidence=4 complexity=5\n"
                "rater_id,instance_id,decision,assigned_label,confidence,complexity\n"
                "r1,m1,acl,1,3,2\n"
                "r1,m1,acl,0,3,2\n",
                "inline", gold);
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            CHECK(e.has(errc::duplicate_annotation));
        }
    }
    SUBCASE("conflicting confidence across merged rows") {
        try {
            parse_annotations_text(
                "#scales confidence=4 complexity=5\n"
                "rater_id,instance_id,decision,assigned_label,confidence,complexity\n"
                "r1,m1,acl,1,3,2\n"
                "r1,m1,meniscus,0,4,2\n",
                "inline", gold);
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            CHECK(e.has(errc::parse_error));
        }
    }
    SUBCASE("annotation for an instance without gold") {
        try {
            parse_annotations_text(
                "#scales confidence=4 complexity=5\n"
                "rater_id,instance_id,decision,assigned_label,confidence,complexity\n"
                "r1,ghost,acl,1,3,2\n",
                "inline", gold);
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            CHECK(e.has(errc::unknown_instance));
        }
    }
    SUBCASE("missing scales header") {
        CHECK_THROWS_AS(parse_annotations_text(
                            "rater_id,instance_id,decision,assigned_label,confidence,complexity\n"
                            "r1,m1,acl,1,3,2\n",
                            "inline", gold),
                        error);
    }
}

TEST_CASE("priority pair and complexity specs") {
    auto weights = parse_priority_pairs("neg=0.52,pos=0.48");
    CHECK(weights.at("neg") == 0.52);
    CHECK(weights.at("pos") == 0.48);
    CHECK_THROWS_AS(parse_priority_pairs("neg=0.5,neg=0.5"), error);
    CHECK_THROWS_AS(parse_priority_pairs("neg:0.5"), error);
}

TEST_CASE("report emission is deterministic and minimal-digit") {
    report_doc doc;
    doc.inputs["predictions"] = "fnv1a64:0123456789abcdef";
    doc.seed = 42;
    doc.rng = rng_contract;
    doc.metrics = {{"balanced_accuracy", 0.5},
                   {"h_accuracy", 1.0 / 3.0},
                   {"regular_accuracy", 0.84}};
    doc.tau = 0.75;
    doc.tau_source = {"flag", ""};
    doc.priorities = {{"neg", 0.52}, {"pos", 0.48}};
    doc.priorities_source = {"derived", "rater-performance"};
    doc.complexity_const = 1.0;
    doc.complexity_source = {"default", ""};
    doc.positive_label = "pos";

    const auto once = emit_report(doc, report_format::json);
    const auto twice = emit_report(doc, report_format::json);
    CHECK(once == twice);
    CHECK(once.back() == '\n');

    // minimal rendering with a 12-significant-digit cap
    CHECK(once.find("\"balanced_accuracy\":0.5") != std::string::npos);
    CHECK(once.find("\"h_accuracy\":0.333333333333") != std::string::npos);
    CHECK(once.find("0.50000000000") == std::string::npos);

    // structurally valid JSON with the expected blocks
    auto parsed = nlohmann::json::parse(once);
    CHECK(parsed["metadata"]["seed"] == 42);
    CHECK(parsed["metadata"]["tool"] == "hacc");
    CHECK(parsed["metrics"]["regular_accuracy"] == 0.84);
    CHECK(parsed["parameters"]["priorities"]["weights"]["neg"] == 0.52);
    CHECK(parsed["sweeps"].is_array());
    CHECK(parsed["sweeps"].empty());

    SUBCASE("tsv form is stable too") {
        const auto tsv = emit_report(doc, report_format::tsv);
        CHECK(tsv == emit_report(doc, report_format::tsv));
        CHECK(tsv.find("metric\tbalanced_accuracy\t0.5\n") != std::string::npos);
    }
    SUBCASE("sweep blocks") {
        sweep_table table{{"tau"}, {"confident_accuracy"}, {{{0.5}, {0.5}}, {{0.8}, {0.375}}}};
        doc.sweeps.push_back({"tau", table});
        auto with_sweep = nlohmann::json::parse(emit_report(doc, report_format::json));
        REQUIRE(with_sweep["sweeps"].size() == 1);
        CHECK(with_sweep["sweeps"][0]["name"] == "tau");
        CHECK(with_sweep["sweeps"][0]["rows"][1][1] == 0.375);

        const auto tsv = emit_sweep(table, report_format::tsv);
        CHECK(tsv == "tau\tconfident_accuracy\n0.5\t0.5\n0.8\t0.375\n");
    }
}

TEST_CASE("fnv1a64 digest") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("hello") != fnv1a64("hellp"));
}
