#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hacc {

/// Machine-checkable failure categories used across the engine.
enum class errc {
    duplicate_id,
    unknown_label,
    score_out_of_range,
    scores_not_normalized,
    empty_dataset,
    tau_below_chance,
    tau_out_of_range,
    degenerate_at_one,
    not_binary,
    empty_class,
    zero_complexity_class,
    prevalence_not_half,
    degenerate_raters,
    no_correct_annotations,
    missing_complexity,
    out_of_scale_ordinal,
    unknown_instance,
    duplicate_annotation,
    negative_cell,
    parse_error,
    io_error,
    invalid_parameter,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_id: return "DuplicateId";
        case errc::unknown_label: return "UnknownLabel";
        case errc::score_out_of_range: return "ScoreOutOfRange";
        case errc::scores_not_normalized: return "ScoresNotNormalized";
        case errc::empty_dataset: return "EmptyDataset";
        case errc::tau_below_chance: return "TauBelowChance";
        case errc::tau_out_of_range: return "TauOutOfRange";
        case errc::degenerate_at_one: return "DegenerateAtOne";
        case errc::not_binary: return "NotBinary";
        case errc::empty_class: return "EmptyClass";
        case errc::zero_complexity_class: return "ZeroComplexityClass";
        case errc::prevalence_not_half: return "PrevalenceNotHalf";
        case errc::degenerate_raters: return "DegenerateRaters";
        case errc::no_correct_annotations: return "NoCorrectAnnotations";
        case errc::missing_complexity: return "MissingComplexity";
        case errc::out_of_scale_ordinal: return "OutOfScaleOrdinal";
        case errc::unknown_instance: return "UnknownInstance";
        case errc::duplicate_annotation: return "DuplicateAnnotation";
        case errc::negative_cell: return "NegativeCell";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
        case errc::invalid_parameter: return "InvalidParameter";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// One rule violation found while validating input data. `row` is the
/// 1-based source row when the data came from a file, 0 otherwise.
struct issue {
    errc code;
    std::size_t row = 0;
    std::string message;
};

/// Validation collects every violation before failing, so callers can
/// report all problems in one pass.
class validation_error : public error {
public:
    explicit validation_error(std::vector<issue> issues)
        : error(issues.empty() ? errc::invalid_parameter : issues.front().code,
                summarize(issues)),
          issues_(std::move(issues)) {}

    const std::vector<issue>& issues() const noexcept { return issues_; }

    bool has(errc c) const noexcept {
        for (const auto& i : issues_)
            if (i.code == c) return true;
        return false;
    }

private:
    static std::string summarize(const std::vector<issue>& issues) {
        if (issues.empty()) return "no issues";
        std::string s = issues.front().message;
        if (issues.size() > 1)
            s += " (+" + std::to_string(issues.size() - 1) + " more)";
        return s;
    }

    std::vector<issue> issues_;
};

}  // namespace hacc
