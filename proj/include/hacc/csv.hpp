#pragma once

#include <map>
#include <string>

#include "hacc/core.hpp"
#include "hacc/elicitation.hpp"

namespace hacc {

/// Predictions CSV: header `instance_id,true_label,score:<l1>,...,score:<lk>`,
/// one instance per row, UTF-8, comma separated, `.` decimal point. The label
/// set is the score-column order. The parsed dataset is validated before it
/// is returned.
dataset parse_predictions(const std::string& path,
                          normalization mode = normalization::simplex);

dataset parse_predictions_text(const std::string& text, const std::string& origin,
                               normalization mode = normalization::simplex);

/// Inverse of parse_predictions, scores at full round-trip precision.
std::string emit_predictions_csv(const dataset& ds);

/// Gold CSV: header `instance_id,label`.
std::map<std::string, std::string> parse_gold(const std::string& path);

/// Annotations CSV: a `#scales confidence=<max> complexity=<max>` comment
/// line, then `rater_id,instance_id,decision,assigned_label,confidence,complexity`.
/// Rows of one (rater, instance) pair merge into a single annotation carrying
/// all decisions; their confidence and complexity must agree.
annotation_set parse_annotations(const std::string& path,
                                 std::map<std::string, std::string> gold);

annotation_set parse_annotations_text(const std::string& text, const std::string& origin,
                                      std::map<std::string, std::string> gold);

/// Complexity CSV: header `instance_id,value`, values in [0,1].
std::map<std::string, double> parse_complexity_csv(const std::string& path);

/// Priorities from `name=w,name=w` text (as passed on a command line).
std::map<std::string, double> parse_priority_pairs(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hacc
