#include "hacc/csv.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include "hacc/format.hpp"

namespace hacc {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) throw error(errc::io_error, "read failure on '" + path + "'");
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::io_error, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw error(errc::io_error, "write failure on '" + path + "'");
}

dataset parse_predictions(const std::string& path, normalization mode) {
    return parse_predictions_text(read_file(path), path, mode);
}

dataset parse_predictions_text(const std::string& text, const std::string& origin,
                               normalization mode) {
    const auto lines = split_lines(text);
    if (lines.empty())
        throw error(errc::parse_error, origin + ": empty predictions file");

    const auto header = split_line(lines[0]);
    if (header.size() < 4 || header[0] != "instance_id" || header[1] != "true_label")
        throw error(errc::parse_error,
                    origin + ": header must be instance_id,true_label,score:<label>,...");

    std::vector<std::string> labels;
    for (std::size_t i = 2; i < header.size(); ++i) {
        if (header[i].rfind("score:", 0) != 0 || header[i].size() <= 6)
            throw error(errc::parse_error,
                        origin + ": column '" + header[i] + "' is not a score:<label> column");
        labels.push_back(header[i].substr(6));
    }

    dataset ds{label_set(std::move(labels)), {}};
    const std::size_t k = ds.labels.size();
    std::vector<std::size_t> source_line;  // per instance, 1-based
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) continue;
        const auto fields = split_line(lines[row]);
        if (fields.size() != k + 2)
            throw error(errc::parse_error,
                        origin + ":" + std::to_string(row + 1) + ": expected " +
                            std::to_string(k + 2) + " fields, got " +
                            std::to_string(fields.size()));
        instance inst;
        inst.id = fields[0];
        inst.true_label = fields[1];
        inst.scores.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            inst.scores.push_back(parse_double(
                fields[i + 2],
                origin + ":" + std::to_string(row + 1) + " score:" + ds.labels.at(i)));
        ds.instances.push_back(std::move(inst));
        source_line.push_back(row + 1);
    }
    try {
        return validate_dataset(std::move(ds), mode);
    } catch (validation_error& e) {
        // instance ordinals -> file lines
        std::vector<issue> shifted = e.issues();
        for (auto& i : shifted)
            if (i.row > 0 && i.row <= source_line.size()) i.row = source_line[i.row - 1];
        throw validation_error(std::move(shifted));
    }
}

std::string emit_predictions_csv(const dataset& ds) {
    std::string out = "instance_id,true_label";
    for (const auto& l : ds.labels.labels()) out += ",score:" + l;
    out += "\n";
    for (const auto& inst : ds.instances) {
        out += inst.id + "," + inst.true_label;
        for (double s : inst.scores) out += "," + format_full(s);
        out += "\n";
    }
    return out;
}

std::map<std::string, std::string> parse_gold(const std::string& path) {
    const auto lines = split_lines(read_file(path));
    if (lines.empty() || split_line(lines[0]) != std::vector<std::string>{"instance_id", "label"})
        throw error(errc::parse_error, path + ": header must be instance_id,label");
    std::map<std::string, std::string> gold;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) continue;
        const auto fields = split_line(lines[row]);
        if (fields.size() != 2)
            throw error(errc::parse_error,
                        path + ":" + std::to_string(row + 1) + ": expected 2 fields");
        if (!gold.emplace(fields[0], fields[1]).second)
            throw error(errc::duplicate_id,
                        path + ":" + std::to_string(row + 1) + ": duplicate instance '" +
                            fields[0] + "'");
    }
    if (gold.empty()) throw error(errc::parse_error, path + ": no gold labels");
    return gold;
}

annotation_set parse_annotations(const std::string& path,
                                 std::map<std::string, std::string> gold) {
    return parse_annotations_text(read_file(path), path, std::move(gold));
}

annotation_set parse_annotations_text(const std::string& text, const std::string& origin,
                                      std::map<std::string, std::string> gold) {
    const auto lines = split_lines(text);
    std::size_t row = 0;

    annotation_set set;
    set.gold = std::move(gold);

    // scales header: #scales confidence=<max> complexity=<max>
    bool scales_seen = false;
    while (row < lines.size() && !lines[row].empty() && lines[row][0] == '#') {
        std::istringstream in(lines[row]);
        std::string tag;
        in >> tag;
        if (tag == "#scales") {
            std::string item;
            while (in >> item) {
                const auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw error(errc::parse_error,
                                origin + ":" + std::to_string(row + 1) + ": bad scales item '" +
                                    item + "'");
                const std::string name = item.substr(0, eq);
                const long value = parse_integer(item.substr(eq + 1), "scale " + name);
                if (value < 1)
                    throw error(errc::parse_error,
                                origin + ":" + std::to_string(row + 1) + ": scale max must be >= 1");
                if (name == "confidence")
                    set.confidence_scale_max = static_cast<int>(value);
                else if (name == "complexity")
                    set.complexity_scale_max = static_cast<int>(value);
                else
                    throw error(errc::parse_error,
                                origin + ":" + std::to_string(row + 1) + ": unknown scale '" +
                                    name + "'");
            }
            scales_seen = true;
        }
        ++row;
    }
    if (!scales_seen)
        throw error(errc::parse_error,
                    origin + ": missing '#scales confidence=<max> complexity=<max>' header");

    const std::vector<std::string> expected_header = {"rater_id", "instance_id", "decision",
                                                      "assigned_label", "confidence", "complexity"};
    if (row >= lines.size() || split_line(lines[row]) != expected_header)
        throw error(errc::parse_error,
                    origin + ": header must be rater_id,instance_id,decision,assigned_label,"
                             "confidence,complexity");
    ++row;

    std::vector<issue> issues;
    std::map<std::pair<std::string, std::string>, std::size_t> annotation_of;  // (rater,instance)

    for (; row < lines.size(); ++row) {
        if (lines[row].empty() || lines[row][0] == '#') continue;
        const auto fields = split_line(lines[row]);
        const std::size_t line_no = row + 1;
        if (fields.size() != 6) {
            issues.push_back({errc::parse_error, line_no, "expected 6 fields"});
            continue;
        }
        const std::string& rater = fields[0];
        const std::string& inst = fields[1];
        const std::string& decision = fields[2];
        const std::string& label = fields[3];
        int confidence = 0, complexity = 0;
        try {
            confidence = static_cast<int>(parse_integer(fields[4], "confidence"));
            complexity = static_cast<int>(parse_integer(fields[5], "complexity"));
        } catch (const error& e) {
            issues.push_back({errc::parse_error, line_no, e.what()});
            continue;
        }

        if (!set.gold.count(inst))
            issues.push_back({errc::unknown_instance, line_no,
                              "annotated instance '" + inst + "' has no gold label"});
        if (confidence < 1 || confidence > set.confidence_scale_max)
            issues.push_back({errc::out_of_scale_ordinal, line_no,
                              "confidence " + std::to_string(confidence) +
                                  " outside declared scale 1.." +
                                  std::to_string(set.confidence_scale_max)});
        if (complexity < 1 || complexity > set.complexity_scale_max)
            issues.push_back({errc::out_of_scale_ordinal, line_no,
                              "complexity " + std::to_string(complexity) +
                                  " outside declared scale 1.." +
                                  std::to_string(set.complexity_scale_max)});

        const auto key = std::make_pair(rater, inst);
        auto it = annotation_of.find(key);
        if (it == annotation_of.end()) {
            annotation_of.emplace(key, set.annotations.size());
            set.annotations.push_back({rater, inst, {{decision, label}}, confidence, complexity});
        } else {
            auto& existing = set.annotations[it->second];
            if (!existing.assigned_labels.emplace(decision, label).second)
                issues.push_back({errc::duplicate_annotation, line_no,
                                  "rater '" + rater + "' already decided '" + decision +
                                      "' for instance '" + inst + "'"});
            if (existing.confidence != confidence || existing.complexity != complexity)
                issues.push_back({errc::parse_error, line_no,
                                  "confidence/complexity disagree across rows of rater '" +
                                      rater + "', instance '" + inst + "'"});
        }
    }

    if (set.annotations.empty())
        issues.push_back({errc::parse_error, 0, origin + ": no annotations"});
    if (!issues.empty()) throw validation_error(std::move(issues));
    return set;
}

std::map<std::string, double> parse_complexity_csv(const std::string& path) {
    const auto lines = split_lines(read_file(path));
    if (lines.empty() || split_line(lines[0]) != std::vector<std::string>{"instance_id", "value"})
        throw error(errc::parse_error, path + ": header must be instance_id,value");
    std::map<std::string, double> values;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) continue;
        const auto fields = split_line(lines[row]);
        if (fields.size() != 2)
            throw error(errc::parse_error,
                        path + ":" + std::to_string(row + 1) + ": expected 2 fields");
        const double v = parse_double(fields[1], "complexity of '" + fields[0] + "'");
        if (!values.emplace(fields[0], v).second)
            throw error(errc::duplicate_id,
                        path + ":" + std::to_string(row + 1) + ": duplicate instance '" +
                            fields[0] + "'");
    }
    return values;
}

std::map<std::string, double> parse_priority_pairs(const std::string& text) {
    std::map<std::string, double> weights;
    for (const auto& item : split_line(text)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw error(errc::parse_error, "bad priority item '" + item + "', want name=weight");
        const std::string label = item.substr(0, eq);
        if (!weights.emplace(label, parse_double(item.substr(eq + 1), "priority of " + label)).second)
            throw error(errc::parse_error, "priority for '" + label + "' given twice");
    }
    if (weights.empty()) throw error(errc::parse_error, "empty priority list");
    return weights;
}

}  // namespace hacc
