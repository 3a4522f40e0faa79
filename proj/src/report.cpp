#include "hacc/report.hpp"

#include "hacc/csv.hpp"
#include "hacc/format.hpp"

namespace hacc {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class json_writer {
public:
    std::string str() && { return std::move(out_); }

    void raw(const std::string& s) { out_ += s; }
    void string(const std::string& s) { out_ += '"' + json_escape(s) + '"'; }
    void number(double v) { out_ += format_sig12(v); }

    void key(const std::string& k) {
        comma();
        string(k);
        out_ += ':';
        pending_comma_ = false;
    }

    void begin_object() {
        comma();
        out_ += '{';
        pending_comma_ = false;
    }
    void end_object() {
        out_ += '}';
        pending_comma_ = true;
    }
    void begin_array() {
        comma();
        out_ += '[';
        pending_comma_ = false;
    }
    void end_array() {
        out_ += ']';
        pending_comma_ = true;
    }

    void value_string(const std::string& s) {
        comma();
        string(s);
        pending_comma_ = true;
    }
    void value_number(double v) {
        comma();
        number(v);
        pending_comma_ = true;
    }
    void value_raw(const std::string& s) {
        comma();
        out_ += s;
        pending_comma_ = true;
    }

private:
    void comma() {
        if (pending_comma_) out_ += ',';
    }

    std::string out_;
    bool pending_comma_ = false;
};

void write_param_object(json_writer& w, const param_source& src,
                        const std::map<std::string, double>* weights,
                        const std::optional<double>& value) {
    w.begin_object();
    if (!src.detail.empty()) {
        w.key("detail");
        w.value_string(src.detail);
    }
    w.key("source");
    w.value_string(src.source);
    if (value) {
        w.key("value");
        w.value_number(*value);
    }
    if (weights) {
        w.key("weights");
        w.begin_object();
        for (const auto& [label, weight] : *weights) {
            w.key(label);
            w.value_number(weight);
        }
        w.end_object();
    }
    w.end_object();
}

void write_sweep_object(json_writer& w, const report_doc::named_sweep& sweep) {
    w.begin_object();
    w.key("axes");
    w.begin_array();
    for (const auto& a : sweep.table.axis_names) w.value_string(a);
    w.end_array();
    w.key("columns");
    w.begin_array();
    for (const auto& c : sweep.table.value_names) w.value_string(c);
    w.end_array();
    w.key("name");
    w.value_string(sweep.name);
    w.key("rows");
    w.begin_array();
    for (const auto& row : sweep.table.rows) {
        w.begin_array();
        for (double p : row.point) w.value_number(p);
        for (double v : row.values) w.value_number(v);
        w.end_array();
    }
    w.end_array();
    w.end_object();
}

std::string emit_report_json(const report_doc& r) {
    json_writer w;
    w.begin_object();

    w.key("metadata");
    w.begin_object();
    w.key("inputs");
    w.begin_object();
    for (const auto& [role, digest] : r.inputs) {
        w.key(role);
        w.value_string(digest);
    }
    w.end_object();
    w.key("rng");
    w.value_string(r.rng);
    w.key("seed");
    if (r.seed)
        w.value_raw(std::to_string(*r.seed));
    else
        w.value_raw("null");
    w.key("timestamp");
    w.value_string(r.timestamp);
    w.key("tool");
    w.value_string(tool_name);
    w.key("version");
    w.value_string(tool_version);
    w.end_object();

    w.key("metrics");
    w.begin_object();
    for (const auto& [name, value] : r.metrics) {
        w.key(name);
        w.value_number(value);
    }
    w.end_object();

    w.key("parameters");
    w.begin_object();
    w.key("complexity");
    write_param_object(w, r.complexity_source, nullptr, r.complexity_const);
    w.key("penalty");
    w.value_string(r.penalty);
    if (!r.positive_label.empty()) {
        w.key("positive_label");
        w.value_string(r.positive_label);
    }
    w.key("priorities");
    write_param_object(w, r.priorities_source,
                       r.priorities.empty() ? nullptr : &r.priorities, std::nullopt);
    w.key("tau");
    write_param_object(w, r.tau_source, nullptr, r.tau);
    w.end_object();

    w.key("sweeps");
    w.begin_array();
    for (const auto& s : r.sweeps) write_sweep_object(w, s);
    w.end_array();

    w.end_object();
    std::string out = std::move(w).str();
    out += '\n';
    return out;
}

void emit_sweep_tsv_body(std::string& out, const sweep_table& table) {
    bool first = true;
    for (const auto& a : table.axis_names) {
        if (!first) out += '\t';
        out += a;
        first = false;
    }
    for (const auto& c : table.value_names) {
        if (!first) out += '\t';
        out += c;
        first = false;
    }
    out += '\n';
    for (const auto& row : table.rows) {
        first = true;
        for (double p : row.point) {
            if (!first) out += '\t';
            out += format_sig12(p);
            first = false;
        }
        for (double v : row.values) {
            if (!first) out += '\t';
            out += format_sig12(v);
            first = false;
        }
        out += '\n';
    }
}

std::string emit_report_tsv(const report_doc& r) {
    std::string out;
    out += "#report\ttool=" + std::string(tool_name) + "\tversion=" + tool_version;
    if (r.seed) out += "\tseed=" + std::to_string(*r.seed);
    if (!r.rng.empty()) out += "\trng=" + r.rng;
    if (!r.timestamp.empty()) out += "\ttimestamp=" + r.timestamp;
    out += '\n';
    for (const auto& [role, digest] : r.inputs)
        out += "#input\t" + role + "\t" + digest + "\n";

    if (r.tau) {
        out += "param\ttau\t" + format_sig12(*r.tau) + "\tsource=" + r.tau_source.source;
        if (!r.tau_source.detail.empty()) out += "\t" + r.tau_source.detail;
        out += '\n';
    }
    for (const auto& [label, weight] : r.priorities)
        out += "param\tpriority:" + label + "\t" + format_sig12(weight) +
               "\tsource=" + r.priorities_source.source + "\n";
    if (r.complexity_const)
        out += "param\tcomplexity\tconst:" + format_sig12(*r.complexity_const) +
               "\tsource=" + r.complexity_source.source + "\n";
    else if (r.complexity_source.source != "default")
        out += "param\tcomplexity\t" + r.complexity_source.detail +
               "\tsource=" + r.complexity_source.source + "\n";
    out += "param\tpenalty\t" + r.penalty + "\n";
    if (!r.positive_label.empty()) out += "param\tpositive_label\t" + r.positive_label + "\n";

    for (const auto& [name, value] : r.metrics)
        out += "metric\t" + name + "\t" + format_sig12(value) + "\n";

    for (const auto& s : r.sweeps) {
        out += "sweep\t" + s.name + "\n";
        emit_sweep_tsv_body(out, s.table);
        out += "endsweep\n";
    }
    return out;
}

}  // namespace

std::string emit_report(const report_doc& report, report_format format) {
    return format == report_format::json ? emit_report_json(report)
                                         : emit_report_tsv(report);
}

std::string emit_sweep(const sweep_table& table, report_format format) {
    if (format == report_format::tsv) {
        std::string out;
        emit_sweep_tsv_body(out, table);
        return out;
    }
    json_writer w;
    report_doc::named_sweep named{"sweep", table};
    write_sweep_object(w, named);
    std::string out = std::move(w).str();
    out += '\n';
    return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_file(const std::string& path) {
    const std::uint64_t h = fnv1a64(read_file(path));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hacc
