#include "fractime/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

namespace fractime {

Rat rat_from_json(const json& v, const std::string& field) {
    try {
        if (v.is_string()) return parse_rat(v.get<std::string>());
        if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
        if (v.is_number_float()) {
            // Accept simple dyadic/decimal values exactly.
            double x = v.get<double>();
            for (std::int64_t den : {1, 2, 4, 8, 16, 32, 10, 100, 1000}) {
                double n = x * den;
                if (n == std::round(n) && std::abs(n) < 1e15) return Rat(std::int64_t(n), den);
            }
        }
    } catch (const std::exception& e) {
        throw SchemaError(field, e.what());
    }
    throw SchemaError(field, "expected a rational (\"p/q\", \"inf\", or a simple number)");
}

namespace {

const json& need(const json& doc, const std::string& field) {
    if (!doc.contains(field)) throw SchemaError(field, "missing");
    return doc.at(field);
}

double need_num(const json& doc, const std::string& field) {
    const json& v = need(doc, field);
    if (!v.is_number()) throw SchemaError(field, "expected a number");
    return v.get<double>();
}

long need_int(const json& doc, const std::string& field) {
    const json& v = need(doc, field);
    if (!v.is_number_integer()) throw SchemaError(field, "expected an integer");
    return v.get<long>();
}

}  // namespace

FractalSet set_from_json(const json& doc) {
    std::string kind = need(doc, "kind").get<std::string>();
    if (kind == "cantor") return FractalSet::cantor(need_num(doc, "alpha"), int(need_int(doc, "depth")));
    if (kind == "power") {
        if (doc.contains("resolution"))
            return FractalSet::power_sequence_for_resolution(need_num(doc, "a"),
                                                             need_num(doc, "resolution"));
        return FractalSet::power_sequence(need_num(doc, "a"), need_int(doc, "count"));
    }
    if (kind == "explicit") {
        const json& pts = need(doc, "points");
        if (!pts.is_array()) throw SchemaError("points", "expected an array");
        return FractalSet::explicit_points(pts.get<std::vector<double>>());
    }
    if (kind == "grid")
        return FractalSet::uniform_grid(need_num(doc, "lo"), need_num(doc, "hi"), need_int(doc, "n"));
    if (kind == "affine")
        return FractalSet::affine_image(set_from_json(need(doc, "base")), need_num(doc, "scale"),
                                        need_num(doc, "shift"));
    if (kind == "union") {
        const json& parts = need(doc, "parts");
        if (!parts.is_array() || parts.empty()) throw SchemaError("parts", "expected a nonempty array");
        std::vector<FractalSet> out;
        for (const auto& p : parts) out.push_back(set_from_json(p));
        return FractalSet::set_union(out);
    }
    throw SchemaError("kind", "unknown set kind '" + kind + "'");
}

AtomicMeasure measure_from_json(const json& doc) {
    if (doc.contains("positions")) {
        return AtomicMeasure(doc.at("positions").get<std::vector<double>>(),
                             need(doc, "weights").get<std::vector<double>>(), need_num(doc, "alpha"),
                             need_num(doc, "resolution"));
    }
    std::string kind = need(doc, "kind").get<std::string>();
    if (kind == "cantor") return cantor_measure(need_num(doc, "alpha"), int(need_int(doc, "depth")));
    if (kind == "lebesgue") return lebesgue_proxy(need_int(doc, "n"));
    throw SchemaError("kind", "unknown measure kind '" + kind + "'");
}

ExponentConfig exponents_from_json(const json& doc) {
    ExponentConfig ex;
    ex.d = int(need_int(doc, "d"));
    ex.gamma = rat_from_json(need(doc, "gamma"), "gamma");
    ex.alpha = rat_from_json(need(doc, "alpha"), "alpha");
    ex.q = rat_from_json(need(doc, "q"), "q");
    ex.r = rat_from_json(need(doc, "r"), "r");
    ex.s = doc.contains("s") ? need_num(doc, "s") : 0.0;
    ex.validate();
    return ex;
}

json ratio_report_json(const RatioReport& rep) {
    json out;
    out["name"] = rep.name;
    out["slope"] = rep.slope;
    out["residual"] = rep.residual;
    out["constant"] = rep.constant;
    for (const auto& [k, v] : rep.info) out[k] = v;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["scale"] = r.scale;
        row["ratio"] = r.ratio;
        row["numerator"] = r.numerator;
        row["denominator"] = r.denominator;
        row["seed"] = r.seed;
        rows.push_back(row);
    }
    out["rows"] = rows;
    return out;
}

json necessity_report_json(const NecessityReport& rep) {
    json out;
    out["name"] = rep.name;
    out["predicted_slope"] = rep.predicted;
    out["measured_slope"] = rep.measured;
    out["pass"] = rep.pass;
    for (const auto& [k, v] : rep.extra) out[k] = v;
    out["ratios"] = ratio_report_json(rep.ratios);
    return out;
}

namespace {

json scale_rows_json(const std::vector<ScaleRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json row;
        row["window"] = r.window;
        row["delta"] = r.delta;
        row["count"] = r.count;
        row["ratio"] = r.ratio;
        out.push_back(row);
    }
    return out;
}

}  // namespace

json assouad_report_json(const AssouadReport& rep) {
    json out;
    out["alpha"] = rep.alpha;
    out["sup_value"] = rep.sup_value;
    out["argmax_window"] = rep.argmax.window;
    out["argmax_delta"] = rep.argmax.delta;
    out["scale_lo"] = rep.scale_lo;
    out["scale_hi"] = rep.scale_hi;
    out["table"] = scale_rows_json(rep.table);
    return out;
}

json spectrum_report_json(const SpectrumReport& rep) {
    json out;
    out["theta"] = rep.theta;
    out["alpha"] = rep.alpha;
    out["sup_value"] = rep.sup_value;
    out["argmax_window"] = rep.argmax.window;
    out["argmax_delta"] = rep.argmax.delta;
    out["table"] = scale_rows_json(rep.table);
    return out;
}

json minkowski_report_json(const MinkowskiReport& rep) {
    json out;
    out["slope"] = rep.slope;
    out["residual"] = rep.residual;
    json rows = json::array();
    for (std::size_t i = 0; i < rep.m.size(); ++i) {
        json row;
        row["m"] = rep.m[i];
        row["count"] = rep.counts[i];
        rows.push_back(row);
    }
    out["rows"] = rows;
    return out;
}

json kernel_report_json(const KernelNormReport& rep) {
    json out;
    out["s"] = rep.s_exp;
    out["margin"] = rep.margin;
    out["claim"] = rep.claim;
    out["norm_constant"] = rep.assouad_const;
    out["strong_trend"] = rep.strong_trend;
    out["weak_trend"] = rep.weak_trend;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["j"] = r.j;
        row["points"] = r.n_points;
        row["strong"] = r.strong;
        row["weak"] = r.weak;
        row["strong_ratio"] = r.strong_ratio;
        row["weak_ratio"] = r.weak_ratio;
        rows.push_back(row);
    }
    out["rows"] = rows;
    return out;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open " + path);
    os << text;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out += header[i] + (i + 1 < header.size() ? "," : "");
    out += "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += format_real(row[i]) + (i + 1 < row.size() ? "," : "");
        out += "\r\n";
    }
    write_text(path, out);
}

void write_points_csv(const std::string& path, const std::vector<double>& points) {
    std::string out;
    for (double p : points) out += format_real(p) + "\r\n";
    write_text(path, out);
}

void write_measure_csv(const std::string& path, const AtomicMeasure& mu) {
    std::string out = "position,weight\r\n";
    for (std::size_t i = 0; i < mu.size(); ++i)
        out += format_real(mu.positions()[i]) + "," + format_real(mu.weights()[i]) + "\r\n";
    write_text(path, out);
}

std::string config_hash(const json& config) {
    std::string dump = config.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

json report_envelope(const json& config, std::uint64_t seed) {
    json out;
    out["version"] = kVersion;
    out["config_hash"] = config_hash(config);
    out["seed"] = seed;
    return out;
}

}  // namespace fractime
