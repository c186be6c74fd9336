#ifndef FRACTIME_SERIALIZE_HPP
#define FRACTIME_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "fractime/dimension.hpp"
#include "fractime/experiment.hpp"
#include "fractime/exponents.hpp"
#include "fractime/fracmeasure.hpp"
#include "fractime/fracset.hpp"
#include "fractime/kernels.hpp"
#include "fractime/sharpness.hpp"

namespace fractime {

// Reports keep their key order, so byte-identical dumps follow from
// deterministic values.
using json = nlohmann::ordered_json;

Rat rat_from_json(const json& v, const std::string& field);

// {"kind": "cantor"|"power"|"explicit"|"affine"|"union", ...}
FractalSet set_from_json(const json& doc);

// {"kind": "cantor", "alpha": .., "depth": ..} or {"kind": "lebesgue", "n": ..}
// or {"positions": [...], "weights": [...], "alpha": .., "resolution": ..}
AtomicMeasure measure_from_json(const json& doc);

ExponentConfig exponents_from_json(const json& doc);

json ratio_report_json(const RatioReport& rep);
json necessity_report_json(const NecessityReport& rep);
json assouad_report_json(const AssouadReport& rep);
json spectrum_report_json(const SpectrumReport& rep);
json minkowski_report_json(const MinkowskiReport& rep);
json kernel_report_json(const KernelNormReport& rep);

// RFC 4180 CSV (CRLF rows). Reals carry 17 significant digits.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
void write_points_csv(const std::string& path, const std::vector<double>& points);
void write_measure_csv(const std::string& path, const AtomicMeasure& mu);
void write_text(const std::string& path, const std::string& text);

std::string format_real(double v);

// FNV-1a 64-bit hash of the canonical dump; embedded in every report.
std::string config_hash(const json& config);

// Report envelope: version, config hash, seed, then the payload.
json report_envelope(const json& config, std::uint64_t seed);

}  // namespace fractime

#endif
