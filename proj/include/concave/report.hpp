#pragma once

// Structured result of a verification sweep plus its JSON and CSV encodings.
//
// JSON object per report:
//   {claim_id, kind, params, value, bound, ratio, pass, tolerance,
//    worst_point, flagged, skipped, note}
// Non-finite numbers are written as null. Keys are emitted in sorted order
// and runtime is left out, so equal inputs give byte-identical output.

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace concave {

enum class ClaimKind {
  bound,          // pass iff worst ratio <= 1 + tolerance
  equality,       // pass iff worst deviation <= tolerance
  informational,  // always "passes"; deviations are recorded, never judged
};

inline std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::bound: return "bound";
    case ClaimKind::equality: return "equality";
    case ClaimKind::informational: return "informational";
  }
  return "unknown";
}

struct VerificationReport {
  std::string claim_id;
  ClaimKind kind = ClaimKind::bound;
  nlohmann::json grid_spec = nlohmann::json::object();
  double value = 0.0;        // observed quantity at the worst point
  double bound = 0.0;        // bound or reference value at the worst point
  double worst_ratio = 0.0;  // value/bound for bounds, deviation for equalities
  nlohmann::json worst_point = nlohmann::json::object();
  bool pass = false;
  double tolerance = 0.0;
  std::int64_t runtime_ms = 0;
  bool flagged = false;               // informational rows only
  std::vector<std::string> skipped;   // singular or degenerate cells, never dropped silently
  std::string note;

  std::size_t observations = 0;

  /// Record a candidate; keeps the largest ratio, and NaN beats everything.
  void observe(double ratio, double observed, double reference, nlohmann::json point) {
    const bool worse = observations == 0 ||
                       (!std::isnan(worst_ratio) && (std::isnan(ratio) || ratio > worst_ratio));
    ++observations;
    if (worse) {
      worst_ratio = ratio;
      value = observed;
      bound = reference;
      worst_point = std::move(point);
    }
  }

  /// Set `pass` from kind, worst_ratio and tolerance.
  VerificationReport& finalize() {
    switch (kind) {
      case ClaimKind::bound:
        pass = !std::isnan(worst_ratio) && worst_ratio <= 1.0 + tolerance;
        break;
      case ClaimKind::equality:
        pass = !std::isnan(worst_ratio) && worst_ratio <= tolerance;
        break;
      case ClaimKind::informational:
        pass = true;
        break;
    }
    return *this;
  }
};

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace detail {
inline nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}
}  // namespace detail

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["claim_id"] = r.claim_id;
  j["kind"] = std::string(to_string(r.kind));
  j["params"] = r.grid_spec;
  j["value"] = detail::number_or_null(r.value);
  j["bound"] = detail::number_or_null(r.bound);
  j["ratio"] = detail::number_or_null(r.worst_ratio);
  j["pass"] = r.pass;
  j["tolerance"] = detail::number_or_null(r.tolerance);
  j["worst_point"] = r.worst_point;
  j["flagged"] = r.flagged;
  j["skipped"] = r.skipped;
  j["note"] = r.note;
  return j;
}

inline std::string to_json_text(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

/// RFC 4180 field quoting: wrap in quotes when the field holds a comma,
/// quote, CR or LF; double embedded quotes.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << "\r\n";
}

inline void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  write_csv_row(os, {"claim_id", "kind", "pass", "value", "bound", "ratio", "tolerance",
                     "flagged", "skipped", "params", "worst_point", "note"});
  for (const auto& r : reports) {
    write_csv_row(os, {r.claim_id, std::string(to_string(r.kind)), r.pass ? "true" : "false",
                       format_double(r.value), format_double(r.bound),
                       format_double(r.worst_ratio), format_double(r.tolerance),
                       r.flagged ? "true" : "false", std::to_string(r.skipped.size()),
                       r.grid_spec.dump(), r.worst_point.dump(), r.note});
  }
}

}  // namespace concave
