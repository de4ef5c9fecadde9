#pragma once

// Result rendering. JSON and CSV carry full-precision values with
// shortest round-trip decimals; the table format rounds to a requested
// number of places for reading alongside published tables.

#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "owakit/minimax.hpp"
#include "owakit/version.hpp"

namespace owakit {

enum class OutputFormat { table, json, csv };

inline const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "unknown";
}

struct RenderOptions {
  OutputFormat format = OutputFormat::table;
  int precision = 4;  // table rendering only
};

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace detail {

inline std::string format_fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return std::string(buf);
}

/// Measurement bundle shared by the transform commands.
struct TransformResult {
  int n = 0;
  std::vector<double> weights;
  std::vector<double> alpha;
  double orness_value = 0.0;
  double disparity_value = 0.0;
};

inline nlohmann::json solution_to_json(const DisparitySolution& s) {
  nlohmann::json row;
  row["eta"] = s.eta;
  row["k"] = s.k;
  row["status"] = to_string(s.status);
  if (s.status == LpStatus::optimal) {
    row["delta"] = *s.delta;
    row["weights"] = s.weights->values();
    if (s.alpha) row["alpha"] = s.alpha->values();
  }
  return row;
}

inline nlohmann::json make_meta(int n, std::optional<Method> method, std::optional<int> k) {
  nlohmann::json meta;
  meta["n"] = n;
  if (method) meta["method"] = to_string(*method);
  if (k) meta["k"] = *k;
  meta["version"] = version();
  return meta;
}

inline void csv_vector_header(std::ostream& out, const char* stem, int n) {
  for (int i = 1; i <= n; ++i) out << ',' << stem << '_' << i;
}

inline void csv_vector_cells(std::ostream& out, const std::vector<double>* v, int n) {
  if (v) {
    for (double x : *v) out << ',' << format_double(x);
  } else {
    for (int i = 0; i < n; ++i) out << ',';
  }
}

}  // namespace detail

/// solve/sweep output: one row per orness level.
inline void write_solutions(std::ostream& out, int n, Method method, std::optional<int> k,
                            const std::vector<DisparitySolution>& sols, const RenderOptions& opts) {
  switch (opts.format) {
    case OutputFormat::json: {
      nlohmann::json doc;
      doc["meta"] = detail::make_meta(n, method, k);
      doc["results"] = nlohmann::json::array();
      for (const auto& s : sols) doc["results"].push_back(detail::solution_to_json(s));
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "eta,status,delta";
      detail::csv_vector_header(out, "w", n);
      detail::csv_vector_header(out, "alpha", n);
      out << '\n';
      for (const auto& s : sols) {
        out << format_double(s.eta) << ',' << to_string(s.status) << ',';
        if (s.delta) out << format_double(*s.delta);
        detail::csv_vector_cells(out, s.weights ? &s.weights->values() : nullptr, n);
        detail::csv_vector_cells(out, s.alpha ? &s.alpha->values() : nullptr, n);
        out << '\n';
      }
      break;
    }
    case OutputFormat::table: {
      const int p = opts.precision;
      out << "n=" << n << " method=" << to_string(method);
      if (k) out << " k=" << *k;
      out << '\n';
      for (const auto& s : sols) {
        out << "eta=" << detail::format_fixed(s.eta, p) << "  status=" << to_string(s.status);
        if (s.delta) out << "  delta=" << detail::format_fixed(*s.delta, p);
        out << '\n';
        if (s.weights) {
          out << "  weights:";
          for (double w : s.weights->values()) out << ' ' << detail::format_fixed(w, p);
          out << '\n';
        }
        if (s.alpha) {
          out << "  alpha:  ";
          for (double a : s.alpha->values()) out << ' ' << detail::format_fixed(a, p);
          out << '\n';
        }
      }
      break;
    }
  }
}

/// kcurve output: one row per truncation level.
inline void write_kcurve(std::ostream& out, int n, double eta, const std::vector<KCurvePoint>& points,
                         const RenderOptions& opts) {
  switch (opts.format) {
    case OutputFormat::json: {
      nlohmann::json doc;
      doc["meta"] = detail::make_meta(n, Method::alpha_space, std::nullopt);
      doc["results"] = nlohmann::json::array();
      for (const auto& p : points) {
        nlohmann::json row;
        row["eta"] = eta;
        row["k"] = p.k;
        row["status"] = to_string(p.status);
        if (p.delta) row["delta"] = *p.delta;
        doc["results"].push_back(row);
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "k,status,delta\n";
      for (const auto& p : points) {
        out << p.k << ',' << to_string(p.status) << ',';
        if (p.delta) out << format_double(*p.delta);
        out << '\n';
      }
      break;
    }
    case OutputFormat::table: {
      out << "n=" << n << " eta=" << detail::format_fixed(eta, opts.precision) << '\n';
      for (const auto& p : points) {
        out << "k=" << p.k << "  status=" << to_string(p.status);
        if (p.delta) out << "  delta=" << detail::format_fixed(*p.delta, opts.precision);
        out << '\n';
      }
      break;
    }
  }
}

/// to-weights / to-alpha / measures output.
inline void write_transform(std::ostream& out, const detail::TransformResult& r, const RenderOptions& opts) {
  switch (opts.format) {
    case OutputFormat::json: {
      nlohmann::json doc;
      doc["meta"] = detail::make_meta(r.n, std::nullopt, std::nullopt);
      nlohmann::json row;
      row["weights"] = r.weights;
      row["alpha"] = r.alpha;
      row["orness"] = r.orness_value;
      row["disparity"] = r.disparity_value;
      doc["results"] = nlohmann::json::array({row});
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "orness,disparity";
      detail::csv_vector_header(out, "w", r.n);
      detail::csv_vector_header(out, "alpha", r.n);
      out << '\n';
      out << format_double(r.orness_value) << ',' << format_double(r.disparity_value);
      detail::csv_vector_cells(out, &r.weights, r.n);
      detail::csv_vector_cells(out, &r.alpha, r.n);
      out << '\n';
      break;
    }
    case OutputFormat::table: {
      const int p = opts.precision;
      out << "n:         " << r.n << '\n';
      out << "weights:  ";
      for (double w : r.weights) out << ' ' << detail::format_fixed(w, p);
      out << '\n';
      out << "alpha:    ";
      for (double a : r.alpha) out << ' ' << detail::format_fixed(a, p);
      out << '\n';
      out << "orness:    " << detail::format_fixed(r.orness_value, p) << '\n';
      out << "disparity: " << detail::format_fixed(r.disparity_value, p) << '\n';
      break;
    }
  }
}

}  // namespace owakit
