// Copyright (c) 2026 the sector-verify authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "sectorial/blocks.hpp"
#include "sectorial/matrix_functions.hpp"

// JSON formats.
//   matrix: {"n": int, "data": [[[re, im], ...], ...]} row-major
//   block:  {"n": int, "A": matrix, "X": matrix, "Ystar": matrix, "B": matrix}
//   omf:    {"kind": string, "t": number?}
// Readers reject non-square and non-finite data. The text writers print
// numbers with 17 significant digits so doubles round-trip losslessly.

namespace sectorial {

using nlohmann::json;

inline json matrix_to_json(const CMatrix& a) {
  json rows = json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < a.cols(); ++j)
      row.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return json{{"n", a.rows()}, {"data", std::move(rows)}};
}

inline CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("data"))
    throw ParseError("matrix: expected object with \"n\" and \"data\"");
  const auto n = j.at("n").get<long long>();
  if (n < 1) throw ParseError("matrix: n must be a positive integer");
  const json& data = j.at("data");
  if (!data.is_array() || static_cast<long long>(data.size()) != n)
    throw ParseError("matrix: data must have n rows");
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = data.at(i);
    if (!row.is_array() || static_cast<long long>(row.size()) != n)
      throw ParseError("matrix: data is not square");
    for (Index jcol = 0; jcol < n; ++jcol) {
      const json& cell = row.at(jcol);
      if (!cell.is_array() || cell.size() != 2 || !cell.at(0).is_number() ||
          !cell.at(1).is_number())
        throw ParseError("matrix: entries must be [re, im] number pairs");
      a(i, jcol) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  if (!a.allFinite()) throw ParseError("matrix: non-finite entries rejected");
  return a;
}

namespace io_detail {

inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace io_detail

/// Matrix JSON as text with 17-significant-digit numbers.
inline std::string matrix_to_text(const CMatrix& a) {
  std::string out = "{\"n\": " + std::to_string(a.rows()) + ", \"data\": [";
  for (Index i = 0; i < a.rows(); ++i) {
    out += (i ? ", [" : "[");
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) out += ", ";
      out += "[" + io_detail::fmt17(a(i, j).real()) + ", " + io_detail::fmt17(a(i, j).imag()) +
             "]";
    }
    out += "]";
  }
  out += "]}";
  return out;
}

inline json block_to_json(const Block2x2& m) {
  return json{{"n", m.block_dim()},
              {"A", matrix_to_json(m.A)},
              {"X", matrix_to_json(m.X)},
              {"Ystar", matrix_to_json(m.Ystar)},
              {"B", matrix_to_json(m.B)}};
}

inline Block2x2 block_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("X") || !j.contains("Ystar") ||
      !j.contains("B"))
    throw ParseError("block: expected object with A, X, Ystar, B");
  Block2x2 m = Block2x2::from_blocks(matrix_from_json(j.at("A")), matrix_from_json(j.at("X")),
                                     matrix_from_json(j.at("Ystar")),
                                     matrix_from_json(j.at("B")));
  if (j.contains("n") && j.at("n").get<long long>() != m.block_dim())
    throw ParseError("block: n does not match block dimension");
  return m;
}

inline std::string block_to_text(const Block2x2& m) {
  return "{\"n\": " + std::to_string(m.block_dim()) + ", \"A\": " + matrix_to_text(m.A) +
         ", \"X\": " + matrix_to_text(m.X) + ", \"Ystar\": " + matrix_to_text(m.Ystar) +
         ", \"B\": " + matrix_to_text(m.B) + "}";
}

inline json omf_to_json(const OmfDescriptor& f) {
  switch (f.kind) {
    case OmfKind::power:
      return json{{"kind", "power"}, {"t", f.t}};
    case OmfKind::harmonic_like:
      return json{{"kind", "harmonic_like"}};
    case OmfKind::log_mean:
      return json{{"kind", "log_mean"}};
    case OmfKind::affine:
      return json{{"kind", "affine"}, {"t", f.t}};
  }
  throw RangeError("omf_to_json: unknown kind");
}

inline OmfDescriptor omf_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("omf: expected {\"kind\": ...}");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "power") return OmfDescriptor::power(j.at("t").get<double>());
    if (kind == "harmonic_like") return OmfDescriptor::harmonic_like();
    if (kind == "log_mean") return OmfDescriptor::log_mean();
    if (kind == "affine") return OmfDescriptor::affine(j.at("t").get<double>());
  } catch (const json::exception&) {
    throw ParseError("omf: kind \"" + kind + "\" requires a numeric \"t\"");
  } catch (const RangeError& e) {
    throw ParseError(std::string("omf: ") + e.what());
  }
  throw ParseError("omf: unknown kind \"" + kind + "\"");
}

/// Shorthand parser: "power:0.5", "affine:0.25", "harmonic_like", "log_mean",
/// or a JSON object string.
inline OmfDescriptor omf_from_string(const std::string& s) {
  if (!s.empty() && s.front() == '{') return omf_from_json(json::parse(s));
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  if (kind == "harmonic_like") return OmfDescriptor::harmonic_like();
  if (kind == "log_mean") return OmfDescriptor::log_mean();
  if (colon == std::string::npos)
    throw ParseError("omf: \"" + s + "\" needs a parameter, e.g. \"" + kind + ":0.5\"");
  double t = 0.0;
  try {
    t = std::stod(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("omf: cannot parse parameter in \"" + s + "\"");
  }
  try {
    if (kind == "power") return OmfDescriptor::power(t);
    if (kind == "affine") return OmfDescriptor::affine(t);
  } catch (const RangeError& e) {
    throw ParseError(std::string("omf: ") + e.what());
  }
  throw ParseError("omf: unknown kind \"" + kind + "\"");
}

}  // namespace sectorial
