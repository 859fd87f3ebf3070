#pragma once

// Cover documents:
//   {"formatVersion": 1, "vertexCount": n,
//    "cover": [{"name": "U0", "simplices": [{"verts": [0, 1], "birth": 2.5}, ...]}, ...]}
// Emission is canonical: every simplex of the closed filtration, sorted by
// (birth, dimension, vertices), births as plain decimals.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpnt/cover.hpp"
#include "gpnt/errors.hpp"
#include "gpnt/filtration.hpp"

namespace gpnt {

inline constexpr int kFormatVersion = 1;

/// Shortest round-tripping decimal without exponent or trailing zeros.
inline std::string format_decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  if (x == 0) return "0";
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

namespace detail {

inline std::string line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size())), '\n'));
  return "line " + std::to_string(line);
}

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where.empty() ? std::string(key) : where + "." + key, "missing field");
  return *it;
}

inline std::uint64_t nonneg_integer(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ParseError(where, "expected a nonnegative integer");
}

}  // namespace detail

inline CoverFiltration parse_cover(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(detail::line_of(text, e.byte == 0 ? 0 : e.byte - 1), "malformed document");
  }
  auto version = detail::nonneg_integer(detail::field(doc, "formatVersion", ""), "formatVersion");
  if (version != kFormatVersion)
    throw ParseError("formatVersion", "unsupported version " + std::to_string(version));
  auto n = detail::nonneg_integer(detail::field(doc, "vertexCount", ""), "vertexCount");
  if (n > 0xFFFFFFFFULL) throw ParseError("vertexCount", "too large");
  const auto& cover = detail::field(doc, "cover", "");
  if (!cover.is_array()) throw ParseError("cover", "expected a list");
  if (cover.empty()) throw ParseError("cover", "at least one cover element");
  if (cover.size() > kMaxCoverElements)
    throw ParseError("cover", "at most " + std::to_string(kMaxCoverElements) + " cover elements");

  CoverFiltration out;
  out.vertex_count = static_cast<std::uint32_t>(n);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const std::string at = "cover[" + std::to_string(i) + "]";
    const auto& elem = cover[i];
    std::string name = "U" + std::to_string(i);
    if (elem.is_object() && elem.contains("name")) {
      if (!elem["name"].is_string()) throw ParseError(at + ".name", "expected a string");
      name = elem["name"].get<std::string>();
    }
    const auto& simplices = detail::field(elem, "simplices", at);
    if (!simplices.is_array()) throw ParseError(at + ".simplices", "expected a list");
    std::vector<std::pair<Simplex, Scale>> records;
    for (std::size_t j = 0; j < simplices.size(); ++j) {
      const std::string sat = at + ".simplices[" + std::to_string(j) + "]";
      const auto& rec = simplices[j];
      const auto& verts = detail::field(rec, "verts", sat);
      if (!verts.is_array() || verts.empty()) throw ParseError(sat + ".verts", "expected a nonempty list");
      std::vector<VertexId> vs;
      for (std::size_t k = 0; k < verts.size(); ++k) {
        auto v = detail::nonneg_integer(verts[k], sat + ".verts[" + std::to_string(k) + "]");
        if (v >= n) throw ParseError(sat + ".verts[" + std::to_string(k) + "]", "vertex id not below vertexCount");
        vs.push_back(static_cast<VertexId>(v));
      }
      for (std::size_t k = 1; k < vs.size(); ++k)
        if (vs[k - 1] >= vs[k]) throw ParseError(sat + ".verts", "vertices must be strictly increasing");
      const auto& birth = detail::field(rec, "birth", sat);
      if (!birth.is_number()) throw ParseError(sat + ".birth", "expected a number");
      double b = birth.get<double>();
      if (!std::isfinite(b) || b < 0) throw ParseError(sat + ".birth", "expected a finite nonnegative number");
      records.emplace_back(Simplex(std::move(vs)), b);
    }
    out.elements.push_back(Filtration::close_and_validate(records));
    out.names.push_back(std::move(name));
  }
  return out;
}

inline std::string emit_cover(const CoverFiltration& c) {
  std::ostringstream os;
  os << "{\n  \"formatVersion\": " << kFormatVersion << ",\n  \"vertexCount\": " << c.vertex_count
     << ",\n  \"cover\": [";
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    os << (i ? ",\n" : "\n") << "    {\n      \"name\": " << nlohmann::json(c.names.at(i)).dump()
       << ",\n      \"simplices\": [";
    std::vector<std::tuple<Scale, int, Simplex>> rows;
    for (const auto& [s, b] : c.elements[i].births()) rows.emplace_back(b, s.dim(), s);
    std::sort(rows.begin(), rows.end());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const auto& [b, d, s] = rows[j];
      os << (j ? ",\n" : "\n") << "        {\"verts\": [";
      for (std::size_t k = 0; k < s.vertices().size(); ++k) os << (k ? ", " : "") << s[k];
      os << "], \"birth\": " << format_decimal(b) << "}";
    }
    os << (rows.empty() ? "]" : "\n      ]") << "\n    }";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

/// FNV-1a over the bytes, as 16 hex digits.
inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace gpnt
