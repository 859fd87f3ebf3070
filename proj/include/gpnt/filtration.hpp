#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "gpnt/errors.hpp"
#include "gpnt/simplex.hpp"

namespace gpnt {

/// Simplicial filtration: a birth scale per simplex, closed under faces and
/// monotone along them. The complex at scale a is {s : birth(s) <= a}.
class Filtration {
 public:
  using BirthMap = std::map<Simplex, Scale>;

  Filtration() = default;

  /// Takes the downward closure of `records`. A face that is not listed inherits the
  /// smallest birth among its listed or inherited cofaces. Listed faces born after a
  /// coface raise InconsistentBirths, as do duplicate records with different births.
  static Filtration close_and_validate(const std::vector<std::pair<Simplex, Scale>>& records) {
    BirthMap explicit_births;
    for (const auto& [s, b] : records) {
      if (!(b >= 0)) {
        std::ostringstream os;
        os << "simplex " << to_string(s) << " has negative or undefined birth " << b;
        throw InconsistentBirths(os.str());
      }
      auto [it, inserted] = explicit_births.emplace(s, b);
      if (!inserted && it->second != b) {
        std::ostringstream os;
        os << "simplex " << to_string(s) << " listed with births " << it->second << " and " << b;
        throw InconsistentBirths(os.str());
      }
    }

    int top = -1;
    for (const auto& [s, b] : explicit_births) top = std::max(top, s.dim());
    std::vector<BirthMap> by_dim(static_cast<std::size_t>(top + 1));
    for (const auto& [s, b] : explicit_births) by_dim[static_cast<std::size_t>(s.dim())][s] = b;

    for (int d = top; d >= 1; --d) {
      for (const auto& [s, b] : by_dim[static_cast<std::size_t>(d)]) {
        auto& lower = by_dim[static_cast<std::size_t>(d - 1)];
        for (auto& f : s.facets()) {
          auto it = lower.find(f);
          if (it == lower.end()) {
            lower.emplace(std::move(f), b);
          } else if (explicit_births.count(f)) {
            if (it->second > b) {
              std::ostringstream os;
              os << "face " << to_string(f) << " born at " << it->second << " after coface "
                 << to_string(s) << " born at " << b;
              throw InconsistentBirths(os.str());
            }
          } else {
            it->second = std::min(it->second, b);
          }
        }
      }
    }

    Filtration out;
    for (auto& level : by_dim) out.births_.insert(level.begin(), level.end());
    return out;
  }

  /// Builds from an already closed, monotone map; validates and throws on violations.
  static Filtration from_closed(BirthMap births) {
    Filtration f;
    f.births_ = std::move(births);
    f.validate();
    return f;
  }

  void validate() const {
    for (const auto& [s, b] : births_) {
      for (const auto& face : s.facets()) {
        auto it = births_.find(face);
        if (it == births_.end())
          throw InconsistentBirths("face " + to_string(face) + " of " + to_string(s) + " is missing");
        if (it->second > b) {
          std::ostringstream os;
          os << "face " << to_string(face) << " born at " << it->second << " after coface "
             << to_string(s) << " born at " << b;
          throw InconsistentBirths(os.str());
        }
      }
    }
  }

  std::optional<Scale> birth(const Simplex& s) const {
    auto it = births_.find(s);
    if (it == births_.end()) return std::nullopt;
    return it->second;
  }

  bool contains_at(const Simplex& s, Scale alpha) const {
    auto b = birth(s);
    return b && *b <= alpha;
  }

  const BirthMap& births() const { return births_; }
  bool empty() const { return births_.empty(); }
  std::size_t size() const { return births_.size(); }

  int max_dim() const {
    int d = -1;
    for (const auto& [s, b] : births_) d = std::max(d, s.dim());
    return d;
  }

  /// Smallest birth, i.e. the first scale at which the complex is nonempty.
  std::optional<Scale> first_scale() const {
    std::optional<Scale> m;
    for (const auto& [s, b] : births_)
      if (!m || b < *m) m = b;
    return m;
  }

  /// Sorted distinct birth values.
  std::vector<Scale> scales() const {
    std::vector<Scale> out;
    for (const auto& [s, b] : births_) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  BirthMap births_;
};

}  // namespace gpnt
