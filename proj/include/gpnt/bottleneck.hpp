#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gpnt/persistence.hpp"

namespace gpnt {

namespace detail {

inline Scale linf(const Bar& a, const Bar& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

inline Scale half_length(const Bar& a) { return (a.death - a.birth) / 2; }

/// Kuhn's augmenting paths; true when every left vertex can be matched.
inline bool has_perfect_matching(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::size_t> match_right(n, n);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (auto w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (match_right[w] == n || augment(match_right[w])) {
        match_right[w] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    seen.assign(n, 0);
    if (!augment(u)) return false;
  }
  return true;
}

/// Can the finite points be matched with every displacement ≤ r? Left side is
/// A plus one diagonal slot per point of B; right side is B plus a slot per point of A.
inline bool matchable(const std::vector<Bar>& a, const std::vector<Bar>& b, Scale r) {
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j)
      if (linf(a[i], b[j]) <= r) adj[i].push_back(j);
    if (half_length(a[i]) <= r) adj[i].push_back(nb + i);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (half_length(b[j]) <= r) adj[na + j].push_back(j);
    for (std::size_t i = 0; i < na; ++i) adj[na + j].push_back(nb + i);  // diagonal to diagonal
  }
  return has_perfect_matching(n, adj);
}

}  // namespace detail

/// Bottleneck distance between the dimension-k parts of two diagrams. Essential
/// bars match only each other (by sorted births); unequal counts give +∞.
inline Scale bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2, int k) {
  std::vector<Bar> fa, fb;
  std::vector<Scale> ea, eb;
  for (const auto& b : d1.bars)
    if (b.dim == k) (b.essential() ? ea.push_back(b.birth) : fa.push_back(b));
  for (const auto& b : d2.bars)
    if (b.dim == k) (b.essential() ? eb.push_back(b.birth) : fb.push_back(b));
  if (ea.size() != eb.size()) return kInfinity;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  Scale essential = 0;
  for (std::size_t i = 0; i < ea.size(); ++i) essential = std::max(essential, std::abs(ea[i] - eb[i]));

  std::vector<Scale> candidates{0};
  for (const auto& x : fa) candidates.push_back(detail::half_length(x));
  for (const auto& y : fb) candidates.push_back(detail::half_length(y));
  for (const auto& x : fa)
    for (const auto& y : fb) candidates.push_back(detail::linf(x, y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // Feasibility is monotone in r; binary search the sorted candidates.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (detail::matchable(fa, fb, candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  return std::max(essential, candidates[lo]);
}

}  // namespace gpnt
