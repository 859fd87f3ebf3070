#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "gpnt/bottleneck.hpp"
#include "gpnt/chain_complex.hpp"
#include "gpnt/cover.hpp"
#include "gpnt/errors.hpp"
#include "gpnt/flag_blowup.hpp"
#include "gpnt/persistence.hpp"

namespace gpnt {

/// Diagrams (dimensions 0..K, unreduced) of the four filtrations built from a cover.
struct CoverDiagrams {
  PersistenceDiagram space;   // W
  PersistenceDiagram nerve;   // Nrv U
  PersistenceDiagram flag;    // N, the subdivided nerve
  PersistenceDiagram blowup;  // B
};

inline CoverDiagrams cover_diagrams(const CoverAnalysis& a, int K) {
  const int cap = K + 1;
  CoverDiagrams d;
  d.space = persistence(SimplicialComplex::from_filtration(union_filtration(a.cover), cap), false, K);
  d.nerve = persistence(
      SimplicialComplex::from_filtration(nerve_filtration(a.cover, static_cast<std::size_t>(cap) + 1), cap),
      false, K);
  d.flag = persistence(flag_complex(a, cap), false, K);
  d.blowup = persistence(blowup_complex(a, cap), false, K);
  return d;
}

struct BoundReport {
  int K = 0;
  GoodnessReport goodness;
  Scale epsilon_star = 0;
  CoverDiagrams diagrams;
  std::vector<Scale> per_dim_dB;  // d_B in each dimension 0..K
  Scale dB = 0;                   // in dimension K
  Scale bound = 0;                // (K+1) ε*
  bool verdict = true;
  Scale t = 0;
  PersistenceDiagram shifted_nerve;  // translated by t/2; empty when ε* is infinite
  Scale shifted_dB = kInfinity;
  Scale shifted_bound = kInfinity;
  bool shifted_verdict = true;
  bool blowup_matches_space = true;
  bool flag_matches_nerve = true;
};

/// Whether every guaranteed inequality and diagram equality holds.
inline bool guarantees_hold(const BoundReport& r) {
  const bool finite = std::isfinite(r.epsilon_star);
  return r.blowup_matches_space && r.flag_matches_nerve && (!finite || (r.verdict && r.shifted_verdict));
}

/// Computes ε*, the diagrams and both bottleneck bounds. When `strict`, throws
/// TheoremViolation if a guaranteed inequality or diagram equality fails.
inline BoundReport bound_check(const CoverAnalysis& a, int K, unsigned threads = 1, bool strict = true) {
  BoundReport r;
  r.K = K;
  r.goodness = goodness(a, K, threads);
  r.epsilon_star = r.goodness.epsilon_star;
  r.diagrams = cover_diagrams(a, K);
  for (int k = 0; k <= K; ++k) r.per_dim_dB.push_back(bottleneck(r.diagrams.space, r.diagrams.nerve, k));
  r.dB = r.per_dim_dB.back();
  r.bound = (K + 1) * r.epsilon_star;
  r.verdict = r.dB <= r.bound;
  r.blowup_matches_space = r.diagrams.blowup == r.diagrams.space;
  r.flag_matches_nerve = r.diagrams.flag == r.diagrams.nerve;

  const bool finite = std::isfinite(r.epsilon_star);
  if (finite) {
    r.t = r.bound;
    r.shifted_nerve = r.diagrams.nerve.shifted(r.t / 2);
    r.shifted_dB = bottleneck(r.shifted_nerve, r.diagrams.blowup, K);
    r.shifted_bound = r.bound / 2;
    r.shifted_verdict = r.shifted_dB <= r.shifted_bound;
  } else {
    r.t = kInfinity;
  }

  if (!strict || guarantees_hold(r)) return r;
  std::ostringstream err;
  if (!r.blowup_matches_space) err << "blow-up and space diagrams differ; ";
  if (!r.flag_matches_nerve) err << "flag and nerve diagrams differ; ";
  if (finite && !r.verdict) err << "d_B = " << r.dB << " exceeds " << r.bound << "; ";
  if (finite && !r.shifted_verdict)
    err << "shifted d_B = " << r.shifted_dB << " exceeds " << r.shifted_bound << "; ";
  throw TheoremViolation("K = " + std::to_string(K) + ": " + err.str());
}

}  // namespace gpnt
