// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace gpnt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 10) failures.push_back(std::move(why));
  }
  void check(bool ok, const std::function<std::string()>& why) {
    if (!ok) fail(why());
  }
};

struct Fixture {
  std::string name;
  CoverFiltration cover;
};

std::string str(Scale s) { return format_decimal(s); }

RandomParams random_params(std::uint64_t seed, RandomFlavor flavor) {
  RandomParams p;
  p.flavor = flavor;
  p.shape = seed % 3 == 0 ? RandomShape::Grid : RandomShape::Path;
  p.vertices = p.shape == RandomShape::Grid ? 4 + static_cast<std::uint32_t>(seed % 2) : 8 + static_cast<std::uint32_t>(seed % 5);
  p.rows = 3;
  p.elements = 2 + static_cast<std::uint32_t>(seed % 3);
  p.scales = 4;
  p.delay = 0.5 * static_cast<Scale>(1 + seed % 4);
  p.delay_probability = 0.3;
  return p;
}

std::vector<Fixture> random_fixtures(RandomFlavor flavor, int count, std::uint64_t base) {
  std::vector<Fixture> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = base + static_cast<std::uint64_t>(i);
    out.push_back({std::string(flavor == RandomFlavor::Good ? "good#" : "perturbed#") + std::to_string(seed),
                   gen_random(seed, random_params(seed, flavor))});
  }
  return out;
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  for (int n = 1; n <= 3; ++n) out.push_back({"tight n=" + std::to_string(n), gen_tight(n)});
  out.push_back({"e1", gen_e1()});
  for (auto& f : random_fixtures(RandomFlavor::Good, 60, 1000)) out.push_back(std::move(f));
  for (auto& f : random_fixtures(RandomFlavor::Perturbed, 60, 5000)) out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 3; ++n) {
    auto start = Clock::now();
    auto c = gen_tight(n);
    CoverAnalysis a(c);

    std::vector<Scale> expected{0};
    for (int s = n + 1; s <= 2 * n + 2; ++s) expected.push_back(s);
    o.check(critical_scales(c) == expected, [&] { return "n=" + std::to_string(n) + ": critical scales differ"; });

    const int cap = n + 1;
    auto space = persistence(SimplicialComplex::from_filtration(union_filtration(c), cap, true), true, n);
    auto nerve = persistence(SimplicialComplex::from_filtration(nerve_filtration(c, static_cast<std::size_t>(cap) + 1), cap, true), true, n);
    int top = -1;
    for (const auto& b : space.bars)
      if (!b.essential()) top = std::max(top, b.dim);
    const Scale space_death = 2 * n + 2, nerve_death = n + 1;
    bool has_space = false, has_nerve = false;
    for (const auto& b : space.bars) has_space = has_space || (b.dim == top && b.birth == 0 && b.death == space_death);
    for (const auto& b : nerve.bars) has_nerve = has_nerve || (b.dim == top && b.birth == 0 && b.death == nerve_death);
    o.check(has_space, [&] { return "n=" + std::to_string(n) + ": space bar (0," + str(space_death) + ") missing"; });
    o.check(has_nerve, [&] { return "n=" + std::to_string(n) + ": nerve bar (0," + str(nerve_death) + ") missing"; });

    auto g = goodness(a, n);
    auto r = bound_check(a, top < 0 ? 0 : top, 1, false);
    o.check(guarantees_hold(r), [&] { return "n=" + std::to_string(n) + ": bound fails"; });
    double secs = seconds_since(start);
    worst = std::max(worst, secs);
    o.check(secs < 5, [&] { return "n=" + std::to_string(n) + ": took " + std::to_string(secs) + " s"; });
    std::printf("  n=%d  claimed eps=1 dim=%d | computed eps*=%s dim=%d | space (0,%s) nerve (0,%s) in dim %d | dB=%s bound=%s | %.3f s\n",
                n, n, str(g.epsilon_star).c_str(), top, str(space_death).c_str(), str(nerve_death).c_str(), top,
                str(r.dB).c_str(), str(r.bound).c_str(), secs);
  }
  o.summary = "tight covers n=1..3 reproduce their critical scales and endpoint bars; slowest n " + std::to_string(worst) + " s";
  return o;
}

struct BoundRun {
  std::string name;
  std::shared_ptr<CoverAnalysis> analysis;
  std::vector<BoundReport> reports;  // K = 0..2
};

Outcome criterion2(const std::vector<BoundRun>& runs, double secs) {
  Outcome o;
  int checked = 0, random_count = 0;
  for (const auto& run : runs) {
    if (run.name.find('#') != std::string::npos) ++random_count;
    for (const auto& r : run.reports) {
      if (!std::isfinite(r.epsilon_star)) continue;
      ++checked;
      o.check(r.dB <= r.bound, [&] {
        return run.name + " K=" + std::to_string(r.K) + ": dB " + str(r.dB) + " > " + str(r.bound);
      });
    }
  }
  o.check(random_count >= 100, [&] { return "only " + std::to_string(random_count) + " random covers"; });
  o.check(secs < 60, [&] { return "took " + std::to_string(secs) + " s"; });
  o.summary = std::to_string(checked) + " (cover, K) pairs, " + std::to_string(random_count) + " random covers, " +
              std::to_string(secs) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto fixtures = random_fixtures(RandomFlavor::Good, 60, 20000);
  for (const auto& f : fixtures) {
    CoverAnalysis a(f.cover);
    auto g = goodness(a, 2);
    o.check(g.epsilon_star == 0, [&] { return f.name + ": eps* = " + str(g.epsilon_star); });
    auto d = cover_diagrams(a, 2);
    for (int k = 0; k <= 2; ++k)
      o.check(d.space.in_dim(k) == d.nerve.in_dim(k), [&] { return f.name + ": diagrams differ in dim " + std::to_string(k); });
  }
  o.summary = std::to_string(fixtures.size()) + " good covers: eps* = 0 and equal diagrams in dims 0..2";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<Fixture> fixtures{{"e1", gen_e1()}};
  for (int n = 1; n <= 3; ++n) fixtures.push_back({"tight n=" + std::to_string(n), gen_tight(n)});
  int positive = 0;
  for (std::uint64_t seed = 9000; fixtures.size() < 28; ++seed) {
    auto p = random_params(seed, RandomFlavor::Perturbed);
    p.elements = 3;
    p.vertices = p.shape == RandomShape::Grid ? 4 : 8;
    auto c = gen_random(seed, p);
    CoverAnalysis a(c);
    Scale eps = goodness(a, 1).epsilon_star;
    if (!std::isfinite(eps)) continue;
    positive += eps > 0;
    fixtures.push_back({"perturbed#" + std::to_string(seed), c});
  }
  std::mt19937_64 rng(77);
  long identities = 0, corruptions = 0;
  for (const auto& f : fixtures) {
    auto a = std::make_shared<CoverAnalysis>(f.cover);
    for (int K = 0; K <= 2; ++K) {
      Scale eps = goodness(*a, K).epsilon_star;
      if (!std::isfinite(eps)) continue;
      InterleavingConstructor ic(a, InterleavingConfig::make(a->cover, K, eps), default_threads());
      VerificationReport rep;
      try {
        rep = ic.verify();
      } catch (const std::exception& e) {
        o.fail(f.name + " K=" + std::to_string(K) + ": " + e.what());
        continue;
      }
      identities += static_cast<long>(rep.results.size());
      for (const auto& r : rep.results)
        o.check(r.verdict.ok, [&] {
          return f.name + " K=" + std::to_string(K) + " identity " + std::to_string(r.id) + " at " + str(r.alpha) + ": " +
                 r.verdict.cell + " " + r.verdict.detail;
        });
      // Negative control: every entry on the worked fixture, a random sample elsewhere.
      for (Scale s : critical_scales(f.cover)) {
        auto c = ic.global_homotopy(s);
        auto fm = ic.included_b_map(s), gm = ic.a_map(s);
        auto flip_detected = [&](std::size_t k, std::size_t i, std::size_t j) {
          auto bad = c;
          bad.c[k].flip(i, j);
          ++corruptions;
          return !verify_chain_homotopy(bad, fm, gm, K).ok;
        };
        for (std::size_t k = 0; k < c.c.size(); ++k) {
          const auto& m = c.c[k];
          if (m.rows == 0 || m.cols() == 0) continue;
          if (f.name == "e1") {
            for (std::size_t j = 0; j < m.cols(); ++j)
              for (std::size_t i = 0; i < m.rows; ++i)
                o.check(flip_detected(k, i, j), [&] { return f.name + ": corruption not detected"; });
          } else {
            for (int trial = 0; trial < 5; ++trial) {
              std::size_t i = rng() % m.rows, j = rng() % m.cols();
              o.check(flip_detected(k, i, j), [&] { return f.name + ": corruption not detected"; });
            }
          }
        }
      }
    }
  }
  o.check(positive >= 10, [&] { return "only " + std::to_string(positive) + " covers with positive eps*"; });
  o.summary = std::to_string(fixtures.size()) + " covers (" + std::to_string(positive) + " with eps* > 0), " +
              std::to_string(identities) + " identity checks, " + std::to_string(corruptions) + " corruptions all detected";
  return o;
}

Outcome criterion5(const std::vector<BoundRun>& runs) {
  Outcome o;
  long compared = 0;
  for (const auto& run : runs)
    for (const auto& r : run.reports)
      for (int k = 0; k <= r.K; ++k) {
        ++compared;
        o.check(r.diagrams.blowup.in_dim(k) == r.diagrams.space.in_dim(k),
                [&] { return run.name + " K=" + std::to_string(r.K) + ": blow-up differs in dim " + std::to_string(k); });
      }
  o.summary = std::to_string(compared) + " (cover, K, k) blow-up diagrams equal the space diagrams";
  return o;
}

Outcome criterion6(const std::vector<BoundRun>& runs) {
  Outcome o;
  long checked = 0;
  for (const auto& run : runs)
    for (const auto& r : run.reports) {
      if (!std::isfinite(r.epsilon_star)) continue;
      ++checked;
      o.check(r.shifted_dB <= (r.K + 1) * r.epsilon_star / 2, [&] {
        return run.name + " K=" + std::to_string(r.K) + ": shifted dB " + str(r.shifted_dB);
      });
      std::vector<Bar> moved;
      for (auto b : r.diagrams.nerve.bars) moved.push_back({b.dim, b.birth + r.t / 2, b.death + r.t / 2});
      o.check(PersistenceDiagram(moved) == r.shifted_nerve,
              [&] { return run.name + " K=" + std::to_string(r.K) + ": shifted diagram is not a translate"; });
    }
  o.summary = std::to_string(checked) + " half-shift checks";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_diagram(rng, 4, 2);
    auto b = oracle::random_diagram(rng, 4, 2);
    Scale ours = bottleneck(a, b, 0), ref = oracle::bottleneck(a, b, 0);
    o.check(ours == ref || (std::isinf(ours) && std::isinf(ref)),
            [&] { return "pair " + std::to_string(trial) + ": " + str(ours) + " vs oracle " + str(ref); });
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_diagram(rng, 4, 1), b = oracle::random_diagram(rng, 4, 1), c = oracle::random_diagram(rng, 4, 1);
    Scale ab = bottleneck(a, b, 0), ba = bottleneck(b, a, 0), ac = bottleneck(a, c, 0), cb = bottleneck(c, b, 0);
    o.check(ab == ba, [&] { return "symmetry fails"; });
    o.check(bottleneck(a, a, 0) == 0, [&] { return "d(a,a) != 0"; });
    o.check((ab == 0) == (a == b), [&] { return "identity of indiscernibles fails"; });
    o.check(ab <= ac + cb, [&] { return "triangle inequality fails"; });
  }
  o.summary = "200 oracle pairs agree exactly; symmetry, identity and triangle inequality hold on 200 triples";
  return o;
}

template <class Cell>
void self_consistency(Outcome& o, const std::string& what, const FilteredChainComplex<Cell>& full,
                      const std::vector<Scale>& scales, const Filtration* simplicial, long& count) {
  for (int k = 1; k <= full.cap(); ++k)
    o.check(multiply(full.boundary(k - 1), full.boundary(k)).is_zero(), [&] { return what + ": d^2 != 0 in dim " + std::to_string(k); });
  auto d = persistence(full, false, full.cap());
  for (Scale s : scales) {
    auto sub = full.sublevel(s);
    auto betti = betti_numbers(sub, false);
    std::vector<long> ref;
    if (simplicial) ref = oracle::betti(*simplicial, s, full.cap() + 1, false);
    long chi_b = 0;
    for (int k = 0; k <= sub.homology_top(); ++k) {
      ++count;
      const auto kk = static_cast<std::size_t>(k);
      o.check(static_cast<long>(d.alive(k, s)) == betti[kk],
              [&] { return what + " at " + str(s) + ": bars alive != Betti in dim " + std::to_string(k); });
      if (simplicial && kk < ref.size())
        o.check(betti[kk] == ref[kk], [&] { return what + " at " + str(s) + ": Betti differs from oracle in dim " + std::to_string(k); });
      chi_b += (k % 2 == 0 ? 1 : -1) * betti[kk];
    }
    if (!sub.truncated())
      o.check(chi_b == sub.euler_characteristic(), [&] { return what + " at " + str(s) + ": Euler mismatch"; });
  }
}

Outcome criterion8(const std::vector<Fixture>& fixtures) {
  Outcome o;
  long count = 0;
  for (const auto& f : fixtures) {
    CoverAnalysis a(f.cover);
    auto scales = critical_scales(f.cover);
    auto w = union_filtration(f.cover);
    auto nrv = nerve_filtration(f.cover);
    const int wd = std::max(0, w.max_dim()), nd = std::max(0, nrv.max_dim());
    self_consistency(o, f.name + " W", SimplicialComplex::from_filtration(w, wd), scales, &w, count);
    self_consistency(o, f.name + " Nrv", SimplicialComplex::from_filtration(nrv, nd), scales, &nrv, count);
    for (const auto& [v, u] : a.intersections)
      self_consistency(o, f.name + " U" + to_string(v), SimplicialComplex::from_filtration(u, std::max(0, u.max_dim())), scales, &u, count);
    self_consistency(o, f.name + " N", flag_complex(a, nd), scales, nullptr, count);
    self_consistency(o, f.name + " B", blowup_complex(a, wd + nd), scales, nullptr, count);
  }
  o.summary = std::to_string(fixtures.size()) + " covers, " + std::to_string(count) + " (complex, scale, dim) checks";
  return o;
}

void report(int id, const std::string& title, const Outcome& o, bool& all) {
  all = all && o.pass;
  for (const auto& f : o.failures) std::printf("  - %s\n", f.c_str());
  std::printf("criterion %d %s: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.summary.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  bool all = true;
  report(1, "tight cover fidelity", criterion1(), all);

  auto fixtures = all_fixtures();
  auto start = Clock::now();
  std::vector<BoundRun> runs;
  for (const auto& f : fixtures) {
    BoundRun run{f.name, std::make_shared<CoverAnalysis>(f.cover), {}};
    for (int K = 0; K <= 2; ++K) run.reports.push_back(bound_check(*run.analysis, K, 1, false));
    runs.push_back(std::move(run));
  }
  double secs = seconds_since(start);

  report(2, "bottleneck bound", criterion2(runs, secs), all);
  report(3, "good covers", criterion3(), all);
  report(4, "chain-level identities", criterion4(), all);
  report(5, "blow-up diagrams", criterion5(runs), all);
  report(6, "half-shift bound", criterion6(runs), all);
  report(7, "bottleneck correctness", criterion7(), all);
  report(8, "engine self-consistency", criterion8(fixtures), all);
  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
