#pragma once

// Chain-level interleaving between the blow-up and the nerve, built from local
// contractions of the cover intersections.
//
// Each local homotopy c_v is constructed once per index set v, by induction on
// dimension over the whole filtration of U_v:
//   c_v(σ) = solve(∂b = σ + x_v(σ) + c_v(∂σ))
// with the solver run against the birth-ordered reduction of ∂ on U_v. Because
// the reduction of a sublevel complex is a prefix of the full one, this gives the
// same chain as solving inside U_v^{α+ε} whenever that is possible, so c_v^α is
// the restriction of c_v and exists exactly when every cell born by α has its
// image born by α+ε. Using one c_v for all scales makes the homotopies agree where
// staircases overlap, which the chain-level identities need.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gpnt/chain_complex.hpp"
#include "gpnt/chain_map.hpp"
#include "gpnt/cover.hpp"
#include "gpnt/errors.hpp"
#include "gpnt/flag_blowup.hpp"
#include "gpnt/parallel.hpp"
#include "gpnt/persistence.hpp"

namespace gpnt {

/// The local homotopy for v does not exist at scale alpha: some cell of U_v^alpha
/// in dimension `dim` has no null-homotopy inside U_v^{alpha+epsilon}.
class NotEpsGood : public std::runtime_error {
 public:
  NotEpsGood(CoverIndexSet v, Scale alpha, int dim, std::string cell)
      : std::runtime_error(message(v, alpha, dim, cell)), v_(v), alpha_(alpha), dim_(dim),
        cell_(std::move(cell)) {}

  const CoverIndexSet& v() const { return v_; }
  Scale alpha() const { return alpha_; }
  int dim() const { return dim_; }
  const std::string& cell() const { return cell_; }

 private:
  static std::string message(const CoverIndexSet& v, Scale alpha, int dim, const std::string& cell) {
    std::ostringstream os;
    os << "cover is not eps-good: U_" << to_string(v) << " at scale " << alpha << ", dimension " << dim
       << ", cell " << cell;
    return os.str();
  }

  CoverIndexSet v_;
  Scale alpha_;
  int dim_;
  std::string cell_;
};

struct InterleavingConfig {
  int K = 0;
  Scale epsilon = 0;
  Scale t = 0;
  std::vector<Scale> scales;

  /// t = (K+1)ε; scales default to the critical scales and their t and 2t translates.
  static InterleavingConfig make(const CoverFiltration& c, int K, Scale epsilon,
                                 std::vector<Scale> scales = {}) {
    if (K < 0) throw std::invalid_argument("InterleavingConfig: K must be nonnegative");
    if (!(epsilon >= 0)) throw std::invalid_argument("InterleavingConfig: epsilon must be nonnegative");
    InterleavingConfig cfg{K, epsilon, (K + 1) * epsilon, std::move(scales)};
    if (cfg.scales.empty()) {
      for (Scale s : critical_scales(c))
        for (Scale shift : {Scale{0}, cfg.t, 2 * cfg.t}) cfg.scales.push_back(s + shift);
    }
    std::sort(cfg.scales.begin(), cfg.scales.end());
    cfg.scales.erase(std::unique(cfg.scales.begin(), cfg.scales.end()), cfg.scales.end());
    return cfg;
  }
};

struct Basepoint {
  VertexId vertex = 0;
  Scale first_scale = 0;  // α'(v)
};

using BasepointTable = std::map<CoverIndexSet, Basepoint>;

/// Lexicographically smallest vertex of U_v at the first scale where U_v is nonempty.
inline Basepoint choose_basepoint(const Filtration& uv, const CoverIndexSet& v) {
  auto first = uv.first_scale();
  if (!first) throw EmptyForever("U_" + to_string(v) + " is empty at every scale");
  for (const auto& [s, b] : uv.births())  // map order: lexicographic
    if (s.dim() == 0 && b == *first) return {s[0], *first};
  throw std::logic_error("choose_basepoint: no vertex at the first scale");
}

inline Basepoint choose_basepoint(const CoverAnalysis& a, const CoverIndexSet& v) {
  auto it = a.intersections.find(v);
  if (it == a.intersections.end()) throw EmptyForever("U_" + to_string(v) + " is empty at every scale");
  return choose_basepoint(it->second, v);
}

/// The contraction c_v of U_v onto x_v in dimensions 0..K.
class LocalContraction {
 public:
  LocalContraction(const Filtration& uv, VertexId x, int K)
      : complex_(std::make_shared<SimplicialComplex>(SimplicialComplex::from_filtration(uv, K + 1))),
        x_(x),
        K_(K) {
    const auto& c = *complex_;
    auto xi = c.index_of(Simplex{x});
    if (!xi) throw std::invalid_argument("LocalContraction: basepoint is not a vertex of U_v");
    image_.resize(static_cast<std::size_t>(K + 1));
    reach_.resize(static_cast<std::size_t>(K + 1));
    for (int k = 0; k <= K; ++k) {
      auto red = col_reduce(k + 1 <= c.cap() ? c.boundary(k + 1) : Gf2Matrix(c.size(k), 0));
      const auto n = c.size(k);
      auto& img = image_[static_cast<std::size_t>(k)];
      auto& reach = reach_[static_cast<std::size_t>(k)];
      img.assign(n, std::nullopt);
      reach.assign(n, kInfinity);
      for (std::size_t j = 0; j < n; ++j) {
        Gf2Column z{static_cast<std::uint32_t>(j)};
        bool defined = true;
        if (k == 0) {
          add_into(z, Gf2Column{*xi});
        } else {
          for (auto f : c.boundary(k).columns[j]) {
            const auto& hf = image_[static_cast<std::size_t>(k - 1)][f];
            if (!hf) {
              defined = false;
              break;
            }
            add_into(z, *hf);
          }
        }
        if (!defined) continue;
        auto sol = solve_in_image(red, std::move(z));
        if (!sol) continue;
        Scale r = c.cells(k)[j].birth;
        for (auto i : *sol) r = std::max(r, c.cells(k + 1)[i].birth);
        reach[j] = r;
        img[j] = std::move(*sol);
      }
    }
    // Prefix maxima of reach over cells sorted by birth, for O(log n) existence checks.
    for (int k = 0; k <= K; ++k)
      for (std::size_t j = 0; j < c.size(k); ++j) order_.push_back({c.cells(k)[j].birth, k, j});
    std::sort(order_.begin(), order_.end());
    Scale m = -kInfinity;
    for (const auto& [b, k, j] : order_) {
      m = std::max(m, reach_[static_cast<std::size_t>(k)][j]);
      prefix_reach_.push_back(m);
    }
  }

  const SimplicialComplex& complex() const { return *complex_; }
  std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
  VertexId basepoint() const { return x_; }
  int max_dim() const { return K_; }

  /// Latest birth needed to build the homotopy on every cell born by alpha.
  Scale required_scale(Scale alpha) const {
    auto it = std::upper_bound(order_.begin(), order_.end(), alpha,
                               [](Scale a, const auto& e) { return a < std::get<0>(e); });
    if (it == order_.begin()) return -kInfinity;
    return prefix_reach_[static_cast<std::size_t>(it - order_.begin()) - 1];
  }

  bool exists(Scale alpha, Scale epsilon) const { return required_scale(alpha) <= alpha + epsilon; }

  /// First cell (by dimension, then basis order) of U_v^alpha without a homotopy in U_v^{alpha+epsilon}.
  std::optional<std::pair<int, Simplex>> first_failure(Scale alpha, Scale epsilon) const {
    for (int k = 0; k <= K_; ++k)
      for (std::size_t j = 0; j < complex_->size(k); ++j) {
        const auto& e = complex_->cells(k)[j];
        if (e.birth > alpha) break;
        if (reach_[static_cast<std::size_t>(k)][j] > alpha + epsilon) return std::make_pair(k, e.cell);
      }
    return std::nullopt;
  }

  /// c_v(σ) as a chain, or nothing when no null-homotopy exists in U_v at all.
  std::optional<CellChain<Simplex>> apply(const Simplex& s) const {
    int k = s.dim();
    if (k > K_) throw std::out_of_range("LocalContraction: dimension above K");
    auto j = complex_->index_of(s);
    if (!j) throw std::out_of_range("LocalContraction: " + to_string(s) + " is not in U_v");
    const auto& img = image_[static_cast<std::size_t>(k)][*j];
    if (!img) return std::nullopt;
    return complex_->to_chain(*img, k + 1);
  }

  std::optional<CellChain<Simplex>> apply(const CellChain<Simplex>& x) const {
    CellChain<Simplex> out;
    for (const auto& s : x) {
      auto h = apply(s);
      if (!h) return std::nullopt;
      add_chain_into(out, *h);
    }
    return out;
  }

 private:
  std::shared_ptr<SimplicialComplex> complex_;
  VertexId x_;
  int K_;
  std::vector<std::vector<std::optional<Gf2Column>>> image_;
  std::vector<std::vector<Scale>> reach_;
  std::vector<std::tuple<Scale, int, std::size_t>> order_;
  std::vector<Scale> prefix_reach_;
};

struct IdentityResult {
  int id = 0;  // 1..5
  std::string name;
  Scale alpha = 0;
  Verdict verdict;
};

struct VerificationReport {
  std::vector<IdentityResult> results;

  bool all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.verdict.ok; });
  }
};

inline const char* identity_name(int id) {
  switch (id) {
    case 1: return "q is a chain map";
    case 2: return "c is a homotopy from i_W b to a";
    case 3: return "lift of i_W b is the inclusion of B";
    case 4: return "p q-hat is the inclusion of N";
    case 5: return "interleaving on homology";
  }
  return "";
}

class InterleavingConstructor {
 public:
  InterleavingConstructor(std::shared_ptr<const CoverAnalysis> a, InterleavingConfig cfg,
                          unsigned threads = 1)
      : a_(std::move(a)), cfg_(std::move(cfg)), threads_(threads) {
    critical_ = critical_scales(a_->cover);
    std::vector<CoverIndexSet> vs;
    for (const auto& [v, b] : a_->nerve_births) {
      vs.push_back(v);
      basepoints_.emplace(v, choose_basepoint(*a_, v));
    }
    std::vector<std::unique_ptr<LocalContraction>> built(vs.size());
    parallel_for(vs.size(), threads_, [&](std::size_t i) {
      built[i] = std::make_unique<LocalContraction>(a_->intersection(vs[i]),
                                                    basepoints_.at(vs[i]).vertex, cfg_.K);
    });
    for (std::size_t i = 0; i < vs.size(); ++i) contractions_.emplace(vs[i], std::move(built[i]));

    const int cap = cfg_.K + 1;
    w_ = std::make_shared<SimplicialComplex>(
        SimplicialComplex::from_filtration(union_filtration(a_->cover), cap));
    n_ = std::make_shared<FlagComplex>(flag_complex(*a_, cap));
    b_ = std::make_shared<BlowupComplex>(blowup_complex(*a_, cap));
  }

  const InterleavingConfig& config() const { return cfg_; }
  const CoverAnalysis& analysis() const { return *a_; }
  const BasepointTable& basepoints() const { return basepoints_; }
  const LocalContraction& contraction(const CoverIndexSet& v) const {
    auto it = contractions_.find(v);
    if (it == contractions_.end()) throw EmptyForever("U_" + to_string(v) + " is empty at every scale");
    return *it->second;
  }

  const SimplicialComplex& space() const { return *w_; }
  const FlagComplex& flag() const { return *n_; }
  const BlowupComplex& blowup() const { return *b_; }

  // Sublevel complexes, cached per critical-scale interval.
  std::shared_ptr<const SimplicialComplex> space_at(Scale s) const { return cached(w_cache_, *w_, s); }
  std::shared_ptr<const FlagComplex> flag_at(Scale s) const { return cached(n_cache_, *n_, s); }
  std::shared_ptr<const BlowupComplex> blowup_at(Scale s) const { return cached(b_cache_, *b_, s); }
  std::shared_ptr<const SimplicialComplex> intersection_at(const CoverIndexSet& v, Scale s) const {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(v, interval(s));
    auto it = uv_cache_.find(key);
    if (it != uv_cache_.end()) return it->second;
    auto c = std::make_shared<const SimplicialComplex>(contraction(v).complex().sublevel(s));
    uv_cache_.emplace(key, c);
    return c;
  }

  /// Throws NotEpsGood unless the local homotopy of v exists at alpha.
  void require(const CoverIndexSet& v, Scale alpha) const {
    const auto& lc = contraction(v);
    if (lc.exists(alpha, cfg_.epsilon)) return;
    auto f = lc.first_failure(alpha, cfg_.epsilon);
    throw NotEpsGood(v, alpha, f ? f->first : -1, f ? to_string(f->second) : "");
  }

  /// Every local homotopy used at the verification scales, checked in order of
  /// scale, then index set. The first missing one is thrown as NotEpsGood.
  void precheck() const {
    std::set<std::pair<Scale, CoverIndexSet>> needed;
    for (Scale alpha : cfg_.scales)
      for (Scale base : {alpha, alpha + cfg_.t})
        for (const auto& [v, b] : a_->nerve_births) {
          if (b > base) continue;
          for (int j = 0; j <= cfg_.K; ++j) needed.emplace(base + j * cfg_.epsilon, v);
        }
    for (const auto& [s, v] : needed) require(v, s);
  }

  /// x_v: U_v^α → U_v^{α+ε}, vertices to the basepoint, higher cells to zero.
  ChainMap<Simplex, Simplex> constant_chain_map(const CoverIndexSet& v, Scale alpha) const {
    VertexId x = basepoints_.at(v).vertex;
    return ChainMap<Simplex, Simplex>::from_function(
        intersection_at(v, alpha), intersection_at(v, alpha + cfg_.epsilon), cfg_.K + 1,
        [x](const Simplex& s) { return s.dim() == 0 ? CellChain<Simplex>{Simplex{x}} : CellChain<Simplex>{}; });
  }

  ChainMap<Simplex, Simplex> local_inclusion(const CoverIndexSet& v, Scale alpha) const {
    return inclusion_map(intersection_at(v, alpha), intersection_at(v, alpha + cfg_.epsilon), cfg_.K + 1);
  }

  /// c_v^α: U_v^α → U_v^{α+ε} in dimensions 0..K. Cached per pair of critical intervals.
  ChainHomotopy<Simplex, Simplex> local_homotopy(const CoverIndexSet& v, Scale alpha) const {
    require(v, alpha);
    auto key = std::make_tuple(v, interval(alpha), interval(alpha + cfg_.epsilon));
    {
      std::lock_guard lock(mu_);
      auto it = homotopy_cache_.find(key);
      if (it != homotopy_cache_.end()) return it->second;
    }
    const auto& lc = contraction(v);
    auto h = ChainHomotopy<Simplex, Simplex>::from_function(
        intersection_at(v, alpha), intersection_at(v, alpha + cfg_.epsilon), cfg_.K,
        [&](const Simplex& s) { return *lc.apply(s); });
    std::lock_guard lock(mu_);
    homotopy_cache_.emplace(key, h);
    return h;
  }

  /// c^α(τ⊗σ) = c_{v_k}( … c_{v_0}(τ)), the staircase through α, α+ε, …, α+kε.
  CellChain<Simplex> global_homotopy_cell(const BlowupCell& cell, Scale alpha) const {
    const auto& chain = cell.right.chain();
    CellChain<Simplex> x{cell.left};
    for (std::size_t j = 0; j < chain.size(); ++j) x = step(chain[j], alpha + static_cast<Scale>(j) * cfg_.epsilon, x);
    return x;
  }

  /// q^α(σ) = x_{v_0} for a vertex, else c^α(x_{v_0} ⊗ (σ∖v_0)).
  CellChain<Simplex> q_cell(const FlagSimplex& s, Scale alpha) const {
    CellChain<Simplex> x{Simplex{basepoints_.at(s.top()).vertex}};
    const auto& chain = s.chain();
    for (std::size_t j = 1; j < chain.size(); ++j)
      x = step(chain[j], alpha + static_cast<Scale>(j - 1) * cfg_.epsilon, x);
    return x;
  }

  /// a^α = q^α p^α.
  CellChain<Simplex> a_cell(const BlowupCell& c, Scale alpha) const {
    if (c.left.dim() != 0) return {};
    return q_cell(c.right, alpha);
  }

  /// q̂^α(σ) = Σ_i q^α(σ_i) ⊗ σ̄_i.
  CellChain<BlowupCell> q_hat_cell(const FlagSimplex& s, Scale alpha) const {
    return lift_cell<FlagSimplex, Simplex>(
        s, std::function<CellChain<Simplex>(const FlagSimplex&)>(
               [&](const FlagSimplex& f) { return q_cell(f, alpha); }));
  }

  /// ĉ^α(τ⊗σ) = Σ_i c^α(τ⊗σ_i) ⊗ σ̄_i.
  CellChain<BlowupCell> c_hat_cell(const BlowupCell& c, Scale alpha) const {
    return lift_cell<Simplex, FlagSimplex, Simplex>(
        c, std::function<CellChain<Simplex>(const BlowupCell&)>(
               [&](const BlowupCell& x) { return global_homotopy_cell(x, alpha); }));
  }

  ChainHomotopy<BlowupCell, Simplex> global_homotopy(Scale alpha) const {
    return ChainHomotopy<BlowupCell, Simplex>::from_function(
        blowup_at(alpha), space_at(alpha + cfg_.t), cfg_.K,
        [&](const BlowupCell& c) { return global_homotopy_cell(c, alpha); });
  }

  ChainMap<FlagSimplex, Simplex> q_map(Scale alpha) const {
    return ChainMap<FlagSimplex, Simplex>::from_function(
        flag_at(alpha), space_at(alpha + cfg_.t), cfg_.K + 1,
        [&](const FlagSimplex& s) { return q_cell(s, alpha); });
  }

  ChainMap<BlowupCell, Simplex> a_map(Scale alpha) const {
    return ChainMap<BlowupCell, Simplex>::from_function(
        blowup_at(alpha), space_at(alpha + cfg_.t), cfg_.K + 1,
        [&](const BlowupCell& c) { return a_cell(c, alpha); });
  }

  /// i_W b^α: B^α → W^{α+t}.
  ChainMap<BlowupCell, Simplex> included_b_map(Scale alpha) const {
    return ChainMap<BlowupCell, Simplex>::from_function(blowup_at(alpha), space_at(alpha + cfg_.t),
                                                        cfg_.K + 1, project_b);
  }

  ChainMap<FlagSimplex, BlowupCell> q_hat_map(Scale alpha) const {
    return ChainMap<FlagSimplex, BlowupCell>::from_function(
        flag_at(alpha), blowup_at(alpha + cfg_.t), cfg_.K + 1,
        [&](const FlagSimplex& s) { return q_hat_cell(s, alpha); });
  }

  /// All five identities at one scale.
  std::vector<IdentityResult> verify_at(Scale alpha) const {
    std::vector<IdentityResult> out;
    auto record = [&](int id, Verdict v) { out.push_back({id, identity_name(id), alpha, std::move(v)}); };
    auto guarded = [&](int id, auto&& fn) {
      try {
        record(id, fn());
      } catch (const NotEpsGood&) {
        throw;
      } catch (const std::exception& e) {
        record(id, Verdict::fail(-1, "", e.what()));
      }
    };
    const Scale t = cfg_.t;
    const int K = cfg_.K;

    guarded(1, [&] { return verify_chain_map(q_map(alpha)); });

    guarded(2, [&] {
      auto c = global_homotopy(alpha);
      return verify_chain_homotopy(c, included_b_map(alpha), a_map(alpha), K);
    });

    guarded(3, [&] {
      auto src = blowup_at(alpha);
      auto tgt = blowup_at(alpha + t);
      for (int k = 0; k <= src->cap(); ++k)
        for (const auto& e : src->cells(k)) {
          auto lifted = lift_cell<Simplex, FlagSimplex, Simplex>(
              e.cell, std::function<CellChain<Simplex>(const BlowupCell&)>(project_b));
          if (lifted != CellChain<BlowupCell>{e.cell} || !tgt->contains(e.cell))
            return Verdict::fail(k, to_string(e.cell), "lift differs from the inclusion");
        }
      return Verdict::pass();
    });

    guarded(4, [&] {
      auto qh = q_hat_map(alpha);
      auto p = projection_p(blowup_at(alpha + t), flag_at(alpha + t));
      auto lhs = compose(p, qh);
      auto rhs = inclusion_map(flag_at(alpha), flag_at(alpha + t), K + 1);
      for (int k = 0; k <= std::min(lhs.top(), rhs.top()); ++k) {
        const auto& l = lhs.f[static_cast<std::size_t>(k)];
        const auto& r = rhs.f[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < l.cols(); ++j)
          if (l.columns[j] != r.columns[j])
            return Verdict::fail(k, to_string(lhs.source->cells(k)[j].cell), "p q-hat differs from the inclusion");
      }
      return Verdict::pass();
    });

    guarded(5, [&] { return verify_homology(alpha); });
    return out;
  }

  /// Precheck, then every identity at every configured scale.
  VerificationReport verify() const {
    precheck();
    // Warm the sublevel caches so the parallel phase only reads them.
    for (Scale s : cfg_.scales)
      for (Scale d : {Scale{0}, cfg_.t, 2 * cfg_.t}) {
        space_at(s + d);
        flag_at(s + d);
        blowup_at(s + d);
      }
    std::vector<std::vector<IdentityResult>> per(cfg_.scales.size());
    parallel_for(per.size(), threads_, [&](std::size_t i) { per[i] = verify_at(cfg_.scales[i]); });
    VerificationReport rep;
    for (auto& r : per) rep.results.insert(rep.results.end(), r.begin(), r.end());
    return rep;
  }

 private:
  CellChain<Simplex> step(const CoverIndexSet& v, Scale alpha, const CellChain<Simplex>& x) const {
    require(v, alpha);
    auto h = contraction(v).apply(x);
    if (!h) throw std::logic_error("local homotopy undefined after a successful existence check");
    return *h;
  }

  Verdict verify_homology(Scale alpha) const {
    const Scale t = cfg_.t;
    auto b0 = blowup_at(alpha), b1 = blowup_at(alpha + t), b2 = blowup_at(alpha + 2 * t);
    auto n0 = flag_at(alpha), n1 = flag_at(alpha + t), n2 = flag_at(alpha + 2 * t);
    auto identity_b = [](const BlowupCell& c) { return CellChain<BlowupCell>{c}; };
    auto identity_n = [](const FlagSimplex& c) { return CellChain<FlagSimplex>{c}; };
    for (int k = 0; k <= cfg_.K; ++k) {
      HomologyBasis<BlowupCell> hb0(*b0, k), hb1(*b1, k), hb2(*b2, k);
      HomologyBasis<FlagSimplex> hn0(*n0, k), hn1(*n1, k), hn2(*n2, k);

      auto p01 = induced_on_homology(*b0, hb0, *n1, hn1, project_p);
      auto qh1 = induced_on_homology(*n1, hn1, *b2, hb2,
                                     [&](const FlagSimplex& s) { return q_hat_cell(s, alpha + t); });
      auto ib02 = induced_on_homology(*b0, hb0, *b2, hb2, identity_b);
      if (multiply(qh1, p01) != ib02)
        return Verdict::fail(k, "", "H(q-hat) H(p i_B) != H(i_B) on the blow-up");

      auto qh0 = induced_on_homology(*n0, hn0, *b1, hb1,
                                     [&](const FlagSimplex& s) { return q_hat_cell(s, alpha); });
      auto p12 = induced_on_homology(*b1, hb1, *n2, hn2, project_p);
      auto in02 = induced_on_homology(*n0, hn0, *n2, hn2, identity_n);
      if (multiply(p12, qh0) != in02)
        return Verdict::fail(k, "", "H(p i_B) H(q-hat) != H(i_N) on the nerve");
    }
    return Verdict::pass();
  }

  std::size_t interval(Scale s) const {
    return static_cast<std::size_t>(std::upper_bound(critical_.begin(), critical_.end(), s) - critical_.begin());
  }

  template <class Cell>
  std::shared_ptr<const FilteredChainComplex<Cell>> cached(
      std::map<std::size_t, std::shared_ptr<const FilteredChainComplex<Cell>>>& cache,
      const FilteredChainComplex<Cell>& full, Scale s) const {
    std::lock_guard lock(mu_);
    auto key = interval(s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto c = std::make_shared<const FilteredChainComplex<Cell>>(full.sublevel(s));
    cache.emplace(key, c);
    return c;
  }

  std::shared_ptr<const CoverAnalysis> a_;
  InterleavingConfig cfg_;
  unsigned threads_;
  std::vector<Scale> critical_;
  BasepointTable basepoints_;
  std::map<CoverIndexSet, std::unique_ptr<LocalContraction>> contractions_;
  std::shared_ptr<SimplicialComplex> w_;
  std::shared_ptr<FlagComplex> n_;
  std::shared_ptr<BlowupComplex> b_;

  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::shared_ptr<const SimplicialComplex>> w_cache_;
  mutable std::map<std::size_t, std::shared_ptr<const FlagComplex>> n_cache_;
  mutable std::map<std::size_t, std::shared_ptr<const BlowupComplex>> b_cache_;
  mutable std::map<std::pair<CoverIndexSet, std::size_t>, std::shared_ptr<const SimplicialComplex>> uv_cache_;
  mutable std::map<std::tuple<CoverIndexSet, std::size_t, std::size_t>, ChainHomotopy<Simplex, Simplex>>
      homotopy_cache_;
};

}  // namespace gpnt
