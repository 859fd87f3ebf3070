// gpnt: command-line workbench for cover filtrations.
//
// Exit codes: 0 all checks pass, 1 input error, 2 mathematical failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpnt/gpnt.hpp"

namespace {

using namespace gpnt;

constexpr int kExitPass = 0;
constexpr int kExitInput = 1;
constexpr int kExitMath = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw InputError("expected a list of nonnegative integers, got '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

std::vector<Scale> parse_scale_list(const std::string& s) {
  std::vector<Scale> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = -1;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || !(v >= 0) || !std::isfinite(v))
      throw InputError("expected a list of nonnegative scales, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

/// Diagram files: the CSV written by `diagram --csv` or the JSON bar list written by `diagram`.
PersistenceDiagram read_diagram(const std::string& path) {
  std::string text = read_source(path);
  std::vector<Bar> bars;
  auto scale = [&](const std::string& s) -> Scale {
    if (s == "inf") return kInfinity;
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw InputError(path + ": bad scale '" + s + "'");
    return v;
  };
  auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
      auto j = Json::parse(text);
      if (j.is_object() && j.contains("diagram")) j = j["diagram"];
      if (!j.is_array()) throw InputError(path + ": expected a list of bars");
      for (const auto& b : j) {
        auto get = [&](const char* key) -> Scale {
          const auto& x = b.at(key);
          return x.is_string() ? scale(x.get<std::string>()) : x.get<double>();
        };
        bars.push_back({b.at("dim").get<int>(), get("birth"), get("death")});
      }
    } else {
      std::stringstream ss(text);
      std::string line;
      int lineno = 0;
      while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind("dim", 0) == 0) continue;
        std::stringstream ls(line);
        std::string d, b, e;
        if (!std::getline(ls, d, ',') || !std::getline(ls, b, ',') || !std::getline(ls, e))
          throw InputError(path + ": line " + std::to_string(lineno) + ": expected dim,birth,death");
        bars.push_back({std::stoi(d), scale(b), scale(e)});
      }
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return PersistenceDiagram(std::move(bars));
}

struct Run {
  std::string command;
  std::string source;
  std::string digest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Json header() const {
    Json j;
    j["command"] = command;
    if (!digest.empty()) j["input"] = Json{{"source", source.empty() ? "-" : source}, {"digest", digest}};
    return j;
  }

  void finish(Json& j) const {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    j["timingMs"] = std::round(ms * 1000) / 1000;
    std::cout << j.dump(2) << "\n";
  }
};

std::shared_ptr<CoverAnalysis> load_cover(Run& run, const std::string& path) {
  run.source = path;
  auto cover = parse_cover(read_source(path));
  run.digest = fnv1a64(emit_cover(cover));
  return std::make_shared<CoverAnalysis>(std::move(cover));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistent nerve workbench: goodness, diagrams, bottleneck bounds and interleavings of cover filtrations"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));

  // goodness
  auto* goodness_cmd = app.add_subcommand("goodness", "Smallest eps for which the cover is eps-good");
  std::string g_file;
  int g_dim = 1;
  goodness_cmd->add_option("file", g_file, "Cover document (default: standard input)");
  goodness_cmd->add_option("--dim", g_dim, "Homology dimensions 0..K")->check(CLI::Range(0, 16));

  // diagram
  auto* diagram_cmd = app.add_subcommand("diagram", "Persistence diagram of a filtration built from the cover");
  std::string d_file;
  std::vector<std::string> d_target{"space"};
  int d_dim = 1;
  bool d_reduced = false;
  bool d_csv = false;
  diagram_cmd->add_option("file", d_file, "Cover document (default: standard input)");
  diagram_cmd->add_option("--target", d_target,
                          "space | nerve | flag | blowup | shifted-nerve | intersection <i,j,...>")
      ->expected(1, 2);
  diagram_cmd->add_option("--dim", d_dim, "Largest homology dimension")->check(CLI::Range(0, 16));
  diagram_cmd->add_flag("--reduced", d_reduced, "Reduced homology");
  diagram_cmd->add_flag("--csv", d_csv, "Print a dim,birth,death table");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "Check d_B(Dgm_K W, Dgm_K Nrv) <= (K+1) eps* and the half-shift bound");
  std::string b_file, b_dims = "1";
  bool b_all = false;
  bound_cmd->add_option("file", b_file, "Cover document (default: standard input)");
  bound_cmd->add_option("--dim", b_dims, "Comma-separated list of K");
  bound_cmd->add_flag("--all-dims", b_all, "Also check every dimension up to the nerve dimension at once");

  // interleave
  auto* inter_cmd = app.add_subcommand("interleave", "Build the chain-level interleaving and verify its identities");
  std::string i_file, i_scales;
  int i_dim = 1;
  double i_eps = -1;
  bool i_verify = false;
  inter_cmd->add_option("file", i_file, "Cover document (default: standard input)");
  inter_cmd->add_option("--dim", i_dim, "K")->check(CLI::Range(0, 8));
  inter_cmd->add_option("--eps", i_eps, "Goodness parameter (default: computed eps*)")->check(CLI::NonNegativeNumber);
  inter_cmd->add_flag("--verify", i_verify, "Verify all five identities at every grid scale");
  inter_cmd->add_option("--scales", i_scales, "Comma-separated verification scales");

  // bottleneck
  auto* bn_cmd = app.add_subcommand("bottleneck", "Bottleneck distance between two diagram files");
  std::string bn_a, bn_b;
  int bn_dim = 0;
  bn_cmd->add_option("fileA", bn_a, "Diagram (CSV or JSON bar list)")->required();
  bn_cmd->add_option("fileB", bn_b, "Diagram (CSV or JSON bar list)")->required();
  bn_cmd->add_option("--dim", bn_dim, "Homology dimension")->check(CLI::Range(0, 64));

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated cover document");
  gen_cmd->require_subcommand(1);
  auto* gen_tight_cmd = gen_cmd->add_subcommand("tight", "Facets of the standard n-simplex growing together");
  int gt_n = 1;
  gen_tight_cmd->add_option("--n", gt_n, "n")->required()->check(CLI::Range(1, 4));
  auto* gen_e1_cmd = gen_cmd->add_subcommand("e1", "Two-element square fixture");
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "Seeded random cover");
  std::uint64_t gr_seed = 0;
  std::string gr_flavor = "good", gr_shape = "path";
  RandomParams gr;
  gen_random_cmd->add_option("--seed", gr_seed, "Seed")->required();
  gen_random_cmd->add_option("--flavor", gr_flavor, "good | perturbed")->check(CLI::IsMember({"good", "perturbed"}));
  gen_random_cmd->add_option("--shape", gr_shape, "path | grid")->check(CLI::IsMember({"path", "grid"}));
  gen_random_cmd->add_option("--vertices", gr.vertices, "Path length or grid width");
  gen_random_cmd->add_option("--rows", gr.rows, "Grid height");
  gen_random_cmd->add_option("--elements", gr.elements, "Number of cover elements");
  gen_random_cmd->add_option("--scales", gr.scales, "Number of integer growth scales");
  gen_random_cmd->add_option("--grow", gr.grow_probability, "Probability of widening per side and step");
  gen_random_cmd->add_option("--delay-prob", gr.delay_probability, "Probability of delaying a simplex");
  gen_random_cmd->add_option("--delay", gr.delay, "Largest delay (multiples of 0.5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  Run run;
  try {
    if (*goodness_cmd) {
      run.command = "goodness";
      auto a = load_cover(run, g_file);
      auto j = run.header();
      j["goodness"] = goodness_json(goodness(*a, g_dim, threads));
      run.finish(j);
      return kExitPass;
    }

    if (*diagram_cmd) {
      run.command = "diagram";
      auto a = load_cover(run, d_file);
      const std::string& target = d_target.at(0);
      const int cap = d_dim + 1;
      PersistenceDiagram dgm;
      Json extra;
      if (target == "space") {
        dgm = persistence(SimplicialComplex::from_filtration(union_filtration(a->cover), cap, d_reduced), d_reduced, d_dim);
      } else if (target == "nerve") {
        dgm = persistence(SimplicialComplex::from_filtration(nerve_filtration(a->cover, static_cast<std::size_t>(cap) + 1), cap, d_reduced),
                          d_reduced, d_dim);
      } else if (target == "flag") {
        dgm = persistence(flag_complex(*a, cap).with_augmentation(d_reduced), d_reduced, d_dim);
      } else if (target == "blowup") {
        dgm = persistence(blowup_complex(*a, cap).with_augmentation(d_reduced), d_reduced, d_dim);
      } else if (target == "shifted-nerve") {
        auto g = goodness(*a, d_dim, threads);
        if (!std::isfinite(g.epsilon_star)) throw InputError("shifted-nerve needs a finite eps*; this cover has none");
        Scale t = (d_dim + 1) * g.epsilon_star;
        dgm = persistence(SimplicialComplex::from_filtration(nerve_filtration(a->cover, static_cast<std::size_t>(cap) + 1), cap, d_reduced),
                          d_reduced, d_dim)
                  .shifted(t / 2);
        extra = Json{{"epsilonStar", scale_json(g.epsilon_star)}, {"shift", scale_json(t / 2)}};
      } else if (target == "intersection") {
        if (d_target.size() < 2) throw InputError("--target intersection needs an index list, e.g. 0,1");
        std::vector<std::uint32_t> idx;
        for (int i : parse_int_list(d_target[1])) {
          if (static_cast<std::size_t>(i) >= a->cover.size()) throw InputError("cover index out of range: " + std::to_string(i));
          idx.push_back(static_cast<std::uint32_t>(i));
        }
        CoverIndexSet v(idx);
        dgm = persistence(SimplicialComplex::from_filtration(intersection_filtration(a->cover, v), cap, d_reduced), d_reduced, d_dim);
        extra = Json{{"v", to_string(v)}};
      } else {
        throw InputError("unknown target '" + target + "'");
      }
      if (d_csv) {
        std::cout << diagram_csv(dgm);
        return kExitPass;
      }
      auto j = run.header();
      j["target"] = target;
      j["reduced"] = d_reduced;
      j["maxDim"] = d_dim;
      if (!extra.is_null())
        for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
      j["diagram"] = diagram_json(dgm);
      run.finish(j);
      return kExitPass;
    }

    if (*bound_cmd) {
      run.command = "bound";
      auto a = load_cover(run, b_file);
      auto j = run.header();
      Json reports = Json::array();
      bool ok = true;
      for (int K : parse_int_list(b_dims)) {
        auto r = bound_check(*a, K, threads, false);
        ok = ok && guarantees_hold(r);
        reports.push_back(bound_json(r));
      }
      j["reports"] = reports;
      if (b_all) {
        const int D = a->nerve_dim();
        auto r = bound_check(*a, D, threads, false);
        Scale worst = 0;
        for (Scale d : r.per_dim_dB) worst = std::max(worst, d);
        const bool finite = std::isfinite(r.epsilon_star);
        const bool pass = !finite || worst <= r.bound;
        ok = ok && pass && r.blowup_matches_space;
        j["allDimensions"] = Json{{"D", D}, {"epsilonStar", scale_json(r.epsilon_star)}, {"maxDB", scale_json(worst)},
                                  {"bound", scale_json(r.bound)}, {"verdict", pass ? "pass" : "fail"}};
      }
      j["verdict"] = ok ? "pass" : "fail";
      run.finish(j);
      return ok ? kExitPass : kExitMath;
    }

    if (*inter_cmd) {
      run.command = "interleave";
      auto a = load_cover(run, i_file);
      Scale eps = i_eps;
      Json j = run.header();
      if (eps < 0) {
        eps = goodness(*a, i_dim, threads).epsilon_star;
        if (!std::isfinite(eps)) {
          j["error"] = "eps* is infinite: some intersection keeps a reduced class forever";
          run.finish(j);
          return kExitMath;
        }
      }
      auto cfg = InterleavingConfig::make(a->cover, i_dim, eps, i_scales.empty() ? std::vector<Scale>{} : parse_scale_list(i_scales));
      j["K"] = cfg.K;
      j["epsilon"] = scale_json(cfg.epsilon);
      j["t"] = scale_json(cfg.t);
      Json scales = Json::array();
      for (Scale s : cfg.scales) scales.push_back(scale_json(s));
      j["scales"] = scales;
      try {
        InterleavingConstructor ic(a, cfg, threads);
        Json bp = Json::object();
        for (const auto& [v, b] : ic.basepoints())
          bp[to_string(v)] = Json{{"vertex", b.vertex}, {"firstScale", scale_json(b.first_scale)}};
        j["basepoints"] = bp;
        if (i_verify) {
          auto rep = ic.verify();
          j["verification"] = verification_json(rep);
          j["verdict"] = rep.all_pass() ? "pass" : "fail";
          run.finish(j);
          return rep.all_pass() ? kExitPass : kExitMath;
        }
        ic.precheck();
        j["verdict"] = "pass";
        run.finish(j);
        return kExitPass;
      } catch (const NotEpsGood& e) {
        j["notEpsGood"] = not_eps_good_json(e);
        j["verdict"] = "fail";
        run.finish(j);
        return kExitMath;
      }
    }

    if (*bn_cmd) {
      run.command = "bottleneck";
      auto da = read_diagram(bn_a);
      auto db = read_diagram(bn_b);
      auto j = run.header();
      j["dim"] = bn_dim;
      j["distance"] = scale_json(bottleneck(da, db, bn_dim));
      run.finish(j);
      return kExitPass;
    }

    if (*gen_cmd) {
      CoverFiltration c;
      if (*gen_tight_cmd) c = gen_tight(gt_n);
      else if (*gen_e1_cmd) c = gen_e1();
      else {
        gr.flavor = gr_flavor == "perturbed" ? RandomFlavor::Perturbed : RandomFlavor::Good;
        gr.shape = gr_shape == "grid" ? RandomShape::Grid : RandomShape::Path;
        c = gen_random(gr_seed, gr);
      }
      std::cout << emit_cover(c);
      return kExitPass;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InconsistentBirths& e) {
    std::cerr << "inconsistent births: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitInput;
}
