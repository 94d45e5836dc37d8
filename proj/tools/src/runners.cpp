// Copyright 2026 The reseng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "reseng_cli/runners.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <random>

#include "reseng/athermality.hpp"
#include "reseng/coherence.hpp"
#include "reseng/errors.hpp"
#include "reseng/mutual.hpp"
#include "reseng/qubit.hpp"
#include "reseng_cli/matrix_io.hpp"
#include "reseng_cli/svg.hpp"

namespace reseng::cli {

using json = nlohmann::json;

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void allow_keys(const json& cfg, std::initializer_list<const char*> keys, const std::string& where) {
  if (!cfg.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [k, v] : cfg.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
      throw ConfigError(where + ": unknown key '" + k + "'");
    }
  }
}

double get_number(const json& cfg, const char* key, const std::string& where) {
  if (!cfg.contains(key)) throw ConfigError(where + ": missing required number '" + key + "'");
  if (!cfg[key].is_number()) throw ConfigError(where + ": '" + key + "' must be a number");
  return cfg[key].get<double>();
}

double get_number(const json& cfg, const char* key, const std::string& where, double fallback) {
  return cfg.contains(key) ? get_number(cfg, key, where) : fallback;
}

long long get_integer(const json& cfg, const char* key, const std::string& where, long long fallback,
                      long long min_value) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg[key].is_number_integer()) throw ConfigError(where + ": '" + key + "' must be an integer");
  const long long v = cfg[key].get<long long>();
  if (v < min_value) throw ConfigError(where + ": '" + key + "' must be >= " + std::to_string(min_value));
  return v;
}

bool get_bool(const json& cfg, const char* key, const std::string& where, bool fallback) {
  if (!cfg.contains(key)) return fallback;
  if (!cfg[key].is_boolean()) throw ConfigError(where + ": '" + key + "' must be a boolean");
  return cfg[key].get<bool>();
}

std::vector<double> get_vector(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) throw ConfigError(what + " must be a non-empty array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(what + " must be a non-empty array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void apply_common(json& cfg, const Overrides& o) {
  if (o.seed) cfg["seed"] = *o.seed;
  if (!cfg.contains("seed")) cfg["seed"] = std::uint64_t{0};
  if (!cfg["seed"].is_number_integer() || (cfg["seed"].is_number_integer() && !cfg["seed"].is_number_unsigned() &&
                                           cfg["seed"].get<long long>() < 0)) {
    throw ConfigError("'seed' must be a non-negative integer");
  }
  if (o.tol) cfg["tolerance"] = *o.tol;
  if (cfg.contains("tolerance") && (!cfg["tolerance"].is_number() || cfg["tolerance"].get<double>() <= 0.0)) {
    throw ConfigError("'tolerance' must be a positive number");
  }
}

json vec_json(const ProbabilityVector& p) { return json(p.vec()); }

json vecs_json(const std::vector<ProbabilityVector>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(vec_json(p));
  return a;
}

json cvec_json(const CVector& v) {
  json a = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(json::array({v(k).real(), v(k).imag()}));
  return a;
}

json cmat_json(const CMatrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format_complex(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* verdict_name(GroundStateVerdict v) {
  return v == GroundStateVerdict::yes_by_criterion ? "yes_by_criterion" : "criterion_inconclusive";
}

const char* reach_kind_name(QubitReach::Kind k) {
  switch (k) {
    case QubitReach::Kind::free_segment: return "free_segment";
    case QubitReach::Kind::resource_Gamma: return "resource_Gamma";
    case QubitReach::Kind::resource_gamma: return "resource_gamma";
    case QubitReach::Kind::finite: return "finite";
  }
  return "finite";
}

json base_report(const json& cfg, const char* mode) {
  json r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["mode"] = mode;
  r["seed"] = cfg.contains("seed") ? cfg["seed"] : json(0);
  r["config"] = cfg;
  return r;
}

// Matrix sources: a file path, {"file": ...}, {"rows": [...]}, or a built-in generator.
CMatrix matrix_from(const json& src, const Overrides& o) {
  const std::string where = "matrix";
  try {
    if (src.is_string()) return read_matrix_file((o.base_dir / src.get<std::string>()).string());
    if (!src.is_object()) throw ConfigError("matrix: expected a file name or an object");
    if (src.contains("file")) {
      allow_keys(src, {"file"}, where);
      if (!src["file"].is_string()) throw ConfigError("matrix: 'file' must be a string");
      return read_matrix_file((o.base_dir / src["file"].get<std::string>()).string());
    }
    if (src.contains("rows")) {
      allow_keys(src, {"rows"}, where);
      if (!src["rows"].is_array()) throw ConfigError("matrix: 'rows' must be an array of strings");
      std::string text;
      for (const auto& row : src["rows"]) {
        if (!row.is_string()) throw ConfigError("matrix: 'rows' must be an array of strings");
        text += row.get<std::string>() + "\n";
      }
      return parse_matrix(text);
    }
    if (!src.contains("generator") || !src["generator"].is_string()) {
      throw ConfigError("matrix: expected 'file', 'rows' or 'generator'");
    }
    const std::string gen = src["generator"].get<std::string>();
    if (gen == "identity") {
      allow_keys(src, {"generator", "d"}, where);
      const auto d = get_integer(src, "d", where, 0, 1);
      if (d == 0) throw ConfigError("matrix: identity needs 'd'");
      return UnitaryMatrix::identity(static_cast<std::size_t>(d)).matrix();
    }
    if (gen == "fourier") {
      allow_keys(src, {"generator", "d", "alpha"}, where);
      const auto d = get_integer(src, "d", where, 0, 1);
      if (d == 0) throw ConfigError("matrix: fourier needs 'd'");
      const double a = get_number(src, "alpha", where, 1.0);
      if (!(a >= 0.0 && a <= 1.0)) throw ConfigError("matrix: fourier 'alpha' must lie in [0, 1]");
      return fractional_fourier(static_cast<std::size_t>(d), a).matrix();
    }
    if (gen == "qubit_family") {
      allow_keys(src, {"generator", "phi", "p0", "p1", "g"}, where);
      return qubit_family(get_number(src, "phi", where), get_number(src, "p0", where, 0.0),
                          get_number(src, "p1", where, 0.0), get_number(src, "g", where, 0.0))
          .matrix();
    }
    throw ConfigError("matrix: unknown generator '" + gen + "'");
  } catch (const ParseError& e) {
    throw ConfigError(std::string("matrix: ") + e.what());
  }
}

UnitaryMatrix checked_unitary(const CMatrix& m, double tol) {
  const double defect = unitarity_defect(m);
  if (!(defect <= tol)) {
    throw ValidationError("matrix is not unitary: Frobenius defect ||U^dagger U - I||_F = " + fmt17(defect) +
                          " exceeds " + fmt17(tol));
  }
  return UnitaryMatrix(m, tol);
}

json necessary_json(const UnitaryMatrix& U) {
  const NecessaryConditions nc = necessary_conditions(U);
  const ProximityBlocker pb = permutation_proximity_blocker(U);
  json j;
  j["necessary_conditions"] = {{"holds", nc.holds}, {"best_column", nc.best_l}, {"value", nc.value},
                               {"margin", nc.margin}};
  j["corollary_blocker"] = corollary_blocker(U);
  j["proximity_blocker"] = {{"blocked", pb.blocked}, {"distance_sq", pb.distance_sq}, {"threshold", pb.threshold}};
  return j;
}

json flat_json(const FlatSearchOutcome& o) {
  json j;
  j["found"] = o.solution.has_value();
  j["local_searches"] = o.local_searches;
  j["best_residual"] = number(o.best_residual);
  if (o.solution) {
    const auto& s = *o.solution;
    j["column_index"] = s.column_index;
    j["convention"] = s.convention == FlatConvention::alice_first ? "udag_d_u" : "u_d_udag";
    j["phases"] = s.phases.phases();
    j["residual"] = s.residual;
    j["column"] = cvec_json(s.column);
  } else {
    j["reason"] = o.reason;
  }
  return j;
}

json plan_json(const StrokePlan& p) {
  json strokes = json::array();
  for (const Stroke& s : p.strokes) strokes.push_back({{"axis", s.axis == StrokeAxis::z ? "z" : "n"}, {"angle", s.angle}});
  return {{"alpha_axis", p.alpha_axis}, {"length", p.size()}, {"bound", p.bound},
          {"meets_sharp_bound", p.meets_sharp_bound}, {"alternates", p.alternates()}, {"strokes", strokes}};
}

}  // namespace

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

RunResult run_athermality(json cfg, const Overrides& o) {
  const std::string where = "athermality config";
  allow_keys(cfg, {"mode", "energies", "alpha", "beta", "gibbs_cold", "gibbs_hot", "max_strokes", "tolerance",
                   "start", "first_bath", "seed", "prune_tol"},
             where);
  apply_common(cfg, o);
  if (o.max_strokes) cfg["max_strokes"] = *o.max_strokes;
  if (!cfg.contains("max_strokes")) cfg["max_strokes"] = 40;
  if (!cfg.contains("tolerance")) cfg["tolerance"] = 1e-8;
  const auto max_strokes = static_cast<std::size_t>(get_integer(cfg, "max_strokes", where, 40, 0));

  std::optional<EngineParams> params;
  try {
    if (cfg.contains("energies")) {
      if (cfg.contains("gibbs_cold") || cfg.contains("gibbs_hot")) {
        throw ConfigError(where + ": give either 'energies' or 'gibbs_cold'/'gibbs_hot', not both");
      }
      const double alpha = get_number(cfg, "alpha", where);
      const double beta = get_number(cfg, "beta", where);
      if (!(alpha >= 0.0 && beta >= 0.0)) throw ConfigError(where + ": inverse temperatures must be >= 0");
      if (beta > alpha) throw ConfigError(where + ": 'beta' (hot) must not exceed 'alpha' (cold)");
      params = EngineParams::from_temperatures(EnergyLevels(get_vector(cfg["energies"], "'energies'")),
                                               InverseTemperature(alpha), InverseTemperature(beta));
    } else if (cfg.contains("gibbs_cold") && cfg.contains("gibbs_hot")) {
      params = EngineParams::from_gibbs(ProbabilityVector(get_vector(cfg["gibbs_cold"], "'gibbs_cold'")),
                                        ProbabilityVector(get_vector(cfg["gibbs_hot"], "'gibbs_hot'")));
    } else {
      throw ConfigError(where + ": need 'energies' with 'alpha' and 'beta', or 'gibbs_cold' and 'gibbs_hot'");
    }
  } catch (const reseng::Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
  const std::size_t d = params->dim();

  StartState start = StartState::gamma();
  try {
    const json s = cfg.contains("start") ? cfg["start"] : json("gamma");
    if (s == "gamma") {
      start = StartState::gamma();
    } else if (s == "Gamma") {
      start = StartState::Gamma();
    } else if (s.is_array()) {
      const json fb = cfg.contains("first_bath") ? cfg["first_bath"] : json("cold");
      if (fb != "cold" && fb != "hot") throw ConfigError(where + ": 'first_bath' must be \"cold\" or \"hot\"");
      ProbabilityVector p(get_vector(s, "'start'"));
      if (p.size() != d) throw ConfigError(where + ": 'start' has the wrong dimension");
      start = StartState::custom(std::move(p), fb == "cold" ? Bath::cold : Bath::hot);
    } else {
      throw ConfigError(where + ": 'start' must be \"gamma\", \"Gamma\" or a probability vector");
    }
  } catch (const reseng::Error& e) {
    throw ConfigError(where + ": " + e.what());
  }

  SimulateOptions so;
  so.max_strokes = std::max<std::size_t>(max_strokes, 1);
  so.conv_tol = cfg["tolerance"].get<double>();
  so.prune_tol = get_number(cfg, "prune_tol", where, kLpTolerance);

  RunResult out;
  Stopwatch sw;
  std::vector<ReachableSet> sets = simulate(*params, start, so);
  if (max_strokes == 0) sets.resize(1);
  out.timings["simulate_seconds"] = sw.lap();

  const ReachableSet& last = sets.back();
  json res;
  res["dimension"] = d;
  res["gamma"] = vec_json(params->gamma());
  res["Gamma"] = vec_json(params->Gamma());
  res["strokes_run"] = last.stroke_index;
  res["converged"] = last.converged;
  res["final_hausdorff_delta"] = last.hausdorff_delta;
  res["final_vertices"] = vecs_json(last.vertices);
  json counts = json::array();
  bool upper_ok = true;
  for (const auto& s : sets) {
    counts.push_back(s.vertices.size());
    upper_ok = upper_ok && check_upper_bound(s, *params);
  }
  res["vertex_counts"] = counts;
  res["upper_bound_qd"] = upper_bound_qd(*params);
  res["upper_bound_holds"] = upper_ok;

  const ProbabilityVector ground = ProbabilityVector::basis(d, 0);
  double tv = std::numeric_limits<double>::infinity();
  for (const auto& v : last.vertices) tv = std::min(tv, total_variation(v, ground));
  res["ground_state"] = {{"verdict", verdict_name(ground_state_reachable(*params))},
                         {"closest_vertex_tv", tv}};

  std::vector<ProbabilityVector> polytope;
  if (!params->degenerate()) {
    const TildeStates t = tilde_states(*params);
    res["tilde_states"] = {{"gamma_tilde", vec_json(t.gamma_tilde)}, {"Gamma_tilde", vec_json(t.Gamma_tilde)}};
    json poly;
    for (const auto& [name, variant] : {std::pair{"literal", PolytopeVariant::literal},
                                        std::pair{"renormalised", PolytopeVariant::renormalised}}) {
      const auto verts = lower_bound_polytope(*params, variant);
      if (variant == PolytopeVariant::literal) polytope = verts;
      double worst = 0.0;
      json inside = json::array();
      for (const auto& v : verts) {
        const HullMembership m = hull_membership(last.vertices, v, 1e-6);
        inside.push_back(m.inside);
        worst = std::max(worst, m.l1_residual);
      }
      poly[name] = {{"vertices", vecs_json(verts)}, {"inside_hull", inside}, {"max_l1_residual", worst}};
    }
    res["polytope"] = poly;
  } else {
    res["tilde_states"] = nullptr;
    res["polytope"] = nullptr;
  }
  if (d == 2) {
    const ProbabilityVector p0 = sets.front().vertices.front();
    const QubitReach r = qubit_reachable_set(p0, *params, std::nullopt);
    res["qubit"] = {{"contraction", qubit_contraction(*params)},
                    {"reach_kind", reach_kind_name(r.kind)},
                    {"upper", vec_json(r.upper)},
                    {"lower", vec_json(r.lower)}};
  }
  out.timings["analysis_seconds"] = sw.lap();

  // stroke,p1..pd with rows in lexicographic order.
  std::vector<std::vector<double>> rows;
  for (const auto& s : sets) {
    for (const auto& v : s.vertices) {
      std::vector<double> row{static_cast<double>(s.stroke_index)};
      row.insert(row.end(), v.vec().begin(), v.vec().end());
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end());
  std::string csv = "stroke";
  for (std::size_t k = 1; k <= d; ++k) csv += ",p" + std::to_string(k);
  csv += '\n';
  for (const auto& row : rows) {
    csv += std::to_string(static_cast<long long>(row[0]));
    for (std::size_t k = 1; k < row.size(); ++k) csv += "," + fmt17(row[k]);
    csv += '\n';
  }
  out.files["vertices.csv"] = csv;
  if (d == 3) {
    SimplexPlot plot;
    plot.reachable = last.vertices;
    plot.polytope = polytope;
    plot.band_threshold = upper_bound_qd(*params);
    plot.markers = {params->gamma(), params->Gamma()};
    out.files["simplex.svg"] = simplex_svg(plot);
  }

  out.report = base_report(cfg, "athermality");
  out.report["results"] = res;
  return out;
}

RunResult run_coherence(json cfg, const Overrides& o) {
  const std::string where = "coherence config";
  allow_keys(cfg, {"mode", "matrix", "tol_unitary", "tol_zero", "tolerance", "dense_M", "flat_budget", "seed"}, where);
  apply_common(cfg, o);
  if (!cfg.contains("matrix")) throw ConfigError(where + ": missing 'matrix'");
  if (!cfg.contains("tolerance")) cfg["tolerance"] = kDenseTol;
  const double tol_unitary = get_number(cfg, "tol_unitary", where, kUnitaryTol);
  const double tol_zero = get_number(cfg, "tol_zero", where, kZeroTol);
  const auto budget = static_cast<int>(get_integer(cfg, "flat_budget", where, 0, 0));
  const auto seed = cfg["seed"].get<std::uint64_t>();

  RunResult out;
  Stopwatch sw;
  const UnitaryMatrix U = checked_unitary(matrix_from(cfg["matrix"], o), tol_unitary);
  const std::size_t d = U.dim();
  json res;
  res["dimension"] = d;
  res["unitarity_defect"] = unitarity_defect(U.matrix());
  res["matrix"] = cmat_json(U.matrix());
  const PatternMatrix P = pattern_matrix(U, tol_zero);
  res["pattern"] = P.to_rows();
  const H2Result h2 = check_h2(U, tol_zero);
  res["h2"] = {{"satisfied", h2.satisfied}, {"minimal_M", optional_int(h2.minimal_M)},
               {"search_horizon", h2.search_horizon}, {"threshold_sensitive", h2.threshold_sensitive}};
  res["permuted_block_diagonal"] = permuted_block_diagonal(P);
  const GraphDiagnosis g = graph_diagnosis(P);
  res["graph"] = {{"irreducible", g.irreducible}, {"aperiodic", g.aperiodic}, {"M_upper", optional_int(g.M_upper)},
                  {"anchor", g.anchor ? json(*g.anchor) : json(nullptr)}, {"components", g.components}};
  if (d >= 3) {
    res["c_U"] = c_U(U);
    res["stroke_lower_bound"] = number(lower_bound_strokes(U));
  } else {
    res["c_U"] = nullptr;
    res["stroke_lower_bound"] = nullptr;
  }
  out.timings["structure_seconds"] = sw.lap();

  if (h2.satisfied) {
    const auto M = static_cast<int>(get_integer(cfg, "dense_M", where, *h2.minimal_M, 1));
    try {
      const DenseProduct dp = synthesize_dense_product(U, M, seed, kRetryMax, cfg["tolerance"].get<double>());
      json diags = json::array();
      for (const auto& D : dp.diagonals) diags.push_back(D.phases());
      res["dense_witness"] = {{"M", M}, {"min_modulus", dp.min_modulus}, {"attempts", dp.attempts},
                              {"diagonal_phases", diags}};
    } catch (const StructuralImpossibility& e) {
      res["dense_witness"] = {{"M", M}, {"error", e.what()}};
    } catch (const RetryExhausted& e) {
      res["dense_witness"] = {{"M", M}, {"error", e.what()}};
    }
  } else {
    res["dense_witness"] = nullptr;
  }
  out.timings["dense_seconds"] = sw.lap();

  res["blockers"] = necessary_json(U);
  res["flat_column_search"] = d >= 2 ? flat_json(search_flat_column(U, budget, seed)) : json(nullptr);
  out.timings["flat_search_seconds"] = sw.lap();

  out.report = base_report(cfg, "coherence");
  out.report["results"] = res;
  return out;
}

RunResult run_mutual(json cfg, const Overrides& o) {
  const std::string where = "mutual config";
  allow_keys(cfg, {"mode", "matrix", "tol_unitary", "tolerance", "budget", "state_restarts", "seed",
                   "both_conventions"},
             where);
  apply_common(cfg, o);
  if (!cfg.contains("matrix")) throw ConfigError(where + ": missing 'matrix'");
  if (!cfg.contains("tolerance")) cfg["tolerance"] = kFlatTol;
  const double tol = cfg["tolerance"].get<double>();
  const auto seed = cfg["seed"].get<std::uint64_t>();

  RunResult out;
  Stopwatch sw;
  const UnitaryMatrix U = checked_unitary(matrix_from(cfg["matrix"], o), get_number(cfg, "tol_unitary", where, kUnitaryTol));
  if (U.dim() < 2) throw ConfigError(where + ": matrix must have d >= 2");
  json res;
  res["dimension"] = U.dim();
  res["blockers"] = necessary_json(U);

  FlatSearchOptions fo;
  fo.restarts = static_cast<int>(get_integer(cfg, "budget", where, 0, 0));
  fo.seed = seed;
  fo.tol_flat = tol;
  fo.both_conventions = get_bool(cfg, "both_conventions", where, true);
  const FlatSearchOutcome flat = search_flat_column(U, fo);
  res["flat_column_search"] = flat_json(flat);
  out.timings["flat_search_seconds"] = sw.lap();

  const CoherentStateSearch target =
      search_mutually_coherent_state(U, static_cast<int>(get_integer(cfg, "state_restarts", where, 0, 0)), seed, tol);
  res["coherent_state_search"] = {{"found", target.state.has_value()}, {"residual", number(target.residual)},
                                  {"local_searches", target.local_searches}};
  if (target.state) res["coherent_state_search"]["state"] = cvec_json(*target.state);
  out.timings["state_search_seconds"] = sw.lap();

  if (flat.solution && target.state) {
    const ThreeStrokeConstruction c = complete_three_stroke(U, *flat.solution, *target.state, std::max(tol, 1e-10));
    res["three_stroke"] = {{"verified", c.verified}, {"completion_phases", c.completion.phases()},
                           {"state", cvec_json(c.state)}};
  } else {
    res["three_stroke"] = nullptr;
  }

  out.report = base_report(cfg, "mutual");
  out.report["results"] = res;
  return out;
}

RunResult run_qubit_synth(json cfg, const Overrides& o) {
  const std::string where = "qubit_synth config";
  allow_keys(cfg, {"mode", "alpha_axis", "unitary", "state", "random", "tolerance", "seed"}, where);
  apply_common(cfg, o);
  if (!cfg.contains("tolerance")) cfg["tolerance"] = 1e-9;
  const double alpha = get_number(cfg, "alpha_axis", where);
  if (!(alpha > 0.0 && alpha <= M_PI / 2)) throw ConfigError(where + ": 'alpha_axis' must lie in (0, pi/2]");
  if (!cfg.contains("unitary") && !cfg.contains("state") && !cfg.contains("random")) {
    throw ConfigError(where + ": need at least one of 'unitary', 'state', 'random'");
  }
  const double tol = cfg["tolerance"].get<double>();
  const auto seed = cfg["seed"].get<std::uint64_t>();

  RunResult out;
  Stopwatch sw;
  json res;
  if (cfg.contains("unitary")) {
    const json& u = cfg["unitary"];
    CMatrix m;
    if (u.is_object() && u.contains("euler")) {
      allow_keys(u, {"euler"}, "unitary");
      const auto e = get_vector(u["euler"], "'euler'");
      if (e.size() != 4) throw ConfigError("unitary: 'euler' needs [beta, gamma, delta, phase]");
      m = euler_compose(EulerAngles{e[0], e[1], e[2], e[3]}).matrix();
    } else {
      m = matrix_from(u, o);
    }
    if (m.rows() != 2) throw ConfigError("unitary: expected a 2x2 matrix");
    const UnitaryMatrix V = checked_unitary(m, kUnitaryTol);
    const StrokePlan plan = synthesize_unitary(V, alpha);
    json pj = plan_json(plan);
    const double err = phase_invariant_distance(plan.product(), V.matrix());
    pj["error"] = err;
    pj["within_tolerance"] = err < tol;
    res["unitary_plan"] = pj;
  }
  if (cfg.contains("state")) {
    const json& s = cfg["state"];
    if (!s.is_array() || s.size() != 2) throw ConfigError("state: expected [[re, im], [re, im]]");
    CVector psi(2);
    for (int k = 0; k < 2; ++k) {
      const auto c = get_vector(s[static_cast<std::size_t>(k)], "state entry");
      if (c.size() != 2) throw ConfigError("state: expected [[re, im], [re, im]]");
      psi(k) = {c[0], c[1]};
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) throw ValidationError("state is not normalised");
    const StatePlan sp = synthesize_state(psi, alpha);
    json pj = plan_json(sp.plan);
    pj["pole"] = sp.pole;
    pj["fidelity"] = sp.fidelity;
    pj["state_bound"] = state_length_bound(alpha);
    res["state_plan"] = pj;
  }
  if (cfg.contains("random")) {
    const json& r = cfg["random"];
    allow_keys(r, {"count"}, "random");
    const auto count = get_integer(r, "count", "random", 100, 1);
    std::mt19937_64 rng(mix_seed(seed, 0x51ULL));
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> half(0.0, M_PI / 2);
    double worst = 0.0;
    std::size_t longest = 0;
    bool within_bound = true;
    bool alternating = true;
    for (long long k = 0; k < count; ++k) {
      const UnitaryMatrix V = euler_compose(EulerAngles{ang(rng), half(rng), ang(rng), ang(rng)});
      const StrokePlan plan = synthesize_unitary(V, alpha);
      worst = std::max(worst, phase_invariant_distance(plan.product(), V.matrix()));
      longest = std::max(longest, plan.size());
      within_bound = within_bound && plan.size() <= unitary_length_bound(alpha);
      alternating = alternating && plan.alternates();
    }
    res["random"] = {{"count", count}, {"max_error", worst}, {"max_length", longest},
                     {"length_bound", unitary_length_bound(alpha)}, {"all_within_bound", within_bound},
                     {"all_alternate", alternating}};
  }
  out.timings["synthesis_seconds"] = sw.lap();
  out.report = base_report(cfg, "qubit_synth");
  out.report["results"] = res;
  return out;
}

RunResult run_fig4(const std::vector<std::size_t>& dims, std::size_t points) {
  if (dims.empty()) throw ConfigError("fig4: need at least one dimension");
  if (points < 2) throw ConfigError("fig4: need at least two grid points");
  for (std::size_t d : dims) {
    if (d < 3) throw ConfigError("fig4: dimensions must be >= 3");
  }
  RunResult out;
  Stopwatch sw;
  std::string csv = "d,alpha,c_U,bound\n";
  json per_d = json::array();
  for (std::size_t d : dims) {
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    json row;
    for (std::size_t k = 1; k <= points; ++k) {
      const double a = static_cast<double>(k) / static_cast<double>(points);
      const UnitaryMatrix F = fractional_fourier(d, a);
      const double c = c_U(F);
      const double b = lower_bound_strokes(F);
      monotone = monotone && b <= prev + 1e-9;
      prev = b;
      csv += std::to_string(d) + "," + fmt17(a) + "," + fmt17(c) + "," + fmt17(b) + "\n";
    }
    row["d"] = d;
    row["monotone_non_increasing"] = monotone;
    row["bound_at_alpha_1"] = number(prev);
    per_d.push_back(row);
  }
  out.timings["sweep_seconds"] = sw.lap();
  json cfg = {{"mode", "fig4"}, {"dims", dims}, {"points", points}, {"seed", 0}};
  out.report = base_report(cfg, "fig4");
  out.report["results"] = {{"curves", per_d}};
  out.files["fig4.csv"] = csv;
  return out;
}

RunResult run_config(json config, const Overrides& o) {
  if (!config.is_object() || !config.contains("mode") || !config["mode"].is_string()) {
    throw ConfigError("config: missing string 'mode'");
  }
  const std::string mode = config["mode"].get<std::string>();
  if (mode == "athermality") return run_athermality(std::move(config), o);
  if (mode == "coherence") return run_coherence(std::move(config), o);
  if (mode == "qubit_synth") return run_qubit_synth(std::move(config), o);
  if (mode == "mutual") return run_mutual(std::move(config), o);
  throw ConfigError("config: unknown mode '" + mode + "'");
}

}  // namespace reseng::cli
