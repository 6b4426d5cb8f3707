#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "polyharm/certificates.hpp"
#include "polyharm/closed_forms.hpp"
#include "polyharm/equivalence.hpp"
#include "polyharm/format.hpp"
#include "polyharm/incidence.hpp"
#include "polyharm/mean_value.hpp"
#include "polyharm/selfcheck.hpp"
#include "polyharm/tau.hpp"

namespace polyharm::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct CommonConfig {
  std::string family_str;
  std::string k_str = "0";
  int max_tau_degree = 8;
  std::string r_str;
  std::string scan_str;
  long precision = 128;
  double tol = 1e-8;
  double snap_tol = 1e-5;
  std::string format = "text";
  std::string out_path;
};

std::optional<Family> parse_family(const std::string& s) {
  if (s == "tetra") return Family::TriakisTetra;
  if (s == "octa") return Family::TriakisOcta;
  return std::nullopt;
}

std::vector<int> parse_ks(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const int k = std::stoi(item);
    if (k < 0 || k > 3) throw std::invalid_argument("k must be in 0..3");
    out.push_back(k);
  }
  if (out.empty()) throw std::invalid_argument("empty k list");
  return out;
}

std::vector<Rational> parse_r_values(const CommonConfig& cfg) {
  std::vector<Rational> out;
  if (!cfg.r_str.empty()) out.push_back(Rational::parse(cfg.r_str));
  if (!cfg.scan_str.empty()) {
    std::stringstream ss(cfg.scan_str);
    std::string lo, hi, step;
    if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') ||
        !std::getline(ss, step, ':'))
      throw std::invalid_argument("--scan expects lo:hi:step");
    const Rational l = Rational::parse(lo), h = Rational::parse(hi),
                   st = Rational::parse(step);
    if (st.sign() <= 0) throw std::invalid_argument("--scan step must be positive");
    for (Rational r = l; r <= h; r += st) out.push_back(r);
  }
  if (out.empty()) throw std::invalid_argument("one of --r or --scan is required");
  for (const auto& r : out)
    if (r.sign() <= 0) throw std::invalid_argument("parameter r must be positive");
  return out;
}

int emit(const json& doc, const std::string& rendered_text, const CommonConfig& cfg,
         std::ostream& out, int code) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      out << "cannot open output path " << cfg.out_path << "\n";
      return 2;
    }
    sink = &file;
  }
  if (cfg.format == "json")
    *sink << doc.dump(2) << "\n";
  else
    *sink << rendered_text;
  return code;
}

json header(const std::string& command, const CommonConfig& cfg) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = "polyharm";
  doc["command"] = command;
  doc["precision"] = cfg.precision;
  return doc;
}

std::string f15(const BigFloat& x) { return x.str(15); }

// ---- coefficient table ------------------------------------------------------

json coefficient_rows(Family family, int k, const Rational* exact_r, const BigFloat& float_r,
                      int m_lo, int m_hi, mpfr_prec_t prec) {
  const Group group = family == Family::TriakisTetra ? Group::A3 : Group::B3;
  const auto& basis = invariant_basis(group);
  const bool exact_route = exact_r != nullptr && k != 1;

  std::vector<Polynomial<Rational>> taus_exact;
  std::vector<Polynomial<BigFloat>> taus_float;
  if (exact_route) {
    taus_exact = tau_all_exact(build_solid<Rational>(family, *exact_r), k, m_hi);
  } else if (exact_r != nullptr) {
    taus_float = tau_all_float(build_solid<Rational>(family, *exact_r), k, m_hi, prec);
  } else {
    taus_float = tau_all_float(build_solid<BigFloat>(family, float_r), k, m_hi);
  }

  // Cancellation dust from float assembly is cleaned before decomposition.
  BigFloat dust(0, prec);
  if (!taus_float.empty()) {
    BigFloat gmax(1, prec);
    for (const auto& t : taus_float)
      if (gmax < t.max_abs_coeff()) gmax = t.max_abs_coeff();
    dust = gmax;
    for (int i = 0; i < static_cast<int>(prec) - 16; ++i) dust /= BigFloat(2);
  }

  static const char* kNames[4] = {"a", "b", "c", "d"};
  json rows = json::array();
  for (int m = m_lo; m <= m_hi; ++m) {
    json row;
    row["m"] = m;
    const auto keys = generator_exponents(basis, m);
    json coeffs;
    BigFloat lead(0, prec);
    if (exact_route) {
      const auto dec = decompose(taus_exact[static_cast<std::size_t>(m)], basis);
      for (std::size_t i = 0; i < keys.size() && i < 4; ++i)
        coeffs[kNames[i]] = dec.coefficient(keys[i]).str();
      if (!keys.empty()) lead = BigFloat::from_rational(dec.coefficient(keys[0]), prec);
    } else {
      const auto dec = decompose(cleanup(taus_float[static_cast<std::size_t>(m)], dust), basis,
                                 BigFloat::from_double(1e-12, prec),
                                 BigFloat::from_double(1e-18, prec));
      for (std::size_t i = 0; i < keys.size() && i < 4; ++i)
        coeffs[kNames[i]] = dec.coefficient(keys[i]).str(20);
      if (!keys.empty()) lead = dec.coefficient(keys[0]);
    }
    row["coefficients"] = coeffs;
    if (has_closed_form(family, k, m)) {
      const BigFloat cf = closed_form(family, k, m, float_r);
      row["closed_form"] = cf.str(20);
      row["abs_diff"] = (lead - cf).abs().str(6);
    } else {
      row["closed_form"] = nullptr;
      row["abs_diff"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_coeff_rows(const json& rows) {
  std::ostringstream os;
  os << "  m | a | b | c | d | closed_form | |diff|\n";
  for (const auto& row : rows) {
    os << "  " << row["m"].get<int>();
    for (const char* name : {"a", "b", "c", "d"}) {
      os << " | ";
      if (row["coefficients"].contains(name))
        os << row["coefficients"][name].get<std::string>();
      else
        os << "-";
    }
    os << " | "
       << (row["closed_form"].is_null() ? std::string("-")
                                        : row["closed_form"].get<std::string>())
       << " | "
       << (row["abs_diff"].is_null() ? std::string("-") : row["abs_diff"].get<std::string>())
       << "\n";
  }
  return os.str();
}

// ---- geometry dump ----------------------------------------------------------

json geometry_json(Family family, const Rational& r, mpfr_prec_t prec) {
  const auto inst = build_solid_f(family, r, prec);
  json doc;
  doc["family"] = family_name(family);
  doc["r"] = r.str();
  json verts = json::array();
  for (const auto& v : inst.vertices) {
    json jv;
    jv["label"] = v.label;
    jv["apex"] = v.apex;
    jv["point"] = {f15(v.point[0]), f15(v.point[1]), f15(v.point[2])};
    verts.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& e : inst.edges) {
    json je;
    je["label"] = e.label;
    je["class"] = e.type;
    je["foot"] = {f15(e.foot[0]), f15(e.foot[1]), f15(e.foot[2])};
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  json faces = json::array();
  for (const auto& f : inst.faces) {
    json jf;
    jf["label"] = f.label;
    jf["orientation"] = f.orientation;
    jf["foot"] = {f15(f.foot[0]), f15(f.foot[1]), f15(f.foot[2])};
    faces.push_back(std::move(jf));
  }
  doc["faces"] = std::move(faces);
  const auto inc = incidence_numbers(inst);
  doc["incidence"] = {{"ve1", f15(inc.ve1)}, {"ve2", f15(inc.ve2)}, {"ve3", f15(inc.ve3)},
                      {"ef1", f15(inc.ef1)}, {"ef2", f15(inc.ef2)}};
  doc["flag_count"] = inst.flags.size();
  return doc;
}

// ---- analyze ----------------------------------------------------------------

struct SnapResult {
  bool snapped = false;
  BigFloat root;
  std::string bracket_lo, bracket_hi;
};

SnapResult try_snap(Family family, int k, const Rational& r, double snap_tol,
                    mpfr_prec_t prec) {
  SnapResult res;
  const auto scan = critical_scan(family, k, prec);
  const BigFloat rf = BigFloat::from_rational(r, prec);
  for (const auto& pt : scan.points) {
    if ((rf - pt.r).abs() <= BigFloat::from_double(snap_tol, prec)) {
      res.snapped = true;
      res.root = pt.r;
      res.bracket_lo = pt.bracket.lo.str();
      res.bracket_hi = pt.bracket.hi.str();
      return res;
    }
  }
  return res;
}

json evidence_json(const EquivalenceResult& eq) {
  json ev = json::array();
  for (const auto& e : eq.evidence) {
    const char* verdict = e.verdict == CoefficientEvidence::Verdict::Zero ? "zero"
                          : e.verdict == CoefficientEvidence::Verdict::NonZero
                              ? "nonzero"
                              : "within-band";
    ev.push_back({{"m", e.m}, {"value", e.value}, {"verdict", verdict}});
  }
  return ev;
}

// Small mean-value spot check: one basis element from a few degrees plus the
// e2 counterexample, two centers, two radii.
json mvp_spot_check(const SolidInstance<BigFloat>& inst, int k, SpaceId space, bool& ok) {
  const auto& basis = space_basis(space);
  GradedBasis subset;
  std::vector<int> degrees;
  for (const auto& [d, polys] : basis.per_degree)
    if (!polys.empty()) degrees.push_back(d);
  std::vector<int> picks;
  if (!degrees.empty()) {
    picks.push_back(degrees.front());
    picks.push_back(degrees[degrees.size() / 2]);
    picks.push_back(degrees.back());
  }
  for (int d : picks)
    if (!subset.per_degree.count(d))
      subset.per_degree[d] = {basis.per_degree.at(d).front()};
  std::vector<std::pair<std::string, Polynomial<Rational>>> counters;
  counters.emplace_back("e2", inv_e2());
  const auto rep = verify_space(inst, k, subset, counters, 1e-9, 1e-3, 2);
  ok = rep.pass;
  json doc;
  doc["max_member_defect"] = rep.max_member_defect;
  doc["min_counterexample_max_defect"] = rep.min_counterexample_max;
  doc["pass"] = rep.pass;
  return doc;
}

int cmd_analyze(const CommonConfig& cfg, bool dump_geo, bool skip_mvp, std::ostream& out,
                std::ostream& err) {
  const auto family = parse_family(cfg.family_str);
  if (!family) {
    err << "unsupported family: " << cfg.family_str << "\n";
    return 2;
  }
  const auto ks = parse_ks(cfg.k_str);
  const auto rs = parse_r_values(cfg);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(cfg.precision);

  json doc = header("analyze", cfg);
  json cells = json::array();
  bool all_ok = true;
  std::ostringstream text;

  for (const auto& r : rs)
    for (int k : ks) {
      json cell;
      cell["family"] = family_name(*family);
      cell["k"] = k;
      cell["r"] = r.str();

      const auto snap = try_snap(*family, k, r, cfg.snap_tol, prec);
      EquivalenceResult eq;
      BigFloat where = BigFloat::from_rational(r, prec);
      if (snap.snapped) {
        where = snap.root;
        eq = equivalence_check(*family, k, snap.root, cfg.max_tau_degree, cfg.tol);
        cell["snapped"] = true;
        cell["snapped_to"] = {{"refined", f15(snap.root)},
                              {"bracket", {snap.bracket_lo, snap.bracket_hi}}};
        cell["note"] = "input parameter lies within the snap tolerance of a certified "
                       "critical value; analysis performed at the certified root";
      } else {
        eq = equivalence_check(*family, k, r, cfg.max_tau_degree, prec, cfg.tol);
        cell["snapped"] = false;
        if (!eq.note.empty()) cell["note"] = eq.note;
      }
      cell["space"] = space_name(eq.space);
      cell["dim"] = eq.dim;
      cell["evidence"] = evidence_json(eq);
      cell["tau_annihilation"] = eq.tau_annihilation_ok;

      const Rational* exact_ptr = snap.snapped ? nullptr : &r;
      cell["coefficients"] =
          coefficient_rows(*family, k, exact_ptr, where, 2, 8, prec);

      bool cell_ok = eq.space != SpaceId::Indeterminate && eq.tau_annihilation_ok;
      if (!skip_mvp && eq.space != SpaceId::Indeterminate) {
        bool mvp_ok = false;
        const auto inst = build_solid<BigFloat>(*family, where);
        cell["mvp_spot_check"] = mvp_spot_check(inst, k, eq.space, mvp_ok);
        cell_ok = cell_ok && mvp_ok;
      }
      if (dump_geo) cell["geometry"] = geometry_json(*family, r, prec);
      cell["pass"] = cell_ok;
      all_ok = all_ok && cell_ok;

      text << family_name(*family) << " k=" << k << " r=" << r.str();
      if (snap.snapped) text << " (snapped to " << f15(snap.root) << ")";
      text << ": " << space_name(eq.space) << ", dim " << eq.dim
           << (cell_ok ? "" : "  [cross-check FAILED]") << "\n";
      text << render_coeff_rows(cell["coefficients"]);
      cells.push_back(std::move(cell));
    }
  doc["cells"] = std::move(cells);
  doc["pass"] = all_ok;
  text << (all_ok ? "all cross-checks pass\n" : "cross-check failure\n");
  return emit(doc, text.str(), cfg, out, all_ok ? 0 : 1);
}

// ---- coeffs -----------------------------------------------------------------

int cmd_coeffs(const CommonConfig& cfg, const std::string& m_range, std::ostream& out,
               std::ostream& err) {
  const auto family = parse_family(cfg.family_str);
  if (!family) {
    err << "unsupported family: " << cfg.family_str << "\n";
    return 2;
  }
  const auto ks = parse_ks(cfg.k_str);
  const auto rs = parse_r_values(cfg);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(cfg.precision);

  int m_lo = 2, m_hi = 8;
  const auto dots = m_range.find("..");
  if (dots != std::string::npos) {
    m_lo = std::stoi(m_range.substr(0, dots));
    m_hi = std::stoi(m_range.substr(dots + 2));
  } else if (!m_range.empty()) {
    m_lo = m_hi = std::stoi(m_range);
  }
  if (m_lo < 1 || m_hi < m_lo) {
    err << "bad --m range\n";
    return 2;
  }

  json doc = header("coeffs", cfg);
  json tables = json::array();
  std::ostringstream text;
  for (const auto& r : rs)
    for (int k : ks) {
      json table;
      table["family"] = family_name(*family);
      table["k"] = k;
      table["r"] = r.str();
      table["rows"] = coefficient_rows(*family, k, &r, BigFloat::from_rational(r, prec),
                                       m_lo, m_hi, prec);
      text << family_name(*family) << " k=" << k << " r=" << r.str() << "\n"
           << render_coeff_rows(table["rows"]);
      tables.push_back(std::move(table));
    }
  doc["tables"] = std::move(tables);
  return emit(doc, text.str(), cfg, out, 0);
}

// ---- critical ---------------------------------------------------------------

int cmd_critical(const CommonConfig& cfg, bool k_given, std::ostream& out,
                 std::ostream& err) {
  const auto family = parse_family(cfg.family_str);
  if (!family) {
    err << "unsupported family: " << cfg.family_str << "\n";
    return 2;
  }
  const auto ks = k_given ? parse_ks(cfg.k_str) : std::vector<int>{0, 1, 2, 3};
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(cfg.precision);

  json doc = header("critical", cfg);
  doc["family"] = family_name(*family);
  json cells = json::array();
  std::ostringstream text;
  text << "critical values for the " << family_name(*family) << " family\n";
  for (int k : ks) {
    const auto scan = critical_scan(*family, k, prec);
    json cell;
    cell["k"] = k;
    json pts = json::array();
    for (const auto& pt : scan.points) {
      json jp;
      jp["r"] = f15(pt.r);
      jp["bracket"] = {pt.bracket.lo.str(), pt.bracket.hi.str()};
      jp["vanishing"] = pt.vanishing;
      jp["vanishing_residual"] = pt.vanishing_residual.str(6);
      jp["companion"] = pt.companion;
      jp["companion_value"] = f15(pt.companion_value);
      jp["companion_certificate"] = pt.companion_algebraic ? "algebraic" : "numeric";
      jp["space"] = space_name(pt.space);
      jp["dim"] = pt.dim;
      pts.push_back(std::move(jp));
      text << "  k=" << k << ": r = " << f15(pt.r) << "  [" << pt.bracket.lo.str() << ", "
           << pt.bracket.hi.str() << "]  " << pt.vanishing << " -> 0, " << pt.companion
           << " = " << f15(pt.companion_value) << " ("
           << (pt.companion_algebraic ? "algebraic" : "numeric") << "), space "
           << space_name(pt.space) << " dim " << pt.dim << "\n";
    }
    if (scan.points.empty()) text << "  k=" << k << ": no critical value\n";
    for (const auto& n : scan.notes) text << "    note: " << n << "\n";
    cell["points"] = std::move(pts);
    cell["notes"] = scan.notes;
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);
  return emit(doc, text.str(), cfg, out, 0);
}

// ---- harmonics ----------------------------------------------------------------

int cmd_harmonics(const CommonConfig& cfg, const std::string& system, int max_degree,
                  const std::string& emit_path, std::ostream& out, std::ostream& err) {
  PdeSystem sys;
  int default_deg = 0;
  if (system == "a3") {
    sys = a3_system();
    default_deg = 8;
  } else if (system == "b3") {
    sys = b3_system();
    default_deg = 11;
  } else if (system == "jumped") {
    sys = jumped_system();
    default_deg = 15;
  } else {
    err << "unknown system: " << system << " (expected a3|b3|jumped)\n";
    return 2;
  }
  const int deg = max_degree > 0 ? max_degree : default_deg;
  const auto basis = solve(sys, deg);

  json doc = header("harmonics", cfg);
  doc["system"] = system;
  doc["max_degree"] = deg;
  doc["total_dim"] = basis.total_dim;
  doc["top_nonzero_degree"] = basis.top_nonzero_degree();
  json dims;
  for (const auto& [d, polys] : basis.per_degree) dims[std::to_string(d)] = polys.size();
  doc["dims"] = std::move(dims);

  std::ostringstream text;
  text << "system " << system << " solved through degree " << deg << "\n";
  text << "total dimension " << basis.total_dim << ", top nonzero degree "
       << basis.top_nonzero_degree() << "\n";
  for (const auto& [d, polys] : basis.per_degree)
    if (!polys.empty()) text << "  degree " << d << ": " << polys.size() << "\n";

  if (!emit_path.empty()) {
    json bj;
    bj["schema_version"] = kSchemaVersion;
    bj["system"] = system;
    json per_degree;
    for (const auto& [d, polys] : basis.per_degree) {
      json list = json::array();
      for (const auto& p : polys) list.push_back(poly_str(p));
      per_degree[std::to_string(d)] = std::move(list);
    }
    bj["basis"] = std::move(per_degree);
    std::ofstream f(emit_path);
    if (!f) {
      err << "cannot open " << emit_path << "\n";
      return 2;
    }
    f << bj.dump(2) << "\n";
    text << "basis written to " << emit_path << "\n";
  }
  return emit(doc, text.str(), cfg, out, 0);
}

// ---- mvp ----------------------------------------------------------------------

int cmd_mvp(const CommonConfig& cfg, const std::string& space_str, bool no_snap,
            double pass_tol, double fail_tol, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(cfg.family_str);
  if (!family) {
    err << "unsupported family: " << cfg.family_str << "\n";
    return 2;
  }
  if (pass_tol <= 0 || fail_tol <= 0) {
    err << "tolerances must be positive\n";
    return 2;
  }
  SpaceId space;
  if (space_str == "a3")
    space = SpaceId::A3Space;
  else if (space_str == "b3")
    space = SpaceId::B3Space;
  else if (space_str == "jumped")
    space = SpaceId::JumpedSpace;
  else {
    err << "unknown space: " << space_str << " (expected a3|b3|jumped)\n";
    return 2;
  }
  const auto ks = parse_ks(cfg.k_str);
  const auto rs = parse_r_values(cfg);
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(cfg.precision);
  const Rational r = rs.front();
  const int k = ks.front();

  SolidInstance<BigFloat> inst = build_solid_f(*family, r, prec);
  json doc = header("mvp", cfg);
  if (!no_snap) {
    const auto snap = try_snap(*family, k, r, cfg.snap_tol, prec);
    if (snap.snapped) {
      inst = build_solid<BigFloat>(*family, snap.root);
      doc["snapped_to"] = f15(snap.root);
    }
  }

  std::vector<std::pair<std::string, Polynomial<Rational>>> counters;
  counters.emplace_back("e2", inv_e2());
  const auto rep = verify_space(inst, k, space_basis(space), counters, pass_tol, fail_tol);

  doc["family"] = family_name(*family);
  doc["k"] = k;
  doc["r"] = rep.r;
  doc["space"] = space_str;
  doc["dim"] = space_dimension(space);
  doc["pass_tol"] = rep.pass_tol;
  doc["fail_tol"] = rep.fail_tol;
  doc["radii"] = rep.radii;
  doc["centers"] = rep.centers;
  json cps = json::array();
  for (const auto& c : rep.center_points) cps.push_back({c[0], c[1], c[2]});
  doc["center_points"] = std::move(cps);
  doc["measure"] = rep.measure;
  doc["max_member_defect"] = rep.max_member_defect;
  doc["min_counterexample_max_defect"] = rep.min_counterexample_max;
  doc["note"] = rep.note;
  doc["pass"] = rep.pass;
  json samples = json::array();
  for (const auto& s : rep.member_samples)
    samples.push_back({{"id", s.id}, {"center", s.center}, {"radius", s.radius},
                       {"defect", s.defect}});
  doc["member_samples"] = std::move(samples);
  json csamples = json::array();
  for (const auto& s : rep.counterexample_samples)
    csamples.push_back({{"id", s.id}, {"center", s.center}, {"radius", s.radius},
                        {"defect", s.defect}});
  doc["counterexample_samples"] = std::move(csamples);

  std::ostringstream text;
  text << "mvp " << family_name(*family) << " k=" << k << " r=" << rep.r << " space "
       << space_str << "\n";
  text << "max member defect " << rep.max_member_defect << ", min counterexample max "
       << rep.min_counterexample_max << " -> " << (rep.pass ? "pass" : "fail") << "\n";
  return emit(doc, text.str(), cfg, out, rep.pass ? 0 : 1);
}

// ---- paper-check ----------------------------------------------------------------

int cmd_paper_check(const CommonConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.precision < 64) {
    err << "precision must be at least 64 bits\n";
    return 2;
  }
  const auto rep = run_selfcheck(static_cast<mpfr_prec_t>(cfg.precision));
  json doc = header("paper-check", cfg);
  json criteria = json::array();
  std::ostringstream text;
  for (const auto& w : rep.warnings) text << "warning: " << w << "\n";
  for (const auto& c : rep.criteria) {
    json jc;
    jc["number"] = c.number;
    jc["title"] = c.title;
    jc["pass"] = c.pass();
    json checks = json::array();
    for (const auto& ck : c.checks)
      checks.push_back({{"id", ck.id}, {"pass", ck.pass}, {"detail", ck.detail}});
    jc["checks"] = std::move(checks);
    criteria.push_back(std::move(jc));
    text << c.summary() << "\n";
  }
  doc["criteria"] = std::move(criteria);
  doc["warnings"] = rep.warnings;
  doc["pass"] = rep.pass();
  text << (rep.pass() ? "all criteria pass\n" : "at least one criterion failed\n");
  return emit(doc, text.str(), cfg, out, rep.pass() ? 0 : 1);
}

// ---- dump-geometry ----------------------------------------------------------------

int cmd_dump_geometry(const CommonConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(cfg.family_str);
  if (!family) {
    err << "unsupported family: " << cfg.family_str << "\n";
    return 2;
  }
  const auto rs = parse_r_values(cfg);
  json doc = header("dump-geometry", cfg);
  doc["geometry"] = geometry_json(*family, rs.front(), static_cast<mpfr_prec_t>(cfg.precision));
  return emit(doc, doc.dump(2) + "\n", cfg, out, 0);
}

void add_common(CLI::App* sub, CommonConfig& cfg, bool with_family = true,
                bool with_r = true) {
  if (with_family)
    sub->add_option("--family", cfg.family_str, "solid family: tetra or octa");
  sub->add_option("--k", cfg.k_str, "skeleton dimension(s), e.g. 1 or 0,2,3");
  if (with_r) {
    sub->add_option("--r", cfg.r_str, "parameter r, decimal or p/q");
    sub->add_option("--scan", cfg.scan_str, "parameter sweep lo:hi:step");
  }
  sub->add_option("--precision", cfg.precision, "working precision in bits (>= 64)")
      ->check(CLI::Range(64L, 65536L));
  sub->add_option("--tol", cfg.tol, "zero-decision band for float coefficients")
      ->check(CLI::PositiveNumber);
  sub->add_option("--r-snap-tol", cfg.snap_tol,
                  "snap distance to certified critical values")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", cfg.out_path, "write the report to a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"polyharm: polyhedral harmonics of the isohedral triakis families"};
  app.require_subcommand(1);

  CommonConfig cfg;
  bool dump_geo = false, skip_mvp = false, no_snap = false;
  std::string m_range, system = "b3", space_str = "b3", emit_path;
  int max_degree = 0;
  double pass_tol = 1e-9, fail_tol = 1e-4;

  auto* analyze = app.add_subcommand("analyze", "identify the harmonic space at (family, k, r)");
  add_common(analyze, cfg);
  analyze->add_flag("--dump-geometry", dump_geo, "attach the skeleton geometry to each cell");
  analyze->add_flag("--skip-mvp", skip_mvp, "skip the mean value spot check");
  analyze->add_option("--max-tau-degree", cfg.max_tau_degree,
                      "verify annihilation by the skeleton operators up to this degree")
      ->check(CLI::Range(1, 12));

  auto* coeffs = app.add_subcommand("coeffs", "decomposition coefficients against closed forms");
  add_common(coeffs, cfg);
  coeffs->add_option("--m", m_range, "degree or range, e.g. 4 or 2..8");

  auto* critical = app.add_subcommand("critical", "certified critical parameters per skeleton");
  add_common(critical, cfg, true, false);

  auto* harmonics = app.add_subcommand("harmonics", "solve a PDE system for its graded kernel");
  add_common(harmonics, cfg, false, false);
  harmonics->add_option("--system", system, "a3 | b3 | jumped");
  harmonics->add_option("--max-degree", max_degree, "highest degree to solve");
  harmonics->add_option("--emit-basis", emit_path, "write the basis polynomials to a JSON file");

  auto* mvp = app.add_subcommand("mvp", "mean value defect report for a candidate space");
  add_common(mvp, cfg);
  mvp->add_option("--space", space_str, "a3 | b3 | jumped");
  mvp->add_flag("--no-snap", no_snap, "evaluate at the literal r, never at a nearby root");
  mvp->add_option("--pass-tol", pass_tol, "member defect threshold")->check(CLI::PositiveNumber);
  mvp->add_option("--fail-tol", fail_tol, "counterexample defect threshold")
      ->check(CLI::PositiveNumber);

  auto* paper_check = app.add_subcommand("paper-check", "run the full reproduction suite");
  add_common(paper_check, cfg, false, false);

  auto* dump = app.add_subcommand("dump-geometry", "JSON dump of a solid's labeled skeleton");
  add_common(dump, cfg);

  std::vector<const char*> argv;
  argv.push_back("polyharm");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, dump_geo, skip_mvp, out, err);
    if (coeffs->parsed()) return cmd_coeffs(cfg, m_range, out, err);
    if (critical->parsed())
      return cmd_critical(cfg, critical->get_option("--k")->count() > 0, out, err);
    if (harmonics->parsed())
      return cmd_harmonics(cfg, system, max_degree, emit_path, out, err);
    if (mvp->parsed()) return cmd_mvp(cfg, space_str, no_snap, pass_tol, fail_tol, out, err);
    if (paper_check->parsed()) return cmd_paper_check(cfg, out, err);
    if (dump->parsed()) return cmd_dump_geometry(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace polyharm::cli
