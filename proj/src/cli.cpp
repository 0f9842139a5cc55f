#include "wucalc/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "wucalc/cohomology.hpp"
#include "wucalc/complex.hpp"
#include "wucalc/connection.hpp"
#include "wucalc/fixtures.hpp"
#include "wucalc/io.hpp"
#include "wucalc/lefschetz.hpp"
#include "wucalc/spectral.hpp"
#include "wucalc/strong_ring.hpp"

namespace wucalc {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

// Whitney complexes of connection graphs above this size need --large.
constexpr std::size_t kConnectionLimit = 2000;

struct Options {
  int k = 1;
  std::vector<std::string> files;
  bool large = false;
  double tol = 1e-9;
  std::string rule = "pairwise";
  std::string aut = "all";
  std::size_t max_vertices = 12;
  double tmax = 1.0;
  double dt = 1e-3;
  bool complex_mode = false;
  std::string csv;
};

Json header(const std::string& command, const Options& o, bool with_k = true) {
  Json j;
  j["command"] = command;
  if (with_k) j["k"] = o.k;
  j["inputs"] = o.files;
  return j;
}

std::vector<CellComplexPtr> sources_for(const Options& o) {
  if (o.k < 1) throw Error("order k must be at least 1");
  if (o.files.size() == 1) return repeat_source(parse_input(o.files[0]).complex, o.k);
  if (o.files.size() != static_cast<std::size_t>(o.k))
    throw Error("give one input, or exactly k inputs");
  std::vector<Complex> cs;
  for (const auto& f : o.files) cs.push_back(parse_input(f).complex);
  return make_sources(cs);
}

Json vector_json(const std::vector<std::size_t>& v) { return Json(v); }

Json doubles(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(std::abs(x) < 1e-13 ? 0.0 : x);
  return a;
}

int cmd_betti(const Options& o, Json& j) {
  const IntersectionRule rule = parse_intersection_rule(o.rule);
  j["rule"] = o.rule;
  if (o.files.size() == 1 && is_ring_expression(o.files[0])) {
    RingElement e = parse_ring_expression(o.files[0]);
    BettiVector b = ring_betti(e, o.k, rule);
    long long w = ring_wu(e, o.k, rule);
    j["betti"] = b.values;
    j["wu"] = w;
    j["euler_poincare_ok"] = b.alternating_sum() == w;
    return b.alternating_sum() == w ? kOk : kCheckFailed;
  }
  CohomologyReport r = euler_poincare_check(sources_for(o), rule);
  j["grade_sizes"] = vector_json(r.grade_sizes);
  j["betti"] = r.betti.values;
  j["wu"] = r.wu;
  j["euler_poincare_ok"] = r.euler_poincare_ok;
  return r.euler_poincare_ok ? kOk : kCheckFailed;
}

int cmd_wu(const Options& o, Json& j) {
  j["rule"] = o.rule;
  if (o.files.size() == 1 && is_ring_expression(o.files[0])) {
    j["wu"] = ring_wu(parse_ring_expression(o.files[0]), o.k, parse_intersection_rule(o.rule));
    return kOk;
  }
  j["wu"] = wu_characteristic(sources_for(o), parse_intersection_rule(o.rule));
  return kOk;
}

int cmd_fvector(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("fvector takes one input");
  if (is_ring_expression(o.files[0])) {
    j["fvector"] = ring_f_vector(parse_ring_expression(o.files[0]));
    return kOk;
  }
  Complex c = parse_input(o.files[0]).complex;
  j["fvector"] = f_vector(c);
  j["euler_characteristic"] = euler_characteristic(c);
  return kOk;
}

int cmd_fmatrix(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("fmatrix takes one input");
  j["fmatrix"] = f_matrix(parse_input(o.files[0]).complex);
  return kOk;
}

int cmd_euler_poly(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("euler-poly takes one input");
  if (is_ring_expression(o.files[0])) {
    RingElement e = parse_ring_expression(o.files[0]);
    if (o.k == 1) {
      Polynomial p = ring_euler_polynomial(e);
      j["polynomial"] = p.to_string();
      j["coefficients"] = p.coefficients();
      j["value_at_minus_one"] = p.evaluate(-1);
    } else {
      MultiPolynomial p = ring_multivariate_euler_polynomial(e, o.k);
      j["polynomial"] = p.to_string();
      j["value_at_minus_one"] = p.evaluate(std::vector<long long>(o.k, -1));
    }
    long long w = ring_wu(e, o.k);
    j["wu"] = w;
    j["check"] = j["value_at_minus_one"].get<long long>() == w;
    return j["check"].get<bool>() ? kOk : kCheckFailed;
  }
  auto sources = sources_for(o);
  MultiPolynomial p = multivariate_euler_polynomial(sources, parse_intersection_rule(o.rule));
  j["rule"] = o.rule;
  if (o.k == 1) {
    Polynomial q = euler_polynomial(*sources[0]);
    j["polynomial"] = q.to_string();
    j["coefficients"] = q.coefficients();
  } else {
    j["polynomial"] = p.to_string();
  }
  long long value = p.evaluate(std::vector<long long>(o.k, -1));
  long long w = wu_characteristic(sources, parse_intersection_rule(o.rule));
  j["value_at_minus_one"] = value;
  j["wu"] = w;
  j["check"] = value == w;
  return value == w ? kOk : kCheckFailed;
}

int cmd_refine(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("refine takes one input");
  Complex c = parse_input(o.files[0]).complex;
  Complex r = barycentric_refinement(c);
  // refined vertices are numbered from 1 so the output is a valid input file
  std::vector<std::vector<Vertex>> shifted;
  for (const auto& f : facets_json(r)) {
    std::vector<Vertex> v;
    for (const auto& x : f) v.push_back(x.get<Vertex>() + 1);
    shifted.push_back(std::move(v));
  }
  j["fvector"] = f_vector(r);
  Json labels = Json::array();
  for (const Simplex& s : c.simplices()) labels.push_back(std::vector<Vertex>(s.vertices().begin(), s.vertices().end()));
  j["vertex_labels"] = labels;
  j["facets"] = shifted;
  return kOk;
}

int cmd_lefschetz(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("lefschetz takes one input");
  if (o.k < 1) throw Error("order k must be at least 1");
  Complex c = parse_input(o.files[0]).complex;
  std::vector<Automorphism> group;
  if (o.aut == "all") group = automorphism_group(c, o.max_vertices);
  else {
    Automorphism t = Automorphism::from_cycles(o.aut, c.vertices());
    if (!is_automorphism(c, t)) throw Error("the permutation is not an automorphism of the complex");
    group.push_back(t);
  }
  LefschetzEngine engine(c, o.k);
  j["betti"] = engine.betti().values;
  Json rows = Json::array();
  Rational total = 0;
  bool all_ok = true;
  for (const Automorphism& t : group) {
    LefschetzReport r = engine.check({t});
    Json row;
    row["cycles"] = t.cycle_notation();
    row["lefschetz"] = rational_json(r.lefschetz_number);
    row["fixed_count"] = r.fixed_count;
    row["index_sum"] = r.index_sum;
    row["ok"] = r.ok;
    rows.push_back(row);
    total += r.lefschetz_number;
    all_ok = all_ok && r.ok;
  }
  j["automorphisms"] = rows;
  j["group_order"] = group.size();
  if (!group.empty()) j["average"] = rational_json(total / Rational(static_cast<long>(group.size())));
  j["ok"] = all_ok;
  return all_ok ? kOk : kCheckFailed;
}

int cmd_product(const Options& o, Json& j) {
  if (o.files.size() != 2) throw Error("product takes two inputs");
  Complex g = parse_input(o.files[0]).complex, h = parse_input(o.files[1]).complex;
  RingElement e = RingElement(g) * RingElement(h);
  BettiVector b = ring_betti(e, o.k);
  long long w = ring_wu(e, o.k);
  j["fvector"] = ring_f_vector(e);
  j["betti"] = b.values;
  j["wu"] = w;
  j["wu_factors"] = Json::array({wu_characteristic(g, o.k), wu_characteristic(h, o.k)});
  bool ok = w == wu_characteristic(g, o.k) * wu_characteristic(h, o.k) && b.alternating_sum() == w;
  j["ok"] = ok;
  return ok ? kOk : kCheckFailed;
}

int cmd_kuenneth(const Options& o, Json& j) {
  if (o.files.size() != 2) throw Error("kuenneth takes two inputs");
  KuennethReport r = kuenneth_check(parse_input(o.files[0]).complex, parse_input(o.files[1]).complex, o.k);
  j["product_poincare"] = r.product_side.to_string();
  j["factor_poincare"] = r.factor_side.to_string();
  j["ok"] = r.ok;
  return r.ok ? kOk : kCheckFailed;
}

int cmd_connection(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("connection takes one input");
  Complex c = parse_input(o.files[0]).complex;
  Graph g = connection_graph(c);
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  Complex w = whitney_complex(g);
  j["fvector"] = f_vector(w);
  j["euler_characteristic"] = euler_characteristic(w);
  if (w.size() <= kConnectionLimit || o.large) {
    j["betti"] = betti_vector(w, 1).values;
  } else {
    j["betti"] = nullptr;
    j["note"] = "Betti vector of a connection complex with " + std::to_string(w.size()) +
                " simplices needs --large";
  }
  j["wu_via_trace"] = wu_via_connection_trace(c);
  j["wu"] = wu_characteristic(c, 2);
  bool ok = j["wu_via_trace"] == j["wu"];
  j["ok"] = ok;
  return ok ? kOk : kCheckFailed;
}

int cmd_fredholm(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("fredholm takes one input");
  Complex c = parse_input(o.files[0]).complex;
  long long phi = fermi_characteristic(c);
  j["phi"] = phi;
  try {
    BigInt psi = fredholm_characteristic(c);
    j["psi"] = psi.get_si();
    j["unimodular"] = psi == BigInt(static_cast<long>(phi));
  } catch (const Error& e) {
    j["psi"] = nullptr;
    j["unimodular"] = false;
    j["error"] = e.what();
  }
  return j["unimodular"].get<bool>() ? kOk : kCheckFailed;
}

int cmd_spectrum(const Options& o, Json& j) {
  auto sources = sources_for(o);
  InteractionBasis basis(sources, parse_intersection_rule(o.rule));
  GradedIntMatrix d = interaction_derivative(basis);
  DiracLaplacian dl = dirac_and_laplacian(d);
  BettiVector b = betti_vector(d);
  SpectrumReport s = spectrum(dl.laplacian_blocks, o.tol, &b.values);
  SupersymmetryReport susy = supersymmetry_check(s, 1e-8);
  long long w = wu_characteristic(sources, parse_intersection_rule(o.rule));
  j["rule"] = o.rule;
  j["grade_sizes"] = vector_json(basis.grade_sizes());
  Json spectra = Json::array();
  for (const auto& ev : s.eigenvalues) spectra.push_back(doubles(ev));
  j["spectra"] = spectra;
  j["zero_counts"] = s.zero_counts;
  j["betti"] = b.values;
  j["warnings"] = s.warnings;
  j["supersymmetry_ok"] = susy.ok;
  j["supersymmetry_deviation"] = susy.max_deviation;
  Json st;
  bool constant = true;
  for (double t : {0.0, 0.1, 1.0, 10.0}) {
    double v = mckean_singer_supertrace(s, t);
    st[std::to_string(t).substr(0, 4)] = v;
    constant = constant && std::abs(v - static_cast<double>(w)) <= 1e-8 * std::max(1.0, std::abs(double(w)));
  }
  j["supertrace"] = st;
  j["wu"] = w;
  std::vector<BigInt> powers = supertrace_powers(dl.laplacian_blocks, 4);
  Json pw = Json::array();
  bool powers_zero = true;
  for (const BigInt& x : powers) {
    pw.push_back(to_string(x));
    powers_zero = powers_zero && x == 0;
  }
  j["supertrace_powers"] = pw;
  bool ok = susy.ok && constant && powers_zero && s.warnings.empty();
  j["ok"] = ok;
  return ok ? kOk : kCheckFailed;
}

int cmd_deform(const Options& o, Json& j) {
  auto sources = sources_for(o);
  DiracLaplacian dl = dirac_and_laplacian(interaction_derivative(InteractionBasis(sources, parse_intersection_rule(o.rule))));
  if (dl.dirac.rows() > 400 && !o.large) throw Error("Dirac matrix larger than 400x400 needs --large");
  const double tol = o.tol == 1e-9 ? 1e-6 : o.tol;
  DeformationTrajectory traj = lax_deform(dl.dirac, grading_of(dl), o.complex_mode ? LaxMode::complex : LaxMode::real,
                                          o.tmax, o.dt, tol);
  j["mode"] = o.complex_mode ? "complex" : "real";
  j["size"] = dl.dirac.rows();
  j["tmax"] = o.tmax;
  j["dt"] = o.dt;
  j["initial_spectrum"] = doubles(traj.spectra.front());
  j["final_spectrum"] = doubles(traj.spectra.back());
  j["max_drift"] = traj.max_drift;
  j["max_d_squared"] = traj.max_d_squared;
  j["max_asymmetry"] = traj.max_asymmetry;
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw Error("cannot write " + o.csv);
    write_trajectory_csv(f, traj);
    j["csv"] = o.csv;
  }
  bool ok = traj.max_drift <= tol * std::max(1.0, traj.norm) && traj.max_d_squared <= 1e-8;
  j["ok"] = ok;
  return ok ? kOk : kCheckFailed;
}

int cmd_curvature(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("curvature takes one input");
  InputDocument doc = parse_input(o.files[0]);
  Json per = Json::object();
  Rational total = 0;
  for (Vertex v : doc.graph.vertices()) {
    Rational kappa = euler_curvature(doc.graph, v);
    per[std::to_string(v)] = rational_json(kappa);
    total += kappa;
  }
  long long chi = euler_characteristic(whitney_complex(doc.graph));
  j["curvature"] = per;
  j["total"] = rational_json(total);
  j["euler_characteristic"] = chi;
  bool ok = total == Rational(static_cast<long>(chi));
  j["gauss_bonnet_ok"] = ok;
  return ok ? kOk : kCheckFailed;
}

int cmd_dimension(const Options& o, Json& j) {
  if (o.files.size() != 1) throw Error("dimension takes one input");
  j["dimension"] = rational_json(inductive_dimension(parse_input(o.files[0]).graph));
  return kOk;
}

int cmd_fixtures(const Options& o, Json& j) {
  FixtureOptions fo;
  fo.large = o.large;
  auto results = run_fixtures(fo);
  Json rows = Json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    Json row;
    row["id"] = r.id;
    row["expected"] = r.expected;
    row["computed"] = r.computed;
    row["status"] = r.skipped ? "skip" : r.pass ? "pass" : "fail";
    rows.push_back(row);
    (r.skipped ? skipped : r.pass ? passed : failed)++;
  }
  j["fixtures"] = rows;
  j["passed"] = passed;
  j["failed"] = failed;
  j["skipped"] = skipped;
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interaction cohomology of finite simplicial complexes", "wucalc"};
  app.set_help_all_flag("--help-all");
  Options o;
  bool fixtures_flag = false;
  app.add_flag("--large", o.large, "allow computations beyond the default size limits");
  app.add_option("--tol", o.tol, "numeric tolerance override");
  app.add_option("--rule", o.rule, "k-tuple rule: pairwise or common")->check(CLI::IsMember({"pairwise", "common"}));
  app.add_flag("--fixtures", fixtures_flag, "run the built-in reference table suite");

  using Handler = int (*)(const Options&, Json&);
  std::map<CLI::App*, std::pair<std::string, Handler>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, Handler h, bool takes_k, int min_files) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    if (takes_k) s->add_option("-k", o.k, "interaction order")->check(CLI::PositiveNumber);
    if (min_files > 0) s->add_option("files", o.files, "input files")->required();
    handlers[s] = {name, h};
    return s;
  };
  sub("betti", "Betti vector of the interaction cohomology", cmd_betti, true, 1);
  sub("wu", "Wu characteristic", cmd_wu, true, 1);
  sub("fvector", "f-vector", cmd_fvector, false, 1);
  sub("fmatrix", "f-matrix", cmd_fmatrix, false, 1);
  sub("euler-poly", "Euler polynomial, multivariate for k > 1", cmd_euler_poly, true, 1);
  sub("refine", "Barycentric refinement as a facet list", cmd_refine, false, 1);
  auto* lef = sub("lefschetz", "Lefschetz numbers of automorphisms", cmd_lefschetz, true, 1);
  lef->add_option("--aut", o.aut, "'all' or a permutation in cycle notation");
  lef->add_option("--max-vertices", o.max_vertices, "vertex bound for the automorphism search");
  sub("product", "Cartesian product of two complexes", cmd_product, true, 2);
  sub("kuenneth", "Kuenneth check for the Poincare polynomial", cmd_kuenneth, true, 2);
  sub("connection", "connection graph data", cmd_connection, false, 1);
  sub("fredholm", "Fredholm and Fermi characteristics", cmd_fredholm, false, 1);
  sub("spectrum", "Laplacian spectra and supertraces", cmd_spectrum, true, 1);
  auto* def = sub("deform", "isospectral Lax deformation of the Dirac operator", cmd_deform, true, 1);
  def->add_option("--tmax", o.tmax, "final time");
  def->add_option("--dt", o.dt, "time step");
  def->add_flag("--complex", o.complex_mode, "complex deformation");
  def->add_option("--csv", o.csv, "write the spectral trajectory as CSV");
  sub("curvature", "Euler curvature per vertex", cmd_curvature, false, 1);
  sub("dimension", "inductive dimension", cmd_dimension, false, 1);
  sub("fixtures", "run the built-in reference table suite", cmd_fixtures, false, 0);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::pair<std::string, Handler> chosen{"fixtures", cmd_fixtures};
  bool found = fixtures_flag;
  for (const auto& [s, h] : handlers)
    if (s->parsed()) {
      chosen = h;
      found = true;
    }
  if (!found) {
    err << app.help();
    return kUsage;
  }
  try {
    Json j = header(chosen.first, o, chosen.first != "fixtures" && chosen.first != "fvector" &&
                                         chosen.first != "fmatrix" && chosen.first != "refine" &&
                                         chosen.first != "connection" && chosen.first != "fredholm" &&
                                         chosen.first != "curvature" && chosen.first != "dimension");
    int code = chosen.second(o, j);
    out << j.dump(2) << "\n";
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, out, err);
}

}  // namespace wucalc
