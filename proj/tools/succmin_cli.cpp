// Command-line front end: tower types, polytopes, flag types, orders,
// families, the degree-8 counterexample, splitting types and the property
// suites.
//
// Exit codes: 0 all verdicts pass, 1 a check failed (or the expected
// counterexample was verified), 2 inconclusive, 3 input error.

#include "succmin/approximation.hpp"
#include "succmin/io.hpp"
#include "succmin/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace succmin;
using io::json;

namespace {

enum ExitCode { kPass = 0, kFailed = 1, kInconclusive = 2, kInputError = 3 };

struct Options {
  unsigned precision = 128;
  std::string out;
  std::string format = "text";
};

/// Text for stdout plus a JSON record that embeds the command and inputs.
struct Report {
  Report(std::string command, json inputs, const Options& opt) {
    data["metadata"] = {{"command", std::move(command)}, {"inputs", std::move(inputs)}, {"precision", opt.precision}};
  }
  json data;
  std::ostringstream text;
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << body;
}

int emit(const Options& opt, const Report& r, int code) {
  if (opt.format == "json")
    std::cout << r.data.dump(2) << "\n";
  else
    std::cout << r.text.str();
  if (!opt.out.empty()) write_file(opt.out, r.data.dump(2) + "\n");
  return code;
}

std::string real_str(const Real& x, int digits = 20) { return to_string(x, digits); }

json certified_json(const lattice::Certified& c) { return {{"mid", real_str(c.mid)}, {"rad", real_str(c.rad, 3)}}; }

json integer_vector_json(const VectorZ& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

std::string vector_str(const VectorQ& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
  return s + ")";
}

std::string vector_str(const VectorZ& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
  return s + ")";
}

std::string constraint_str(const geometry::Constraint& c, const char* rel) {
  std::string s;
  for (Index i = 0; i < c.a.size(); ++i) {
    const Rational& q = c.a(i);
    if (q == 0) continue;
    std::string mag = abs(q) == 1 ? "" : to_string(Rational(abs(q))) + "*";
    s += s.empty() ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
    s += mag + "x" + std::to_string(i + 1);
  }
  if (s.empty()) s = "0";
  s += std::string(" ") + rel + " " + to_string(c.b);
  if (!c.label.empty()) s += "   [" + c.label + "]";
  return s;
}

std::string latex_rational(const Rational& q) {
  if (is_integer(q)) return to_string(q);
  return "\\tfrac{" + to_string(numerator(q)) + "}{" + to_string(denominator(q)) + "}";
}

std::string constraint_latex(const geometry::Constraint& c, const char* rel) {
  std::string s;
  for (Index i = 0; i < c.a.size(); ++i) {
    const Rational& q = c.a(i);
    if (q == 0) continue;
    s += s.empty() ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
    s += (abs(q) == 1 ? "" : latex_rational(abs(q))) + "x_{" + std::to_string(i + 1) + "}";
  }
  if (s.empty()) s = "0";
  return s + " &" + rel + " " + latex_rational(c.b);
}

radix::TowerType parse_tower(std::string text) {
  std::erase_if(text, [](char ch) { return ch == '(' || ch == ')'; });
  return radix::TowerType::parse(text);
}

VectorQ parse_point(const std::string& text) {
  std::vector<Rational> xs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) xs.push_back(parse_rational(tok));
  VectorQ v(static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Index>(i)) = xs[i];
  return v;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Rational q = parse_rational(tok);
    if (!is_integer(q)) throw InvalidInput("expected an integer, got " + tok);
    out.push_back(numerator(q));
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::string flag_type_str(const nfield::FlagType& t) {
  std::ostringstream os;
  for (int i = 0; i < t.degree(); ++i) {
    for (int j = 0; j < t.degree(); ++j) os << (j ? " " : "") << t(i, j);
    os << "\n";
  }
  return os.str();
}

json flag_type_json(const nfield::FlagType& t) {
  json rows = json::array();
  for (int i = 0; i < t.degree(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.degree(); ++j) row.push_back(t(i, j));
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

int cmd_towers(const Options& opt, int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  Report r("towers", {{"n", n}}, opt);
  json list = json::array();
  for (const auto& t : radix::tower_types(n)) {
    r.text << "(" << t.to_string() << ")\n";
    list.push_back(t.parts());
  }
  r.data["towers"] = list;
  return emit(opt, r, kPass);
}

struct PolytopeArgs {
  std::string tower, flagtype_file, contains;
  bool vertices = false, facets = false, interior = false;
};

int cmd_polytope(const Options& opt, const PolytopeArgs& a) {
  if (a.tower.empty() == a.flagtype_file.empty()) throw InvalidInput("give either a tower type or --flagtype");
  json inputs;
  std::optional<geometry::RationalPolytope> p;
  std::string name;
  if (!a.tower.empty()) {
    auto t = parse_tower(a.tower);
    p = geometry::lenstra_polytope(t);
    name = "Len(" + t.to_string() + ")";
    inputs["tower"] = t.parts();
  } else {
    auto t = io::parse_flag_type(io::read_json_file(a.flagtype_file));
    p = geometry::flag_polytope(t);
    name = "P_T";
    inputs["flagtype"] = flag_type_json(t);
  }
  if (!a.contains.empty()) inputs["point"] = a.contains;
  Report r("polytope", inputs, opt);
  r.data["polytope"] = io::to_json(*p);
  if (opt.format == "latex") {
    std::vector<std::string> rows;
    for (const auto& c : p->equalities()) rows.push_back(constraint_latex(c, "="));
    for (const auto& c : p->inequalities()) rows.push_back(constraint_latex(c, "\\le"));
    std::cout << "\\begin{align*}\n";
    for (std::size_t k = 0; k < rows.size(); ++k)
      std::cout << "  " << rows[k] << (k + 1 < rows.size() ? " \\\\\n" : "\n");
    std::cout << "\\end{align*}\n";
    if (!opt.out.empty()) write_file(opt.out, r.data.dump(2) + "\n");
    return kPass;
  }
  r.text << name << " in R^" << p->dim() << "\n";
  for (const auto& c : p->equalities()) r.text << "  " << constraint_str(c, "=") << "\n";
  for (const auto& c : p->inequalities()) r.text << "  " << constraint_str(c, "<=") << "\n";

  const int dim = geometry::dimension(*p);
  r.data["dimension"] = dim;
  r.data["empty"] = dim < 0;
  if (dim < 0) {
    r.text << "empty\n";
    return emit(opt, r, kPass);
  }
  r.text << "dimension " << dim << "\n";
  if (a.vertices) {
    json vs = json::array();
    auto verts = geometry::vertices(*p);
    r.text << "vertices (" << verts.size() << "):\n";
    for (const auto& v : verts) {
      r.text << "  " << vector_str(v) << "\n";
      vs.push_back(io::to_json(v));
    }
    r.data["vertices"] = vs;
  }
  if (a.facets) {
    json fs = json::array();
    auto facets = geometry::facets(*p);
    r.text << "facets (" << facets.size() << "):\n";
    for (const auto& c : facets) {
      r.text << "  " << constraint_str(c, "<=") << "\n";
      fs.push_back({{"a", io::to_json(c.a)}, {"b", io::to_json(c.b)}, {"label", c.label}});
    }
    r.data["facets"] = fs;
  }
  if (a.interior) {
    VectorQ x = geometry::relative_interior_point(*p);
    r.text << "interior point " << vector_str(x) << "\n";
    r.data["interior"] = io::to_json(x);
  }
  if (!a.contains.empty()) {
    bool in = geometry::contains(*p, parse_point(a.contains));
    r.text << "contains " << a.contains << ": " << (in ? "yes" : "no") << "\n";
    r.data["contains"] = in;
  }
  return emit(opt, r, kPass);
}

int cmd_flagtype(const Options& opt, const std::string& file) {
  json in = io::read_json_file(file);
  Report r("flagtype", in, opt);
  auto t = io::parse_flag_type(in);
  r.text << "flag type:\n" << flag_type_str(t);
  r.data["table"] = flag_type_json(t);
  json cs = json::array();
  r.text << "corners:";
  for (auto [i, j] : nfield::corners(t)) {
    r.text << " (" << i << "," << j << ")";
    cs.push_back({i, j});
  }
  r.text << "\n";
  r.data["corners"] = cs;
  if (!in.contains("table")) {
    auto spec = io::parse_field_spec(in);
    auto tower = nfield::tower_type_of_basis(io::seed_flag(spec), spec.field);
    r.text << "tower type (" << tower.to_string() << ")\n";
    r.data["tower"] = tower.parts();
  }
  return emit(opt, r, kPass);
}

int cmd_order_build(const Options& opt, const std::string& file) {
  json in = io::read_json_file(file);
  Report r("order build", in, opt);
  auto spec = io::parse_field_spec(in);
  auto flag = io::seed_flag(spec);
  const bool order = lattice::is_order(flag, spec.field);
  r.data["is_order"] = order;
  r.text << "degree " << spec.field.degree() << "\n";
  r.text << "is_order " << (order ? "yes" : "no") << "\n";
  auto disc = lattice::discriminant(std::span<const nfield::FieldElement>(flag.basis()), spec.field);
  r.data["discriminant"] = to_string(disc);
  r.text << "discriminant " << to_string(disc) << "\n";
  auto tower = nfield::tower_type_of_basis(flag, spec.field);
  r.data["basis_tower"] = tower.parts();
  r.text << "tower type of basis (" << tower.to_string() << ")\n";
  return emit(opt, r, order ? kPass : kFailed);
}

int cmd_order_succmin(const Options& opt, const std::string& file) {
  json in = io::read_json_file(file);
  Report r("order succmin", in, opt);
  auto order = io::order_from_spec(io::parse_field_spec(in));
  auto m = lattice::successive_minima(order, opt.precision);
  json rows = json::array();
  for (std::size_t i = 0; i < m.lambdas.size(); ++i) {
    r.text << "lambda_" << i << " = " << real_str(m.lambdas[i].mid) << " +- " << real_str(m.lambdas[i].rad, 3)
           << "  witness " << vector_str(m.coefficients[i]) << "\n";
    rows.push_back({{"lambda", certified_json(m.lambdas[i])}, {"coefficients", integer_vector_json(m.coefficients[i])}});
  }
  r.data["minima"] = rows;
  auto tower = lattice::order_tower_type(order, m);
  r.data["tower"] = tower.parts();
  r.text << "tower type (" << tower.to_string() << ")\n";
  r.data["tie_groups"] = lattice::tie_groups(m);
  if (lattice::discriminant(order) > 1) {
    auto mt = lattice::minkowski_type(order, m);
    json t = json::array();
    r.text << "minkowski type";
    for (const auto& v : mt) {
      r.text << " " << real_str(v, 10);
      t.push_back(real_str(v));
    }
    r.text << "\n";
    r.data["minkowski_type"] = t;
  }
  return emit(opt, r, kPass);
}

int verdict_code(lattice::Verdict v) {
  switch (v) {
    case lattice::Verdict::Holds: return kPass;
    case lattice::Verdict::Fails: return kFailed;
    default: return kInconclusive;
  }
}

int cmd_order_check(const Options& opt, const std::string& file, int i, int j, int k, const std::string& ideal_file) {
  json in = io::read_json_file(file);
  json inputs{{"order", in}, {"i", i}, {"j", j}, {"k", k}};
  std::optional<lattice::IdealBasis> ideal;
  auto order = io::order_from_spec(io::parse_field_spec(in));
  if (!ideal_file.empty()) {
    json g = io::read_json_file(ideal_file);
    inputs["ideal"] = g;
    auto gens = io::parse_field_spec(json{{"min_poly", in.at("min_poly")}, {"basis", g.at("generators")}});
    ideal = lattice::ideal_from_generators(order, *gens.basis);
  }
  Report r("order check", inputs, opt);
  auto c = lattice::check_inequality(order, ideal, i, j, k, opt.precision);
  r.text << "lambda_" << k << " <= sqrt(n) lambda_" << i << " lambda_" << j << ": " << lattice::to_string(c.verdict)
         << " (ratio " << real_str(c.ratio, 12) << ", bound " << real_str(c.bound, 12) << ")\n";
  r.data["verdict"] = lattice::to_string(c.verdict);
  r.data["ratio"] = real_str(c.ratio);
  r.data["bound"] = real_str(c.bound);
  return emit(opt, r, verdict_code(c.verdict));
}

int cmd_order_approximate(const Options& opt, const std::string& file, const std::string& tower_text) {
  json in = io::read_json_file(file);
  auto target = parse_tower(tower_text);
  Report r("order approximate", {{"order", in}, {"tower", target.parts()}}, opt);
  auto order = io::order_from_spec(io::parse_field_spec(in));
  auto a = lattice::approximate_order(order, target, opt.precision);
  json basis = json::array();
  r.text << "basis v':\n";
  for (const auto& v : a.basis) {
    r.text << "  " << vector_str(v.coeffs) << "\n";
    basis.push_back(io::to_json(v.coeffs));
  }
  r.data["basis"] = basis;
  r.data["index"] = to_string(a.index);
  r.data["tower"] = a.tower.parts();
  r.data["replaced"] = a.replaced;
  json combos = json::array();
  for (const auto& c : a.combinations) {
    json row = json::array();
    for (const auto& z : c) row.push_back(to_string(z));
    combos.push_back(row);
  }
  r.data["combinations"] = combos;
  r.text << "index D = " << to_string(a.index) << "\n";
  r.text << "tower type (" << a.tower.to_string() << ")\n";
  r.text << "discriminant " << to_string(lattice::discriminant(a.order)) << "\n";
  return emit(opt, r, kPass);
}

int cmd_family(const Options& opt, const std::string& file, std::optional<int> count, const std::string& report) {
  json in = io::read_json_file(file);
  auto spec = io::parse_order_spec(in);
  if (!spec.x) throw InvalidInput("family spec needs \"x\"");
  lattice::FamilySpec fam{spec.field.field, io::seed_flag(spec.field), *spec.x};
  lattice::validate_family(fam);
  std::vector<lattice::FamilyMember> members;
  if (!spec.m_values.empty())
    members = lattice::family_construct(fam, spec.m_values);
  else
    members = lattice::family_construct(fam, count.value_or(spec.m_count.value_or(5)));

  Report r("family run", in, opt);
  const int n = spec.field.field.degree();
  std::ostringstream csv;
  csv << "M,Delta";
  for (int i = 0; i < n; ++i) csv << ",lambda" << i;
  for (int i = 0; i < n; ++i) csv << ",logDelta_lambda" << i;
  csv << "\n";
  json rows = json::array();
  for (const auto& mem : members) {
    auto m = lattice::successive_minima(mem.order, opt.precision);
    auto disc = lattice::discriminant(mem.order);
    auto mt = lattice::minkowski_type(mem.order, m);
    PrecisionScope scope(m.precision);
    json row{{"M", to_string(mem.M)}, {"Delta", to_string(disc)}};
    csv << to_string(mem.M) << "," << to_string(disc);
    json ls = json::array(), ts = json::array();
    for (const auto& l : m.lambdas) {
      csv << "," << real_str(l.mid);
      ls.push_back(real_str(l.mid));
    }
    csv << ",0";
    ts.push_back("0");
    for (const auto& v : mt) {
      csv << "," << real_str(v);
      ts.push_back(real_str(v));
    }
    csv << "\n";
    row["lambda"] = ls;
    row["log_Delta_lambda"] = ts;
    rows.push_back(row);
  }
  r.data["rows"] = rows;
  if (report == "csv") {
    if (opt.out.empty())
      std::cout << csv.str();
    else
      write_file(opt.out, csv.str());
    return kPass;
  }
  r.text << csv.str();
  return emit(opt, r, kPass);
}

int cmd_counterexample(const Options& opt, const std::string& m_list) {
  suites::Config cfg;
  cfg.precision = opt.precision;
  auto ms = m_list.empty() ? suites::default_deg8_m_values() : parse_integer_list(m_list);
  json inputs{{"M", json::array()}};
  for (const auto& m : ms) inputs["M"].push_back(to_string(m));
  Report r("counterexample-deg8", inputs, opt);
  auto rep = suites::counterexample_deg8(ms, cfg);
  json rows = json::array();
  r.text << "M, is_order, lambda_3^2/lambda_6, tower, lambda_6 <= sqrt(8) lambda_3^2\n";
  for (const auto& row : rep.rows) {
    json j{{"M", to_string(row.M)}, {"is_order", row.is_order}};
    r.text << to_string(row.M) << ", " << (row.is_order ? "yes" : "no");
    if (row.is_order) {
      j["ratio"] = real_str(row.ratio);
      j["tower"] = row.tower.parts();
      j["discriminant"] = to_string(row.discriminant);
      j["verdict_336"] = lattice::to_string(row.check_336.verdict);
      r.text << ", " << real_str(row.ratio, 10) << ", (" << row.tower.to_string() << "), "
             << lattice::to_string(row.check_336.verdict);
    }
    r.text << "\n";
    rows.push_back(j);
  }
  r.data["rows"] = rows;
  if (!rep.orders_ok) {
    r.text << "some lattice is not an order\n";
    return emit(opt, r, kInputError);
  }
  r.data["slope"] = real_str(rep.slope);
  r.data["slope_ok"] = rep.slope_ok;
  r.data["tower_ok"] = rep.tower_ok;
  r.data["type_error"] = rep.type_error;
  r.data["type_ok"] = rep.type_ok;
  r.text << "log-log slope " << real_str(rep.slope, 8) << " (expected -2, " << (rep.slope_ok ? "ok" : "off") << ")\n";
  r.text << "tower type at largest M " << (rep.tower_ok ? "(8)" : "unexpected") << "\n";
  r.text << "Minkowski type error " << rep.type_error << (rep.type_ok ? " (ok)" : " (off)") << "\n";
  const auto v = rep.rows.back().check_336.verdict;
  const bool verified = rep.slope_ok && rep.tower_ok && rep.type_ok && v == lattice::Verdict::Fails;
  r.data["counterexample_verified"] = verified;
  if (v == lattice::Verdict::Inconclusive) return emit(opt, r, kInconclusive);
  return emit(opt, r, verified ? kFailed : kPass);
}

int cmd_scrollar(const Options& opt, const std::string& file, const std::string& flagtype_file,
                 const std::string& line_file) {
  json in = io::read_json_file(file);
  json inputs{{"splitting_type", in}};
  auto s = io::parse_splitting_type(in);
  bool ok = true;
  Report r("scrollar check", inputs, opt);
  r.text << "n = " << s.n << ", g = " << s.g << ", deg L = " << s.degL << "\n";

  auto h = scrollar::h0_table(s, s.a.front() - 1, s.a.back());
  const bool round_trip = scrollar::minima_from_h0(h, s.n) == s.a;
  ok = ok && round_trip;
  r.data["h0_round_trip"] = round_trip;
  r.text << "h0 round trip " << (round_trip ? "ok" : "FAILED") << "\n";

  if (scrollar::is_structure_sheaf(s)) {
    const bool maroni = scrollar::maroni_check(s);
    ok = ok && maroni;
    r.data["maroni"] = maroni;
    r.text << "maroni bound " << (maroni ? "holds" : "violated") << "\n";
    if (s.n >= 2) {
      auto dp = scrollar::dp_bounds(s);
      ok = ok && dp.holds();
      r.data["dp_bounds"] = {{"lower", to_string(dp.lower)}, {"upper", to_string(dp.upper)}, {"holds", dp.holds()}};
      r.text << to_string(dp.lower) << " <= a_1 <= " << to_string(dp.upper) << ": "
             << (dp.holds() ? "holds" : "violated") << "\n";
    }
    if (s.g + s.n - 1 > 0) {
      VectorQ x = scrollar::geometric_minkowski_type(s);
      r.data["minkowski_type"] = io::to_json(x);
      r.text << "minkowski type " << vector_str(x) << "\n";
      if (s.n >= 2) {
        bool in_union = false;
        for (const auto& p : geometry::spectrum_union(s.n)) in_union = in_union || geometry::contains(p, x);
        ok = ok && in_union;
        r.data["in_spectrum_union"] = in_union;
        r.text << "inside the union of Len polytopes: " << (in_union ? "yes" : "no") << "\n";
      }
    }
  }
  if (!flagtype_file.empty()) {
    json tj = io::read_json_file(flagtype_file);
    inputs["flagtype"] = tj;
    auto t = io::parse_flag_type(tj);
    auto sl = s;
    if (!line_file.empty()) {
      json lj = io::read_json_file(line_file);
      r.data["metadata"]["inputs"]["line"] = lj;
      sl = io::parse_splitting_type(lj);
    }
    r.data["metadata"]["inputs"]["flagtype"] = tj;
    auto vs = scrollar::scrollar_constraints(s, sl, t);
    json jv = json::array();
    for (const auto& v : vs) {
      jv.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}});
      r.text << "violated: a_" << v.k << "(L) > a_" << v.i << "(O) + a_" << v.j << "(L)\n";
    }
    r.data["violations"] = jv;
    r.text << vs.size() << " flag-type constraint violations\n";
    ok = ok && vs.empty();
  }
  return emit(opt, r, ok ? kPass : kFailed);
}

int cmd_verify(const Options& opt, const std::string& suite) {
  suites::Config cfg;
  cfg.precision = opt.precision;
  std::vector<std::string> names = suite == "all" ? suites::suite_names() : std::vector<std::string>{suite};
  Report r("verify", {{"suite", suite}, {"seed", cfg.seed}}, opt);
  json results = json::array();
  bool ok = true;
  for (const auto& name : names) {
    auto res = suites::run_suite(name, cfg);
    ok = ok && res.passed;
    r.text << (res.passed ? "PASS " : "FAIL ") << name << ": " << res.summary << "\n";
    for (const auto& f : res.failures) r.text << "    " << f << "\n";
    results.push_back({{"suite", name},
                       {"passed", res.passed},
                       {"summary", res.summary},
                       {"failures", res.failures},
                       {"seconds", res.seconds}});
  }
  r.data["results"] = results;
  return emit(opt, r, ok ? kPass : kFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Successive minima of orders in number fields"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--precision", opt.precision, "working precision in bits")->check(CLI::Range(64u, 100000u));
  app.add_option("--out", opt.out, "write the JSON (or CSV) report to this file");
  app.add_option("--format", opt.format, "stdout format (latex applies to polytope)")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  std::function<int()> run;

  int n = 0;
  auto* towers = app.add_subcommand("towers", "list tower types of degree n");
  towers->add_option("n", n)->required();
  towers->callback([&] { run = [&] { return cmd_towers(opt, n); }; });

  PolytopeArgs pa;
  auto* polytope = app.add_subcommand("polytope", "Len polytope of a tower type, or P_T of a flag type");
  polytope->add_option("tower", pa.tower, "tower type such as 2,4");
  polytope->add_option("--flagtype", pa.flagtype_file, "flag type JSON file");
  polytope->add_flag("--vertices", pa.vertices);
  polytope->add_flag("--facets", pa.facets);
  polytope->add_flag("--interior", pa.interior);
  polytope->add_option("--contains", pa.contains, "comma-separated rational point");
  polytope->callback([&] { run = [&] { return cmd_polytope(opt, pa); }; });

  std::string file;
  auto* flagtype = app.add_subcommand("flagtype", "flag type and corners of a basis");
  flagtype->add_option("file", file)->required();
  flagtype->callback([&] { run = [&] { return cmd_flagtype(opt, file); }; });

  auto* order = app.add_subcommand("order", "orders given by a basis");
  order->require_subcommand(1);
  auto* build = order->add_subcommand("build", "check closure and report the discriminant");
  build->add_option("file", file)->required();
  build->callback([&] { run = [&] { return cmd_order_build(opt, file); }; });
  auto* succ = order->add_subcommand("succmin", "successive minima with witnesses");
  succ->add_option("file", file)->required();
  succ->callback([&] { run = [&] { return cmd_order_succmin(opt, file); }; });
  int ci = 0, cj = 0, ck = 0;
  std::string ideal_file;
  auto* check = order->add_subcommand("check", "lambda_k <= sqrt(n) lambda_i lambda_j");
  check->add_option("file", file)->required();
  check->add_option("i", ci)->required();
  check->add_option("j", cj)->required();
  check->add_option("k", ck)->required();
  check->add_option("--ideal", ideal_file, "JSON file with \"generators\" of a fractional ideal");
  check->callback([&] { run = [&] { return cmd_order_check(opt, file, ci, cj, ck, ideal_file); }; });
  std::string tower;
  auto* approx = order->add_subcommand("approximate", "suborder whose minima basis has a target tower type");
  approx->add_option("file", file)->required();
  approx->add_option("--tower", tower)->required();
  approx->callback([&] { run = [&] { return cmd_order_approximate(opt, file, tower); }; });

  auto* family = app.add_subcommand("family", "explicit order families");
  family->require_subcommand(1);
  std::optional<int> count;
  std::string report = "json";
  auto* frun = family->add_subcommand("run", "minima and Minkowski types along a family");
  frun->add_option("file", file)->required();
  frun->add_option("--count", count, "number of members when the spec has no M values")->check(CLI::Range(1, 1000));
  frun->add_option("--report", report)->check(CLI::IsMember({"csv", "json"}));
  frun->callback([&] { run = [&] { return cmd_family(opt, file, count, report); }; });

  std::string m_list;
  auto* ce = app.add_subcommand("counterexample-deg8", "degree-8 order family violating lambda_6 <= sqrt(8) lambda_3^2");
  ce->add_option("--M-list", m_list, "comma-separated values of M");
  ce->callback([&] { run = [&] { return cmd_counterexample(opt, m_list); }; });

  auto* scroll = app.add_subcommand("scrollar", "splitting types of covers of the line");
  scroll->require_subcommand(1);
  std::string line_file, ft_file;
  auto* scheck = scroll->add_subcommand("check", "run every validator on a splitting type");
  scheck->add_option("file", file)->required();
  scheck->add_option("--flagtype", ft_file, "flag type JSON file for the constraint check");
  scheck->add_option("--line", line_file, "splitting type of the second bundle (default: the first)");
  scheck->callback([&] { run = [&] { return cmd_scrollar(opt, file, ft_file, line_file); }; });

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite)->required();
  verify->callback([&] { run = [&] { return cmd_verify(opt, suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run();
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PrecisionError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const ResourceLimit& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
