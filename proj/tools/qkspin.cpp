// qkspin: exact verification suites and tables for spinors on quaternionic
// Kaehler model spaces.

#include "qkspin/curvature.hpp"
#include "qkspin/random.hpp"
#include "qkspin/rep_algebra.hpp"
#include "qkspin/spinor.hpp"
#include "qkspin/weitzenboeck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace qkspin;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "qkspin-report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 2;
  std::optional<int> r;
  std::string kappa = "16";
  uint64_t seed = 1;
  int samples = 20;
  std::string format = "table";
  std::string suite = "all";
  std::string mode = "formula";
  bool oracle = false;
  bool timing = false;
  int verbosity = 0;
};

// "p/q", or "p" when q = 1
std::string short_text(const Rational& q) {
  std::string t = rational_text(q);
  return t.size() > 2 && t.compare(t.size() - 2, 2, "/1") == 0 ? t.substr(0, t.size() - 2) : t;
}

std::string entry_text(const Scalar& s) { return s.is_rational() ? short_text(s.a()) : s.encode(); }
// JSON keeps the "p/q" form even for integers
std::string json_entry(const Scalar& s) { return s.is_rational() ? rational_text(s.a()) : s.encode(); }

json matrix_json(const Matrix& m, const std::vector<std::string>& rows = {}, const std::vector<std::string>& cols = {}) {
  json out;
  if (!rows.empty()) out["rows"] = rows;
  if (!cols.empty()) out["columns"] = cols;
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_entry(m(i, j)));
    entries.push_back(row);
  }
  out["entries"] = entries;
  return out;
}

// Output document shared by all commands.
struct Output {
  json doc;
  Report report;
  std::vector<std::string> lines;  // table body
  std::vector<std::vector<std::string>> csv;

  explicit Output(const std::string& command) {
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["params"] = json::object();
    doc["checks"] = json::array();
    doc["values"] = json::object();
    doc["timing_ms"] = nullptr;
  }
};

void emit(Output& out, const Config& cfg, double ms) {
  for (const auto& c : out.report.checks)
    out.doc["checks"].push_back(
        {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.pass ? json(nullptr) : json(c.witness)}});
  if (cfg.timing) out.doc["timing_ms"] = std::llround(ms);

  if (cfg.format == "json") {
    std::cout << out.doc.dump(2) << "\n";
    return;
  }
  if (cfg.format == "csv") {
    for (const auto& row : out.csv) {
      for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
    for (const auto& c : out.report.checks)
      std::cout << "check," << '"' << c.name << '"' << "," << (c.pass ? "pass" : "fail") << "\n";
    return;
  }
  for (const auto& l : out.lines) std::cout << l << "\n";
  int passed = 0;
  for (const auto& c : out.report.checks) {
    if (c.pass) ++passed;
    if (!c.pass)
      std::cout << "FAIL  " << c.name << "\n      " << c.witness << "\n";
    else if (cfg.verbosity > 0)
      std::cout << "pass  " << c.name << "\n";
  }
  if (!out.report.checks.empty())
    std::cout << passed << "/" << out.report.checks.size() << " checks passed\n";
  if (cfg.timing) std::cout << "time " << std::llround(ms) << " ms\n";
}

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

// ----------------------------------------------------------------- dims

void cmd_dims(const Config& cfg, Output& out) {
  int n = cfg.n;
  bool constructed = cfg.mode == "constructed";
  if (n < 1 || n > (constructed ? 4 : 6))
    throw UsageError("dims: n must lie in [1, " + std::to_string(constructed ? 4 : 6) + "] in " + cfg.mode + " mode");
  out.doc["params"] = {{"n", n}, {"mode", cfg.mode}};
  json rows = json::array();
  long total = 0;
  std::optional<SpinorSpace> S;
  if (constructed) S.emplace(n);
  out.lines.push_back(" r  sym  prim   rank" + std::string(constructed ? "  built" : ""));
  out.csv.push_back({"r", "sym_dim", "prim_dim", "rank"});
  if (constructed) out.csv[0].push_back("constructed");
  for (int r = 0; r <= n; ++r) {
    long rk = rank_S(n, r);
    Scalar prim = primitive_dim_formula(n, n - r);
    total += rk;
    json row = {{"r", r}, {"sym_dim", r + 1}, {"prim_dim", entry_text(prim)}, {"rank", rk}};
    std::string line = pad(std::to_string(r), 2) + pad(std::to_string(r + 1), 5) + pad(entry_text(prim), 6) +
                       pad(std::to_string(rk), 7);
    std::vector<std::string> csv{std::to_string(r), std::to_string(r + 1), entry_text(prim), std::to_string(rk)};
    if (constructed) {
      int built = S->rank(r);
      row["constructed"] = built;
      line += pad(std::to_string(built), 7);
      csv.push_back(std::to_string(built));
      out.report.add("rank_S(" + std::to_string(n) + "," + std::to_string(r) + ") = constructed", built == rk,
                     std::to_string(built) + " vs " + std::to_string(rk));
    }
    rows.push_back(row);
    out.lines.push_back(line);
    out.csv.push_back(csv);
  }
  long expect = 1L << (2 * n);
  out.doc["values"] = {{"rows", rows}, {"total", total}, {"expected_total", expect}};
  out.lines.push_back("total " + std::to_string(total) + " (2^" + std::to_string(2 * n) + " = " + std::to_string(expect) +
                      ")");
  out.csv.push_back({"total", "", "", std::to_string(total)});
  out.report.add("sum of ranks = 2^(2n)", total == expect, std::to_string(total) + " vs " + std::to_string(expect));
}

// --------------------------------------------------------------- verify

void suite_clifford(int n, Output& out) {
  out.report.merge(clifford_relation_check(n), "clifford: ");
  out.report.merge(adjointness_check(n), "clifford: ");
  std::vector<std::string> notes;
  out.report.merge(two_form_check(n, &notes), "clifford: ");
  out.report.merge(kraines_check(n), "clifford: ");
  out.doc["values"]["clifford"] = {{"spinor_dim", SpinorSpace(n).dim()}, {"r0_notes", notes}};
}

void suite_lemmas(int n, Output& out) {
  out.report.merge(sl2_check(n), "lemmas: ");
  for (int s = 0; s <= n; ++s) out.report.merge(number_operators_check(n, s), "lemmas: ");
  for (int r = 0; r <= n + 1; ++r) out.report.merge(sym_operators_check(r), "lemmas: ");
}

void suite_curvature(int n, const Config& cfg, Output& out) {
  json dims = json::array();
  for (int N = 2; N <= 4; ++N) {
    out.report.merge(curv_space_check(N), "curvature: ");
    dims.push_back({{"N", N}, {"dim", curv_dim_formula(N)}});
  }
  json inj = json::array();
  for (int m = 1; m <= 2; ++m) {
    auto ir = injectivity_report(m);
    inj.push_back({{"N", ir.N}, {"sym2_dim", ir.sym2_dim}, {"rank_i_sym", ir.rank_i_sym}, {"rank_i_lambda", ir.rank_i_lambda}});
    out.report.add("curvature: i_sym injective at dim V = " + std::to_string(ir.N), ir.rank_i_sym == ir.sym2_dim);
    bool lam = ir.rank_i_lambda == ir.sym2_dim;
    out.report.add("curvature: i_Lambda " + std::string(ir.N == 2 ? "not injective" : "injective") +
                       " at dim V = " + std::to_string(ir.N),
                   ir.N == 2 ? !lam : lam, "rank " + std::to_string(ir.rank_i_lambda));
  }
  Rng rng(cfg.seed);
  out.report.merge(ricci_check(n, rng, cfg.samples), "curvature: ");
  out.report.merge(sym4_check(n, rng, cfg.samples), "curvature: ");
  out.doc["values"]["curvature"] = {{"curv_dims", dims}, {"injectivity", inj}, {"seed", cfg.seed}};
}

void suite_bianchi(int n, Output& out) {
  if (n > 2) throw UsageError("bianchi suite: n must be 1 or 2");
  auto b = bianchi_solution(n);
  out.report.add("bianchi: ker m annihilated by equations I-III'", b.kernel_annihilated, b.witness);
  out.report.add("bianchi: solution space = ker m", b.equal, b.witness);
  long N = 4L * n;
  out.report.add("bianchi: dim = N^2(N^2-1)/12", b.solution_dim == curv_dim_formula(N),
                 std::to_string(b.solution_dim) + " vs " + std::to_string(curv_dim_formula(N)));
  out.doc["values"]["bianchi"] = {{"ambient_dim", b.ambient_dim}, {"kernel_m_dim", b.kernel_m_dim},
                                  {"solution_dim", b.solution_dim}};
  out.lines.push_back("bianchi: solution dim " + std::to_string(b.solution_dim));
}

void suite_weitzenboeck(int n, Output& out) {
  if (n > 3) throw UsageError("weitzenboeck suite: n must lie in [1, 3]");
  out.report.merge(weitzenboeck_check(n), "weitzenboeck: ");
}

void cmd_verify(const Config& cfg, Output& out) {
  int n = cfg.n;
  static const std::vector<std::string> suites{"clifford", "lemmas", "curvature", "bianchi", "weitzenboeck", "all"};
  if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end())
    throw UsageError("unknown suite " + cfg.suite);
  if (n < 1 || n > 4) throw UsageError("verify: n must lie in [1, 4]");
  out.doc["params"] = {{"n", n}, {"suite", cfg.suite}, {"seed", cfg.seed}, {"samples", cfg.samples}};
  bool all = cfg.suite == "all";
  if (all || cfg.suite == "clifford") suite_clifford(n, out);
  if (all || cfg.suite == "lemmas") suite_lemmas(n, out);
  if (all || cfg.suite == "curvature") suite_curvature(n, cfg, out);
  if (cfg.suite == "bianchi" || (all && n <= 2)) suite_bianchi(n, out);
  if (cfg.suite == "weitzenboeck" || (all && n <= 3)) suite_weitzenboeck(n, out);
}

// --------------------------------------------------------- weitzenboeck

void table_matrix(Output& out, const std::string& title, const Matrix& m) {
  out.lines.push_back(title);
  for (int i = 0; i < m.rows(); ++i) {
    std::string line;
    for (int j = 0; j < m.cols(); ++j) line += pad(entry_text(m(i, j)), 14);
    out.lines.push_back(line);
  }
}

void csv_matrix(Output& out, const std::string& name, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.csv.push_back({name, std::to_string(i + 1), std::to_string(j + 1), entry_text(m(i, j))});
}

void cmd_weitzenboeck(const Config& cfg, Output& out) {
  int n = cfg.n;
  int r = cfg.r.value_or(1);
  if (n < 1 || r < 0 || r > n) throw UsageError("weitzenboeck: need n >= 1 and 0 <= r <= n");
  if (cfg.oracle && n > 3) throw UsageError("weitzenboeck --oracle: n must lie in [1, 3]");
  out.doc["params"] = {{"n", n}, {"r", r}, {"oracle", cfg.oracle}};
  Matrix wh = wh_closed(r), we = we_closed(n, r), w = w_full(n, r);
  std::vector<std::string> rows(left_labels().begin(), left_labels().end());
  std::vector<std::string> cols(right_labels().begin(), right_labels().end());
  json vals;
  vals["W_H"] = matrix_json(wh, {"C", "Sym2H"}, {"-+", "+-"});
  vals["W_E"] = matrix_json(we, {"C", "Sym2E", "Lambda2_0E"}, {"-+", "+-", "K"});
  vals["W"] = matrix_json(w, rows, cols);
  json slots = json::array();
  for (const auto& s : operator_slots())
    slots.push_back({{"composition", s.composition}, {"composition_factor", rational_text(s.composition_factor)},
                     {"norm", s.norm}, {"norm_factor", rational_text(s.norm_factor)}});
  vals["operator_slots"] = slots;
  bool degenerate = r == 0 || r == n;
  if (degenerate) {
    std::string notice = "degenerate grade r=" + std::to_string(r) +
                         ": some projectors vanish; the oracle compares surviving columns only";
    vals["notice"] = notice;
    out.lines.push_back(notice);
  }
  table_matrix(out, "W_H", wh);
  table_matrix(out, "W_E", we);
  table_matrix(out, "W", w);
  csv_matrix(out, "W_H", wh);
  csv_matrix(out, "W_E", we);
  csv_matrix(out, "W", w);
  if (cfg.oracle) {
    Recovery rec = recover_w(n, r);
    std::string why;
    bool ok = agrees_with(rec, w, &why);
    out.report.add("closed form = oracle", ok, why);
    json surv = json::array();
    for (int j : rec.columns) surv.push_back(cols[j]);
    vals["oracle"] = {{"equal", ok}, {"surviving_columns", surv}, {"right_rank", rec.right_rank}};
    out.lines.push_back(std::string("closed form = oracle: ") + (ok ? "true" : "false"));
  }
  out.doc["values"] = vals;
}

// ---------------------------------------------------------------- bound

void cmd_bound(const Config& cfg, Output& out) {
  int n = cfg.n;
  int r = cfg.r.value_or(0);
  if (n < 2) throw UsageError("bound: needs n >= 2");
  if (r < 0 || r > n) throw UsageError("bound: r outside [0, n]");
  auto kappa = parse_rational(cfg.kappa);
  if (!kappa) throw UsageError("bound: kappa must be an integer or p/q");
  if (sgn(*kappa) <= 0) throw UsageError("bound: kappa must be positive");
  Rational b = estimate_bound(n, r, *kappa);
  Rational coef(n + r + 3, n + 2);
  coef.canonicalize();
  auto d = derive_bound(n, r);
  out.report.add("coefficient re-derived from the estimate row", d.ratio == coef,
                 rational_text(d.ratio) + " vs " + rational_text(coef));
  out.report.add("eliminated columns vanish", d.eliminated);
  out.report.add("dropped norms have non-positive coefficients", d.dropped_nonpositive);
  out.doc["params"] = {{"n", n}, {"r", r}, {"kappa", rational_text(*kappa)}};
  std::string dec = Scalar(b).to_decimal(12);
  out.doc["values"] = {{"coefficient", rational_text(coef)}, {"bound", short_text(b)}, {"decimal", dec}};
  out.lines.push_back("lambda^2 >= " + short_text(coef) + " * kappa/4 = " + short_text(b) + " (" + dec + ")");
  out.csv.push_back({"n", "r", "kappa", "coefficient", "bound", "decimal"});
  out.csv.push_back({std::to_string(n), std::to_string(r), rational_text(*kappa), rational_text(coef), rational_text(b), dec});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for spinors on quaternionic Kaehler model spaces"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_flag("--timing", cfg.timing, "report wall-clock time");
    sub->add_flag("-v,--verbose", cfg.verbosity, "list passing checks");
  };

  auto* dims = app.add_subcommand("dims", "spinor grade ranks");
  dims->add_option("--n", cfg.n)->required();
  dims->add_option("--mode", cfg.mode)->check(CLI::IsMember({"formula", "constructed"}));
  common(dims);

  auto* verify = app.add_subcommand("verify", "run exact verification suites");
  verify->add_option("--n", cfg.n)->required();
  verify->add_option("--suite", cfg.suite, "clifford, lemmas, curvature, bianchi, weitzenboeck or all");
  verify->add_option("--seed", cfg.seed, "seed for random 4-forms");
  verify->add_option("--samples", cfg.samples, "random 4-forms per check")->check(CLI::PositiveNumber);
  common(verify);

  auto* weitz = app.add_subcommand("weitzenboeck", "print the Weitzenboeck matrices");
  weitz->add_option("--n", cfg.n)->required();
  weitz->add_option("--r", cfg.r);
  weitz->add_flag("--oracle", cfg.oracle, "re-derive the matrix from the projectors");
  common(weitz);

  auto* bound = app.add_subcommand("bound", "Dirac eigenvalue bound");
  bound->add_option("--n", cfg.n)->required();
  bound->add_option("--r", cfg.r);
  bound->add_option("--kappa", cfg.kappa, "scalar curvature, integer or p/q")->required();
  common(bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  Output out(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (name == "dims") cmd_dims(cfg, out);
    else if (name == "verify") cmd_verify(cfg, out);
    else if (name == "weitzenboeck") cmd_weitzenboeck(cfg, out);
    else cmd_bound(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(out, cfg, ms);
  return out.report.all_pass() ? 0 : 1;
}
