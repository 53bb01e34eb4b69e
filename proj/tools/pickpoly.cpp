// pickpoly: three-point Pick interpolation on the polydisc from the command line.
#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

#include "pickpoly/json_io.hpp"
#include "pickpoly/moebius.hpp"
#include "pickpoly/poly_algebra.hpp"

using namespace pickpoly;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNo = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<double> parse_turns(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  return out;
}

int run_decide(const std::string& data_path, const std::string& cand_path, int gen_count, int gen_degree,
               std::uint64_t seed, double tol, bool expand, bool timing) {
  const auto data = io::problem_from_json(io::read_json_file(data_path));
  engine::DecideConfig cfg;
  cfg.tol = tol;
  cfg.expand = expand;
  cfg.stream.gen_count = gen_count;
  cfg.stream.gen_degree = gen_degree;
  cfg.stream.seed = seed;
  if (!cand_path.empty()) cfg.stream.user_polys = engine::read_candidate_file(cand_path);
  const auto rep = engine::decide(data, cfg);
  emit(io::to_json(rep, timing));
  return rep.status == engine::DecideStatus::Feasible ? kOk : kNo;
}

int run_verify(const std::string& data_path, const std::string& interp_path, double tol) {
  const auto data = io::problem_from_json(io::read_json_file(data_path));
  const json j = io::read_json_file(interp_path);
  // accept either a bare interpolant or a decide report
  const auto f = io::interpolant_from_json(j.contains("interpolant") ? j.at("interpolant") : j);
  if (f.x3.size() != data.n) throw Error("interpolant dimension differs from the data");
  const auto r = engine::verify(f, data, 200, tol);
  json out = io::to_json(r);
  if (f.expanded) {
    double gap = 0;
    for (const auto& x : data.X) gap = std::max(gap, std::abs(f(x) - f.evaluate_expanded(x)));
    out["expanded_gap"] = gap;
  }
  emit(out);
  return r.pass ? kOk : kNo;
}

int run_twopoint(const std::string& data_path) {
  const auto data = io::problem_from_json(io::read_json_file(data_path));
  static constexpr std::size_t kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  json pairs = json::array();
  bool all = true;
  for (const auto& p : kPairs) {
    const auto d = moebius::caratheodory_polydisc(data.X[p[0]], data.X[p[1]]);
    const double rw = moebius::rho(data.w[p[0]], data.w[p[1]]);
    const bool ok = pick::two_point_feasible(data.X[p[0]], data.X[p[1]], data.w[p[0]], data.w[p[1]]);
    all = all && ok;
    json argmax = json::array();
    for (auto k : d.argmax) argmax.push_back(k + 1);
    pairs.push_back({{"pair", {p[0] + 1, p[1] + 1}},
                     {"rho_X", d.rho},
                     {"rho_w", rw},
                     {"argmax", argmax},
                     {"feasible", ok}});
  }
  emit({{"pairs", pairs}, {"necessary_condition", all}});
  return all ? kOk : kNo;
}

int run_poly(const std::string& op, const std::string& text, std::size_t n, int trials, std::uint64_t seed) {
  const auto q = mpoly::parse_poly(text, n);
  if (op == "reflect") {
    std::cout << mpoly::format_poly(mpoly::reflect(q)) << "\n";
    return kOk;
  }
  if (op == "nu") {
    std::cout << mpoly::nu(q).to_string() << "\n";
    return kOk;
  }
  if (op == "deficient") {
    const bool d = mpoly::is_deficient(q);
    std::cout << (d ? "true" : "false") << "\n";
    return d ? kOk : kNo;
  }
  if (op == "irreducible") {
    const auto v = mpoly::is_irreducible(q, trials, seed);
    json out{{"status", io::to_string(v.status)},
             {"confidence", v.confidence == mpoly::Confidence::Exact ? "exact" : "probabilistic"}};
    if (v.confidence == mpoly::Confidence::Probabilistic) out["trials"] = v.trials;
    if (v.witness) out["witness"] = {mpoly::format_poly(v.witness->first), mpoly::format_poly(v.witness->second)};
    emit(out);
    return v.status == mpoly::Irreducibility::Irreducible ? kOk : kNo;
  }
  if (op == "zerofree") {
    const auto v = mpoly::zero_free_on_polydisc(q);
    json out{{"status", io::to_string(v.status)}, {"cells_examined", v.cells_examined}};
    if (v.point) {
      json p = json::array();
      for (Complex c : *v.point) p.push_back(io::to_json(c));
      out["point"] = p;
      out["residual"] = v.residual;
    }
    emit(out);
    return v.status == mpoly::ZeroFreeStatus::Verified ? kOk : kNo;
  }
  if (op == "factor") {
    mpoly::FactorOptions opt;
    opt.seed = seed;
    opt.slice_trials = trials;
    const auto f = mpoly::factor(q, opt);
    json fs = json::array();
    for (const auto& t : f.factors)
      fs.push_back({{"factor", mpoly::format_poly(t.poly)}, {"multiplicity", t.multiplicity}, {"irreducible", t.irreducible}});
    emit({{"constant", f.constant.to_string()},
          {"factors", fs},
          {"status", f.status == mpoly::FactorStatus::Complete ? "complete" : "unknown"},
          {"confidence", f.confidence == mpoly::Confidence::Exact ? "exact" : "probabilistic"}});
    return f.status == mpoly::FactorStatus::Complete ? kOk : kNo;
  }
  throw CLI::ValidationError("poly", "unknown operation " + op);
}

int run_inner(const std::string& op, const std::string& input, const std::string& turns, std::uint64_t seed,
              int max_directions) {
  const auto f = io::inner_from_json(io::read_json_file(input));
  if (op == "canon") {
    const auto c = rif::canonicalize(f);
    emit({{"C", io::to_json(c.C)},
          {"Qhat", mpoly::format_poly(c.Qhat)},
          {"monomial", c.monomial.exponents()},
          {"canonical", io::to_json(c.as_inner(f.provenance()))}});
    return kOk;
  }
  if (op == "factor") {
    const auto fi = rif::factor_inner(f);
    json fs = json::array();
    for (const auto& g : fi.factors) fs.push_back(io::to_json(g));
    emit({{"constant", io::to_json(fi.constant)}, {"factors", fs}, {"max_deviation", fi.max_deviation}});
    return kOk;
  }
  if (op == "findzero") {
    const auto z = rif::find_zero(f, seed, max_directions);
    json p = json::array();
    for (Complex c : z) p.push_back(io::to_json(c));
    emit({{"point", p}, {"value", std::abs(f(z))}});
    return kOk;
  }
  if (op == "slice") {
    std::vector<double> t = turns.empty() ? std::vector<double>(f.nvars(), 0.0) : parse_turns(turns);
    if (t.size() != f.nvars()) throw CLI::ValidationError("--turns", "need one angle per variable");
    std::vector<Complex> w;
    for (double x : t) w.push_back(std::polar(1.0, 2 * M_PI * x));
    const auto b = rif::slice(f, w);
    json out = io::to_json(b);
    out["degree"] = b.degree();
    emit(out);
    return kOk;
  }
  throw CLI::ValidationError("inner", "unknown operation " + op);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-point Pick interpolation on the polydisc"};
  app.require_subcommand(1);

  std::string data_path, cand_path, interp_path, input_path, op, text, turns;
  int gen_count = 20, gen_degree = 2, trials = 8, max_dirs = 64;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  double tol = 1e-9;
  bool expand = false, timing = false;

  auto* dec = app.add_subcommand("decide", "search for a witness and build the interpolant");
  dec->add_option("--data", data_path, "problem JSON")->required()->check(CLI::ExistingFile);
  dec->add_option("--candidates", cand_path, "file of candidate polynomials, one per line")->check(CLI::ExistingFile);
  dec->add_option("--gen-count", gen_count, "generated candidates")->check(CLI::NonNegativeNumber);
  dec->add_option("--gen-degree", gen_degree, "max total degree of generated candidates")->check(CLI::PositiveNumber);
  dec->add_option("--seed", seed);
  dec->add_option("--tol", tol, "interpolation tolerance");
  dec->add_flag("--expand", expand, "also expand F into a single rational function");
  dec->add_flag("--timing", timing, "include wall_time in the report");

  auto* ver = app.add_subcommand("verify", "check an interpolant against data");
  ver->add_option("--data", data_path)->required()->check(CLI::ExistingFile);
  ver->add_option("--interpolant", interp_path)->required()->check(CLI::ExistingFile);
  ver->add_option("--tol", tol);

  auto* two = app.add_subcommand("twopoint", "pairwise Schwarz-Pick necessary condition");
  two->add_option("--data", data_path)->required()->check(CLI::ExistingFile);

  auto* pol = app.add_subcommand("poly", "polynomial operations");
  pol->add_option("op", op)->required()->check(CLI::IsMember({"reflect", "nu", "deficient", "irreducible", "zerofree", "factor"}));
  pol->add_option("text", text, "polynomial, e.g. \"2 - z1 - z2\"")->required();
  pol->add_option("--n", n, "variable count (default: largest index used)");
  pol->add_option("--trials", trials);
  pol->add_option("--seed", seed);

  auto* inn = app.add_subcommand("inner", "rational inner function operations");
  inn->add_option("op", op)->required()->check(CLI::IsMember({"canon", "factor", "findzero", "slice"}));
  inn->add_option("--input", input_path)->required()->check(CLI::ExistingFile);
  inn->add_option("--turns", turns, "slice direction as angles in turns, comma separated");
  inn->add_option("--seed", seed);
  inn->add_option("--max-directions", max_dirs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*dec) return run_decide(data_path, cand_path, gen_count, gen_degree, seed, tol, expand, timing);
    if (*ver) return run_verify(data_path, interp_path, tol);
    if (*two) return run_twopoint(data_path);
    if (*pol) return run_poly(op, text, n, trials, seed);
    if (*inn) return run_inner(op, input_path, turns, seed, max_dirs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
