#include "pickpoly/json_io.hpp"

#include <fstream>

namespace pickpoly::io {

using mpoly::CPoly;
using mpoly::GaussRational;
using mpoly::MultiIndex;

namespace {

double tidy(double x) { return x + 0.0; }

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return GaussRational::parse_rational(j.get<std::string>()).get_d();
  throw Error("expected a number or a rational string");
}

mpq_class rational_from_json(const json& j) {
  if (j.is_string()) return GaussRational::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_number()) return GaussRational::from_complex(j.get<double>()).re();
  throw Error("expected a rational string");
}

std::vector<Complex> point_from_json(const json& j) {
  std::vector<Complex> out;
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

json point_to_json(std::span<const Complex> z) {
  json a = json::array();
  for (Complex c : z) a.push_back(to_json(c));
  return a;
}

}  // namespace

json to_json(Complex z) { return {{"re", tidy(z.real())}, {"im", tidy(z.imag())}}; }

Complex complex_from_json(const json& j) {
  if (j.is_object()) return {number_from_json(j.at("re")), j.contains("im") ? number_from_json(j.at("im")) : 0.0};
  return number_from_json(j);
}

json to_json(const CPoly& q) {
  json terms = json::array();
  for (const auto& [alpha, a] : q.terms())
    terms.push_back({{"alpha", alpha.exponents()}, {"re", a.re().get_str()}, {"im", a.im().get_str()}});
  return {{"n", q.nvars()}, {"terms", terms}};
}

CPoly poly_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  CPoly q(n);
  for (const auto& t : j.at("terms")) {
    MultiIndex alpha(t.at("alpha").get<std::vector<int>>());
    if (alpha.size() != n) throw Error("exponent length differs from n");
    q.add_term(alpha, GaussRational(rational_from_json(t.at("re")),
                                    t.contains("im") ? rational_from_json(t.at("im")) : mpq_class(0)));
  }
  return q;
}

json to_json(const rif::Unimodular& u) {
  if (u.is_exact()) return {{"re", u.exact_value().re().get_str()}, {"im", u.exact_value().im().get_str()}};
  return {{"turns", u.angle_turns()}};
}

rif::Unimodular unimodular_from_json(const json& j) {
  if (j.contains("turns")) return rif::Unimodular::turns(j.at("turns").get<double>());
  if (j.at("re").is_string() || j.at("re").is_number_integer())
    return rif::Unimodular::exact(GaussRational(rational_from_json(j.at("re")), rational_from_json(j.at("im"))));
  return rif::Unimodular::from_complex(complex_from_json(j));
}

json to_json(const rif::RationalInner& f) {
  return {{"A", to_json(f.A())},
          {"beta", f.beta().exponents()},
          {"Q", to_json(f.Q())},
          {"zero_free", f.provenance() == rif::Provenance::Verified ? "verified" : "asserted"}};
}

rif::RationalInner inner_from_json(const json& j) {
  const auto a = j.contains("A") ? unimodular_from_json(j.at("A")) : rif::Unimodular();
  CPoly q = poly_from_json(j.at("Q"));
  MultiIndex beta = j.contains("beta") ? MultiIndex(j.at("beta").get<std::vector<int>>()) : mpoly::nu(q);
  const std::string claim = j.value("zero_free", "asserted");
  if (claim == "verified") {
    const auto v = mpoly::zero_free_on_polydisc(q);
    if (v.status == mpoly::ZeroFreeStatus::ZeroFound) throw DomainError("denominator has a zero in the polydisc");
    const auto p = v.status == mpoly::ZeroFreeStatus::Verified ? rif::Provenance::Verified : rif::Provenance::Asserted;
    return {a, beta, q, p};
  }
  if (claim != "asserted") throw Error("zero_free must be \"verified\" or \"asserted\"");
  return {a, beta, q, rif::Provenance::Asserted};
}

json to_json(const pick::BlaschkeProduct& b) {
  return {{"constant", to_json(b.constant)}, {"zeros", point_to_json(b.zeros)}};
}

pick::BlaschkeProduct blaschke_from_json(const json& j) {
  return {complex_from_json(j.at("constant")), point_from_json(j.at("zeros"))};
}

json to_json(const pick::PsdVerdict& v) {
  return {{"is_psd", v.is_psd}, {"rank", v.rank}, {"min_eigenvalue", tidy(v.min_eigenvalue)}, {"tolerance", v.tolerance}};
}

json to_json(const engine::ProblemData& d) {
  json x = json::array();
  for (const auto& p : d.X) x.push_back(point_to_json(p));
  return {{"n", d.n}, {"X", x}, {"w", point_to_json(d.w)}};
}

engine::ProblemData problem_from_json(const json& j) {
  engine::ProblemData d;
  d.n = j.at("n").get<std::size_t>();
  const auto& x = j.at("X");
  const auto& w = j.at("w");
  if (x.size() != 3 || w.size() != 3) throw Error("data needs exactly three nodes and three targets");
  for (std::size_t k = 0; k < 3; ++k) {
    d.X[k] = point_from_json(x[k]);
    d.w[k] = complex_from_json(w[k]);
  }
  d.validate();
  return d;
}

const char* to_string(engine::CandidateSource s) {
  switch (s) {
    case engine::CandidateSource::Builtin: return "builtin";
    case engine::CandidateSource::UserFile: return "user-file";
    case engine::CandidateSource::Generated: return "generated";
  }
  return "?";
}

const char* to_string(mpoly::Irreducibility s) {
  switch (s) {
    case mpoly::Irreducibility::Irreducible: return "irreducible";
    case mpoly::Irreducibility::Reducible: return "reducible";
    case mpoly::Irreducibility::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(mpoly::ZeroFreeStatus s) {
  switch (s) {
    case mpoly::ZeroFreeStatus::Verified: return "verified";
    case mpoly::ZeroFreeStatus::ZeroFound: return "zero-found";
    case mpoly::ZeroFreeStatus::Unknown: return "unknown";
  }
  return "?";
}

json to_json(const engine::CandidateH& h) {
  if (h.kind == engine::CandidateKind::Coordinate)
    return {{"kind", "coordinate"}, {"j", h.coordinate + 1}, {"source", to_string(h.source)}};
  json out{{"kind", "reflected"},
           {"Q", mpoly::format_poly(*h.Q)},
           {"source", to_string(h.source)},
           {"deficient", h.deficient},
           {"irreducibility", to_string(h.irreducibility)},
           {"zero_free", to_string(h.zero_free)}};
  if (h.source == engine::CandidateSource::Generated) out["seed"] = h.seed;
  return out;
}

engine::CandidateH candidate_from_json(const json& j, std::size_t n) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "coordinate") {
    const auto jj = j.at("j").get<std::size_t>();
    if (jj < 1 || jj > n) throw Error("coordinate index out of range");
    return engine::coordinate_candidate(n, jj - 1);
  }
  if (kind != "reflected") throw Error("unknown candidate kind " + kind);
  CPoly q = j.at("Q").is_string() ? mpoly::parse_poly(j.at("Q").get<std::string>(), n) : poly_from_json(j.at("Q"));
  const bool deficient = mpoly::is_deficient(q);
  return engine::CandidateH{engine::CandidateKind::Reflected,
                            engine::CandidateSource::UserFile,
                            0,
                            q,
                            0,
                            rif::RationalInner::from_denominator(q, rif::Provenance::Asserted),
                            deficient,
                            mpoly::Irreducibility::Unknown,
                            mpoly::ZeroFreeStatus::Unknown};
}

json to_json(const engine::Interpolant& f) {
  json out{{"form", f.rank == 0 ? "psi_inv(w3) o (c H) o Psi(X3)" : "psi_inv(w3) o ((B o pi_l) H) o Psi(X3)"},
           {"x3", point_to_json(f.x3)},
           {"w3", to_json(f.w3)},
           {"H", to_json(f.h)},
           {"l", f.l + 1},
           {"rank", f.rank}};
  if (f.c) out["c"] = to_json(*f.c);
  if (f.B) out["B"] = to_json(*f.B);
  if (f.expanded) out["expanded"] = {{"numerator", to_json(f.expanded->first)}, {"denominator", to_json(f.expanded->second)}};
  return out;
}

engine::Interpolant interpolant_from_json(const json& j) {
  auto x3 = point_from_json(j.at("x3"));
  const std::size_t n = x3.size();
  engine::Interpolant f{x3,
                        complex_from_json(j.at("w3")),
                        candidate_from_json(j.at("H"), n),
                        j.at("l").get<std::size_t>() - 1,
                        j.at("rank").get<int>(),
                        std::nullopt,
                        std::nullopt,
                        std::nullopt};
  if (f.l >= n) throw Error("coordinate l out of range");
  if (f.rank == 0) {
    f.c = complex_from_json(j.at("c"));
  } else {
    f.B = blaschke_from_json(j.at("B"));
  }
  if (j.contains("expanded"))
    f.expanded = {poly_from_json(j.at("expanded").at("numerator")), poly_from_json(j.at("expanded").at("denominator"))};
  return f;
}

json to_json(const rif::InnerReport& r) {
  json dev = json::array();
  for (std::size_t i = 0; i < r.radii.size(); ++i) dev.push_back({{"r", r.radii[i]}, {"deviation", r.deviations[i]}});
  return {{"samples", r.samples}, {"skipped", r.skipped}, {"sweep", dev}, {"decreasing", r.decreasing}, {"pass", r.pass}};
}

json to_json(const engine::VerifyReport& r) {
  return {{"residuals", r.residuals}, {"pass", r.pass}, {"inner", to_json(r.inner)}};
}

json to_json(const engine::FeasibilityReport& r, bool timing) {
  json out{{"status", r.status == engine::DecideStatus::Feasible ? "feasible" : "unknown"}};
  if (r.interpolant) {
    const auto& f = *r.interpolant;
    json w{{"H", to_json(f.h)}, {"l", f.l + 1}, {"rank", f.rank}};
    if (f.c) w["c"] = to_json(*f.c);
    if (f.B) w["B"] = to_json(*f.B);
    out["witness"] = w;
    out["interpolant"] = to_json(f);
  }
  if (r.verification) {
    out["residuals"] = r.verification->residuals;
    out["inner_sweep"] = to_json(r.verification->inner);
  }
  out["necessary_conditions"] = {{"pair_1_2", r.necessary[0]}, {"pair_1_3", r.necessary[1]}, {"pair_2_3", r.necessary[2]}};
  out["candidates_tried"] = r.candidates_tried;
  json cands = json::array();
  for (const auto& c : r.candidates) {
    const char* st = c.outcome.status == engine::CheckStatus::Passed   ? "psd"
                     : c.outcome.status == engine::CheckStatus::Skipped ? "skipped"
                                                                         : "failed";
    json e{{"H", c.label}, {"source", to_string(c.source)}, {"outcome", st}};
    if (!c.outcome.reason.empty()) e["reason"] = c.outcome.reason;
    if (c.outcome.c) e["c"] = {to_json(c.outcome.c->first), to_json(c.outcome.c->second)};
    json ls = json::array();
    for (const auto& o : c.outcome.per_l) ls.push_back({{"l", o.l + 1}, {"psd", to_json(o.verdict)}});
    if (!ls.empty()) e["per_l"] = ls;
    if (!c.note.empty()) e["note"] = c.note;
    cands.push_back(e);
  }
  out["candidates"] = cands;
  json rej = json::array();
  for (const auto& x : r.rejections) rej.push_back({{"Q", x.text}, {"source", to_string(x.source)}, {"reason", x.reason}});
  out["rejected"] = rej;
  if (timing) out["wall_time"] = r.wall_time;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace pickpoly::io
