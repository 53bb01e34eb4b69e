#include <cmath>
#include <random>

#include "doctest.h"
#include "pickpoly/engine.hpp"
#include "pickpoly/json_io.hpp"
#include "pickpoly/moebius.hpp"

using namespace pickpoly;
using namespace pickpoly::engine;

namespace {

ProblemData make(std::vector<Complex> x1, std::vector<Complex> x2, std::vector<Complex> x3, Complex w1, Complex w2,
                 Complex w3) {
  ProblemData d;
  d.n = x1.size();
  d.X = {x1, x2, x3};
  d.w = {w1, w2, w3};
  return d;
}

// F = z1^2 data
ProblemData square_instance() { return make({0.5, 0.0}, {1.0 / 3, 0.0}, {0.0, 0.0}, 0.25, 1.0 / 9, 0.0); }
// f0 data
ProblemData f0_instance() { return make({0.5, 0.5}, {1.0 / 3, 0.0}, {0.0, 0.0}, -0.5, -0.2, 0.0); }

DecideConfig no_generated() {
  DecideConfig c;
  c.stream.gen_count = 0;
  return c;
}

}  // namespace

TEST_CASE("normalize") {
  auto nd = normalize(square_instance());
  CHECK(nd.X1p == std::vector<Complex>{0.5, 0.0});
  CHECK(nd.w2p == Complex(1.0 / 9));
  auto d = make({0.5, 1.0 / 3}, {0.0, 0.2}, {0.5, 0.0}, 0.1, 0.2, 0.3);
  auto n2 = normalize(d);
  CHECK(std::abs(n2.X1p[0]) < 1e-16);
  CHECK(std::abs(n2.X1p[1] - 1.0 / 3) < 1e-16);
  CHECK(std::abs(moebius::psi(d.w[2], d.w[2])) < 1e-14);
  CHECK_THROWS_WITH(normalize(make({0.5, 0.0}, {0.5, 0.0}, {0.0, 0.0}, 0.1, 0.2, 0.0)), doctest::Contains("coincident"));
  CHECK_THROWS(normalize(make({1.0, 0.0}, {0.5, 0.0}, {0.0, 0.0}, 0.1, 0.2, 0.0)));
}

TEST_CASE("candidate stream") {
  StreamConfig cfg;
  cfg.n = 2;
  cfg.user_polys = {"2 - z1 - z2", "1 - z1*z2", "1 - 2*z1 - z2", "z1 +", "4 - z1 - z2 - z1^2"};
  cfg.gen_count = 5;
  CandidateStream s(cfg);
  auto a = s.next();
  REQUIRE(a);
  CHECK(a->label() == "z1");
  CHECK(s.next()->label() == "z2");
  auto u = s.next();
  REQUIRE(u);
  CHECK(u->kind == CandidateKind::Reflected);
  CHECK(u->source == CandidateSource::UserFile);
  CHECK(u->label() == "2 - z1 - z2");
  CHECK(u->zero_free == mpoly::ZeroFreeStatus::Verified);
  auto u2 = s.next();
  REQUIRE(u2);
  CHECK(u2->label() == "4 - z1 - z2 - z1^2");
  int generated = 0;
  while (auto g = s.next()) {
    CHECK(g->source == CandidateSource::Generated);
    CHECK(mpoly::is_deficient(*g->Q));
    CHECK(g->irreducibility != mpoly::Irreducibility::Reducible);
    // triangle-inequality family: constant term beats the rest
    mpq_class rest = 0;
    for (const auto& [alpha, c] : g->Q->terms())
      if (!alpha.is_zero()) rest += c.l1_norm();
    CHECK(g->Q->constant_term().re() > rest);
    ++generated;
  }
  CHECK(generated == 5);
  REQUIRE(s.rejections().size() == 3);
  CHECK(s.rejections()[0].reason == "not deficient");
  CHECK(s.rejections()[1].reason == "zero in the polydisc");
  CHECK(s.rejections()[2].reason.find("parse error") == 0);
}

TEST_CASE("check candidate examples") {
  auto nd = normalize(square_instance());
  auto o = check_candidate(coordinate_candidate(2, 0), nd);
  CHECK(o.status == CheckStatus::Passed);
  CHECK(std::abs(o.c->first - 0.5) < 1e-15);
  CHECK(std::abs(o.c->second - 1.0 / 3) < 1e-15);
  REQUIRE(o.per_l.size() == 1);
  CHECK(o.per_l[0].l == 0);
  CHECK(o.per_l[0].verdict.rank == 1);

  auto z2 = check_candidate(coordinate_candidate(2, 1), nd);
  CHECK(z2.status == CheckStatus::Failed);
  CHECK(z2.reason == "division by vanishing H");

  StreamConfig cfg;
  cfg.user_polys = {"2 - z1 - z2"};
  cfg.gen_count = 0;
  CandidateStream s(cfg);
  s.next();
  s.next();
  auto f0 = *s.next();
  auto of = check_candidate(f0, normalize(f0_instance()));
  CHECK(of.status == CheckStatus::Passed);
  CHECK(std::abs(of.c->first - 1.0) < 1e-14);
  CHECK(std::abs(of.c->second - 1.0) < 1e-14);
  CHECK(of.per_l[0].verdict.rank == 0);

  // H(X'_j) = 0 and w'_j = 0
  auto ind = make({0.5, 0.0}, {0.0, 0.4}, {0.0, 0.0}, 0.3, 0.0, 0.0);
  auto oi = check_candidate(coordinate_candidate(2, 0), normalize(ind));
  CHECK(oi.status == CheckStatus::Skipped);
  CHECK(oi.reason == "indeterminate ratio");
}

TEST_CASE("assemble and verify") {
  auto data = square_instance();
  auto nd = normalize(data);
  auto h = coordinate_candidate(2, 0);
  auto o = check_candidate(h, nd);
  auto F = assemble(h, o.per_l[0], *o.c, nd, data);
  CHECK(F.rank == 1);
  CHECK(F.B->degree() == 1);
  std::vector<Complex> z{Complex(0.3, -0.2), Complex(0.1, 0.5)};
  CHECK(std::abs(F(z) - z[0] * z[0]) < 1e-14);
  auto vr = verify(F, data);
  CHECK(vr.pass);
  for (double r : vr.residuals) CHECK(r < 1e-12);
  CHECK(vr.inner.pass);

  auto bad = data;
  bad.w[0] += 1e-3;
  auto vb = verify(F, bad);
  CHECK_FALSE(vb.pass);
  CHECK(vb.residuals[0] == doctest::Approx(1e-3).epsilon(1e-6));

  // rank 2: w = (1/8, 1/27, 0) with H = z1
  auto d2 = make({0.5, 0.0}, {1.0 / 3, 0.0}, {0.0, 0.0}, 0.125, 1.0 / 27, 0.0);
  auto nd2 = normalize(d2);
  auto o2 = check_candidate(h, nd2);
  CHECK(std::abs(o2.c->first - 0.25) < 1e-15);
  CHECK(std::abs(o2.c->second - 1.0 / 9) < 1e-15);
  auto F2 = assemble(h, o2.per_l[0], *o2.c, nd2, d2);
  CHECK(F2.B->degree() == 2);
  CHECK(std::abs((*F2.B)(0.5) - 0.25) < 1e-12);
  CHECK(std::abs((*F2.B)(1.0 / 3) - 1.0 / 9) < 1e-12);
  CHECK(verify(F2, d2).pass);

  F2.expanded = expand_interpolant(F2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int i = 0; i < 50; ++i) {
    std::vector<Complex> p{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    CHECK(std::abs(F2(p) - F2.evaluate_expanded(p)) < 1e-9);
  }
}

TEST_CASE("decide examples") {
  auto r = decide(square_instance());
  REQUIRE(r.status == DecideStatus::Feasible);
  CHECK(r.interpolant->h.label() == "z1");
  CHECK(r.interpolant->l == 0);
  CHECK(r.interpolant->rank == 1);
  CHECK(r.necessary == std::array<bool, 3>{true, true, true});

  auto cfg = no_generated();
  cfg.stream.user_polys = {"2 - z1 - z2"};
  auto r0 = decide(f0_instance(), cfg);
  REQUIRE(r0.status == DecideStatus::Feasible);
  CHECK(r0.interpolant->rank == 0);
  CHECK(std::abs(*r0.interpolant->c - 1.0) < 1e-12);
  for (double x : r0.verification->residuals) CHECK(x < 1e-12);
  CHECK(r0.candidates.size() == 3);
  CHECK(r0.candidates[0].outcome.status == CheckStatus::Failed);

  // w1 far from w3 while X1 is close to X3
  auto adv = make({0.05, 0.05}, {0.3, -0.2}, {0.0, 0.0}, 0.95, 0.1, 0.0);
  auto ru = decide(adv, no_generated());
  CHECK(ru.status == DecideStatus::Unknown);
  CHECK(ru.candidates_tried == 2);
  for (const auto& c : ru.candidates) CHECK_FALSE(c.outcome.reason.empty());
  CHECK_FALSE(ru.necessary[1]);
}

TEST_CASE("report determinism and json round trip") {
  auto data = make({0.5, Complex(0, 0.2)}, {Complex(-0.1, 0.3), 0.1}, {0.2, -0.3}, 0.1, Complex(0.2, -0.1), 0.05);
  auto a = io::to_json(decide(data)).dump(2);
  auto b = io::to_json(decide(data)).dump(2);
  CHECK(a == b);
  CHECK(a.find("wall_time") == std::string::npos);

  auto r = decide(square_instance());
  auto j = io::to_json(*r.interpolant);
  auto back = io::interpolant_from_json(io::json::parse(j.dump()));
  std::vector<Complex> z{Complex(0.3, -0.2), Complex(0.1, 0.5)};
  CHECK(std::abs(back(z) - (*r.interpolant)(z)) < 1e-15);
  auto pd = io::problem_from_json(io::json::parse(io::to_json(data).dump()));
  CHECK(pd.X[1] == data.X[1]);

  auto q = mpoly::parse_poly("3/4*z1^2 - (2-1i)*z1*z2 + 7", 2);
  CHECK(io::poly_from_json(io::to_json(q)) == q);
  auto f = rif::RationalInner::from_denominator(mpoly::parse_poly("2 - z1 - z2", 2), rif::Provenance::Verified);
  auto fj = io::inner_from_json(io::to_json(f));
  CHECK(fj.Q() == f.Q());
  CHECK(fj.provenance() == rif::Provenance::Verified);
  CHECK(io::to_json(f).dump() ==
        R"({"A":{"re":"1","im":"0"},"beta":[1,1],"Q":{"n":2,"terms":[{"alpha":[0,0],"re":"2","im":"0"},{"alpha":[1,0],"re":"-1","im":"0"},{"alpha":[0,1],"re":"-1","im":"0"}]},"zero_free":"verified"})");
}
