#include "pickpoly/engine.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include "pickpoly/moebius.hpp"

namespace pickpoly::engine {

using mpoly::GaussRational;
using mpoly::Irreducibility;
using mpoly::MultiIndex;
using moebius::psi;
using moebius::psi_inv;

namespace {

constexpr double kVanish = 1e-12;

bool coincident(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > kVanish) return false;
  return true;
}

GaussRational exact(Complex z) { return GaussRational::from_complex(z); }

// sum a_alpha prod (z_k - x_k)^alpha_k (1 - conj(x_k) z_k)^(e_k - alpha_k)
CPoly homogenize(const CPoly& p, std::span<const Complex> x, const std::vector<int>& e) {
  const std::size_t n = p.nvars();
  std::vector<CPoly> up, down;
  for (std::size_t k = 0; k < n; ++k) {
    const CPoly z = CPoly::variable(n, k);
    up.push_back(z - CPoly::constant(n, exact(x[k])));
    down.push_back(CPoly::constant(n, 1) - z * exact(std::conj(x[k])));
  }
  CPoly out(n);
  for (const auto& [alpha, a] : p.terms()) {
    CPoly t = CPoly::constant(n, a);
    for (std::size_t k = 0; k < n; ++k)
      t = t * up[k].pow(static_cast<unsigned>(alpha[k])) * down[k].pow(static_cast<unsigned>(e[k] - alpha[k]));
    out += t;
  }
  return out;
}

}  // namespace

void ProblemData::validate() const {
  if (n == 0) throw DomainError("dimension must be positive");
  for (const auto& x : X) {
    if (x.size() != n) throw DomainError("point dimension differs from n");
    for (Complex c : x) moebius::require_interior(c, "node coordinate");
  }
  for (Complex c : w) moebius::require_interior(c, "target");
  if (coincident(X[0], X[1]) || coincident(X[0], X[2]) || coincident(X[1], X[2]))
    throw DomainError("coincident interpolation nodes");
}

NormalizedData normalize(const ProblemData& data) {
  data.validate();
  NormalizedData nd;
  nd.X1p = moebius::Psi(data.X[2], data.X[0]);
  nd.X2p = moebius::Psi(data.X[2], data.X[1]);
  nd.w1p = psi(data.w[2], data.w[0]);
  nd.w2p = psi(data.w[2], data.w[1]);
  return nd;
}

std::string CandidateH::label() const {
  if (kind == CandidateKind::Coordinate) return "z" + std::to_string(coordinate + 1);
  return mpoly::format_poly(*Q);
}

CandidateH coordinate_candidate(std::size_t n, std::size_t j) {
  return CandidateH{CandidateKind::Coordinate, CandidateSource::Builtin, j, std::nullopt, 0,
                    rif::RationalInner::coordinate(n, j)};
}

std::vector<std::string> read_candidate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read candidate file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

CandidateStream::CandidateStream(StreamConfig config) : cfg_(std::move(config)), rng_(cfg_.seed) {}

std::optional<CandidateH> CandidateStream::next() {
  if (coord_ < cfg_.n) return coordinate_candidate(cfg_.n, coord_++);
  while (user_ < cfg_.user_polys.size())
    if (auto h = screen_user(cfg_.user_polys[user_++])) return h;
  while (generated_ < cfg_.gen_count && attempts_ < 50 * std::max(cfg_.gen_count, 1))
    if (auto h = generate()) {
      ++generated_;
      return h;
    }
  return std::nullopt;
}

std::optional<CandidateH> CandidateStream::screen_user(const std::string& text) {
  auto reject = [&](std::string reason) -> std::optional<CandidateH> {
    rejections_.push_back({CandidateSource::UserFile, text, std::move(reason)});
    return std::nullopt;
  };
  CPoly q;
  try {
    q = mpoly::parse_poly(text, cfg_.n);
  } catch (const ParseError& e) {
    return reject(std::string("parse error: ") + e.what());
  }
  if (q.is_constant()) return reject("constant polynomial");
  if (q.constant_term().is_zero()) return reject("vanishes at the origin");
  if (!mpoly::is_deficient(q)) return reject("not deficient");
  const auto irr = mpoly::is_irreducible(q, 8, cfg_.seed);
  if (irr.status == Irreducibility::Reducible) return reject("reducible");
  const auto zf = mpoly::zero_free_on_polydisc(q, cfg_.zero_free);
  if (zf.status == mpoly::ZeroFreeStatus::ZeroFound) return reject("zero in the polydisc");
  const auto prov = zf.status == mpoly::ZeroFreeStatus::Verified ? rif::Provenance::Verified : rif::Provenance::Asserted;
  return CandidateH{CandidateKind::Reflected, CandidateSource::UserFile, 0, q, 0,
                    rif::RationalInner::from_denominator(q, prov), true, irr.status, zf.status};
}

std::optional<CandidateH> CandidateStream::generate() {
  const std::uint64_t tag = static_cast<std::uint64_t>(attempts_++);
  const std::size_t n = cfg_.n;
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4), total(1, std::max(cfg_.gen_degree, 1)),
      terms(1, 2 + static_cast<int>(n)), var(0, static_cast<int>(n) - 1), quarter(0, 3);
  CPoly p(n);
  const int t = terms(rng_);
  for (int i = 0; i < t; ++i) {
    MultiIndex alpha(n);
    for (int d = total(rng_); d > 0; --d) ++alpha[static_cast<std::size_t>(var(rng_))];
    int re = num(rng_);
    if (re == 0) re = 1;
    const mpq_class im = quarter(rng_) == 0 ? mpq_class(num(rng_), den(rng_)) : mpq_class(0);
    p.add_term(alpha, GaussRational(mpq_class(re, den(rng_)), im));
  }
  if (p.is_zero()) return std::nullopt;
  mpq_class bound = 0;
  for (const auto& [alpha, a] : p.terms()) bound += a.l1_norm();
  static constexpr int kMargin[] = {1, 2, 4};
  const mpq_class c = bound + mpq_class(1, kMargin[quarter(rng_) % 3]);
  const CPoly q = CPoly::constant(n, GaussRational(c)) - p;
  if (!mpoly::is_deficient(q)) return std::nullopt;
  const auto irr = mpoly::is_irreducible(q, 8, cfg_.seed + tag);
  if (irr.status == Irreducibility::Reducible) return std::nullopt;
  // zero-free by the triangle inequality: |q| >= c - sum |a| > 0 on the closed polydisc
  return CandidateH{CandidateKind::Reflected, CandidateSource::Generated, 0, q, cfg_.seed + tag,
                    rif::RationalInner::from_denominator(q, rif::Provenance::Verified), true, irr.status,
                    mpoly::ZeroFreeStatus::Verified};
}

CandidateOutcome check_candidate(const CandidateH& h, const NormalizedData& nd, double tol) {
  CandidateOutcome out;
  const std::array<const std::vector<Complex>*, 2> x{&nd.X1p, &nd.X2p};
  const std::array<Complex, 2> wp{nd.w1p, nd.w2p};
  std::array<Complex, 2> c{};
  for (std::size_t j = 0; j < 2; ++j) {
    Complex hv;
    try {
      hv = h.H(*x[j]);
    } catch (const DomainError& e) {
      out.reason = std::string("evaluation failed: ") + e.what();
      return out;
    }
    if (std::abs(hv) < kVanish) {
      if (std::abs(wp[j]) >= kVanish) {
        out.reason = "division by vanishing H";
      } else {
        out.status = CheckStatus::Skipped;
        out.reason = "indeterminate ratio";
      }
      return out;
    }
    c[j] = wp[j] / hv;
    if (std::abs(c[j]) > 1 + tol) {
      out.c = {c[0], c[1]};
      out.reason = "ratio outside the closed disc";
      return out;
    }
    if (std::abs(c[j]) > 1) c[j] /= std::abs(c[j]);
  }
  out.c = {c[0], c[1]};
  for (std::size_t l = 0; l < nd.X1p.size(); ++l) {
    if (std::abs(nd.X1p[l] - nd.X2p[l]) < kVanish) continue;
    const auto m = pick::theorem_matrix(nd.X1p, nd.X2p, c[0], c[1], l);
    out.per_l.push_back({l, pick::psd_check(m)});
  }
  bool any = false;
  for (const auto& o : out.per_l) any = any || o.verdict.is_psd;
  out.status = any ? CheckStatus::Passed : CheckStatus::Failed;
  if (!any) out.reason = out.per_l.empty() ? "no admissible coordinate" : "matrix not positive semidefinite";
  return out;
}

Complex Interpolant::operator()(std::span<const Complex> z) const {
  const auto zp = moebius::Psi(x3, z);
  const Complex g = rank == 0 ? *c : (*B)(zp[l]);
  return psi_inv(w3, g * h.H(zp));
}

Complex Interpolant::evaluate_expanded(std::span<const Complex> z) const {
  if (!expanded) throw Error("interpolant has no expanded form");
  return expanded->first.evaluate(z) / expanded->second.evaluate(z);
}

Interpolant assemble(const CandidateH& h, const LOutcome& outcome, std::pair<Complex, Complex> c,
                     const NormalizedData& nd, const ProblemData& data) {
  if (!outcome.verdict.is_psd) throw DomainError("assembly needs a positive semidefinite outcome");
  Interpolant f{data.X[2], data.w[2], h, outcome.l, outcome.verdict.rank, std::nullopt, std::nullopt, std::nullopt};
  if (f.rank == 0) {
    if (std::abs(c.first - c.second) > 1e-9 || std::abs(std::abs(c.first) - 1) > 1e-9)
      throw DomainError("rank 0 needs equal unimodular ratios");
    f.c = c.first / std::abs(c.first);
  } else {
    f.B = pick::two_point_blaschke(nd.X1p[f.l], nd.X2p[f.l], c.first, c.second);
    if (f.B->degree() != f.rank) throw Error("internal consistency: Blaschke degree differs from rank");
  }
  return f;
}

std::pair<CPoly, CPoly> expand_interpolant(const Interpolant& f) {
  const std::size_t n = f.x3.size();
  const auto& H = f.h.H;
  const CPoly num = H.numerator() * (H.A().is_exact() ? H.A().exact_value() : exact(H.A().value()));
  const CPoly& den = H.Q();
  std::vector<int> e(n);
  for (std::size_t k = 0; k < n; ++k) e[k] = std::max(num.degree_in(k), den.degree_in(k));
  const CPoly nh = homogenize(num, f.x3, e), dh = homogenize(den, f.x3, e);

  CPoly ng = CPoly::constant(n, 1), dg = CPoly::constant(n, 1);
  if (f.rank == 0) {
    ng = CPoly::constant(n, exact(*f.c));
  } else {
    const CPoly z = CPoly::variable(n, f.l);
    const CPoly one = CPoly::constant(n, 1);
    const GaussRational a = exact(f.x3[f.l]);
    const CPoly zm = z - CPoly::constant(n, a);        // z - a
    const CPoly dm = one - z * a.conj();               // 1 - conj(a) z
    ng = CPoly::constant(n, exact(f.B->constant));
    for (Complex b : f.B->zeros) {
      const GaussRational bb = exact(b);
      ng = ng * (zm - dm * bb);
      dg = dg * (dm - zm * bb.conj());
    }
  }
  const GaussRational w3 = exact(f.w3);
  const CPoly gh = ng * nh, dd = dg * dh;
  return {gh + dd * w3, dd + gh * w3.conj()};
}

VerifyReport verify(const Interpolant& f, const ProblemData& data, int samples, double tol) {
  VerifyReport r;
  r.pass = true;
  for (std::size_t j = 0; j < 3; ++j) {
    try {
      r.residuals[j] = std::abs(f(data.X[j]) - data.w[j]);
    } catch (const DomainError&) {
      r.residuals[j] = std::numeric_limits<double>::infinity();
    }
    r.pass = r.pass && r.residuals[j] < tol;
  }
  r.inner = rif::verify_inner_numeric([&f](std::span<const Complex> z) { return f(z); }, f.x3.size(), samples);
  return r;
}

std::array<bool, 3> necessary_conditions(const ProblemData& data) {
  static constexpr std::size_t kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::array<bool, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto a = kPairs[i][0], b = kPairs[i][1];
    out[i] = pick::two_point_feasible(data.X[a], data.X[b], data.w[a], data.w[b], 1e-9);
  }
  return out;
}

FeasibilityReport decide(const ProblemData& data, const DecideConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  FeasibilityReport rep;
  const NormalizedData nd = normalize(data);
  StreamConfig sc = config.stream;
  sc.n = data.n;
  CandidateStream stream(sc);
  while (rep.candidates_tried < config.max_candidates) {
    auto h = stream.next();
    if (!h) break;
    ++rep.candidates_tried;
    CandidateRecord rec{h->label(), h->source, check_candidate(*h, nd, config.tol), {}};
    if (rec.outcome.status == CheckStatus::Passed) {
      for (const auto& o : rec.outcome.per_l) {
        if (!o.verdict.is_psd) continue;
        try {
          Interpolant f = assemble(*h, o, *rec.outcome.c, nd, data);
          if (config.expand) f.expanded = expand_interpolant(f);
          VerifyReport vr = verify(f, data, config.inner_samples, config.tol);
          if (!vr.pass) {
            rec.note = "verification failed at l=" + std::to_string(o.l + 1);
            continue;
          }
          rep.status = DecideStatus::Feasible;
          rep.interpolant = std::move(f);
          rep.verification = std::move(vr);
          rep.necessary = necessary_conditions(data);
          break;
        } catch (const Error& e) {
          rec.note = std::string("assembly failed: ") + e.what();
        }
      }
    }
    rep.candidates.push_back(std::move(rec));
    if (rep.status == DecideStatus::Feasible) break;
  }
  rep.rejections = stream.rejections();
  if (rep.status != DecideStatus::Feasible) rep.necessary = necessary_conditions(data);
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace pickpoly::engine
