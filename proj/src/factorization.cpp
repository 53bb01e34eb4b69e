#include "pickpoly/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "pickpoly/exact_linalg.hpp"
#include "pickpoly/poly_algebra.hpp"
#include "pickpoly/roots.hpp"

namespace pickpoly::mpoly {

namespace {

// Small random rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
mpq_class small_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  return v;
}

// Replace variable k with a constant.
CPoly substitute(const CPoly& q, std::size_t k, const GaussRational& value) {
  std::vector<CPoly> images;
  const std::size_t n = q.nvars();
  for (std::size_t j = 0; j < n; ++j)
    images.push_back(j == k ? CPoly::constant(n, value) : CPoly::variable(n, j));
  return q.compose(images);
}

MultiIndex monomial_content(const CPoly& q) {
  MultiIndex m(q.nvars());
  bool first = true;
  for (const auto& [alpha, c] : q.terms()) {
    for (std::size_t k = 0; k < q.nvars(); ++k) m[k] = first ? alpha[k] : std::min(m[k], alpha[k]);
    first = false;
  }
  return m;
}

CPoly divide_or_throw(const CPoly& a, const CPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error("internal: expected exact division");
  return *q;
}

// Linear factors of a squarefree univariate polynomial in variable k whose roots
// are Gaussian rationals. Returns the factors found and the unresolved cofactor.
std::pair<std::vector<CPoly>, CPoly> split_univariate(const CPoly& p, std::size_t k) {
  const std::size_t n = p.nvars();
  const int d = p.degree_in(k);
  std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1);
  for (int e = 0; e <= d; ++e) coeffs[e] = p.coefficient_in(k, e).constant_term().to_complex();
  std::vector<CPoly> found;
  CPoly rest = p;
  for (const Complex& root : univariate_roots(coeffs)) {
    for (long den = 10; den <= 100000000L; den *= 10) {
      const GaussRational r = rationalize(root, den);
      if (std::abs(r.to_complex() - root) > 1e-7 * std::max(1.0, std::abs(root))) continue;
      CPoly lin = CPoly::variable(n, k) - CPoly::constant(n, r);
      if (auto q = exact_divide(rest, lin)) {
        found.push_back(lin);
        rest = *q;
        break;
      }
    }
  }
  return {found, rest};
}

// Splits f (gcd(f, f_x) = 1, r >= 2 absolutely irreducible factors) using the
// eigenvalue structure of a random element g of the Ruppert-Gao space: every root
// xi of f(., y0) lying on factor f_i satisfies g/f_x = lambda_i, and
// f_i = gcd(f, g - lambda_i f_x).
std::optional<std::vector<CPoly>> gao_split(const CPoly& f, std::size_t x, std::size_t y,
                                            const std::vector<CPoly>& basis, std::mt19937_64& rng) {
  const std::size_t n = f.nvars();
  const int m = f.degree_in(x);
  const CPoly fx = f.derivative(x);
  const HornerPoly fx_eval(fx);
  std::uniform_int_distribution<int> coef(1, 9);

  for (int attempt = 0; attempt < 12; ++attempt) {
    CPoly g(n);
    for (const auto& b : basis) g += b * GaussRational(coef(rng));
    const HornerPoly g_eval(g);

    GaussRational y0;
    CPoly fy0(n);
    bool good_slice = false;
    for (int tries = 0; tries < 20 && !good_slice; ++tries) {
      y0 = GaussRational(small_rational(rng, 7, 5));
      fy0 = substitute(f, y, y0);
      if (fy0.degree_in(x) != m) continue;
      good_slice = gcd(fy0, fy0.derivative(x)).is_constant();
    }
    if (!good_slice) continue;

    std::vector<Complex> coeffs(static_cast<std::size_t>(m) + 1);
    for (int e = 0; e <= m; ++e) coeffs[e] = fy0.coefficient_in(x, e).constant_term().to_complex();
    const auto xi = univariate_roots(coeffs);
    if (static_cast<int>(xi.size()) != m) continue;

    std::vector<Complex> lambdas;
    std::vector<Complex> point(n, 0.0);
    point[y] = y0.to_complex();
    for (const Complex& root : xi) {
      point[x] = root;
      lambdas.push_back(g_eval(point) / fx_eval(point));
    }

    // Greedy clustering of the lambda values.
    std::vector<std::vector<Complex>> clusters;
    for (const Complex& l : lambdas) {
      bool placed = false;
      for (auto& c : clusters) {
        if (std::abs(c.front() - l) <= 1e-6 * std::max(1.0, std::abs(l))) {
          c.push_back(l);
          placed = true;
          break;
        }
      }
      if (!placed) clusters.push_back({l});
    }
    if (clusters.size() != basis.size()) continue;

    std::vector<CPoly> factors;
    bool ok = true;
    for (const auto& c : clusters) {
      Complex mean = 0;
      for (const auto& l : c) mean += l;
      mean /= static_cast<double>(c.size());
      bool found = false;
      for (long den = 1; den <= 100000000L && !found; den *= 10) {
        const GaussRational lq = rationalize(mean, den);
        if (std::abs(lq.to_complex() - mean) > 1e-7 * std::max(1.0, std::abs(mean))) continue;
        CPoly d = gcd(f, g - fx * lq);
        if (!d.is_constant() && d.degree_in(x) == static_cast<int>(c.size())) {
          factors.push_back(std::move(d));
          found = true;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    CPoly product = CPoly::constant(n, 1);
    for (const auto& p : factors) product = product * p;
    auto quotient = exact_divide(f, product);
    if (quotient && quotient->is_constant()) return factors;
  }
  return std::nullopt;
}

// Random affine restriction z_j = a_j s + b_j t + c_j onto a two-variable ring.
CPoly bivariate_slice(const CPoly& q, std::mt19937_64& rng) {
  std::vector<CPoly> images;
  const CPoly s = CPoly::variable(2, 0);
  const CPoly t = CPoly::variable(2, 1);
  for (std::size_t j = 0; j < q.nvars(); ++j) {
    images.push_back(s * GaussRational(small_rational(rng, 9, 4)) +
                     t * GaussRational(small_rational(rng, 9, 4)) +
                     CPoly::constant(2, GaussRational(small_rational(rng, 5, 4))));
  }
  return q.compose(images);
}

IrreducibilityVerdict bivariate_verdict(const CPoly& q, std::mt19937_64& rng, bool want_witness);

// Irreducible full-degree slice found within `trials` attempts.
std::optional<int> slice_certificate(const CPoly& q, int trials, std::mt19937_64& rng) {
  const int d = q.total_degree();
  for (int t = 0; t < trials; ++t) {
    const CPoly s = bivariate_slice(q, rng);
    if (s.total_degree() != d) continue;
    if (bivariate_verdict(s, rng, false).status == Irreducibility::Irreducible) return t + 1;
  }
  return std::nullopt;
}

// Exact verdict for polynomials with at most two effective variables.
IrreducibilityVerdict bivariate_verdict(const CPoly& q, std::mt19937_64& rng, bool want_witness) {
  IrreducibilityVerdict v;
  v.confidence = Confidence::Exact;
  const std::size_t n = q.nvars();
  const MultiIndex mono = monomial_content(q);
  if (!mono.is_zero()) {
    if (q.term_count() == 1 && mono.total() == 1) {
      v.status = Irreducibility::Irreducible;
      return v;
    }
    const std::size_t k = static_cast<std::size_t>(
        std::find_if(mono.exponents().begin(), mono.exponents().end(), [](int e) { return e > 0; }) -
        mono.exponents().begin());
    const CPoly zk = CPoly::variable(n, k);
    v.status = Irreducibility::Reducible;
    v.witness = std::make_pair(zk, divide_or_throw(q, zk));
    return v;
  }
  if (q.total_degree() == 1) {
    v.status = Irreducibility::Irreducible;
    return v;
  }
  const auto vars = q.variables();
  if (vars.size() == 1) {
    v.status = Irreducibility::Reducible;  // degree >= 2 in one variable splits over C
    if (want_witness) {
      auto [lin, rest] = split_univariate(divide_or_throw(q, gcd(q, q.derivative(vars[0]))), vars[0]);
      if (!lin.empty()) v.witness = std::make_pair(lin.front(), divide_or_throw(q, lin.front()));
    }
    return v;
  }
  const std::size_t x = vars[0], y = vars[1];
  const CPoly g = gcd(q, q.derivative(x));
  if (!g.is_constant()) {
    v.status = Irreducibility::Reducible;
    v.witness = std::make_pair(g, divide_or_throw(q, g));
    return v;
  }
  const auto basis = ruppert_gao_basis(q, x, y);
  if (basis.size() == 1) {
    v.status = Irreducibility::Irreducible;
    return v;
  }
  v.status = Irreducibility::Reducible;
  if (want_witness) {
    if (auto parts = gao_split(q, x, y, basis, rng)) {
      CPoly rest = CPoly::constant(n, 1);
      for (std::size_t i = 1; i < parts->size(); ++i) rest = rest * (*parts)[i];
      const CPoly first = parts->front();
      // Fold the constant so first * rest == q exactly.
      auto quotient = exact_divide(q, first * rest);
      v.witness = std::make_pair(first, rest * quotient->constant_term());
    }
  }
  return v;
}

}  // namespace

std::vector<CPoly> ruppert_gao_basis(const CPoly& f, std::size_t x, std::size_t y) {
  const std::size_t n = f.nvars();
  const int m = f.degree_in(x);
  const int d = f.degree_in(y);
  if (m < 1 || d < 1) throw DomainError("Ruppert-Gao system needs positive degree in both variables");
  const CPoly fx = f.derivative(x);
  const CPoly fy = f.derivative(y);

  std::vector<CPoly> columns;
  std::vector<CPoly> g_monomials;
  for (int i = 0; i <= m - 1; ++i)
    for (int j = 0; j <= d; ++j) {
      MultiIndex a(n);
      a[x] = i;
      a[y] = j;
      const CPoly u = CPoly::monomial(a);
      g_monomials.push_back(u);
      columns.push_back(f * u.derivative(y) - u * fy);
    }
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= d - 1; ++j) {
      MultiIndex a(n);
      a[x] = i;
      a[y] = j;
      const CPoly u = CPoly::monomial(a);
      columns.push_back(u * fx - f * u.derivative(x));
    }

  std::map<MultiIndex, std::size_t, GrLex> row_of;
  for (const auto& col : columns)
    for (const auto& [alpha, c] : col.terms()) row_of.try_emplace(alpha, row_of.size());
  ExactMatrix a(row_of.size(), ExactVector(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [alpha, v] : columns[c].terms()) a[row_of.at(alpha)][c] = v;

  std::vector<CPoly> basis;
  for (const auto& kv : nullspace(std::move(a), columns.size())) {
    CPoly g(n);
    for (std::size_t c = 0; c < g_monomials.size(); ++c)
      if (!kv[c].is_zero()) g += g_monomials[c] * kv[c];
    basis.push_back(std::move(g));
  }
  return basis;
}

CPoly Factorization::expand(std::size_t n) const {
  CPoly out = CPoly::constant(n, constant);
  for (const auto& f : factors) out = out * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

IrreducibilityVerdict is_irreducible(const CPoly& q, int trials, std::uint64_t seed) {
  if (q.is_constant()) throw DomainError("irreducibility is undefined for constants");
  std::mt19937_64 rng(seed);
  if (q.variables().size() <= 2) return bivariate_verdict(q, rng, true);

  IrreducibilityVerdict v;
  const std::size_t n = q.nvars();
  const MultiIndex mono = monomial_content(q);
  if (!mono.is_zero()) {
    const std::size_t k = static_cast<std::size_t>(
        std::find_if(mono.exponents().begin(), mono.exponents().end(), [](int e) { return e > 0; }) -
        mono.exponents().begin());
    v.status = Irreducibility::Reducible;
    v.witness = std::make_pair(CPoly::variable(n, k), divide_or_throw(q, CPoly::variable(n, k)));
    return v;
  }
  if (q.total_degree() == 1) {
    v.status = Irreducibility::Irreducible;
    return v;
  }
  const std::size_t x = q.variables().front();
  const CPoly g = gcd(q, q.derivative(x));
  if (!g.is_constant()) {
    v.status = Irreducibility::Reducible;
    v.witness = std::make_pair(g, divide_or_throw(q, g));
    return v;
  }
  // A full-degree slice inherits any factorization, so an irreducible slice settles it.
  if (auto t = slice_certificate(q, trials, rng)) {
    v.status = Irreducibility::Irreducible;
    v.confidence = Confidence::Probabilistic;
    v.trials = *t;
    return v;
  }
  v.confidence = Confidence::Probabilistic;
  v.trials = trials;
  FactorOptions opts;
  opts.seed = seed;
  const Factorization fz = factor(q, opts);
  if (fz.factors.size() > 1 || (fz.factors.size() == 1 && fz.factors[0].multiplicity > 1)) {
    CPoly first = fz.factors.front().poly;
    auto rest = exact_divide(q, first);
    v.status = Irreducibility::Reducible;
    v.witness = std::make_pair(first, *rest);
    return v;
  }
  v.status = Irreducibility::Unknown;
  return v;
}

Factorization factor(const CPoly& q, const FactorOptions& options) {
  if (q.is_constant()) throw DomainError("cannot factor a constant");
  const std::size_t n = q.nvars();
  std::mt19937_64 rng(options.seed);
  Factorization out;

  std::vector<FactorTerm> found;
  std::vector<std::pair<CPoly, int>> work;
  const MultiIndex mono = monomial_content(q);
  for (std::size_t k = 0; k < n; ++k)
    if (mono[k] > 0) found.push_back({CPoly::variable(n, k), mono[k], true});
  {
    CPoly stripped(n);
    for (const auto& [alpha, c] : q.terms()) stripped.add_term(alpha - mono, c);
    work.emplace_back(std::move(stripped), 1);
  }

  while (!work.empty()) {
    auto [p, mult] = std::move(work.back());
    work.pop_back();
    if (p.is_constant()) {
      for (int i = 0; i < mult; ++i) out.constant *= p.constant_term();
      continue;
    }
    const GaussRational lead = make_monic(p);
    for (int i = 0; i < mult; ++i) out.constant *= lead;
    if (p.total_degree() == 1) {
      found.push_back({p, mult, true});
      continue;
    }

    bool split = false;
    for (const auto& h : options.hints) {
      if (h.nvars() != n || h.is_constant() || h.total_degree() >= p.total_degree()) continue;
      if (auto quot = exact_divide(p, h)) {
        work.emplace_back(h, mult);
        work.emplace_back(*quot, mult);
        split = true;
        break;
      }
    }
    if (split) continue;

    const auto vars = p.variables();
    const CPoly g = gcd(p, p.derivative(vars.front()));
    if (!g.is_constant()) {
      work.emplace_back(g, mult);
      work.emplace_back(divide_or_throw(p, g), mult);
      continue;
    }

    if (vars.size() == 1) {
      auto [lin, rest] = split_univariate(p, vars.front());
      for (auto& l : lin) found.push_back({l, mult, true});
      if (!rest.is_constant()) {
        make_monic(rest);
        found.push_back({rest, mult, false});
      } else {
        for (int i = 0; i < mult; ++i) out.constant *= rest.constant_term();
      }
      continue;
    }

    if (vars.size() == 2) {
      if (p.total_degree() > options.max_exact_degree) {
        found.push_back({p, mult, false});
        continue;
      }
      const auto basis = ruppert_gao_basis(p, vars[0], vars[1]);
      if (basis.size() == 1) {
        found.push_back({p, mult, true});
        continue;
      }
      if (auto parts = gao_split(p, vars[0], vars[1], basis, rng)) {
        CPoly prod = CPoly::constant(n, 1);
        for (auto& part : *parts) {
          prod = prod * part;
          work.emplace_back(part, mult);
        }
        // Leftover constant from the monic normalisation of the parts.
        work.emplace_back(divide_or_throw(p, prod), mult);
      } else {
        found.push_back({p, mult, false});
      }
      continue;
    }

    if (slice_certificate(p, options.slice_trials, rng)) {
      out.confidence = Confidence::Probabilistic;
      found.push_back({p, mult, true});
    } else {
      found.push_back({p, mult, false});
    }
  }

  // Merge repeated factors.
  for (auto& f : found) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const FactorTerm& t) { return t.poly == f.poly; });
    if (it == out.factors.end()) {
      out.factors.push_back(f);
    } else {
      it->multiplicity += f.multiplicity;
      it->irreducible = it->irreducible && f.irreducible;
    }
  }
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const FactorTerm& a, const FactorTerm& b) {
    return GrLex{}(a.poly.leading_term().first, b.poly.leading_term().first);
  });
  for (const auto& f : out.factors)
    if (!f.irreducible) out.status = FactorStatus::Unknown;

  if (out.expand(n) != q) throw Error("internal: factorization does not multiply back to the input");
  return out;
}

}  // namespace pickpoly::mpoly
