#include "pickpoly/poly_algebra.hpp"

namespace pickpoly::mpoly {

std::optional<CPoly> exact_divide(const CPoly& a, const CPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("variable-count mismatch");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  CPoly rem = a;
  CPoly quot(a.nvars());
  const auto& [lb_alpha, lb_coeff] = b.leading_term();
  const GaussRational lb_inv = lb_coeff.inverse();
  // With a single divisor the remainder is unique, so the first leading term that
  // lb does not divide already proves b does not divide a.
  while (!rem.is_zero()) {
    const auto& [alpha, c] = rem.leading_term();
    if (!lb_alpha.divides(alpha)) return std::nullopt;
    const MultiIndex shift = alpha - lb_alpha;
    const GaussRational factor = c * lb_inv;
    quot.add_term(shift, factor);
    rem -= b.shift(shift) * factor;
  }
  return quot;
}

GaussRational make_monic(CPoly& q) {
  if (q.is_zero()) return GaussRational(0);
  GaussRational lead = q.leading_term().second;
  q *= lead.inverse();
  return lead;
}

CPoly pseudo_remainder(const CPoly& a, const CPoly& b, std::size_t k) {
  const int db = b.degree_in(k);
  if (db < 0) throw DomainError("pseudo-remainder by zero");
  const CPoly lb = b.coefficient_in(k, db);
  CPoly r = a;
  while (!r.is_zero() && r.degree_in(k) >= db) {
    const int dr = r.degree_in(k);
    const CPoly lr = r.coefficient_in(k, dr);
    MultiIndex s(a.nvars());
    s[k] = dr - db;
    r = lb * r - lr * b.shift(s);
  }
  return r;
}

namespace {

// Highest-index variable occurring in p or q, or -1 if both are constant.
int main_variable(const CPoly& p, const CPoly& q) {
  for (std::size_t k = p.nvars(); k-- > 0;)
    if (p.degree_in(k) > 0 || q.degree_in(k) > 0) return static_cast<int>(k);
  return -1;
}

CPoly primitive_part(const CPoly& q, std::size_t k) {
  if (q.is_zero()) return q;
  const CPoly c = content_in(q, k);
  auto pp = exact_divide(q, c);
  if (!pp) throw Error("internal: content does not divide polynomial");
  return *pp;
}

}  // namespace

CPoly content_in(const CPoly& q, std::size_t k) {
  CPoly g(q.nvars());
  const int d = q.degree_in(k);
  for (int e = d; e >= 0; --e) {
    const CPoly c = q.coefficient_in(k, e);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd(g, c);
    if (g.is_constant()) break;
  }
  make_monic(g);
  return g;
}

CPoly gcd(const CPoly& a, const CPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("variable-count mismatch");
  const std::size_t n = a.nvars();
  if (a.is_zero() && b.is_zero()) return CPoly(n);
  if (a.is_zero() || b.is_zero()) {
    CPoly g = a.is_zero() ? b : a;
    make_monic(g);
    return g;
  }
  if (a.is_constant() || b.is_constant()) return CPoly::constant(n, 1);

  const int v = main_variable(a, b);
  const auto k = static_cast<std::size_t>(v);
  if (a.degree_in(k) == 0) return gcd(a, content_in(b, k));
  if (b.degree_in(k) == 0) return gcd(content_in(a, k), b);

  const CPoly ca = content_in(a, k);
  const CPoly cb = content_in(b, k);
  CPoly content = gcd(ca, cb);

  CPoly p = primitive_part(a, k);
  CPoly q = primitive_part(b, k);
  make_monic(p);
  make_monic(q);
  if (p.degree_in(k) < q.degree_in(k)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(k) > 0) {
    CPoly r = pseudo_remainder(p, q, k);
    p = std::move(q);
    q = primitive_part(r, k);
    make_monic(q);  // keeps the rational coefficients from swelling
  }
  CPoly g = q.is_zero() ? p : CPoly::constant(n, 1);
  g = content * g;
  make_monic(g);
  return g;
}

}  // namespace pickpoly::mpoly
