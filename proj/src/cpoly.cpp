#include "pickpoly/cpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pickpoly::mpoly {

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(std::initializer_list<int> exps) : e_(exps) {
  for (int v : e_)
    if (v < 0) throw DomainError("negative exponent in multi-index");
}

MultiIndex::MultiIndex(std::vector<int> exps) : e_(std::move(exps)) {
  for (int v : e_)
    if (v < 0) throw DomainError("negative exponent in multi-index");
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
  MultiIndex m(n);
  m.e_.at(k) = 1;
  return m;
}

int MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool MultiIndex::divides(const MultiIndex& other) const {
  if (other.size() != size()) throw DomainError("multi-index length mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > other.e_[k]) return false;
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.size() != size()) throw DomainError("multi-index length mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!b.divides(a)) throw DomainError("multi-index difference would be negative");
  MultiIndex out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.e_[k] -= b.e_[k];
  return out;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e_[k]);
  }
  return s + ")";
}

bool GrLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

// ---------------------------------------------------------------------------
// CPoly

CPoly CPoly::constant(std::size_t n, const GaussRational& c) {
  CPoly p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

CPoly CPoly::variable(std::size_t n, std::size_t k) {
  if (k >= n) throw DomainError("variable index out of range");
  return monomial(MultiIndex::unit(n, k));
}

CPoly CPoly::monomial(const MultiIndex& alpha, const GaussRational& c) {
  CPoly p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

bool CPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

GaussRational CPoly::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? GaussRational{} : it->second;
}

GaussRational CPoly::constant_term() const { return coeff(MultiIndex(n_)); }

int CPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.total();
}

int CPoly::degree_in(std::size_t k) const {
  if (k >= n_) throw DomainError("variable index out of range");
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha[k]);
  return d;
}

std::vector<std::size_t> CPoly::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n_; ++k)
    if (degree_in(k) > 0) out.push_back(k);
  return out;
}

const std::pair<const MultiIndex, GaussRational>& CPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void CPoly::add_term(const MultiIndex& alpha, const GaussRational& c) {
  if (alpha.size() != n_) throw DomainError("multi-index does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CPoly::check_same_ring(const CPoly& o) const {
  if (o.n_ != n_) throw DomainError("variable-count mismatch");
}

CPoly CPoly::operator-() const {
  CPoly out(*this);
  for (auto& [alpha, c] : out.terms_) c = -c;
  return out;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check_same_ring(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check_same_ring(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

CPoly& CPoly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, v] : terms_) v *= c;
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  a.check_same_ring(b);
  CPoly out(a.n_);
  for (const auto& [aa, ca] : a.terms_)
    for (const auto& [ab, cb] : b.terms_) out.add_term(aa + ab, ca * cb);
  return out;
}

CPoly CPoly::pow(unsigned e) const {
  CPoly result = constant(n_, 1);
  CPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CPoly CPoly::shift(const MultiIndex& alpha) const {
  CPoly out(n_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a + alpha, c);
  return out;
}

CPoly CPoly::derivative(std::size_t k) const {
  if (k >= n_) throw DomainError("variable index out of range");
  CPoly out(n_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[k] == 0) continue;
    MultiIndex beta = alpha;
    beta[k] -= 1;
    out.add_term(beta, c * GaussRational(alpha[k]));
  }
  return out;
}

CPoly CPoly::coefficient_in(std::size_t k, int power) const {
  if (k >= n_) throw DomainError("variable index out of range");
  CPoly out(n_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[k] != power) continue;
    MultiIndex beta = alpha;
    beta[k] = 0;
    out.terms_.emplace(beta, c);
  }
  return out;
}

CPoly CPoly::compose(std::span<const CPoly> images) const {
  if (images.size() != n_) throw DomainError("compose: one image per variable required");
  if (n_ == 0) return *this;
  const std::size_t m = images[0].nvars();
  for (const auto& img : images)
    if (img.nvars() != m) throw DomainError("compose: images live in different rings");
  // powers[k][e] = images[k]^e, built lazily
  std::vector<std::vector<CPoly>> powers(n_);
  for (std::size_t k = 0; k < n_; ++k) powers[k].push_back(constant(m, 1));
  auto power = [&](std::size_t k, int e) -> const CPoly& {
    while (static_cast<int>(powers[k].size()) <= e) powers[k].push_back(powers[k].back() * images[k]);
    return powers[k][e];
  };
  CPoly out(m);
  for (const auto& [alpha, c] : terms_) {
    CPoly t = constant(m, c);
    for (std::size_t k = 0; k < n_; ++k)
      if (alpha[k]) t = t * power(k, alpha[k]);
    out += t;
  }
  return out;
}

GaussRational CPoly::evaluate(std::span<const GaussRational> z) const {
  if (z.size() != n_) throw DomainError("evaluation point has wrong dimension");
  GaussRational sum;
  for (const auto& [alpha, c] : terms_) {
    GaussRational t = c;
    for (std::size_t k = 0; k < n_; ++k)
      for (int e = 0; e < alpha[k]; ++e) t *= z[k];
    sum += t;
  }
  return sum;
}

Complex CPoly::evaluate(std::span<const Complex> z) const {
  if (z.size() != n_) throw DomainError("evaluation point has wrong dimension");
  return HornerPoly(*this)(z);
}

// ---------------------------------------------------------------------------
// HornerPoly

HornerPoly::HornerPoly(const CPoly& q) : n_(q.nvars()) {
  for (const auto& [alpha, c] : q.terms()) insert(root_, alpha, 0, c.to_complex());
}

void HornerPoly::insert(Node& node, const MultiIndex& alpha, std::size_t level, Complex c) {
  if (level == alpha.size()) {
    node.value += c;
    return;
  }
  const auto e = static_cast<std::size_t>(alpha[level]);
  if (node.by_power.size() <= e) node.by_power.resize(e + 1);
  insert(node.by_power[e], alpha, level + 1, c);
}

Complex HornerPoly::eval(const Node& node, std::size_t level, std::span<const Complex> z) {
  if (level == z.size()) return node.value;
  Complex acc = 0;
  for (std::size_t e = node.by_power.size(); e-- > 0;) {
    acc *= z[level];
    acc += eval(node.by_power[e], level + 1, z);
  }
  return acc;
}

Complex HornerPoly::operator()(std::span<const Complex> z) const {
  if (z.size() != n_) throw DomainError("evaluation point has wrong dimension");
  return eval(root_, 0, z);
}

// ---------------------------------------------------------------------------
// Reflection calculus

std::set<MultiIndex, GrLex> support(const CPoly& q) {
  std::set<MultiIndex, GrLex> s;
  for (const auto& [alpha, c] : q.terms()) s.insert(alpha);
  return s;
}

MultiIndex nu(const CPoly& q) {
  if (q.is_zero()) throw DomainError("nu undefined for the zero polynomial");
  MultiIndex out(q.nvars());
  for (const auto& [alpha, c] : q.terms())
    for (std::size_t k = 0; k < q.nvars(); ++k) out[k] = std::max(out[k], alpha[k]);
  return out;
}

bool is_deficient(const CPoly& q) {
  if (q.is_constant()) throw DomainError("deficiency is defined for nonconstant polynomials");
  return q.coeff(nu(q)).is_zero();
}

CPoly conj_coeffs(const CPoly& q) {
  CPoly out(q.nvars());
  for (const auto& [alpha, c] : q.terms()) out.add_term(alpha, c.conj());
  return out;
}

CPoly reflect(const CPoly& q) {
  const MultiIndex v = nu(q);
  CPoly out(q.nvars());
  for (const auto& [alpha, c] : q.terms()) out.add_term(v - alpha, c.conj());
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  CPoly run() {
    struct RawTerm {
      GaussRational c;
      std::vector<std::pair<std::size_t, int>> vars;  // (1-based index, exponent)
    };
    std::vector<RawTerm> raw;
    std::size_t max_index = 0;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      RawTerm t;
      t.c = GaussRational(sign);
      bool have_factor = false;
      if (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
        t.c *= coefficient();
        have_factor = true;
        skip_ws();
      }
      while (!at_end() && (peek() == '*' || peek() == 'z')) {
        if (peek() == '*') {
          if (!have_factor) throw ParseError("'*' without a preceding factor", pos_);
          get();
          skip_ws();
          if (at_end() || peek() != 'z') {
            if (!at_end() && (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek())))) {
              t.c *= coefficient();
              skip_ws();
              continue;
            }
            throw ParseError("expected monomial after '*'", pos_);
          }
        }
        auto [k, e] = variable();
        max_index = std::max(max_index, k);
        t.vars.emplace_back(k, e);
        have_factor = true;
        skip_ws();
      }
      if (!have_factor) throw ParseError("expected a term", pos_);
      raw.push_back(std::move(t));
      skip_ws();
    }
    std::size_t n = n_ ? n_ : std::max<std::size_t>(max_index, 1);
    if (max_index > n) throw ParseError("variable index z" + std::to_string(max_index) + " out of range", 0);
    CPoly out(n);
    for (const auto& t : raw) {
      MultiIndex alpha(n);
      for (auto [k, e] : t.vars) alpha[k - 1] += e;
      out.add_term(alpha, t.c);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view number_token() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' || peek() == '.')) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return s_.substr(start, pos_ - start);
  }

  mpq_class rational() {
    const std::size_t start = pos_;
    const auto tok = number_token();
    try {
      return GaussRational::parse_rational(tok);
    } catch (const ParseError& e) {
      throw ParseError("malformed rational '" + std::string(tok) + "'", start);
    }
  }

  GaussRational coefficient() {
    if (peek() != '(') return GaussRational(rational());
    get();
    GaussRational c;
    bool any = false;
    skip_ws();
    while (!at_end() && peek() != ')') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (any) {
        throw ParseError("expected '+' or '-' inside complex coefficient", pos_);
      }
      mpq_class v = 1;
      if (peek() != 'i') v = rational();
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
      }
      if (peek() == 'i') {
        get();
        c += GaussRational(0, sign * v);
      } else {
        c += GaussRational(sign * v, 0);
      }
      any = true;
      skip_ws();
    }
    if (at_end()) throw ParseError("unterminated '('", pos_);
    get();
    if (!any) throw ParseError("empty coefficient", pos_);
    return c;
  }

  std::pair<std::size_t, int> variable() {
    const std::size_t start = pos_;
    get();  // 'z'
    std::size_t k = 0;
    bool digits = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + static_cast<std::size_t>(get() - '0');
      digits = true;
    }
    if (!digits) throw ParseError("expected variable index after 'z'", pos_);
    if (k == 0) throw ParseError("variable indices start at z1", start);
    if (n_ && k > n_) throw ParseError("variable index z" + std::to_string(k) + " out of range", start);
    int e = 1;
    if (peek() == '^') {
      get();
      e = 0;
      bool exp_digits = false;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + (get() - '0');
        exp_digits = true;
      }
      if (!exp_digits) throw ParseError("expected exponent after '^'", pos_);
    }
    return {k, e};
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(k + 1);
    if (alpha[k] > 1) s += "^" + std::to_string(alpha[k]);
  }
  return s;
}

}  // namespace

CPoly parse_poly(std::string_view text, std::size_t n) { return Parser(text, n).run(); }

std::string format_poly(const CPoly& q) {
  if (q.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : q.terms()) {
    const std::string mono = monomial_text(alpha);
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      const mpq_class mag = abs(c.re());
      if (mono.empty() || mag != 1) coeff = mag.get_str();
    } else {
      coeff = c.to_string();
    }
    std::string term = coeff;
    if (!mono.empty()) term += (coeff.empty() ? "" : "*") + mono;
    if (first) {
      out = (negative ? "-" : "") + term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace pickpoly::mpoly
