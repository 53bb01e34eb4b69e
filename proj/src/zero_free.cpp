#include "pickpoly/zero_free.hpp"

#include <cmath>
#include <deque>
#include <limits>

#include "pickpoly/roots.hpp"

namespace pickpoly::mpoly {

namespace {

struct Term {
  Complex coeff;
  double magnitude;
  std::vector<int> alpha;
};

// Product of per-coordinate regions: either the full disc |z| <= R or a square box.
struct Cell {
  std::vector<Complex> center;
  std::vector<double> half;  // disc radius or box half-width
  std::vector<bool> disc;

  double radius(std::size_t k) const { return disc[k] ? half[k] : half[k] * std::sqrt(2.0); }
};

double box_distance_to_origin(Complex c, double h) {
  const double dx = std::max(std::abs(c.real()) - h, 0.0);
  const double dy = std::max(std::abs(c.imag()) - h, 0.0);
  return std::hypot(dx, dy);
}

class Searcher {
 public:
  Searcher(const CPoly& q, const ZeroFreeOptions& opt)
      : n_(q.nvars()), opt_(opt), eval_(q), radius_(1.0 - opt.margin) {
    double total = 0;
    for (const auto& [alpha, c] : q.terms()) {
      terms_.push_back({c.to_complex(), std::abs(c.to_complex()), alpha.exponents()});
      total += terms_.back().magnitude;
    }
    slack_ = 64 * std::numeric_limits<double>::epsilon() * total * (1 + q.total_degree());
    for (std::size_t k = 0; k < n_; ++k) effective_.push_back(q.degree_in(k) > 0);
  }

  ZeroFreeVerdict run() {
    ZeroFreeVerdict verdict;
    std::deque<Cell> queue;
    queue.push_back({std::vector<Complex>(n_, 0.0), std::vector<double>(n_, radius_), std::vector<bool>(n_, true)});
    while (!queue.empty()) {
      if (verdict.cells_examined >= opt_.budget) {
        verdict.status = ZeroFreeStatus::Unknown;
        return verdict;
      }
      Cell cell = std::move(queue.front());
      queue.pop_front();
      ++verdict.cells_examined;
      if (discharged(cell)) continue;
      if (auto z = local_zero(cell)) {
        verdict.status = ZeroFreeStatus::ZeroFound;
        verdict.residual = std::abs(eval_(*z));
        verdict.point = std::move(z);
        return verdict;
      }
      split(cell, queue);
    }
    verdict.status = ZeroFreeStatus::Verified;
    return verdict;
  }

 private:
  // Lower bound |Q(c)| - sum_j sup|dQ/dz_j| * r_j over the cell.
  bool discharged(const Cell& cell) const {
    std::vector<double> bound(n_);
    for (std::size_t k = 0; k < n_; ++k)
      bound[k] = std::min(std::abs(cell.center[k]) + cell.radius(k), radius_);
    double drift = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!effective_[j]) continue;
      double gj = 0;
      for (const auto& t : terms_) {
        if (t.alpha[j] == 0) continue;
        double v = t.magnitude * t.alpha[j];
        for (std::size_t k = 0; k < n_; ++k) {
          const int e = t.alpha[k] - (k == j ? 1 : 0);
          if (e > 0) v *= std::pow(bound[k], e);
        }
        gj += v;
      }
      drift += gj * cell.radius(j);
    }
    return std::abs(eval_(cell.center)) - drift - slack_ > 0;
  }

  // Univariate slices through the cell center, one per effective coordinate.
  std::optional<std::vector<Complex>> local_zero(const Cell& cell) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!effective_[k]) continue;
      bool inside = true;
      for (std::size_t j = 0; j < n_; ++j)
        if (j != k && std::abs(cell.center[j]) > radius_) inside = false;
      if (!inside) continue;
      std::vector<Complex> coeffs;
      for (const auto& t : terms_) {
        Complex v = t.coeff;
        for (std::size_t j = 0; j < n_; ++j)
          if (j != k && t.alpha[j] > 0) v *= std::pow(cell.center[j], t.alpha[j]);
        const auto e = static_cast<std::size_t>(t.alpha[k]);
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] += v;
      }
      for (const Complex& root : univariate_roots(coeffs)) {
        if (std::abs(root) > radius_) continue;
        std::vector<Complex> z = cell.center;
        z[k] = root;
        if (std::abs(eval_(z)) < opt_.zero_tolerance) return z;
      }
    }
    return std::nullopt;
  }

  void split(const Cell& cell, std::deque<Cell>& queue) const {
    std::size_t k = 0;
    double widest = -1;
    for (std::size_t j = 0; j < n_; ++j)
      if (effective_[j] && cell.radius(j) > widest) {
        widest = cell.radius(j);
        k = j;
      }
    const double h = cell.half[k] / 2;
    for (int sx : {-1, 1})
      for (int sy : {-1, 1}) {
        Cell child = cell;
        child.center[k] = cell.center[k] + Complex(sx * h, sy * h);
        child.half[k] = h;
        child.disc[k] = false;
        if (box_distance_to_origin(child.center[k], h) > radius_) continue;
        queue.push_back(std::move(child));
      }
  }

  std::size_t n_;
  ZeroFreeOptions opt_;
  HornerPoly eval_;
  double radius_;
  double slack_ = 0;
  std::vector<Term> terms_;
  std::vector<bool> effective_;
};

}  // namespace

ZeroFreeVerdict zero_free_on_polydisc(const CPoly& q, const ZeroFreeOptions& options) {
  if (q.is_zero()) throw DomainError("zero polynomial vanishes everywhere");
  if (!(options.margin > 0 && options.margin < 1)) throw DomainError("margin must lie in (0, 1)");
  if (q.is_constant()) {
    ZeroFreeVerdict v;
    v.status = ZeroFreeStatus::Verified;
    v.cells_examined = 1;
    return v;
  }
  return Searcher(q, options).run();
}

}  // namespace pickpoly::mpoly
