#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pickpoly/pick.hpp"
#include "pickpoly/rif.hpp"

namespace pickpoly::engine {

using mpoly::CPoly;

struct ProblemData {
  std::size_t n = 0;
  std::array<std::vector<Complex>, 3> X;
  std::array<Complex, 3> w{};

  // Throws DomainError on boundary points, size mismatch or coincident nodes.
  void validate() const;
};

struct NormalizedData {
  std::vector<Complex> X1p, X2p;
  Complex w1p, w2p;
};

NormalizedData normalize(const ProblemData& data);

enum class CandidateKind { Coordinate, Reflected };
enum class CandidateSource { Builtin, UserFile, Generated };

struct CandidateH {
  CandidateKind kind = CandidateKind::Coordinate;
  CandidateSource source = CandidateSource::Builtin;
  std::size_t coordinate = 0;  // 0-based, Coordinate kind
  std::optional<CPoly> Q;      // Reflected kind
  std::uint64_t seed = 0;      // Generated source
  rif::RationalInner H;
  bool deficient = false;
  mpoly::Irreducibility irreducibility = mpoly::Irreducibility::Irreducible;
  mpoly::ZeroFreeStatus zero_free = mpoly::ZeroFreeStatus::Verified;

  std::string label() const;  // "z1" or the text of Q
};

CandidateH coordinate_candidate(std::size_t n, std::size_t j);

struct Rejection {
  CandidateSource source;
  std::string text;
  std::string reason;
};

struct StreamConfig {
  std::size_t n = 2;
  std::vector<std::string> user_polys;  // polynomial texts, one candidate each
  int gen_count = 20;                   // generated candidates to emit
  int gen_degree = 2;
  std::uint64_t seed = 1;
  mpoly::ZeroFreeOptions zero_free{};
};

// Lines of a candidate file; blank lines and '#' comments are dropped.
std::vector<std::string> read_candidate_file(const std::string& path);

// Coordinates, then user polynomials that pass the filters, then generated c - p(z).
class CandidateStream {
 public:
  explicit CandidateStream(StreamConfig config);

  std::optional<CandidateH> next();
  const std::vector<Rejection>& rejections() const { return rejections_; }

 private:
  std::optional<CandidateH> screen_user(const std::string& text);
  std::optional<CandidateH> generate();

  StreamConfig cfg_;
  std::size_t coord_ = 0;
  std::size_t user_ = 0;
  int generated_ = 0;
  int attempts_ = 0;
  std::mt19937_64 rng_;
  std::vector<Rejection> rejections_;
};

struct LOutcome {
  std::size_t l = 0;  // 0-based
  pick::PsdVerdict verdict;
};

enum class CheckStatus { Passed, Failed, Skipped };

struct CandidateOutcome {
  CheckStatus status = CheckStatus::Failed;
  std::string reason;
  std::optional<std::pair<Complex, Complex>> c;  // w'_j / H(X'_j)
  std::vector<LOutcome> per_l;                   // every non-degenerate l
};

CandidateOutcome check_candidate(const CandidateH& h, const NormalizedData& nd, double tol = 1e-9);

// F = psi_{w3}^{-1} o ((B o pi_l) H) o Psi_{X3}, or psi_{w3}^{-1} o (c H) o Psi_{X3} at rank 0.
struct Interpolant {
  std::vector<Complex> x3;
  Complex w3;
  CandidateH h;
  std::size_t l = 0;
  int rank = 0;
  std::optional<Complex> c;               // rank 0
  std::optional<pick::BlaschkeProduct> B;  // rank >= 1
  std::optional<std::pair<CPoly, CPoly>> expanded;  // numerator, denominator

  Complex operator()(std::span<const Complex> z) const;
  Complex evaluate_expanded(std::span<const Complex> z) const;
};

Interpolant assemble(const CandidateH& h, const LOutcome& outcome, std::pair<Complex, Complex> c,
                     const NormalizedData& nd, const ProblemData& data);

// Exact expansion of the composition with dyadic coefficients.
std::pair<CPoly, CPoly> expand_interpolant(const Interpolant& f);

struct VerifyReport {
  std::array<double, 3> residuals{};
  bool pass = false;  // residuals below tolerance
  rif::InnerReport inner;
};

VerifyReport verify(const Interpolant& f, const ProblemData& data, int samples = 200, double tol = 1e-9);

struct DecideConfig {
  StreamConfig stream;
  double tol = 1e-9;
  bool expand = false;
  int max_candidates = 100000;
  int inner_samples = 200;
};

struct CandidateRecord {
  std::string label;
  CandidateSource source;
  CandidateOutcome outcome;
  std::string note;  // assembly or verification failure after a PSD outcome
};

enum class DecideStatus { Feasible, Unknown };

struct FeasibilityReport {
  DecideStatus status = DecideStatus::Unknown;
  std::optional<Interpolant> interpolant;
  std::optional<VerifyReport> verification;
  std::array<bool, 3> necessary{};  // two-point condition for pairs (1,2), (1,3), (2,3)
  int candidates_tried = 0;
  std::vector<CandidateRecord> candidates;
  std::vector<Rejection> rejections;
  double wall_time = 0;  // seconds
};

FeasibilityReport decide(const ProblemData& data, const DecideConfig& config = {});

std::array<bool, 3> necessary_conditions(const ProblemData& data);

}  // namespace pickpoly::engine
