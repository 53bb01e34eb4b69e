#pragma once

#include <optional>
#include <vector>

#include "pickpoly/cpoly.hpp"

namespace pickpoly::mpoly {

enum class ZeroFreeStatus { Verified, ZeroFound, Unknown };

struct ZeroFreeVerdict {
  ZeroFreeStatus status = ZeroFreeStatus::Unknown;
  std::optional<std::vector<Complex>> point;  // present iff ZeroFound
  double residual = 0.0;                      // |Q(point)| when ZeroFound
  long cells_examined = 0;
};

struct ZeroFreeOptions {
  long budget = 200000;          // cells
  double margin = 1e-3;          // certify on the closed polydisc of radius 1 - margin
  double zero_tolerance = 1e-12;  // |Q(point)| below this confirms a zero
};

// Semi-decision for Z(Q) on the (1 - margin)-polydisc. Verified certifies that no
// zero lies in the closed polydisc of radius 1 - margin (a proxy for the open unit
// polydisc); ZeroFound carries a point with every |z_k| <= 1 - margin.
ZeroFreeVerdict zero_free_on_polydisc(const CPoly& q, const ZeroFreeOptions& options = {});

}  // namespace pickpoly::mpoly
