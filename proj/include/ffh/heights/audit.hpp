#pragma once

#include <vector>

#include "ffh/heights/height.hpp"

namespace ffh {

// One audited coefficient: h(value) <= bound.
struct AuditEntry {
  long index = 0;
  Elem value;
  Rational height, bound;
  bool ok = true;
};

struct SeriesAudit {
  FieldPtr field;  // field of the coefficients (may extend the input field)
  Rational hq;     // height of the input polynomial
  int n = 0;       // deg(q, Y)
  std::vector<AuditEntry> entries;
  bool heights_computable = true;
  bool passed() const;
};

// Power series solution f = a_0 + a_1 z + ... of q(z, f) = 0 through the
// chosen root of q(0, Y), computed by Q_{i+1} = Q_i(z, a_i + z Y) / z^k.
// Audits h(a_i) <= (deg(q, Y) + 1)^i h(q). The polynomial uses variables
// z and Y. InputError when the branch has no power series continuation,
// UnsupportedError when root adjunction exceeds tower_budget.
SeriesAudit series_solve_audit(const MPoly& q, long terms, int branch = 0, int tower_budget = 16);

// h(c_i) <= (rho + 1)^(i + 1) max(h(P), h(a)) for the first `terms`
// coefficients of the place.
SeriesAudit place_coefficient_audit(const CurveModel& c, const Place& p, long terms);

struct MonomialAudit {
  long l = 0, j = 0;
  long leading = 0;   // exponent of the first nonzero coefficient
  long offset = 0;    // j nu, plus l mu at infinity
  long bound = 0;     // -l rho - rho^2
  bool leading_ok = false;
  std::vector<AuditEntry> entries;  // h(beta_s) <= ((s+1)^2 (rho+1)^(s+2) + l) max(h(P), h(pi(x)))
  bool heights_computable = true;
  bool passed() const;
};

MonomialAudit monomial_audit(const CurveModel& c, const Place& p, long l, long j, long terms, bool with_heights = true);

}  // namespace ffh
