#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffh/heights/laws.hpp"
#include "ffh/heights/log_constant.hpp"
#include "ffh/rr/riemann_roch.hpp"

namespace ffh {

struct Lambda {
  long l1 = 0, l2 = 0;
};
// l2 = ceil(rho / (2 eps)), l1 = floor(l2 + rho / 2); the three companion
// inequalities are asserted. InputError unless 0 < eps < 1 and rho >= 1.
Lambda lambda_params(long rho, const Rational& eps);

struct Mobius {
  Rational c1 = 0, c2 = 1;
};
// x / (c1 x + c2) has no pole where y has one. c1 = 1 whenever x has a
// pole where y has one; c2 is scanned over 1..64.
Mobius choose_mobius(const CurveModel& c, const PlaceOptions& opt = {});
// Independent check: recomputes both pole supports.
bool poles_disjoint(const CurveModel& c, const Mobius& mb, const PlaceOptions& opt = {});

// 75 2^13 (1/eps)^6 (rho+1)^(40 (rho+1)^9 / eps^3) hP.
LogConstant constant_C(long rho, const Rational& eps, const Rational& hP);

struct PlaceHeightEntry {
  std::string key;
  Rational height, bound;
  bool ok = true;
};

struct TheoremParameters {
  Rational eps;
  long rho = 0, m = 0, n = 0;
  Lambda lambda;
  Mobius mobius;
  Divisor ypoles, xbar_poles;  // divs(y)^-, divs(x / (c1 x + c2))^-
  Divisor D;                   // l1 n divs(y)^- - l2 m divs(xbar)^-
  Divisor D_lower;             // l2 m divs(xbar)^- - (2 l2 - l1) n divs(y)^-
  long degree = 0;
  bool degree_ok = false;  // deg D = (l1 - l2) n m >= (rho - 1)(rho - 2)/2
  std::vector<PlaceHeightEntry> place_heights;
  bool place_heights_ok = true;
  Rational hP;
  LogConstant C;
};

TheoremParameters theorem_divisor(const CurveModel& c, const Rational& eps, const PlaceOptions& opt = {});

// m1 h(pi(alpha)) <= m2 h(pi(beta)) + m1 m2 h(Q); nullopt stands for a
// value at infinity (height 0). When both values are finite they must be a
// zero of Q (variables in order alpha, beta); check_zero = false skips
// that test when the caller already holds a certificate.
HeightLawReport per_place_inequality(const MPoly& Q, const std::optional<Elem>& alpha, const std::optional<Elem>& beta,
                                     long m1, long m2, bool check_zero = true);

// A <= B coefficientwise.
bool divisor_leq(const Divisor& A, const Divisor& B);

struct ConstantCheck {
  std::string name;
  Rational lhs;
  std::string bound;
  bool ok = false;
};

enum class Tier { Heights, Full };

struct QuasiSample {
  std::string a, b;  // b is rendered in its field
  std::string field;
  Rational ha, hb;
  Rational m_ha, n_hb;
  ConstantCheck upper, lower;
  std::vector<HeightLawReport> chain;  // full tier
  std::vector<ConstantCheck> chain_constants;
  std::string chain_note;
  bool passed() const;
};

struct QuasiSkip {
  std::string a;
  std::string reason;
};

// Constructions behind the full tier, for one side of the theorem.
struct SideData {
  std::string side;  // upper | lower
  DivisorContext ctx;
  RRElement z;
  MinimalPolynomialResult Q1, Q2;
  BoundCheck Q1_bound, Q2_bound;
  bool hypotheses_ok = false;
  LogConstant T;
};

struct QuasiReport {
  std::string curve;
  TheoremParameters params;
  Tier tier = Tier::Heights;
  std::vector<QuasiSample> samples;
  std::vector<QuasiSkip> skipped;
  std::vector<SideData> sides;
  bool passed() const;
};

QuasiReport quasi_check(const CurveModel& c, const std::vector<RatFunc>& samples, const Rational& eps, Tier tier,
                        const PlaceOptions& opt = {}, int jobs = 1);

}  // namespace ffh
