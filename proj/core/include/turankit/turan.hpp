#pragma once

// Turan determinants
//
//     Delta_n(x) = w(x) p_n(x)^2 - p_{n-1}(x) p_{n+1}(x)
//
// with the weight w(x) = |x|^theta (bounded-support families) or
// x^2 / (x^2 + a_n - a_{n-1}) (monic symmetric families with increasing a_n).

#include "turankit/families.hpp"
#include "turankit/grid.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace turankit {

class ThetaRule {
 public:
  /// theta = 4 / (2 - lambda) for -1/2 < lambda <= 0, 2 / (1 + 2 lambda) for lambda >= 0.
  struct TheoremOne {
    Rational lambda;
  };
  /// theta = inf_n F(n) over the symmetric-unit coefficients, truncated at `horizon`
  /// and combined with the analytic limit when one is known.
  struct TheoremTwoInf {
    SequenceSpec a;
    std::size_t horizon = 1000;
  };
  /// Weight x^2 / (x^2 + a_n - a_{n-1}); not a power of |x|.
  struct HermiteFactor {};
  struct Custom {
    Rational theta;
  };
  using Kind = std::variant<TheoremOne, TheoremTwoInf, HermiteFactor, Custom>;

  ThetaRule(Kind kind) : kind_(std::move(kind)) {}  // NOLINT(google-explicit-constructor)
  static ThetaRule theorem_one(const Rational& lambda) { return ThetaRule(TheoremOne{lambda}); }
  static ThetaRule custom(const Rational& theta) { return ThetaRule(Custom{theta}); }
  static ThetaRule hermite_factor() { return ThetaRule(HermiteFactor{}); }

  const Kind& kind() const noexcept { return kind_; }
  bool is_power() const noexcept { return !std::holds_alternative<HermiteFactor>(kind_); }

  /// Exact exponent when it is rational (TheoremOne, Custom, closed-form TheoremTwoInf).
  std::optional<Rational> exact_theta() const;
  /// Exponent at the given precision; nullopt for HermiteFactor.
  std::optional<Real> theta(Precision precision) const;

  std::string describe() const;

 private:
  Kind kind_;
};

/// Exact piecewise exponent; throws std::invalid_argument for lambda <= -1/2.
Rational theta_theorem1(const Rational& lambda);

/// F(n) = 2 log(((1-a_n) a_{n+1}) / ((1-a_{n+1}) a_n)) / log(4 (1-a_n) a_{n+1}^2 / a_n).
Real theorem2_F(const Rational& a_n, const Rational& a_next, Precision precision);

struct TheoremTwoResult {
  /// min(finite minimum, analytic limit when known).
  Real theta;
  /// Index of the finite minimum; nullopt when the analytic limit is smaller.
  std::optional<std::size_t> argmin_n;
  /// F(1) .. F(horizon).
  std::vector<Real> F_values;
  Real finite_min;
  std::optional<Rational> analytic_limit;
  /// Finite minimum lies above the analytic limit (the infimum is not attained).
  bool finite_min_exceeds_limit = false;
  /// F(n+1) < F(n) across the horizon.
  bool strictly_decreasing = false;
};

/// Throws std::invalid_argument unless 1/2 < a_n < 1 and a_n strictly decreasing
/// for n = 1 .. horizon + 1.
TheoremTwoResult theta_theorem2(const SequenceSpec& a, std::size_t horizon, Precision precision);

enum class Backend { Numeric, Exact };

struct TuranSample {
  FamilySpec family;
  std::size_t n = 0;
  ThetaRule rule;
  Real x;
  Real delta;
  Backend backend = Backend::Numeric;
  unsigned precision_bits = 0;
};

/// Delta_n at x.  HermiteFactor needs a monic-symmetric family.
TuranSample turan_delta(const FamilySpec& family, std::size_t n, const ThetaRule& rule, const Real& x,
                        Precision precision);

/// Exact Delta_n at rational x for rules whose weight is rational there
/// (HermiteFactor, or |x|^theta with theta an integer, or x in {0, 1, -1}).
Rational turan_delta_exact(const FamilySpec& family, std::size_t n, const ThetaRule& rule, const Rational& x);

/// Evaluates Delta_1 .. Delta_{n_max} at many points of one family, sharing the recurrence.
class DeltaEvaluator {
 public:
  DeltaEvaluator(const FamilySpec& family, std::size_t n_max, const ThetaRule& rule, Precision precision);

  struct Point {
    /// delta[n] for n = 1 .. n_max (index 0 unused).
    std::vector<Real> delta;
    /// |w p_n^2| + |p_{n-1} p_{n+1}|, the magnitude of the cancelling terms.
    std::vector<Real> scale;
  };
  void evaluate(const Real& x, Point& out) const;
  Real delta(std::size_t n, const Real& x) const;

  std::size_t n_max() const noexcept { return n_max_; }
  Precision precision() const noexcept { return table_.precision(); }
  const std::optional<Real>& theta() const noexcept { return theta_; }

 private:
  Real weight(std::size_t n, const Real& x) const;

  std::size_t n_max_;
  RecurrenceTable table_;
  std::optional<Real> theta_;
  std::vector<Real> hermite_gap_;  // a_n - a_{n-1}
  mutable std::vector<Real> scratch_;
};

/// x^2 / (x^2 + 1/2) H_n^2 - H_{n-1} H_{n+1} for the standard Hermite
/// polynomials H_k = 2^k (monic H_k), evaluated through the monic recurrence.
Real hermite_standard_delta(std::size_t n, const Real& x, Precision precision);

/// Residual of the universal quadratic identity
///   ((x b_n + c_n)^2 / (4 a_n)) p_n^2 - p_{n-1} p_{n+1} - (p_{n+1} - a_n p_{n-1})^2 / (4 a_n),
/// computed exactly; identically zero.  Throws std::domain_error when a_n = 0.
Rational identity_residual(const FamilySpec& family, std::size_t n, const Rational& x);

struct UniversalBound {
  Rational weight;  // 1 + lambda^2 / (n (n + 2 lambda))
  Real delta_univ;  // weight x^2 y_n^2 - y_{n-1} y_{n+1}
};
UniversalBound universal_bound_check(const Rational& lambda, std::size_t n, const Real& x, Precision precision);

struct UniversalBoundExact {
  Rational weight;
  Rational delta_univ;
};
UniversalBoundExact universal_bound_check(const Rational& lambda, std::size_t n, const Rational& x);

enum class Monotonicity { StrictlyIncreasing, NonDecreasingEdge };

struct AskeyReport {
  Monotonicity hypothesis = Monotonicity::StrictlyIncreasing;
  std::size_t n_max = 0;
  std::size_t points = 0;
  Real min_value;
  Real argmin_x;
  std::size_t argmin_n = 0;
  bool all_nonnegative = false;
};

/// Plain Turan inequality p_n^2 - p_{n-1} p_{n+1} >= 0 for a monic symmetric
/// family with non-decreasing a_n, n = 1 .. n_max, on the grid.  Throws
/// std::invalid_argument when a_n decreases.
AskeyReport askey_turan_check(const SequenceSpec& a, std::size_t n_max, const std::vector<Real>& grid,
                              Precision precision);

}  // namespace turankit
