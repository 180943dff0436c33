#pragma once

// Polynomial families generated by three-term recurrences
//
//     p_{k+1}(x) = (b_k x + c_k) p_k(x) - a_k p_{k-1}(x),   p_{-1} = 0, p_0 = 1.
//
// Every family below is reduced to this general form (`RecurrenceStep`), which
// is then evaluated either exactly (rational x) or in MPFR arithmetic.

#include "turankit/numeric.hpp"
#include "turankit/rational_poly.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace turankit {

/// Coefficient sequence a_n (or b_n, c_n for general recurrences).
class SequenceSpec {
 public:
  /// a_n = n / (2 (n + lambda)), the ultraspherical coefficients in symmetric-unit form.
  struct UltrasphericalA {
    Rational lambda;
  };
  /// a_n = n / 2, monic Hermite.
  struct HermiteMonicA {};
  /// values[i] is the term with index first_index + i.
  struct ExplicitList {
    std::vector<Rational> values;
    std::size_t first_index = 1;
  };
  /// User supplied formula, named for reporting.
  struct Formula {
    std::string name;
    std::function<Rational(std::size_t)> term;
  };
  using Kind = std::variant<UltrasphericalA, HermiteMonicA, ExplicitList, Formula>;

  SequenceSpec(Kind kind);  // NOLINT(google-explicit-constructor)

  static SequenceSpec ultraspherical(const Rational& lambda) { return SequenceSpec(UltrasphericalA{lambda}); }
  static SequenceSpec hermite_monic() { return SequenceSpec(HermiteMonicA{}); }
  static SequenceSpec list(std::vector<Rational> values, std::size_t first_index = 1) {
    return SequenceSpec(ExplicitList{std::move(values), first_index});
  }

  /// Term with index n.  Index 0 of a list starting at 1 is the a_0 = 0
  /// convention; any other index outside the list throws std::out_of_range.
  Rational at(std::size_t n) const;
  /// Largest valid index, when finite.
  std::optional<std::size_t> last_index() const;

  const Kind& kind() const noexcept { return kind_; }
  std::string describe() const;

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b);

 private:
  Kind kind_;
};

/// One step of the general recurrence, p_{k+1} = (b x + c) p_k - a p_{k-1}.
struct RecurrenceStep {
  Rational b;
  Rational c;
  Rational a;
};

class FamilySpec {
 public:
  /// Normalised Gegenbauer family G_n = C_n^(lambda) / C_n^(lambda)(1), lambda > -1/2.
  /// lambda = 0 is the Chebyshev T limit.
  struct Ultraspherical {
    Rational lambda;
  };
  /// (1 - a_n) p_{n+1} = x p_n - a_n p_{n-1}, 0 < a_n < 1, p_n(1) = 1.
  struct SymmetricUnit {
    SequenceSpec a;
  };
  /// p_{n+1} = x p_n - a_n p_{n-1}, a_n > 0.
  struct MonicSymmetric {
    SequenceSpec a;
  };
  /// p_{n+1} = (b_n x + c_n) p_n - a_n p_{n-1}; b and c are indexed from 0.
  struct GeneralThreeTerm {
    SequenceSpec a;
    SequenceSpec b;
    SequenceSpec c;
  };
  using Variant = std::variant<Ultraspherical, SymmetricUnit, MonicSymmetric, GeneralThreeTerm>;

  /// Throws std::invalid_argument for lambda <= -1/2.
  static FamilySpec ultraspherical(const Rational& lambda);
  static FamilySpec symmetric_unit(SequenceSpec a);
  static FamilySpec monic_symmetric(SequenceSpec a);
  static FamilySpec general(SequenceSpec a, SequenceSpec b, SequenceSpec c);
  static FamilySpec hermite_monic() { return monic_symmetric(SequenceSpec::hermite_monic()); }

  const Variant& variant() const noexcept { return variant_; }
  bool is_ultraspherical() const noexcept { return std::holds_alternative<Ultraspherical>(variant_); }
  bool is_monic_symmetric() const noexcept { return std::holds_alternative<MonicSymmetric>(variant_); }
  /// c_n = 0 for all n, hence p_n(-x) = (-1)^n p_n(x).
  bool symmetric() const noexcept { return !std::holds_alternative<GeneralThreeTerm>(variant_); }
  /// p_n(1) = 1 for every n.
  bool normalized_at_one() const noexcept;

  /// Lambda of an ultraspherical family; throws otherwise.
  const Rational& lambda() const;
  /// The a-sequence of a symmetric-unit or monic-symmetric family; throws otherwise.
  const SequenceSpec& a_sequence() const;

  /// Recurrence coefficients at index k, validating family constraints.
  RecurrenceStep step(std::size_t k) const;

  std::string describe() const;

  friend bool operator==(const FamilySpec& a, const FamilySpec& b);

 private:
  explicit FamilySpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// Values (and optionally derivatives) of p_{n-1}, p_n, p_{n+1} at x.
struct EvalTriple {
  std::size_t n = 0;
  Real x;
  Real p_prev;
  Real p_cur;
  Real p_next;
  std::optional<Real> dp_cur;
  std::optional<Real> dp_next;
  unsigned precision_bits = 0;
};

/// Forward recurrence.  Throws std::invalid_argument for precision below 53
/// bits or invalid family parameters, std::out_of_range for list overruns.
EvalTriple eval_triple(const FamilySpec& family, std::size_t n, const Real& x, Precision precision,
                       bool with_derivatives = false);

/// Recomputing at doubled precision moved every value by less than 2^(-bits/2) relative.
bool converged(const EvalTriple& value, const EvalTriple& doubled);

/// Raised when p_n(x) is numerically zero so p_{n+1}/p_n is undefined.
class NearZeroDivision : public std::domain_error {
 public:
  NearZeroDivision(const std::string& what, Real x) : std::domain_error(what), x_(std::move(x)) {}
  const Real& x() const noexcept { return x_; }

 private:
  Real x_;
};

/// t_n(x) = p_{n+1}(x) / p_n(x); exactly 1 at x = 1 for normalised families.
Real ratio_t(const FamilySpec& family, std::size_t n, const Real& x, Precision precision);

/// Exact values p_{n-1}, p_n, p_{n+1} at rational x.
struct ExactTriple {
  Rational p_prev;
  Rational p_cur;
  Rational p_next;
};
ExactTriple eval_exact(const FamilySpec& family, std::size_t n, const Rational& x);

/// Coefficients of p_n.
RationalPoly exact_coefficients(const FamilySpec& family, std::size_t n);
/// Coefficients of p_0 .. p_n.
std::vector<RationalPoly> exact_coefficients_upto(const FamilySpec& family, std::size_t n);

enum class HermiteDirection { MonicToStandard, StandardToMonic };

/// Rescales p_k by 2^(+k) (monic to standard H_k) or 2^(-k).
EvalTriple hermite_convert(const EvalTriple& values, HermiteDirection direction);

/// Precomputed MPFR recurrence coefficients, for evaluating many points of one family.
class RecurrenceTable {
 public:
  /// Steps 0..max_index (enough for p_0 .. p_{max_index + 1}).
  RecurrenceTable(const FamilySpec& family, std::size_t max_index, Precision precision);

  std::size_t max_index() const noexcept { return b_.size() - 1; }
  Precision precision() const noexcept { return precision_; }

  /// out[k] = p_k(x) for k = 0 .. max_index + 1.
  void values(const Real& x, std::vector<Real>& out) const;
  /// Values and derivatives, same layout.
  void values_and_derivatives(const Real& x, std::vector<Real>& out, std::vector<Real>& dout) const;

 private:
  Precision precision_;
  std::vector<Real> b_;
  std::vector<std::optional<Real>> c_;
  std::vector<Real> a_;
};

}  // namespace turankit
