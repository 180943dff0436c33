#include "turankit/certify.hpp"

#include "turankit/sturm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace turankit {

std::string to_string(CertificateMode mode) {
  return mode == CertificateMode::ExactSturm ? "exact-sturm" : "numeric-scan";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::CertifiedNonnegative:
      return "certified";
    case Outcome::Counterexample:
      return "counterexample";
    case Outcome::Inconclusive:
      break;
  }
  return "inconclusive";
}

// ---------------------------------------------------------------------------
// Exact route

namespace {

unsigned small_unsigned(const Integer& v, const char* what) {
  if (v <= 0 || v > 100000) throw std::invalid_argument(std::string("certify_exact: ") + what + " out of range");
  return v.convert_to<unsigned>();
}

}  // namespace

Certificate certify_exact(const Rational& lambda, std::size_t n, const Rational& theta) {
  if (n == 0) throw std::invalid_argument("certify_exact needs n >= 1");
  if (theta <= 0 || theta > 2) throw std::invalid_argument("certify_exact needs 0 < theta <= 2");
  const FamilySpec family = FamilySpec::ultraspherical(lambda);
  const Precision p(kDefaultPrecisionBits);

  ExactDetails d;
  d.u = small_unsigned(boost::multiprecision::numerator(theta), "theta numerator");
  d.v = small_unsigned(boost::multiprecision::denominator(theta), "theta denominator");

  const std::vector<RationalPoly> g = exact_coefficients_upto(family, n + 1);
  const RationalPoly prev = substitute_power(g[n - 1], d.v);
  const RationalPoly cur = substitute_power(g[n], d.v);
  const RationalPoly next = substitute_power(g[n + 1], d.v);
  const RationalPoly delta = RationalPoly::monomial(1, d.u) * cur * cur - prev * next;
  if (delta.is_zero()) throw std::logic_error("certify_exact: Delta vanished identically");

  const CompressedPoly compressed = compress_exponents(delta);
  const RationalPoly& q = compressed.poly;
  d.step = compressed.step;
  d.degree = q.degree();
  d.value_at_zero = q(Rational(0));
  d.value_at_one = q(Rational(1));
  const Deflation defl = deflate_at_one(q);
  d.multiplicity = defl.multiplicity;
  const RationalPoly& quotient = defl.quotient;
  d.interior_roots = quotient.degree() > 0 ? SturmChain(quotient).count(Rational(0), Rational(1)) : 0;
  if (d.interior_roots > 0) {
    const RationalPoly odd = odd_multiplicity_part(quotient);
    d.sign_changing_roots = odd.degree() > 0 ? SturmChain(odd).count(Rational(0), Rational(1)) : 0;
  }
  d.sample_point = Rational(1, 2);
  d.sample_value = quotient(d.sample_point);
  for (long den = 3; d.sample_value == 0; ++den) {
    for (long num = 1; num < den && d.sample_value == 0; ++num) {
      d.sample_point = Rational(num, den);
      d.sample_value = quotient(d.sample_point);
    }
  }

  Certificate c;
  c.mode = CertificateMode::ExactSturm;
  c.family = family.describe();
  c.n = n;
  c.theta = to_string(theta);
  c.theta_exact = theta;
  c.lo = to_real(0, p);
  c.hi = to_real(1, p);

  // Exponent of x in terms of sigma = s^step: x = sigma^(v / step).
  const Real x_exponent = to_real(Rational(Rational(d.v) / d.step), p);
  auto x_of = [&](const Rational& sigma) { return abs_pow(to_real(sigma, p), x_exponent); };

  const bool endpoints_ok = d.value_at_zero >= 0 && d.value_at_one >= 0;
  if (d.sign_changing_roots == 0 && d.sample_value > 0 && endpoints_ok) {
    c.outcome = Outcome::CertifiedNonnegative;
    const bool zero_is_min = d.value_at_zero <= d.value_at_one;
    c.min_value = to_real(zero_is_min ? d.value_at_zero : d.value_at_one, p);
    c.argmin_x = to_real(zero_is_min ? 0 : 1, p);
    if (d.interior_roots > 0) {
      // Even-multiplicity roots: Delta touches zero there.
      const Rational width(1, 1 << 20);
      const Interval first = isolate_real_roots(quotient, Rational(0), Rational(1), width).front();
      c.min_value = to_real(0, p);
      c.argmin_x = x_of(Rational((first.lo + first.hi) / 2));
      c.notes = std::to_string(d.interior_roots) + " interior zero(s) of even multiplicity";
    }
  } else {
    // Look for a rational sigma with q(sigma) < 0 among the isolating-interval
    // endpoints (the sign of q is constant between consecutive roots).
    std::vector<Rational> candidates{Rational(0), Rational(1, 2)};
    if (d.interior_roots > 0) {
      const Rational width(1, 1 << 20);
      for (const Interval& iv : isolate_real_roots(quotient, Rational(0), Rational(1), width)) {
        candidates.push_back(iv.lo);
        candidates.push_back(iv.hi);
      }
    }
    Rational best_sigma = candidates.front();
    Rational best_value = q(best_sigma);
    for (const Rational& sigma : candidates) {
      if (sigma < 0 || sigma > 1) continue;
      const Rational value = q(sigma);
      if (value < best_value) {
        best_value = value;
        best_sigma = sigma;
      }
    }
    c.min_value = to_real(best_value, p);
    c.argmin_x = x_of(best_sigma);
    if (best_value < 0) {
      c.outcome = Outcome::Counterexample;
    } else {
      c.outcome = Outcome::Inconclusive;
      c.notes = "odd-multiplicity root inside (0,1) but no negative value found at the sampled points";
    }
  }
  c.exact = d;
  return c;
}

// ---------------------------------------------------------------------------
// Numeric route

namespace {

struct RawMin {
  Real value;
  Real x;
  Real scale;
};

// Golden-section search for a minimum of f on [a, b]; returns the best point seen.
template <class F>
void golden_section(F&& f, Real a, Real b, std::size_t iterations, RawMin& best, Precision p) {
  const Real inv_phi = (sqrt(to_real(5, p)) - 1) / 2;
  Real c = b - inv_phi * (b - a);
  Real d = a + inv_phi * (b - a);
  Real fc = f(c);
  Real fd = f(d);
  auto consider = [&](const Real& x, const Real& v) {
    if (v < best.value) {
      best.value = v;
      best.x = x;
    }
  };
  consider(c, fc);
  consider(d, fd);
  for (std::size_t i = 0; i < iterations; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
}

// Minimum of Delta_n over the grid and refinement, for every n in 1..n_max.
std::vector<RawMin> raw_scan(const FamilySpec& family, std::size_t n_max, const ThetaRule& rule,
                             const Interval& range, const ScanOptions& options, Precision p) {
  const std::vector<Real> grid = clustered_grid(range, options.grid_size, p);
  const DeltaEvaluator eval(family, n_max, rule, p);

  std::vector<std::vector<Real>> values(n_max + 1, std::vector<Real>(grid.size()));
  DeltaEvaluator::Point pt;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    eval.evaluate(grid[i], pt);
    for (std::size_t n = 1; n <= n_max; ++n) values[n][i] = pt.delta[n];
  }

  std::vector<RawMin> out(n_max + 1);
  const std::size_t last = grid.size() - 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::vector<Real>& v = values[n];
    std::vector<std::size_t> minima;
    for (std::size_t i = 0; i <= last; ++i) {
      const bool left = i == 0 || v[i] <= v[i - 1];
      const bool right = i == last || v[i] <= v[i + 1];
      if (left && right) minima.push_back(i);
    }
    std::sort(minima.begin(), minima.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    if (minima.size() > options.refine_candidates) minima.resize(options.refine_candidates);

    RawMin best{v[minima.front()], grid[minima.front()], make_real(p)};
    auto f = [&](const Real& x) { return eval.delta(n, x); };
    for (std::size_t i : minima) {
      const Real& a = grid[i == 0 ? 0 : i - 1];
      const Real& b = grid[i == last ? last : i + 1];
      if (a < b) golden_section(f, a, b, options.refine_iterations, best, p);
    }
    eval.evaluate(best.x, pt);
    best.scale = pt.scale[n];
    out[n] = std::move(best);
  }
  return out;
}

Certificate classify(const FamilySpec& family, std::size_t n, const ThetaRule& rule, const Interval& range,
                     const ScanOptions& options, Precision p, RawMin raw, bool escalated) {
  Certificate c;
  c.mode = CertificateMode::NumericScan;
  c.family = family.describe();
  c.n = n;
  c.theta = rule.describe();
  c.theta_exact = rule.exact_theta();
  c.lo = to_real(range.lo, p);
  c.hi = to_real(range.hi, p);
  c.min_value = raw.value;
  c.argmin_x = raw.x;
  c.scan = ScanDetails{options.grid_size, p.bits(), escalated, raw.scale};

  const Real cex_threshold = p.tolerance(3);
  if (raw.value < -cex_threshold) {
    const Precision check = p.doubled();
    const Real again = DeltaEvaluator(family, n, rule, check).delta(n, raw.x);
    if (again < -cex_threshold) {
      c.outcome = Outcome::Counterexample;
      c.notes = "witness re-verified at " + std::to_string(check.bits()) + " bits";
      return c;
    }
  } else if (raw.value >= -p.tolerance(2) * raw.scale) {
    c.outcome = Outcome::CertifiedNonnegative;
    return c;
  }
  c.outcome = Outcome::Inconclusive;
  c.notes = "minimum inside the rounding band";
  return c;
}

Certificate scan_one_escalated(const FamilySpec& family, std::size_t n, const ThetaRule& rule,
                               const Interval& range, const ScanOptions& options) {
  const Precision p = options.precision.doubled();
  std::vector<RawMin> raw = raw_scan(family, n, rule, range, options, p);
  return classify(family, n, rule, range, options, p, std::move(raw[n]), true);
}

void validate_scan(std::size_t n, const Interval& range, const ScanOptions& options) {
  if (n == 0) throw std::invalid_argument("scan needs n >= 1");
  if (options.grid_size < 64) throw std::invalid_argument("scan needs grid_size >= 64");
  if (!(range.lo < range.hi)) throw std::invalid_argument("scan needs lo < hi");
}

}  // namespace

std::vector<Certificate> scan_min_range(const FamilySpec& family, std::size_t n_max, const ThetaRule& rule,
                                        const Interval& range, const ScanOptions& options) {
  validate_scan(n_max, range, options);
  std::vector<RawMin> raw = raw_scan(family, n_max, rule, range, options, options.precision);
  std::vector<Certificate> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Certificate c = classify(family, n, rule, range, options, options.precision, std::move(raw[n]), false);
    if (c.outcome == Outcome::Inconclusive && options.allow_escalation) {
      c = scan_one_escalated(family, n, rule, range, options);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Certificate scan_min(const FamilySpec& family, std::size_t n, const ThetaRule& rule, const Interval& range,
                     const ScanOptions& options) {
  validate_scan(n, range, options);
  std::vector<RawMin> raw = raw_scan(family, n, rule, range, options, options.precision);
  Certificate c = classify(family, n, rule, range, options, options.precision, std::move(raw[n]), false);
  if (c.outcome == Outcome::Inconclusive && options.allow_escalation) {
    c = scan_one_escalated(family, n, rule, range, options);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Taylor coefficients at x = 1

TaylorCheck taylor_slope_check(const Rational& lambda, std::size_t n, const Rational& theta) {
  if (n == 0) throw std::invalid_argument("taylor check needs n >= 1");
  const Precision p(kEscalatedPrecisionBits);
  const FamilySpec family = FamilySpec::ultraspherical(lambda);
  const DeltaEvaluator eval(family, n, ThetaRule::custom(theta), p);

  Real h[3];
  Real f[3];
  for (int k = 0; k < 3; ++k) {
    h[k] = to_real(1, p);
    mpfr_mul_2si(h[k].backend().data(), h[k].backend().data(), -(30 + k), MPFR_RNDN);
    f[k] = eval.delta(n, Real(1 - h[k])) / h[k];
  }
  // f(h) = c1 + c2 h + c3 h^2 + ...
  TaylorCheck t;
  t.slope_fd = 2 * f[1] - f[0];
  const Real d1 = (f[0] - f[1]) / (h[0] - h[1]);
  const Real d2 = (f[1] - f[2]) / (h[1] - h[2]);
  const Real s1 = h[0] + h[1];
  const Real s2 = h[1] + h[2];
  t.quad_fd = (d2 * s1 - d1 * s2) / (s1 - s2);

  const Rational k = 1 + 2 * lambda;
  t.slope_formula = to_real(Rational((2 - theta * k) / k), p);
  const Real one = to_real(1, p);
  t.slope_matches = abs(t.slope_fd - t.slope_formula) <= Real(1e-6) * max(one, Real(abs(t.slope_formula)));
  if (lambda >= 0 && theta == 2 / k) {
    const Rational nn(n);
    const Rational quad = 4 * (3 * nn * nn + 6 * lambda * nn + 2 * lambda * lambda - lambda) / ((3 + 2 * lambda) * k * k);
    t.quad_formula = to_real(quad, p);
    t.quad_matches = abs(t.quad_fd - *t.quad_formula) <= Real(1e-8) * max(one, Real(abs(*t.quad_formula)));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Batch tables

std::vector<BatchRow> batch_table(const std::vector<Rational>& lambdas, const std::vector<std::size_t>& ns,
                                  BatchMode mode, const BatchOptions& options) {
  if (lambdas.empty()) throw std::invalid_argument("batch_table needs a nonempty lambda grid");
  if (ns.empty()) throw std::invalid_argument("batch_table needs a nonempty n grid");
  std::vector<BatchRow> rows;
  rows.reserve(lambdas.size() * ns.size());
  for (const Rational& lambda : lambdas) {
    // One shared scan per lambda for the numeric check.
    std::map<std::size_t, Certificate> scanned;
    std::string shared_error;
    if (mode == BatchMode::Check && !options.exact) {
      try {
        const std::size_t n_max = *std::max_element(ns.begin(), ns.end());
        std::vector<Certificate> certs = scan_min_range(FamilySpec::ultraspherical(lambda), n_max,
                                                        ThetaRule::theorem_one(lambda), Interval{0, 1}, options.scan);
        for (std::size_t n = 1; n <= n_max; ++n) scanned.emplace(n, std::move(certs[n - 1]));
      } catch (const std::exception& e) {
        shared_error = e.what();
      }
    }
    for (std::size_t n : ns) {
      BatchRow row;
      row.lambda = lambda;
      row.n = n;
      try {
        if (mode == BatchMode::SharpTheta) {
          row.estimate = sharp_theta(lambda, n, options.sharp);
        } else if (options.exact) {
          row.certificate = certify_exact(lambda, n, theta_theorem1(lambda));
        } else if (!shared_error.empty()) {
          row.error = shared_error;
        } else if (n == 0) {
          row.error = "n must be >= 1";
        } else {
          row.certificate = scanned.at(n);
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace turankit
