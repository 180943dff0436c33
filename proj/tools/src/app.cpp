#include "turankit/cli/app.hpp"

#include "turankit/audit.hpp"
#include "turankit/certify.hpp"
#include "turankit/cli/family_file.hpp"
#include "turankit/cli/svg_plot.hpp"
#include "turankit/cli/table.hpp"
#include "turankit/curves.hpp"
#include "turankit/families.hpp"
#include "turankit/grid.hpp"
#include "turankit/turan.hpp"
#include "turankit/zeros.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace turankit::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string family = "ultraspherical";
  std::string family_file;
  std::string lambda;
  std::string theta = "auto";
  std::string n;
  std::string x;
  std::optional<std::size_t> grid;
  std::optional<unsigned> precision;
  std::string tol;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::string format;
  std::string out;
  std::string range;
  bool exact = false;
  bool symbolic = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* what) {
  if (text.empty()) throw UsageError(std::string("--") + what + " is required");
  std::vector<Rational> out;
  for (const std::string& part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

Rational single_rational(const std::string& text, const char* what) {
  const std::vector<Rational> v = parse_rational_list(text, what);
  if (v.size() != 1) throw UsageError(std::string("--") + what + " takes a single value here");
  return v.front();
}

std::size_t single_index(const std::string& text) {
  const std::vector<std::size_t> v = parse_index_list(text);
  if (v.size() != 1) throw UsageError("--n takes a single value here");
  return v.front();
}

Interval parse_range(const std::string& text, const Interval& fallback) {
  if (text.empty()) return fallback;
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--range expects lo,hi");
  Interval r{parse_rational(parts[0]), parse_rational(parts[1])};
  if (!(r.lo < r.hi)) throw UsageError("--range needs lo < hi");
  return r;
}

Precision precision_of(const Options& o) { return o.precision ? Precision(*o.precision) : default_precision(); }

void require_positive(const std::vector<std::size_t>& ns) {
  if (ns.front() == 0) throw UsageError("--n must be >= 1");
}

std::vector<Rational> ultraspherical_lambdas(const Options& o) {
  std::vector<Rational> ls = parse_rational_list(o.lambda, "lambda");
  for (const Rational& l : ls) {
    if (l <= Rational(-1, 2)) throw UsageError("lambda must exceed -1/2, got " + to_string(l));
  }
  return ls;
}

std::string dec(const Real& x) { return to_decimal(x); }
std::string dec(const Rational& q, Precision p) { return to_decimal(to_real(q, p)); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

void append_note(std::string& notes, const std::string& more) {
  if (more.empty()) return;
  if (!notes.empty()) notes += "; ";
  notes += more;
}

// One family together with the lambda label shown in tables.
struct FamilyCase {
  std::string label;
  FamilySpec family;
};

std::vector<FamilyCase> family_cases(const Options& o) {
  if (!o.family_file.empty()) {
    FamilySpec f = read_family_file(o.family_file);
    const std::string label = f.is_ultraspherical() ? to_string(f.lambda()) : "";
    return {FamilyCase{label, std::move(f)}};
  }
  if (o.family == "hermite" || o.family == "hermite-monic") return {FamilyCase{"", FamilySpec::hermite_monic()}};
  if (o.family == "legendre") return {FamilyCase{"1/2", FamilySpec::ultraspherical(Rational(1, 2))}};
  if (o.family == "chebyshev") return {FamilyCase{"0", FamilySpec::ultraspherical(Rational(0))}};
  if (o.family != "ultraspherical") throw UsageError("unknown --family \"" + o.family + "\"");
  std::vector<FamilyCase> cases;
  for (const Rational& l : ultraspherical_lambdas(o)) cases.push_back({to_string(l), FamilySpec::ultraspherical(l)});
  return cases;
}

ThetaRule theta_rule(const Options& o, const FamilySpec& family) {
  if (o.theta == "auto") {
    if (family.is_ultraspherical()) return ThetaRule::theorem_one(family.lambda());
    if (family.is_monic_symmetric()) return ThetaRule::hermite_factor();
    if (std::holds_alternative<FamilySpec::SymmetricUnit>(family.variant())) {
      return ThetaRule(ThetaRule::TheoremTwoInf{family.a_sequence(), 1000});
    }
    throw UsageError("--theta auto has no default for general recurrences; give a value");
  }
  if (o.theta == "thm2") {
    if (family.is_ultraspherical()) {
      return ThetaRule(ThetaRule::TheoremTwoInf{SequenceSpec::ultraspherical(family.lambda()), 1000});
    }
    if (std::holds_alternative<FamilySpec::SymmetricUnit>(family.variant())) {
      return ThetaRule(ThetaRule::TheoremTwoInf{family.a_sequence(), 1000});
    }
    throw UsageError("--theta thm2 needs an ultraspherical or symmetric-unit family");
  }
  if (o.theta == "hermite") return ThetaRule::hermite_factor();
  return ThetaRule::custom(parse_rational(o.theta));
}

Interval default_range(const FamilySpec& family) {
  if (family.is_monic_symmetric()) return Interval{-8, 8};
  if (!family.symmetric()) return Interval{-1, 1};
  return Interval{0, 1};
}

class Output {
 public:
  Output(const Options& o, std::ostream& fallback, std::string default_format)
      : path_(o.out), fallback_(fallback), format_(o.format.empty() ? std::move(default_format) : o.format) {}

  const std::string& format() const { return format_; }

  void write_table(const Table& t) {
    if (format_ != "csv" && format_ != "json") throw UsageError("--format must be csv or json here");
    std::ostringstream s;
    if (format_ == "csv") {
      write_csv(t, s);
    } else {
      write_json(t, s);
    }
    write_text(s.str());
  }

  void write_text(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path_);
    f << text;
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::string format_;
};

// ---------------------------------------------------------------- eval

int cmd_eval(const Options& o, Output& out) {
  const std::vector<FamilyCase> cases = family_cases(o);
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "1" : o.n);
  const std::vector<Rational> xs = parse_rational_list(o.x, "x");
  const Precision p = precision_of(o);

  Table t{{"lambda", "n", "x", "p_prev", "p_cur", "p_next", "t_n", "p_prev_exact", "p_cur_exact", "p_next_exact",
           "precision_bits"},
          {}};
  bool math_error = false;
  for (const FamilyCase& c : cases) {
    for (std::size_t n : ns) {
      for (const Rational& x : xs) {
        const EvalTriple v = eval_triple(c.family, n, to_real(x, p), p);
        std::string ratio;
        if (n == 0 && v.p_cur == 0) {
          ratio = "undefined";
        } else {
          try {
            ratio = dec(ratio_t(c.family, n, to_real(x, p), p));
          } catch (const NearZeroDivision&) {
            ratio = "undefined";
            math_error = true;
          }
        }
        const ExactTriple e = eval_exact(c.family, n, x);
        t.add({c.label, std::to_string(n), to_string(x), dec(v.p_prev), dec(v.p_cur), dec(v.p_next), ratio,
               to_string(e.p_prev), to_string(e.p_cur), to_string(e.p_next), std::to_string(v.precision_bits)});
      }
    }
  }
  out.write_table(t);
  return math_error ? kExitFailure : kExitOk;
}

// ---------------------------------------------------------------- check / certify

const std::vector<std::string> kCheckColumns{"lambda",  "n",        "theta",          "mode", "outcome",
                                             "min_delta", "argmin_x", "precision_bits", "notes"};

std::string theta_cell(const ThetaRule& rule, Precision p) {
  const std::optional<Real> th = rule.theta(p);
  return th ? dec(*th) : rule.describe();
}

std::string theta_note(const ThetaRule& rule) {
  const std::optional<Rational> q = rule.exact_theta();
  return q ? "theta=" + to_string(*q) : "";
}

int cmd_check(const Options& o, Output& out, bool exact) {
  const std::vector<FamilyCase> cases = family_cases(o);
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "1" : o.n);
  require_positive(ns);
  const Precision p = precision_of(o);
  ScanOptions so;
  so.grid_size = o.grid.value_or(4096);
  so.precision = p;
  if (so.grid_size < 64) throw UsageError("--grid must be at least 64");

  Table t{kCheckColumns, {}};
  bool violation = false;
  for (const FamilyCase& c : cases) {
    const ThetaRule rule = theta_rule(o, c.family);
    auto error_rows = [&](const std::string& what, const std::string& mode) {
      for (std::size_t n : ns) {
        std::string notes = theta_note(rule);
        append_note(notes, "error: " + what);
        t.add({c.label, std::to_string(n), "", mode, "error", "", "", "", notes});
      }
    };
    auto add_row = [&](const Certificate& cert, const std::string& theta) {
      if (cert.outcome == Outcome::Counterexample) violation = true;
      std::string notes = theta_note(rule);
      append_note(notes, cert.notes);
      if (cert.exact) {
        append_note(notes, "degree=" + std::to_string(cert.exact->degree) +
                               " multiplicity_at_one=" + std::to_string(cert.exact->multiplicity));
      }
      const std::string bits = cert.scan ? std::to_string(cert.scan->precision_bits) : "exact";
      t.add({c.label, std::to_string(cert.n), theta, to_string(cert.mode), to_string(cert.outcome),
             dec(cert.min_value), dec(cert.argmin_x), bits, notes});
    };

    if (exact) {
      const std::optional<Rational> th = rule.exact_theta();
      if (!c.family.is_ultraspherical() || !th) {
        error_rows("the exact route needs an ultraspherical family and a rational theta", "exact-sturm");
        continue;
      }
      for (std::size_t n : ns) {
        try {
          add_row(certify_exact(c.family.lambda(), n, *th), theta_cell(rule, p));
        } catch (const std::exception& e) {
          std::string notes = theta_note(rule);
          append_note(notes, std::string("error: ") + e.what());
          t.add({c.label, std::to_string(n), theta_cell(rule, p), "exact-sturm", "error", "", "", "", notes});
        }
      }
      continue;
    }

    try {
      const Interval range = parse_range(o.range, default_range(c.family));
      const std::vector<Certificate> certs = scan_min_range(c.family, ns.back(), rule, range, so);
      const std::string theta = theta_cell(rule, p);
      for (std::size_t n : ns) add_row(certs[n - 1], theta);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      error_rows(e.what(), "numeric-scan");
    }
  }
  out.write_table(t);
  return violation ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- sharp-theta

int cmd_sharp_theta(const Options& o, Output& out) {
  const std::vector<Rational> lambdas = ultraspherical_lambdas(o);
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "1" : o.n);
  require_positive(ns);
  const Precision p = precision_of(o);
  BatchOptions bo;
  bo.sharp.precision = p;
  bo.sharp.grid_size = o.grid.value_or(2048);
  if (!o.tol.empty()) bo.sharp.tol = parse_rational(o.tol);
  if (bo.sharp.tol < Rational(1, 1000000)) throw UsageError("--tol must be at least 1e-6");

  Table t{{"lambda", "n", "theta_lo", "theta_hi", "theta_lo_exact", "theta_hi_exact", "iterations", "backend",
           "hi_is_ceiling", "empirical", "notes"},
          {}};
  for (const BatchRow& row : batch_table(lambdas, ns, BatchMode::SharpTheta, bo)) {
    if (!row.estimate) {
      t.add({to_string(row.lambda), std::to_string(row.n), "", "", "", "", "", "numeric-scan", "", "",
             "error: " + row.error});
      continue;
    }
    const ThetaEstimate& e = *row.estimate;
    t.add({to_string(e.lambda), std::to_string(e.n), dec(e.theta_lo, p), dec(e.theta_hi, p), to_string(e.theta_lo),
           to_string(e.theta_hi), std::to_string(e.iterations), e.backend, yes_no(e.hi_is_ceiling),
           yes_no(e.empirical), e.notes});
  }
  out.write_table(t);
  return kExitOk;
}

// ---------------------------------------------------------------- claims

int cmd_claims(const Options& o, Output& out) {
  const std::vector<Rational> lambdas = ultraspherical_lambdas(o);
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "1" : o.n);
  require_positive(ns);
  const Precision p = precision_of(o);

  Table t{{"lambda", "n", "theta", "x_tilde", "x1", "x2", "verdict", "x_tilde_vs_x1", "notes"}, {}};
  bool failed = false;
  for (const Rational& l : lambdas) {
    for (std::size_t n : ns) {
      try {
        const ClaimReport r = claim_vertex_vs_zeros(l, n, p);
        const bool holds = r.verdict == ClaimVerdict::Holds;
        failed |= !holds;
        t.add({to_string(l), std::to_string(n), dec(r.theta, p), dec(r.x_tilde), dec(r.x1), dec(r.x2),
               holds ? "holds" : "fails", r.x_tilde_above_x1 ? "above" : "below",
               "theta=" + to_string(r.theta) + (l < 0 ? "; claim x~ > x2" : "; claim x~ > x1")});
      } catch (const std::exception& e) {
        t.add({to_string(l), std::to_string(n), "", "", "", "", "error", "", std::string("error: ") + e.what()});
      }
    }
  }
  out.write_table(t);
  return failed ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- audit

std::string residual_cell(const RationalPoly& r, bool symbolic) {
  if (symbolic) return to_string(r, "w");
  return r.is_zero() ? "0" : "nonzero";
}

int cmd_audit(const Options& o, Output& out) {
  const std::vector<Rational> lambdas = ultraspherical_lambdas(o);
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "1" : o.n);
  require_positive(ns);
  const Precision p = precision_of(o);
  const std::size_t count = o.grid.value_or(999);

  Table t{{"lambda", "n", "theta", "case", "points", "R_positive", "rho_positive", "eta_positive", "D_positive",
           "d_identity_residual", "factorization_residual", "g", "dg_dn", "dg_dn_numeric", "x0_pow_theta",
           "threshold", "claims_hold", "notes"},
          {}};
  bool bad = false;
  for (const Rational& l : lambdas) {
    for (std::size_t n : ns) {
      try {
        const Rational theta = o.theta == "auto" ? theta_theorem1(l) : parse_rational(o.theta);
        const AuditReport r = audit_lemma_quantities(l, n, theta, count, p);
        const bool ok = r.identities_hold() && r.all_claims_hold();
        bad |= !ok;
        // The D identity is checked at several abscissae; show the first nonzero one, if any.
        RationalPoly d_res;
        for (const RationalPoly& q : r.d_identity_residuals) {
          if (!q.is_zero()) {
            d_res = q;
            break;
          }
        }
        const bool neg = r.lemma_case == AuditCase::NegativeLambda;
        const std::string na = "n/a";
        std::string notes = "theta=" + to_string(theta);
        if (!neg) {
          append_note(notes, "rho(1)=" + to_string(r.rho_at_one) + " eta(1)=" + to_string(r.eta_at_one));
        } else {
          append_note(notes, std::string("g_positive=") + yes_no(r.g_positive) +
                                 " dg_negative=" + yes_no(r.dg_negative) + " dg_matches=" + yes_no(r.dg_matches) +
                                 " x0_beyond_threshold=" + yes_no(r.x0_beyond_threshold));
          if (o.symbolic) {
            append_note(notes, "with the last factor ((n+2l+1) n z - 2l) the residual is " +
                                   to_string(case_two_factorization_residual(l, n, LastFactorSign::Minus), "w"));
          }
        }
        t.add({to_string(l), std::to_string(n), dec(theta, p), neg ? "negative-lambda" : "positive-lambda",
               std::to_string(r.points.size()), yes_no(r.R_positive), neg ? na : yes_no(r.rho_positive),
               neg ? na : yes_no(r.eta_positive), neg ? na : yes_no(r.D_positive), residual_cell(d_res, o.symbolic),
               neg ? residual_cell(r.factorization_residual, o.symbolic) : na, neg ? dec(r.g) : na,
               neg ? dec(r.dg_dn) : na, neg ? dec(r.dg_dn_numeric) : na, neg ? dec(r.x0_pow_theta) : na,
               neg ? dec(r.threshold) : na, yes_no(ok), notes});
      } catch (const std::exception& e) {
        bad = true;
        t.add({to_string(l), std::to_string(n), "", "", "", "", "", "", "", "", "", "", "", "", "", "", "no",
               std::string("error: ") + e.what()});
      }
    }
  }
  out.write_table(t);
  return bad ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- remark

int cmd_remark(const Options& o, Output& out) {
  const std::vector<Rational> lambdas = parse_rational_list(o.lambda.empty() ? "-2/5" : o.lambda, "lambda");
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "100,1000,10000" : o.n);
  require_positive(ns);
  const Precision p = o.precision ? Precision(*o.precision) : Precision(kEscalatedPrecisionBits);

  Table t{{"lambda", "n", "theta", "x0", "x_hat", "real", "gap_plus", "gap_minus", "lead_plus", "lead_minus",
           "resultant", "lead_resultant", "notes"},
          {}};
  for (const Rational& l : lambdas) {
    if (!(l > Rational(-1, 2) && l < 0)) throw UsageError("remark needs -1/2 < lambda < 0");
    const Rational theta = o.theta == "auto" ? Rational(8) / (4 - l) : parse_rational(o.theta);
    for (std::size_t n : ns) {
      try {
        const RemarkProbe r = remark_asymptotics_probe(l, theta, n, p);
        t.add({to_string(l), std::to_string(n), dec(theta, p), dec(r.x0), dec(r.x_hat), yes_no(r.real),
               r.real ? dec(r.gap_plus) : "", r.real ? dec(r.gap_minus) : "", dec(r.lead_plus), dec(r.lead_minus),
               dec(r.resultant), dec(r.lead_resultant), "theta=" + to_string(theta)});
      } catch (const std::exception& e) {
        t.add({to_string(l), std::to_string(n), dec(theta, p), "", "", "", "", "", "", "", "", "",
               std::string("error: ") + e.what()});
      }
    }
  }
  out.write_table(t);
  return kExitOk;
}

// ---------------------------------------------------------------- plot

int cmd_plot(const Options& o, Output& out) {
  if (out.format() != "svg") throw UsageError("plot only writes svg");
  PlotConfig cfg;
  cfg.lambda = single_rational(o.lambda, "lambda");
  if (cfg.lambda <= Rational(-1, 2)) throw UsageError("lambda must exceed -1/2");
  cfg.n = single_index(o.n.empty() ? "4" : o.n);
  cfg.theta = o.theta == "auto" ? theta_theorem1(cfg.lambda) : parse_rational(o.theta);
  const Interval range = parse_range(o.range, Interval{0, 1});
  cfg.x_lo = range.lo;
  cfg.x_hi = range.hi;
  cfg.samples = o.grid.value_or(512);
  cfg.precision_bits = precision_of(o).bits();
  out.write_text(render_svg(sample_plot(cfg)));
  return kExitOk;
}

// ---------------------------------------------------------------- askey-check

int cmd_askey(const Options& o, Output& out) {
  const FamilySpec family = o.family_file.empty() ? FamilySpec::hermite_monic() : read_family_file(o.family_file);
  if (!family.is_monic_symmetric()) throw UsageError("askey-check needs a monic-symmetric family");
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "1..20" : o.n);
  require_positive(ns);
  const Precision p = precision_of(o);
  const Interval range = parse_range(o.range, Interval{-6, 6});
  const std::vector<Real> grid = uniform_grid(range, o.grid.value_or(4096), p);

  const AskeyReport r = askey_turan_check(family.a_sequence(), ns.back(), grid, p);
  Table t{{"family", "n_max", "points", "hypothesis", "min_value", "argmin_x", "argmin_n", "outcome"}, {}};
  t.add({family.describe(), std::to_string(r.n_max), std::to_string(r.points),
         r.hypothesis == Monotonicity::StrictlyIncreasing ? "strictly-increasing" : "non-decreasing-edge",
         dec(r.min_value), dec(r.argmin_x), std::to_string(r.argmin_n),
         r.all_nonnegative ? "nonnegative" : "negative"});
  out.write_table(t);
  return r.all_nonnegative ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- hermite-check

Rational random_rational(std::mt19937_64& rng, long num_max, long den_max) {
  std::uniform_int_distribution<long> num(1, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  return Rational(num(rng), den(rng));
}

int cmd_hermite(const Options& o, Output& out) {
  const std::vector<std::size_t> ns = parse_index_list(o.n.empty() ? "1..40" : o.n);
  require_positive(ns);
  const Precision p = precision_of(o);
  const Interval range = parse_range(o.range, Interval{-8, 8});
  const std::vector<Real> grid = uniform_grid(range, o.grid.value_or(4096), p);
  std::mt19937_64 rng(o.seed);

  Table t{{"check", "n", "x", "value", "outcome", "notes"}, {}};
  bool failed = false;
  auto verdict = [&](bool ok) {
    failed |= !ok;
    return ok ? "ok" : "fail";
  };

  // Delta_1 (x^2 + 1/2) = 1/4 for monic Hermite, exactly.
  const FamilySpec monic = FamilySpec::hermite_monic();
  for (std::size_t i = 0; i < o.trials; ++i) {
    Rational x = random_rational(rng, 1000, 97);
    if (rng() & 1) x = -x;
    const Rational d = turan_delta_exact(monic, 1, ThetaRule::hermite_factor(), x);
    const Rational value = d * (x * x + Rational(1, 2));
    t.add({"monic-delta1", "1", to_string(x), to_string(value), verdict(value == Rational(1, 4)), "expect 1/4"});
  }

  // Standard normalisation on the grid.
  const Real floor = -to_real(Rational(1, Integer("10000000000000000000000000")), p);
  for (std::size_t n : ns) {
    Real min_value = hermite_standard_delta(n, grid.front(), p);
    Real argmin = grid.front();
    for (const Real& x : grid) {
      Real v = hermite_standard_delta(n, x, p);
      if (v < min_value) {
        min_value = v;
        argmin = x;
      }
    }
    t.add({"standard-delta-min", std::to_string(n), dec(argmin), dec(min_value), verdict(min_value >= floor),
           std::to_string(grid.size()) + " points; floor -1e-25"});
  }

  // T_n at the vertex of T_{n+1} for increasing triples.
  for (std::size_t i = 0; i < o.trials; ++i) {
    Rational a0 = (rng() % 4 == 0) ? Rational(0) : random_rational(rng, 50, 50);
    Rational a1 = a0 + random_rational(rng, 50, 50);
    Rational a2 = a1 + random_rational(rng, 50, 50);
    const HermiteVertexValue v = hermite_vertex_value(a0, a1, a2);
    const std::array<Rational, 4> b = hermite_resultant_coefficients(a0, a1, a2);
    const std::string triple = "(" + to_string(a0) + ", " + to_string(a1) + ", " + to_string(a2) + ")";
    const bool positive = std::all_of(b.begin(), b.end(), [](const Rational& c) { return c > 0; });
    t.add({"vertex-value", "", triple, to_string(v.closed_form),
           verdict(v.closed_form == v.direct && v.closed_form < 0 && positive),
           "direct=" + to_string(v.direct) + "; resultant b0..b3 = " + to_string(b[0]) + ", " + to_string(b[1]) +
               ", " + to_string(b[2]) + ", " + to_string(b[3])});
  }
  out.write_table(t);
  return failed ? kExitViolation : kExitOk;
}

}  // namespace

std::vector<std::size_t> parse_index_list(const std::string& text) {
  if (text.empty()) throw UsageError("empty index list");
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad index \"" + s + "\" in \"" + text + "\"");
    }
    return std::stoul(s);
  };
  std::set<std::size_t> out;
  for (const std::string& part : split(text, ',')) {
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.insert(number(part));
      continue;
    }
    const std::size_t a = number(part.substr(0, dots));
    const std::size_t b = number(part.substr(dots + 2));
    if (b < a) throw UsageError("empty index range \"" + part + "\"");
    if (b - a > 1000000) throw UsageError("index range too long");
    for (std::size_t k = a; k <= b; ++k) out.insert(k);
  }
  return {out.begin(), out.end()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turan-type inequalities for orthogonal polynomial families", "turankit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TURANKIT_VERSION);
  Options o;

  enum Flag : unsigned {
    kFamily = 1, kLambda = 2, kTheta = 4, kN = 8, kX = 16, kGrid = 32, kPrecision = 64, kTol = 128,
    kSeed = 256, kRange = 512, kFormat = 1024,
  };
  auto add = [&](const char* name, const char* help, unsigned flags) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (flags & kFamily) {
      sub->add_option("--family", o.family, "ultraspherical | legendre | chebyshev | hermite");
      sub->add_option("--family-file", o.family_file, "JSON family file")->check(CLI::ExistingFile);
    }
    if (flags & kLambda) sub->add_option("--lambda", o.lambda, "comma-separated rationals, e.g. -1/4,1/2");
    if (flags & kTheta) sub->add_option("--theta", o.theta, "auto | thm2 | rational value");
    if (flags & kN) sub->add_option("--n", o.n, "index, a..b, or a comma list");
    if (flags & kX) sub->add_option("--x", o.x, "comma-separated rationals");
    if (flags & kGrid) sub->add_option("--grid", o.grid, "grid size or sample count");
    if (flags & kPrecision) {
      sub->add_option("--precision", o.precision, "MPFR mantissa bits (default 128 or $TURANKIT_PRECISION)");
    }
    if (flags & kTol) sub->add_option("--tol", o.tol, "bracket width");
    if (flags & kSeed) {
      sub->add_option("--seed", o.seed, "seed for randomised selections");
      sub->add_option("--trials", o.trials, "random instances per exact check");
    }
    if (flags & kRange) sub->add_option("--range", o.range, "x-range lo,hi");
    if (flags & kFormat) sub->add_option("--format", o.format, "csv | json (svg for plot)");
    sub->add_option("--out", o.out, "output file (default stdout)");
    return sub;
  };

  const unsigned table = kPrecision | kFormat;
  CLI::App* eval = add("eval", "p_{n-1}, p_n, p_{n+1} and t_n at x", kFamily | kLambda | kN | kX | table);
  CLI::App* check = add("check", "scan Delta_n for negative values",
                        kFamily | kLambda | kTheta | kN | kGrid | kRange | table);
  check->add_flag("--exact", o.exact, "exact Sturm certificates instead of the scan");
  CLI::App* certify = add("certify", "exact Sturm certificates", kLambda | kTheta | kN | table);
  CLI::App* sharp = add("sharp-theta", "bracket the sharp exponent by bisection", kLambda | kN | kGrid | kTol | table);
  CLI::App* claims = add("claims", "vertex x~ against the largest zeros of G_{n+1}", kLambda | kN | table);
  CLI::App* audit = add("audit", "auxiliary quantities and exact identities behind R_n > 0",
                        kLambda | kTheta | kN | kGrid | table);
  audit->add_flag("--symbolic", o.symbolic, "print residual polynomials in full");
  CLI::App* remark = add("remark", "large-n curve gaps at x_hat for negative lambda", kLambda | kTheta | kN | table);
  CLI::App* plot = add("plot", "SVG of t_n, T_n and T_{n+1}", kLambda | kTheta | kN | kGrid | kRange | table);
  CLI::App* askey = add("askey-check", "plain Turan inequality for monic families with non-decreasing a_n",
                        kFamily | kN | kGrid | kRange | table);
  CLI::App* hermite = add("hermite-check", "exact and numeric Hermite checks", kN | kGrid | kRange | kSeed | table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadArgs;
  }

  try {
    if (eval->parsed()) {
      Output sink(o, out, "csv");
      return cmd_eval(o, sink);
    }
    if (check->parsed() || certify->parsed()) {
      Output sink(o, out, "csv");
      return cmd_check(o, sink, certify->parsed() || o.exact);
    }
    if (sharp->parsed()) {
      Output sink(o, out, "csv");
      return cmd_sharp_theta(o, sink);
    }
    if (claims->parsed()) {
      Output sink(o, out, "csv");
      return cmd_claims(o, sink);
    }
    if (audit->parsed()) {
      Output sink(o, out, "csv");
      return cmd_audit(o, sink);
    }
    if (remark->parsed()) {
      Output sink(o, out, "csv");
      return cmd_remark(o, sink);
    }
    if (plot->parsed()) {
      Output sink(o, out, "svg");
      return cmd_plot(o, sink);
    }
    if (askey->parsed()) {
      Output sink(o, out, "csv");
      return cmd_askey(o, sink);
    }
    if (hermite->parsed()) {
      Output sink(o, out, "csv");
      return cmd_hermite(o, sink);
    }
  } catch (const std::invalid_argument& e) {
    err << "turankit: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::out_of_range& e) {
    err << "turankit: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    err << "turankit: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitBadArgs;
}

}  // namespace turankit::cli
