#include "turankit/sturm.hpp"

#include <stdexcept>

namespace turankit {

namespace {

using IntPoly = std::vector<Integer>;

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : p) c /= g;
  }
}

IntPoly to_int_poly(const RationalPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    out.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
  }
  make_primitive(out);
  return out;
}

RationalPoly to_rational_poly(const IntPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return RationalPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  make_primitive(d);
  return d;
}

// Positive multiple of rem(a, b), reduced to its primitive part.
IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = degree(b);
  const Integer& lb = b.back();
  std::size_t steps = 0;
  while (degree(a) >= db && !a.empty()) {
    const Integer la = a.back();
    const auto shift = static_cast<std::size_t>(degree(a) - db);
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
    ++steps;
  }
  if (lb < 0 && (steps % 2 == 1)) {
    for (auto& c : a) c = -c;
  }
  make_primitive(a);
  return a;
}

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& a = boost::multiprecision::numerator(x);
  const Integer& b = boost::multiprecision::denominator(x);
  Integer h = p.back();
  Integer bpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    bpow *= b;
    h = h * a + p[i] * bpow;
  }
  return h.sign();
}

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  IntPoly base = to_int_poly(p);

  auto build = [](const IntPoly& f) {
    std::vector<IntPoly> chain{f};
    if (f.size() <= 1) return chain;
    chain.push_back(derivative(f));
    while (true) {
      IntPoly r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain.push_back(std::move(r));
    }
    return chain;
  };

  std::vector<IntPoly> chain = build(base);
  if (degree(chain.back()) > 0) {
    // Last element is gcd(p, p'); strip repeated factors and rebuild.
    const RationalPoly g = to_rational_poly(chain.back());
    base = to_int_poly(divmod(to_rational_poly(base), g).quotient);
    chain = build(base);
    square_free_reduced_ = true;
  }
  polys_.reserve(chain.size());
  for (const auto& q : chain) polys_.push_back(to_rational_poly(q));
  integer_polys_ = std::move(chain);
}

std::size_t SturmChain::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(polys_.size());
  for (const auto& q : integer_polys_) signs.push_back(sign_at(q, x));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : polys_) signs.push_back(q.is_zero() ? 0 : q.leading().sign());
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : polys_) {
    if (q.is_zero()) {
      signs.push_back(0);
      continue;
    }
    const int s = q.leading().sign();
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

std::size_t SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) throw std::invalid_argument("Sturm count needs lo < hi");
  const std::size_t vlo = variations(lo);
  const std::size_t vhi = variations(hi);
  return vlo >= vhi ? vlo - vhi : 0;
}

std::size_t SturmChain::count_all() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

std::size_t sturm_count_roots(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  return SturmChain(p).count(lo, hi);
}

Rational cauchy_root_bound(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<Interval> isolate_real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                         const Rational& width) {
  const SturmChain chain(p);
  std::vector<Interval> done;
  std::vector<std::pair<Interval, std::size_t>> work;
  const std::size_t total = chain.count(lo, hi);
  if (total > 0) work.push_back({Interval{lo, hi}, total});
  while (!work.empty()) {
    auto [iv, n] = work.back();
    work.pop_back();
    if (n == 1 && iv.hi - iv.lo <= width) {
      done.push_back(iv);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    const std::size_t left = chain.count(iv.lo, mid);
    // Upper half first so that the stack yields roots in ascending order.
    if (n - left > 0) work.push_back({Interval{mid, iv.hi}, n - left});
    if (left > 0) work.push_back({Interval{iv.lo, mid}, left});
  }
  return done;
}

}  // namespace turankit
