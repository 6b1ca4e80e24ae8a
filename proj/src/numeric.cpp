#include "anosov/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace anosov {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Integer round_to_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return z;
}

Real pow2_neg(unsigned e) { return ldexp(Real(1), -static_cast<int>(e)); }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex conj(const Complex& a) { return {a.re, -a.im}; }
Real abs(const Complex& a) { return hypot(a.re, a.im); }
Real arg(const Complex& a) { return atan2(a.im, a.re); }

Complex cpow(const Complex& z, long e) {
  if (e < 0) return Complex(Real(1)) / cpow(z, -e);
  Complex result(Real(1)), base = z;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Complex cexp_i(const Real& theta) { return {cos(theta), sin(theta)}; }

Complex eval_complex(const std::vector<Rational>& coeffs, const Complex& z) {
  Complex acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + Complex(to_real(*it));
  return acc;
}

Complex eval_complex(const IntPoly& f, const Complex& z) {
  Complex acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * z + Complex(to_real(*it));
  return acc;
}

namespace {

using cd = std::complex<double>;

// Aberth in double precision for starting values.
std::vector<cd> aberth_double(const std::vector<double>& a) {
  const std::size_t n = a.size() - 1;
  double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::pow(std::abs(a[i] / a[n]), 1.0 / static_cast<double>(n - i)));
  bound = 2 * bound + 1e-3;
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(bound * 0.5, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cd p = a[n], dp = 0;
      for (std::size_t j = n; j-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[j];
      }
      if (p == cd(0)) continue;
      cd ratio = p / dp;
      cd s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

}  // namespace

std::vector<RootEstimate> polynomial_roots(const IntPoly& f, unsigned precision_bits) {
  if (f.degree() < 1) return {};
  PrecisionScope scope(precision_bits + 32);
  // Factor out zero roots.
  std::size_t zeros = 0;
  while (f.coeff(zeros) == 0) ++zeros;
  std::vector<Integer> rest(f.coeffs().begin() + static_cast<long>(zeros), f.coeffs().end());
  IntPoly g(std::move(rest));
  const auto n = static_cast<std::size_t>(g.degree());

  std::vector<Complex> z;
  if (n > 0) {
    std::vector<double> ad(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ad[i] = g.coeff(i).get_d();
    for (const auto& r : aberth_double(ad)) z.emplace_back(Real(r.real()), Real(r.imag()));

    std::vector<Real> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) a[i] = to_real(g.coeff(i));
    const Real target = pow2_neg(precision_bits + 16);
    for (int iter = 0; iter < 400; ++iter) {
      Real worst = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex p(a[n]), dp;
        for (std::size_t j = n; j-- > 0;) {
          dp = dp * z[i] + p;
          p = p * z[i] + Complex(a[j]);
        }
        if (p.re == 0 && p.im == 0) continue;
        if (dp.re == 0 && dp.im == 0) continue;
        Complex ratio = p / dp;
        Complex s;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) s = s + Complex(Real(1)) / (z[i] - z[j]);
        Complex denom = Complex(Real(1)) - ratio * s;
        if (denom.re == 0 && denom.im == 0) continue;
        Complex w = ratio / denom;
        z[i] = z[i] - w;
        Real rel = abs(w) / max(Real(1), abs(z[i]));
        if (rel > worst) worst = rel;
      }
      if (worst < target) break;
    }
  }

  std::vector<RootEstimate> out;
  const Real deg = Real(static_cast<unsigned long>(n));
  IntPoly dg = g.derivative();
  for (auto& r : z) {
    Complex p = eval_complex(g, r), dp = eval_complex(dg, r);
    Real radius = (dp.re == 0 && dp.im == 0) ? Real(1) : deg * abs(p / dp);
    out.push_back({r, radius});
  }
  for (std::size_t i = 0; i < zeros; ++i) out.push_back({Complex(), Real(0)});

  // Classify real roots: exact count when squarefree, else by imaginary part.
  std::size_t reals;
  IntPoly sf = squarefree_part(f);
  if (sf.degree() == f.degree()) {
    reals = real_root_count(f);
  } else {
    const Real eps = pow2_neg(precision_bits / 2);
    reals = static_cast<std::size_t>(std::count_if(out.begin(), out.end(), [&](const RootEstimate& e) {
      return abs(e.z.im) <= eps + e.radius;
    }));
  }
  std::sort(out.begin(), out.end(), [](const RootEstimate& x, const RootEstimate& y) { return abs(x.z.im) < abs(y.z.im); });
  for (std::size_t i = 0; i < reals && i < out.size(); ++i) out[i].z.im = 0;
  std::sort(out.begin(), out.begin() + static_cast<long>(reals),
            [](const RootEstimate& x, const RootEstimate& y) { return x.z.re > y.z.re; });
  std::vector<RootEstimate> upper;
  for (std::size_t i = reals; i < out.size(); ++i)
    if (out[i].z.im > 0) upper.push_back(out[i]);
  std::sort(upper.begin(), upper.end(), [](const RootEstimate& x, const RootEstimate& y) { return arg(x.z) < arg(y.z); });
  std::vector<RootEstimate> result(out.begin(), out.begin() + static_cast<long>(reals));
  for (const auto& u : upper) {
    result.push_back(u);
    result.push_back({conj(u.z), u.radius});
  }
  // Unpaired leftovers (only possible for non-squarefree input with loose estimates).
  if (result.size() < out.size()) {
    for (std::size_t i = reals; i < out.size(); ++i)
      if (out[i].z.im <= 0 && std::none_of(upper.begin(), upper.end(), [&](const RootEstimate& u) {
            return abs(conj(u.z) - out[i].z) <= u.radius + out[i].radius;
          }))
        result.push_back(out[i]);
  }
  while (result.size() < out.size()) result.push_back(out[result.size()]);
  if (result.size() > out.size()) result.resize(out.size());
  return result;
}

namespace {

int sign_at_infinity(const RatPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

}  // namespace

unsigned real_root_count(const IntPoly& f) {
  if (f.degree() < 1) return 0;
  RatPoly p0 = squarefree_part(f).to_rat();
  std::vector<RatPoly> seq{p0, p0.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto variations = [&](bool positive) {
    int count = 0, last = 0;
    for (const auto& p : seq) {
      int s = sign_at_infinity(p, positive);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return static_cast<unsigned>(variations(false) - variations(true));
}

}  // namespace anosov
