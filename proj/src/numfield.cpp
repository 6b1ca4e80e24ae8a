#include "anosov/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "anosov/factor.hpp"

namespace anosov {

namespace {

bool squarefree_ulong(unsigned long d) {
  for (unsigned long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

unsigned long primitive_root(unsigned long p) {
  std::vector<unsigned long> primes;
  unsigned long m = p - 1;
  for (unsigned long q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) primes.push_back(m);
  auto powmod = [p](unsigned long b, unsigned long e) {
    unsigned long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (unsigned long g = 2; g < p; ++g) {
    bool ok = std::all_of(primes.begin(), primes.end(), [&](unsigned long q) { return powmod(g, (p - 1) / q) != 1; });
    if (ok) return g;
  }
  return 1;
}

// Integer polynomial with roots `roots` (closed under conjugation), rounded from the numeric product.
IntPoly round_product(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(Real(1))};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = next[i + 1] + c[i];
      next[i] = next[i] - r * c[i];
    }
    c = std::move(next);
  }
  std::vector<Integer> out;
  for (const auto& z : c) {
    Real rounded = boost::multiprecision::round(z.re);
    if (boost::multiprecision::abs(z.re - rounded) > Real(0.25) || boost::multiprecision::abs(z.im) > Real(0.25))
      throw Undecided("numeric product of conjugates is not close to an integer polynomial");
    out.push_back(round_to_integer(rounded));
  }
  return IntPoly(out);
}

struct PeriodData {
  unsigned long p = 0;
  std::vector<Complex> etas;
};

PeriodData gaussian_periods(unsigned m, unsigned long avoid) {
  PeriodData out;
  unsigned long p = 2 * m + 1;
  while (!is_prime(p) || (avoid % p) == 0) p += 2 * m;
  out.p = p;
  unsigned long g = primitive_root(p);
  unsigned long order = (p - 1) / m;
  Real two_pi = boost::multiprecision::acos(Real(-1)) * 2;
  std::vector<unsigned long> gpow(p - 1);
  gpow[0] = 1;
  for (unsigned long i = 1; i < p - 1; ++i) gpow[i] = gpow[i - 1] * g % p;
  for (unsigned i = 0; i < m; ++i) {
    Real sum = 0;
    for (unsigned long j = 0; j < order; ++j)
      sum += boost::multiprecision::cos(two_pi * Real(gpow[i + m * j]) / Real(p));
    out.etas.emplace_back(sum);
  }
  return out;
}

}  // namespace

NumberField NumberField::make(const IntPoly& min_poly, unsigned precision_bits) {
  if (min_poly.degree() < 1 || !min_poly.is_monic())
    throw InvalidInput("field polynomial must be monic of positive degree");
  if (!is_irreducible(min_poly)) throw InvalidInput("field polynomial is reducible over Q");
  NumberField k;
  k.min_poly_ = min_poly;
  k.precision_bits_ = precision_bits;
  std::size_t n = k.degree();
  k.s_ = real_root_count(min_poly);
  k.t_ = (n - k.s_) / 2;
  for (auto& r : polynomial_roots(min_poly, precision_bits)) k.embeddings_.push_back(std::move(r.z));
  return k;
}

FieldElem NumberField::zero() const { return FieldElem(degree(), Rational(0)); }

FieldElem NumberField::one() const {
  FieldElem e = zero();
  e[0] = 1;
  return e;
}

FieldElem NumberField::theta() const { return from_poly(RatPoly{0, 1}); }

FieldElem NumberField::from_poly(const RatPoly& p) const {
  RatPoly r = p % min_poly_.to_rat();
  FieldElem e = zero();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = r.coeff(i);
  return e;
}

RatPoly NumberField::to_poly(const FieldElem& a) const { return RatPoly(a); }

FieldElem NumberField::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem e = zero();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
  return e;
}

FieldElem NumberField::mul(const FieldElem& a, const FieldElem& b) const {
  return from_poly(to_poly(a) * to_poly(b));
}

FieldElem NumberField::inv(const FieldElem& a) const {
  if (is_zero(a)) throw InvalidInput("inverse of zero field element");
  RatMatrix x = solve_in_span(mult_matrix(a), RatMatrix::column_vector(one()));
  FieldElem e = zero();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = x(i, 0);
  return e;
}

FieldElem NumberField::pow(const FieldElem& a, long e) const {
  FieldElem base = e < 0 ? inv(a) : a;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElem acc = one();
  while (n) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return acc;
}

bool NumberField::is_zero(const FieldElem& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix NumberField::mult_matrix(const FieldElem& a) const {
  std::size_t n = degree();
  RatMatrix m(n, n);
  FieldElem col = a;
  FieldElem th = theta();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    if (j + 1 < n) col = mul(col, th);
  }
  return m;
}

Rational NumberField::norm(const FieldElem& a) const { return det(mult_matrix(a)); }

IntPoly NumberField::element_min_poly(const FieldElem& a) const {
  IntPoly cp = char_poly(mult_matrix(a)).primitive_integer_part();
  auto factors = factor_over_Q(cp);
  if (factors.size() != 1)
    throw InconsistentResult("characteristic polynomial of a field element is not a power of one irreducible");
  return factors.front().poly;
}

bool NumberField::is_unit(const FieldElem& a) const {
  if (is_zero(a)) return false;
  IntPoly mp = element_min_poly(a);
  return mp.is_monic() && abs(mp.coeff(0)) == 1;
}

Complex NumberField::embed(const FieldElem& a, std::size_t i) const {
  PrecisionScope scope(precision_bits_);
  return eval_complex(a, embeddings_.at(i));
}

std::vector<Real> NumberField::log_all(const FieldElem& a) const {
  if (is_zero(a)) throw InvalidInput("log embedding of zero");
  PrecisionScope scope(precision_bits_);
  std::vector<Real> out;
  for (std::size_t i = 0; i < degree(); ++i) out.push_back(boost::multiprecision::log(abs(embed(a, i))));
  return out;
}

std::vector<Real> NumberField::log_vector(const FieldElem& a) const {
  std::vector<Real> all = log_all(a);
  std::vector<Real> out(all.begin(), all.begin() + static_cast<long>(s_));
  for (std::size_t j = 0; j < t_; ++j) out.push_back(all[s_ + 2 * j]);
  return out;
}

UnitElem make_unit(const NumberField& k, const FieldElem& coords) {
  if (coords.size() != k.degree()) throw InvalidInput("unit coordinates have the wrong length");
  if (!k.is_unit(coords)) throw InvalidInput("element is not a unit of the ring of integers");
  return UnitElem{coords, k.log_vector(coords)};
}

Real weighted_log_sum(const NumberField& k, const std::vector<Real>& log_vector) {
  PrecisionScope scope(k.precision_bits());
  Real sum = 0;
  for (std::size_t i = 0; i < log_vector.size(); ++i) sum += i < k.s() ? log_vector[i] : 2 * log_vector[i];
  return sum;
}

NumberField quadratic_field(unsigned long d, unsigned precision_bits) {
  if (d < 2 || !squarefree_ulong(d)) throw InvalidInput("d must be squarefree and > 1");
  return NumberField::make(IntPoly(std::vector<Integer>{-Integer(d), 0, 1}), precision_bits);
}

UnitElem fundamental_unit_real_quadratic(unsigned long d, unsigned precision_bits) {
  NumberField k = quadratic_field(d, precision_bits);
  Integer dd(d);
  Integer a0 = sqrt(dd);
  Integer m = 0, den = 1, a = a0;
  Integer p_prev = 1, p = a0, q_prev = 0, q = 1;
  auto pell = [&]() -> Integer { return p * p - dd * q * q; };
  while (abs(pell()) != 1) {
    m = den * a - m;
    den = (dd - m * m) / den;
    a = (a0 + m) / den;
    Integer pn = a * p + p_prev;
    Integer qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  FieldElem eps{Rational(p), Rational(q)};
  if (d % 4 == 1) {
    unsigned bits = static_cast<unsigned>(mpz_sizeinbase(p.get_mpz_t(), 2)) + 64;
    PrecisionScope scope(std::max(bits, precision_bits));
    Real sd = boost::multiprecision::sqrt(Real(d));
    Real e1 = to_real(p) + to_real(q) * sd;
    Real r = boost::multiprecision::cbrt(e1);
    Real s = to_real(pell());
    Real ra = boost::multiprecision::round(r + s / r);
    Real rb = boost::multiprecision::round((r - s / r) / sd);
    Integer ia = round_to_integer(ra);
    Integer ib = round_to_integer(rb);
    FieldElem cand{Rational(ia) / 2, Rational(ib) / 2};
    if (k.pow(cand, 3) == eps) eps = cand;
  }
  return make_unit(k, eps);
}

NumberField cyclotomic_field(unsigned long d, unsigned precision_bits) {
  if (d < 1) throw InvalidInput("cyclotomic index must be positive");
  return NumberField::make(cyclotomic(d), precision_bits);
}

std::vector<UnitElem> cyclotomic_unit_generators(unsigned long d, unsigned precision_bits) {
  if (d < 5 || d % 4 == 2) throw InvalidInput("cyclotomic units need d >= 5 and d != 2 mod 4");
  NumberField k = cyclotomic_field(d, precision_bits);
  std::vector<UnitElem> out;
  for (unsigned long a = 2; 2 * a < d; ++a) {
    if (std::gcd(a, d) != 1) continue;
    std::vector<Rational> geo(a, Rational(1));
    out.push_back(make_unit(k, k.from_poly(RatPoly(geo))));
  }
  return out;
}

std::vector<UnitElem> small_height_units(const NumberField& k, long height, std::size_t max_candidates) {
  std::size_t n = k.degree();
  std::size_t want = k.s() + k.t() - 1;
  std::vector<UnitElem> out;
  if (want == 0) return out;
  std::vector<std::vector<long double>> basis;
  std::vector<long> c(n, -height);
  std::size_t seen = 0;
  while (seen < max_candidates && out.size() < want) {
    ++seen;
    bool constant = std::all_of(c.begin() + 1, c.end(), [](long v) { return v == 0; });
    if (!constant) {
      FieldElem e(c.begin(), c.end());
      Rational nm = k.norm(e);
      if (abs(nm) == 1) {
        std::vector<Real> lv = k.log_vector(e);
        std::vector<long double> v;
        for (const auto& x : lv) v.push_back(x.convert_to<long double>());
        long double len0 = 0;
        for (auto x : v) len0 += x * x;
        for (const auto& b : basis) {
          long double dot = 0, bb = 0;
          for (std::size_t i = 0; i < v.size(); ++i) {
            dot += v[i] * b[i];
            bb += b[i] * b[i];
          }
          for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot / bb * b[i];
        }
        long double len = 0;
        for (auto x : v) len += x * x;
        if (len0 > 1e-12L && len > 1e-8L * len0) {
          basis.push_back(v);
          out.push_back(UnitElem{e, std::move(lv)});
        }
      }
    }
    std::size_t i = 0;
    while (i < n && c[i] == height) c[i++] = -height;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

std::vector<UnitElem> default_unit_generators(const NumberField& k) {
  std::size_t n = k.degree();
  for (unsigned long d = 1; d <= 2 * n * n + 2; ++d) {
    if (euler_phi(d) != n || cyclotomic(d) != k.min_poly()) continue;
    std::vector<UnitElem> out{UnitElem{k.theta(), k.log_vector(k.theta())}};
    if (d >= 5 && d % 4 != 2) {
      for (auto& u : cyclotomic_unit_generators(d, k.precision_bits())) out.push_back(std::move(u));
      return out;
    }
    break;
  }
  const auto& f = k.min_poly();
  if (n == 2 && f.coeff(1) == 0 && f.coeff(0) < -1) {
    Integer d = -f.coeff(0);
    if (d.fits_ulong_p() && squarefree_ulong(d.get_ui()))
      return {fundamental_unit_real_quadratic(d.get_ui(), k.precision_bits())};
  }
  long height = n <= 3 ? 3 : (n <= 5 ? 2 : 1);
  return small_height_units(k, height);
}

std::size_t max_hyperbolicity_bound(const NumberField& k) {
  std::size_t n = k.degree();
  return k.s() > 0 ? n - 1 : n / 2 - 1;
}

UnitSearchResult search_c_hyperbolic_unit(const NumberField& k, const std::vector<UnitElem>& generators, unsigned c,
                                          long exponent_bound) {
  UnitSearchResult result;
  std::size_t n = k.degree();
  std::vector<std::size_t> kept;
  std::vector<std::vector<long double>> logs;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto all = k.log_all(generators[i].coords);
    std::vector<long double> v;
    bool torsion = true;
    for (const auto& x : all) {
      v.push_back(x.convert_to<long double>());
      if (std::fabs(v.back()) > 1e-15L) torsion = false;
    }
    if (torsion) continue;
    kept.push_back(i);
    logs.push_back(std::move(v));
  }
  std::size_t g = kept.size();
  if (g == 0 || c == 0) return result;

  // Embedding index of the first member of each log coordinate.
  std::vector<std::size_t> coord_rep;
  for (std::size_t i = 0; i < k.s(); ++i) coord_rep.push_back(i);
  for (std::size_t j = 0; j < k.t(); ++j) coord_rep.push_back(k.s() + 2 * j);

  auto screen = [&](const std::vector<long double>& l) {
    std::vector<std::size_t> idx;
    std::function<bool(std::size_t, long double)> rec = [&](std::size_t from, long double sum) {
      if (!idx.empty() && std::fabs(sum) < 1e-9L) return false;
      if (idx.size() == c) return true;
      for (std::size_t i = from; i < n; ++i) {
        idx.push_back(i);
        bool ok = rec(i, sum + l[i]);
        idx.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    return rec(0, 0);
  };
  auto pisot = [&](const std::vector<long double>& l) {
    for (std::size_t j = 0; j < coord_rep.size(); ++j) {
      bool positive = l[coord_rep[j]] > 1e-12L;
      if (positive != (j == 0)) return false;
    }
    return true;
  };

  for (long h = 1; h <= exponent_bound; ++h) {
    std::vector<std::vector<long>> shell;
    std::vector<long> e(g, -h);
    while (true) {
      long mx = 0;
      for (long v : e) mx = std::max(mx, std::labs(v));
      if (mx == h) shell.push_back(e);
      std::size_t i = g;
      while (i > 0 && e[i - 1] == h) e[--i] = -h;
      if (i == 0) break;
      ++e[i - 1];
    }
    std::vector<std::vector<long double>> shell_logs;
    for (const auto& ex : shell) {
      std::vector<long double> l(n, 0);
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < n; ++j) l[j] += static_cast<long double>(ex[i]) * logs[i][j];
      shell_logs.push_back(std::move(l));
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t ci = 0; ci < shell.size(); ++ci) {
        const auto& l = shell_logs[ci];
        if (pisot(l) != (pass == 0)) continue;
        ++result.candidates;
        if (!screen(l)) continue;
        FieldElem mu = k.one();
        for (std::size_t i = 0; i < g; ++i) mu = k.mul(mu, k.pow(generators[kept[i]].coords, shell[ci][i]));
        IntPoly mp = k.element_min_poly(mu);
        HyperbolicityReport rep;
        try {
          rep = is_c_hyperbolic_poly(mp, c, k.precision_bits());
        } catch (const Undecided&) {
          continue;
        }
        if (!rep.verdict) continue;
        result.unit = make_unit(k, mu);
        result.min_poly = mp;
        result.report = rep;
        result.exponents.assign(generators.size(), 0);
        for (std::size_t i = 0; i < g; ++i) result.exponents[kept[i]] = shell[ci][i];
        return result;
      }
    }
  }
  return result;
}

IntPoly find_hyperbolic_polynomial(unsigned degree, unsigned c, long max_height, unsigned precision_bits) {
  if (degree < 2) throw InvalidInput("hyperbolic polynomial degree must be at least 2");
  std::size_t free = degree - 1;
  for (long h = 0; h <= max_height; ++h) {
    std::vector<long> values{0};
    for (long v = 1; v <= h; ++v) {
      values.push_back(-v);
      values.push_back(v);
    }
    std::vector<std::size_t> pos(free, 0);
    while (true) {
      long mx = 0;
      for (auto p : pos) mx = std::max(mx, std::labs(values[p]));
      if (mx == h) {
        std::vector<Integer> co(degree + 1);
        co[degree] = 1;
        co[0] = degree % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < free; ++i) co[degree - 1 - i] = values[pos[i]];
        IntPoly f(co);
        if (is_irreducible(f)) {
          try {
            if (is_c_hyperbolic_poly(f, c, precision_bits).verdict) return f;
          } catch (const Undecided&) {
          }
        }
      }
      std::size_t i = free;
      while (i > 0 && pos[i - 1] + 1 == values.size()) pos[--i] = 0;
      if (i == 0) break;
      ++pos[i - 1];
    }
  }
  throw Error("no c-hyperbolic polynomial of this degree within the height bound");
}

IntPoly real_cyclic_field(unsigned m) {
  if (m == 0) throw InvalidInput("field degree must be positive");
  PrecisionScope scope(256);
  IntPoly f = round_product(gaussian_periods(m, 1).etas);
  if (!is_irreducible(f) || static_cast<unsigned>(f.degree()) != m)
    throw InconsistentResult("Gaussian period polynomial is not irreducible");
  return f;
}

IntPoly cyclotomic_compositum(unsigned long d, unsigned m) {
  if (d == 0 || m == 0) throw InvalidInput("invalid compositum parameters");
  unsigned long phi = euler_phi(d);
  PrecisionScope scope(64 + 16 * static_cast<unsigned>(phi * m));
  PeriodData periods = gaussian_periods(m, d);
  Real two_pi = boost::multiprecision::acos(Real(-1)) * 2;
  for (long shift = 1; shift <= 8; ++shift) {
    std::vector<Complex> roots;
    for (unsigned long a = 1; a <= d; ++a) {
      if (std::gcd(a, d) != 1) continue;
      Complex z = cexp_i(two_pi * Real(a) / Real(d));
      for (const auto& eta : periods.etas) roots.push_back(z + Complex(eta.re * Real(shift)));
    }
    IntPoly f = round_product(roots);
    if (static_cast<unsigned long>(f.degree()) == phi * m && is_irreducible(f)) return f;
  }
  throw InconsistentResult("no primitive element found for the compositum");
}

}  // namespace anosov
