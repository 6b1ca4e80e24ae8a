#include "anosov/poly.hpp"

#include <algorithm>
#include <map>

#include "anosov/ratmat.hpp"

namespace anosov {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Integer& coeff, std::size_t degree) {
  std::vector<Integer> c(degree + 1);
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = ::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

RatPoly IntPoly::to_rat() const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.end());
  return RatPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& s, const IntPoly& a) {
  std::vector<Integer> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::monomial(const Rational& coeff, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return RatPoly(std::move(c));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPoly::leading() const {
  if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool RatPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(c));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly RatPoly::primitive_integer_part() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational s = coeffs_[i] * l;
    out[i] = s.get_num();
  }
  return IntPoly(std::move(out)).primitive_part();
}

IntPoly RatPoly::to_int() const {
  if (!is_integral()) throw InvalidInput("polynomial has non-integral coefficients");
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num());
  return IntPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db);
  Rational inv = 1 / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * inv;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  long steps = a.degree() - b.degree() + 1;
  IntPoly r = a;
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPoly t = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree())) * b;
    r = lb * r - t;
    --steps;
  }
  if (steps > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    r = f * r;
  }
  return r;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InconsistentResult("exact_quotient: divisor does not divide");
  std::vector<Integer> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Integer> quo(rem.size() - db);
  const Integer& lb = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t()))
      throw InconsistentResult("exact_quotient: divisor does not divide");
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), lb.get_mpz_t());
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw InconsistentResult("exact_quotient: divisor does not divide");
  return IntPoly(std::move(quo));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return (a.to_rat() % b.to_rat()).is_zero();
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  IntPoly p = f.primitive_part();
  if (p.degree() <= 0) return p;
  IntPoly g = gcd(p, p.derivative());
  return exact_quotient(p, g).primitive_part();
}

IntPoly reversal(const IntPoly& f) {
  if (f.is_zero() || f.coeff(0) == 0) throw InvalidInput("reversal requires f(0) != 0");
  std::vector<Integer> c(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPoly(std::move(c));
}

unsigned long euler_phi(unsigned long d) {
  unsigned long result = d;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

namespace {

int mobius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

IntPoly cyclotomic(unsigned long d) {
  if (d == 0) throw InvalidInput("cyclotomic polynomial index must be >= 1");
  // Phi_d = prod_{e | d} (X^e - 1)^{mu(d/e)}
  IntPoly num({1}), den({1});
  for (unsigned long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(d / e);
    if (mu == 0) continue;
    IntPoly term = IntPoly::monomial(1, e) - IntPoly({1});
    if (mu > 0) num = num * term;
    else den = den * term;
  }
  IntPoly phi = exact_quotient(num, den);
  return phi.leading() < 0 ? -phi : phi;
}

namespace {

RatMatrix sylvester(const RatPoly& f, const RatPoly& g) {
  const auto n = static_cast<std::size_t>(f.degree());
  const auto m = static_cast<std::size_t>(g.degree());
  RatMatrix s(n + m, n + m);
  // Rows 0..m-1 hold shifted copies of f, rows m..m+n-1 shifted copies of g; highest degree first.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(i, i + j) = f.coeff(n - j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(m + i, i + j) = g.coeff(m - j);
  return s;
}

}  // namespace

Rational resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant of a zero polynomial");
  if (f.degree() == 0 && g.degree() == 0) return 1;
  return det(sylvester(f, g));
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  Rational r = resultant(f.to_rat(), g.to_rat());
  return r.get_num();
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InvalidInput("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rational dx = xs[i] - xs[i - j];
      if (dx == 0) throw InvalidInput("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      if (i == j) break;
    }
  RatPoly p;
  for (std::size_t i = n; i-- > 0;) p = p * RatPoly(std::vector<Rational>{-xs[i], Rational(1)}) + RatPoly(std::vector<Rational>{dd[i]});
  return p;
}

namespace {

// a^(n-1) f(X/a) for a = lc(f): monic, with roots a * alpha.
IntPoly monic_scaled(const IntPoly& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  const Integer& a = f.leading();
  std::vector<Integer> c(n + 1);
  Integer scale = 1;
  for (std::size_t j = n + 1; j-- > 0;) {
    if (j == n) {
      c[j] = 1;
    } else {
      c[j] = f.coeff(j) * scale;
      scale *= a;
    }
  }
  return IntPoly(std::move(c));
}

// Power sums p_1..p_count of the roots of a monic integer polynomial (Newton's identities).
std::vector<Integer> power_sums(const IntPoly& f, std::size_t count) {
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<Integer> p(count + 1);
  for (std::size_t k = 1; k <= count; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i < k && i <= n; ++i) acc += f.coeff(n - i) * p[k - i];
    if (k <= n) acc += Integer(static_cast<unsigned long>(k)) * f.coeff(n - k);
    p[k] = -acc;
  }
  return p;
}

// Monic integer polynomial of degree N from the power sums of its roots.
IntPoly from_power_sums(const std::vector<Integer>& p, std::size_t N) {
  std::vector<Integer> d(N + 1);
  d[N] = 1;
  for (std::size_t k = 1; k <= N; ++k) {
    Integer acc = p[k];
    for (std::size_t i = 1; i < k; ++i) acc += d[N - i] * p[k - i];
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
    d[N - k] = -q;
  }
  return IntPoly(std::move(d));
}

}  // namespace

IntPoly composed_product(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero() || f.coeff(0) == 0 || g.coeff(0) == 0)
    throw InvalidInput("composed_product requires nonzero constant terms");
  if (f.degree() == 0 || g.degree() == 0) return IntPoly({1});
  const auto n = static_cast<std::size_t>(f.degree());
  const auto m = static_cast<std::size_t>(g.degree());
  const std::size_t total = n * m;
  auto pf = power_sums(monic_scaled(f), total);
  auto pg = power_sums(monic_scaled(g), total);
  std::vector<Integer> ph(total + 1);
  for (std::size_t k = 1; k <= total; ++k) ph[k] = pf[k] * pg[k];
  // Roots of h are (a alpha)(b beta); substitute X -> a b X to recover alpha beta.
  IntPoly h = from_power_sums(ph, total);
  Integer ab = f.leading() * g.leading();
  std::vector<Integer> c(total + 1);
  Integer scale = 1;
  for (std::size_t j = 0; j <= total; ++j) {
    c[j] = h.coeff(j) * scale;
    scale *= ab;
  }
  return IntPoly(std::move(c)).primitive_part();
}

namespace {

void require_product_input(const IntPoly& f, unsigned k) {
  if (f.is_zero()) throw InvalidInput("eig_product_poly of the zero polynomial");
  if (k == 0) throw InvalidInput("eig_product_poly requires k >= 1");
}

// Splits f = X^a * rest with rest(0) != 0.
std::pair<std::size_t, IntPoly> strip_zero_roots(const IntPoly& f) {
  std::size_t a = 0;
  while (f.coeff(a) == 0) ++a;
  std::vector<Integer> c(f.coeffs().begin() + static_cast<long>(a), f.coeffs().end());
  return {a, IntPoly(std::move(c))};
}

}  // namespace

IntPoly eig_product_poly(const IntPoly& f, unsigned k) {
  require_product_input(f, k);
  if (!f.is_monic()) throw InvalidInput("eig_product_poly requires a monic polynomial");
  auto [zeros, base] = strip_zero_roots(f);
  IntPoly h = base;
  for (unsigned j = 1; j < k; ++j) h = composed_product(h, base);
  if (zeros > 0) h = IntPoly::x() * h;
  return h;
}

IntPoly eig_product_poly_squarefree(const IntPoly& f, unsigned k) {
  require_product_input(f, k);
  auto [zeros, base0] = strip_zero_roots(f);
  IntPoly base = squarefree_part(base0);
  IntPoly h = base;
  for (unsigned j = 1; j < k; ++j) h = squarefree_part(composed_product(h, base));
  if (zeros > 0) h = IntPoly::x() * h;
  return h;
}

}  // namespace anosov
