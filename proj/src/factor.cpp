#include "anosov/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace anosov {
namespace {

constexpr std::size_t kMaxDegree = 64;

// ------------------------------------------------------------ arithmetic in F_p[X]

using u64 = std::uint64_t;
using Fp = std::vector<u64>;

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const Fp& a) { return static_cast<long>(a.size()) - 1; }

u64 mul_mod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

Fp fp_sub(const Fp& a, const Fp& b, u64 p) {
  Fp c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = (x + p - y) % p;
  }
  trim(c);
  return c;
}

Fp fp_mul(const Fp& a, const Fp& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Fp c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

void fp_divmod(const Fp& a, const Fp& b, u64 p, Fp* q, Fp* r) {
  Fp rem = a;
  const auto db = static_cast<std::size_t>(deg(b));
  Fp quo(a.size() > db ? a.size() - db : 0, 0);
  u64 inv = inv_mod(b.back(), p);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (!rem[i]) continue;
    u64 c = mul_mod(rem[i], inv, p);
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - mul_mod(c, b[j], p)) % p;
  }
  if (rem.size() > db) rem.resize(db);
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

Fp fp_rem(const Fp& a, const Fp& b, u64 p) {
  Fp r;
  fp_divmod(a, b, p, nullptr, &r);
  return r;
}

Fp fp_quo(const Fp& a, const Fp& b, u64 p) {
  Fp q;
  fp_divmod(a, b, p, &q, nullptr);
  return q;
}

Fp fp_monic(Fp a, u64 p) {
  if (a.empty()) return a;
  u64 inv = inv_mod(a.back(), p);
  for (auto& c : a) c = mul_mod(c, inv, p);
  return a;
}

Fp fp_gcd(Fp a, Fp b, u64 p) {
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

// Returns (s, t) with s*a + t*b = 1 for coprime a, b.
std::pair<Fp, Fp> fp_bezout(const Fp& a, const Fp& b, u64 p) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Fp q, r;
    fp_divmod(r0, r1, p, &q, &r);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = inv_mod(r0.back(), p);
  for (auto& c : s0) c = mul_mod(c, inv, p);
  for (auto& c : t0) c = mul_mod(c, inv, p);
  return {s0, t0};
}

Fp fp_powmod(Fp base, const Integer& e, const Fp& mod, u64 p) {
  Fp result{1};
  base = fp_rem(base, mod, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_rem(fp_mul(result, base, p), mod, p);
  }
  return result;
}

Fp fp_derivative(const Fp& a, u64 p) {
  if (a.size() <= 1) return {};
  Fp d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul_mod(a[i], i % p, p);
  trim(d);
  return d;
}

Fp to_fp(const IntPoly& f, u64 p) {
  Fp a(f.coeffs().size());
  Integer pp(static_cast<unsigned long>(p)), r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pp.get_mpz_t());
    a[i] = r.get_ui();
  }
  trim(a);
  return a;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Fp, unsigned>> distinct_degree(Fp f, u64 p) {
  std::vector<std::pair<Fp, unsigned>> out;
  const Fp x{0, 1};
  Fp h = x;
  const Integer pz(static_cast<unsigned long>(p));
  for (unsigned d = 1; 2 * static_cast<long>(d) <= deg(f); ++d) {
    h = fp_powmod(h, pz, f, p);
    Fp g = fp_gcd(fp_sub(h, x, p), f, p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = fp_quo(f, g, p);
      h = fp_rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(fp_monic(f, p), static_cast<unsigned>(deg(f)));
  return out;
}

// Cantor-Zassenhaus split of a monic product of distinct degree-d irreducibles (p odd).
void equal_degree(const Fp& g, unsigned d, u64 p, std::mt19937_64& rng, std::vector<Fp>& out) {
  if (deg(g) == static_cast<long>(d)) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    Fp a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Fp b = fp_sub(fp_powmod(a, e, g, p), Fp{1}, p);
    Fp u = fp_gcd(b, g, p);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      equal_degree(u, d, p, rng, out);
      equal_degree(fp_quo(g, u, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<Fp> factor_mod_p(const Fp& f, u64 p, std::mt19937_64& rng) {
  std::vector<Fp> out;
  for (auto& [g, d] : distinct_degree(fp_monic(f, p), p)) equal_degree(g, d, p, rng, out);
  return out;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// ------------------------------------------------------------ arithmetic in (Z/m)[X]

using Zm = std::vector<Integer>;

void trim(Zm& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Zm zm_reduce(Zm a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

Zm zm_add(const Zm& a, const Zm& b, const Integer& m) {
  Zm c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
  return zm_reduce(std::move(c), m);
}

Zm zm_sub(const Zm& a, const Zm& b, const Integer& m) {
  Zm c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
  return zm_reduce(std::move(c), m);
}

Zm zm_mul(const Zm& a, const Zm& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  Zm c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return zm_reduce(std::move(c), m);
}

// Division by a monic polynomial modulo m.
void zm_divmod_monic(const Zm& a, const Zm& b, const Integer& m, Zm* q, Zm* r) {
  Zm rem = a;
  const std::size_t db = b.size() - 1;
  Zm quo(rem.size() > db ? rem.size() - db : 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    Integer c = rem[i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  if (rem.size() > db) rem.resize(db);
  if (q) *q = zm_reduce(std::move(quo), m);
  if (r) *r = zm_reduce(std::move(rem), m);
}

Zm from_fp(const Fp& a) {
  Zm z;
  z.reserve(a.size());
  for (u64 c : a) z.emplace_back(static_cast<unsigned long>(c));
  return z;
}

Zm from_int(const IntPoly& f, const Integer& m) { return zm_reduce(f.coeffs(), m); }

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic -> same mod m^2.
void hensel_step(const Zm& f, Zm& g, Zm& h, Zm& s, Zm& t, const Integer& m2) {
  Zm e = zm_sub(f, zm_mul(g, h, m2), m2);
  Zm q, r;
  zm_divmod_monic(zm_mul(s, e, m2), h, m2, &q, &r);
  Zm g2 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
  Zm h2 = zm_add(h, r, m2);
  Zm b = zm_sub(zm_add(zm_mul(s, g2, m2), zm_mul(t, h2, m2), m2), Zm{Integer(1)}, m2);
  Zm c, d;
  zm_divmod_monic(zm_mul(s, b, m2), h2, m2, &c, &d);
  s = zm_sub(s, d, m2);
  t = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc * prod(u_i) mod p (u_i monic) to monic factors modulo p^k.
void multi_lift(const Zm& f, const Integer& lc, const std::vector<Fp>& us, u64 p, const Integer& pk,
                std::vector<Zm>& out) {
  if (us.size() == 1) {
    // f is lc * u modulo pk; normalize to monic.
    Integer inv;
    Integer lcm = lc;
    mpz_fdiv_r(lcm.get_mpz_t(), lcm.get_mpz_t(), pk.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), lcm.get_mpz_t(), pk.get_mpz_t());
    Zm u = f;
    for (auto& c : u) c *= inv;
    out.push_back(zm_reduce(std::move(u), pk));
    return;
  }
  const std::size_t half = us.size() / 2;
  std::vector<Fp> left(us.begin(), us.begin() + static_cast<long>(half)), right(us.begin() + static_cast<long>(half), us.end());
  Fp g0{static_cast<u64>(mpz_fdiv_ui(lc.get_mpz_t(), static_cast<unsigned long>(p)))};
  for (const auto& u : left) g0 = fp_mul(g0, u, p);
  Fp h0{1};
  for (const auto& u : right) h0 = fp_mul(h0, u, p);
  auto [s0, t0] = fp_bezout(g0, h0, p);
  Zm g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
  Integer m(static_cast<unsigned long>(p));
  while (m < pk) {
    m = m * m;
    hensel_step(zm_reduce(f, m), g, h, s, t, m);
  }
  g = zm_reduce(g, pk);
  h = zm_reduce(h, pk);
  multi_lift(g, lc, left, p, pk, out);
  multi_lift(h, Integer(1), right, p, pk, out);
}

IntPoly symmetric_lift(const Zm& a, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i];
    if (c[i] > half) c[i] -= m;
  }
  return IntPoly(std::move(c));
}

bool try_exact_quotient(const IntPoly& a, const IntPoly& b, IntPoly* q) {
  if (a.degree() < b.degree()) return false;
  if (!mpz_divisible_p(a.coeff(0).get_mpz_t(), b.coeff(0).get_mpz_t())) return false;
  try {
    *q = exact_quotient(a, b);
    return true;
  } catch (const InconsistentResult&) {
    return false;
  }
}

// Next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Factors a primitive squarefree polynomial with positive leading coefficient and f(0) != 0.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  const Integer& lc = f.leading();

  std::mt19937_64 rng(0x5eed);
  u64 best_p = 0;
  std::vector<Fp> best;
  int good = 0;
  for (u64 p = 3; good < 6 && p < 100000; p += 2) {
    if (!is_prime_small(p) || mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    Fp fp = to_fp(f, p);
    if (deg(fp_gcd(fp, fp_derivative(fp, p), p)) > 0) continue;
    ++good;
    auto facs = factor_mod_p(fp, p, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw InconsistentResult("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  // Coefficient bound for lc * (any factor): 2^n (n+1) max|f_i| |lc|.
  Integer maxc = 0;
  for (const auto& c : f.coeffs()) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = maxc * abs(lc) * static_cast<unsigned long>(f.degree() + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(f.degree()));
  Integer pk(static_cast<unsigned long>(best_p));
  while (pk <= 2 * bound) pk *= static_cast<unsigned long>(best_p);

  std::vector<Zm> lifted;
  multi_lift(from_int(f, pk), lc, best, best_p, pk, lifted);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<Zm> pool = std::move(lifted);
  for (std::size_t s = 1; 2 * s <= pool.size();) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      Integer lcr = rest.leading();
      Zm g{lcr};
      g = zm_reduce(g, pk);
      for (std::size_t i : idx) g = zm_mul(g, pool[i], pk);
      IntPoly cand = symmetric_lift(g, pk).primitive_part();
      IntPoly q;
      if (try_exact_quotient(rest, cand, &q)) {
        found.push_back(cand);
        rest = q.primitive_part();
        std::vector<Zm> keep;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(std::move(pool[i]));
        pool = std::move(keep);
        hit = true;
        break;
      }
    } while (next_subset(idx, pool.size()));
    if (!hit) ++s;
  }
  found.push_back(rest);
  return found;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  const auto& x = a.poly.coeffs();
  const auto& y = b.poly.coeffs();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Factor> factor_over_Q(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  if (f.degree() > static_cast<long>(kMaxDegree)) throw InvalidInput("factorization degree exceeds 64");
  std::vector<Factor> out;
  IntPoly g = f.primitive_part();
  unsigned zeros = 0;
  while (g.degree() > 0 && g.coeff(0) == 0) {
    g = exact_quotient(g, IntPoly::x());
    ++zeros;
  }
  if (zeros) out.push_back({IntPoly::x(), zeros});

  // Yun's squarefree decomposition.
  if (g.degree() > 0) {
    IntPoly a = g;
    IntPoly b = gcd(a, a.derivative());
    IntPoly c = exact_quotient(a, b).primitive_part();
    IntPoly d = exact_quotient(a.derivative(), b) - c.derivative();
    for (unsigned i = 1; c.degree() > 0; ++i) {
      IntPoly y = gcd(c, d);
      if (y.degree() > 0)
        for (auto& q : zassenhaus(y)) out.push_back({q, i});
      IntPoly c2 = exact_quotient(c, y);
      d = exact_quotient(d, y) - c2.derivative();
      c = c2;
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor_over_Q(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace anosov
