#include "anosov/hyper.hpp"

#include <cmath>

namespace anosov {

bool is_integer_like(const RatMatrix& m) {
  if (!m.is_square()) throw InvalidInput("integer-like test needs a square matrix");
  Rational d = det(m);
  if (d != 1 && d != -1) return false;
  return char_poly(m).is_integral();
}

CircleTest unit_circle_root_test(const IntPoly& f, unsigned precision_bits) {
  if (f.is_zero() || f.coeff(0) == 0) throw InvalidInput("unit circle test requires f(0) != 0");
  CircleTest out;
  if (f.degree() == 0) return out;
  IntPoly sf = squarefree_part(f);
  IntPoly g = gcd(sf, reversal(sf));
  if (g.degree() <= 0) return out;

  PrecisionScope scope(precision_bits);
  const Real found_tol = pow2_neg(precision_bits / 2);
  const Real off_tol = pow2_neg(kCircleToleranceBits);
  Real best = -1;
  bool undecided = false;
  for (const auto& r : polynomial_roots(g, precision_bits)) {
    Real dist = abs(abs(r.z) - Real(1));
    if (best < 0 || dist < best) best = dist;
    if (dist <= found_tol) {
      out.status = CircleStatus::Found;
      out.root = std::make_pair(static_cast<double>(r.z.re), static_cast<double>(r.z.im));
      out.min_distance = static_cast<double>(dist);
      return out;
    }
    if (dist - r.radius <= off_tol) undecided = true;
  }
  if (undecided) throw Undecided("root within the uncertainty band of the unit circle; increase precision");
  out.status = CircleStatus::NoneNumeric;
  out.min_distance = static_cast<double>(best);
  return out;
}

namespace {

// Multiset of k eigenvalue indices whose product has modulus closest to 1.
OffendingProduct closest_product(const std::vector<RootEstimate>& eig, unsigned k) {
  OffendingProduct best;
  best.k = k;
  const std::size_t n = eig.size();
  std::vector<double> logs(n);
  for (std::size_t i = 0; i < n; ++i) logs[i] = std::log(static_cast<double>(abs(eig[i].z)));
  std::vector<std::size_t> idx(k, 0);
  double best_gap = -1;
  std::size_t visited = 0;
  for (;;) {
    double s = 0;
    for (auto i : idx) s += logs[i];
    if (best_gap < 0 || std::abs(s) < best_gap) {
      best_gap = std::abs(s);
      best.indices = idx;
      best.modulus = std::exp(s);
    }
    if (++visited > 2000000) break;
    std::size_t pos = k;
    bool advanced = false;
    while (pos-- > 0) {
      if (idx[pos] + 1 < n) {
        ++idx[pos];
        for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[pos];
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

HyperbolicityReport run_report(const IntPoly& f, unsigned c, unsigned precision_bits) {
  if (f.is_zero() || f.coeff(0) == 0) throw InvalidInput("c-hyperbolicity requires a nonzero constant term");
  HyperbolicityReport report;
  report.c_tested = c;
  report.precision_bits = precision_bits;
  report.verdict = true;
  report.certified_exact = true;
  IntPoly base = squarefree_part(f);
  IntPoly h = base;
  for (unsigned k = 1; k <= c; ++k) {
    if (k > 1) h = squarefree_part(composed_product(h, base));
    CircleTest t = unit_circle_root_test(h, precision_bits);
    if (t.status == CircleStatus::NoneCertified) continue;
    report.certified_exact = false;
    if (t.status == CircleStatus::Found) {
      report.verdict = false;
      report.offending = closest_product(polynomial_roots(base, precision_bits), k);
      return report;
    }
  }
  return report;
}

}  // namespace

HyperbolicityReport is_c_hyperbolic_matrix(const RatMatrix& m, unsigned c, unsigned precision_bits) {
  if (!m.is_square()) throw InvalidInput("c-hyperbolicity needs a square matrix");
  if (det(m) == 0) throw InvalidInput("c-hyperbolicity needs an invertible matrix");
  return run_report(char_poly(m).primitive_integer_part(), c, precision_bits);
}

HyperbolicityReport is_c_hyperbolic_poly(const IntPoly& f, unsigned c, unsigned precision_bits) {
  return run_report(f, c, precision_bits);
}

}  // namespace anosov
