#include "anosov/witness.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <random>

#include "anosov/factor.hpp"

namespace anosov {

std::string to_string(ConstructionPath p) {
  switch (p) {
    case ConstructionPath::FieldThroughCommutant: return "field-through-commutant";
    case ConstructionPath::BlockCompanion: return "block-companion";
    case ConstructionPath::LatticeSearch: return "lattice-search";
    case ConstructionPath::TensorShortcut: return "tensor-shortcut";
  }
  return "unknown";
}

WitnessCertificate verify_witness(const RationalRep& rep, const RatMatrix& c_matrix, unsigned c, ConstructionPath path,
                                  unsigned precision_bits) {
  if (!c_matrix.is_square() || c_matrix.rows() != rep.dim())
    throw InvalidInput("witness size does not match the representation");
  WitnessCertificate cert;
  cert.witness = c_matrix;
  cert.c = c;
  cert.construction_path = path;
  for (const auto& g : rep.generator_images()) cert.commutes_per_generator.push_back(g * c_matrix == c_matrix * g);
  cert.commutes = std::all_of(rep.images().begin(), rep.images().end(),
                              [&](const RatMatrix& g) { return g * c_matrix == c_matrix * g; });
  RatPoly cp = char_poly(c_matrix);
  cert.char_poly = cp.primitive_integer_part();
  Rational d = det(c_matrix);
  cert.integer_like = (d == 1 || d == -1) && cp.is_integral();
  cert.hyperbolicity.c_tested = c;
  cert.hyperbolicity.precision_bits = precision_bits;
  if (d != 0) {
    try {
      cert.hyperbolicity = is_c_hyperbolic_poly(cert.char_poly, c, precision_bits);
    } catch (const Undecided&) {
      cert.hyperbolicity.verdict = false;
    }
  }
  return cert;
}

RatMatrix block_companion(const std::vector<RatMatrix>& coefficients, const RatMatrix& m) {
  if (coefficients.empty()) throw InvalidInput("block companion needs at least one coefficient");
  std::size_t k = coefficients.front().rows();
  for (const auto& cj : coefficients) {
    if (!cj.is_square() || cj.rows() != k || m.rows() != k || !m.is_square())
      throw InvalidInput("block companion coefficients must be k x k");
    if (cj * m != m * cj) throw InvalidInput("block companion coefficient does not commute");
  }
  std::size_t mm = coefficients.size();
  RatMatrix out(k * mm, k * mm);
  RatMatrix id = RatMatrix::identity(k);
  for (std::size_t i = 0; i + 1 < mm; ++i) out.set_block((i + 1) * k, i * k, id);
  for (std::size_t i = 0; i < mm; ++i) out.set_block(i * k, (mm - 1) * k, -coefficients[i]);
  return out;
}

namespace {

Integer lcm_denominators(const RatPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  return l;
}

// Monic integral polynomial of L * J where g is the monic minimal polynomial of J.
IntPoly scaled_min_poly(const RatPoly& g, const Integer& l) {
  auto deg = static_cast<std::size_t>(g.degree());
  std::vector<Integer> c(deg + 1);
  Integer scale = 1;
  for (std::size_t i = deg + 1; i-- > 0;) {
    Rational v = g.coeff(i) * Rational(scale);
    c[i] = v.get_num();
    scale *= l;
  }
  return IntPoly(std::move(c));
}

RatMatrix eval_coords(const FieldElem& coords, const RatMatrix& theta) {
  return poly_eval(RatPoly(coords), theta);
}

// Primitive integral rescaling of a matrix.
RatMatrix primitive_integral(const RatMatrix& m) {
  Integer l = 1;
  for (const auto& q : m.data()) l = lcm(l, Integer(q.get_den()));
  RatMatrix s = Rational(l) * m;
  Integer g = 0;
  for (const auto& q : s.data()) g = gcd(g, Integer(q.get_num()));
  if (g == 0) return s;
  return Rational(1, 1) / Rational(g) * s;
}

struct FieldCandidate {
  RatMatrix theta;
  IntPoly poly;
};

// Generators J of commutative subfields with their scaled minimal polynomials:
// largest degree first, then generators that are units, then smaller coefficients.
std::vector<FieldCandidate> field_candidates(const std::vector<RatMatrix>& preferred, const std::vector<RatMatrix>& basis,
                                             std::uint64_t seed, std::size_t trials) {
  std::vector<FieldCandidate> out;
  auto consider = [&](const RatMatrix& j) {
    RatPoly g = min_poly(j);
    if (g.degree() < 2) return;
    Integer l = lcm_denominators(g);
    IntPoly gi = scaled_min_poly(g, l);
    if (!is_irreducible(gi)) return;
    for (const auto& f : out)
      if (f.poly == gi) return;
    out.push_back(FieldCandidate{Rational(l) * j, gi});
  };
  for (const auto& p : preferred) consider(p);
  for (const auto& b : basis) consider(b);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (std::size_t t = 0; t < trials && !basis.empty(); ++t) {
    RatMatrix j(basis.front().rows(), basis.front().cols());
    for (const auto& b : basis) j = j + Rational(dist(rng)) * b;
    consider(j);
  }
  auto height = [](const IntPoly& f) {
    Integer h = 0;
    for (const auto& c : f.coeffs()) h = std::max(h, Integer(abs(c)));
    return h;
  };
  auto unit = [](const IntPoly& f) { return abs(f.coeff(0)) == 1; };
  std::stable_sort(out.begin(), out.end(), [&](const FieldCandidate& a, const FieldCandidate& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() > b.poly.degree();
    if (unit(a.poly) != unit(b.poly)) return unit(a.poly);
    return height(a.poly) < height(b.poly);
  });
  return out;
}

}  // namespace

WitnessAttempt field_through_commutant(const RationalRep& rep, unsigned c, std::uint64_t seed, long exponent_bound) {
  WitnessAttempt out;
  auto basis = commutant(rep);
  std::vector<RatMatrix> central_gens;
  auto gens = rep.generator_images();
  for (const auto& g : gens)
    if (std::all_of(gens.begin(), gens.end(), [&](const RatMatrix& h) { return g * h == h * g; }))
      central_gens.push_back(g);
  auto fields = field_candidates(central_gens, basis, seed, 40);
  if (fields.empty()) {
    out.failure = "no commutant element with an irreducible minimal polynomial of degree > 1";
    return out;
  }
  std::size_t tried = 0;
  for (const auto& f : fields) {
    if (tried++ == 5) break;
    NumberField k = NumberField::make(f.poly);
    if (c > max_hyperbolicity_bound(k)) continue;
    auto units = default_unit_generators(k);
    auto hit = search_c_hyperbolic_unit(k, units, c, exponent_bound);
    if (!hit.unit) continue;
    RatMatrix cm = eval_coords(hit.unit->coords, f.theta);
    auto cert = verify_witness(rep, cm, c, ConstructionPath::FieldThroughCommutant);
    if (cert.valid()) {
      out.certificate = std::move(cert);
      return out;
    }
  }
  out.failure = "no c-hyperbolic unit found in the commutant fields within the exponent bound";
  return out;
}

WitnessAttempt tensor_shortcut(const ComponentProfile& cls, unsigned c) {
  WitnessAttempt out;
  if (cls.dim_E != 1) {
    out.failure = "class is not absolutely irreducible";
    return out;
  }
  std::size_t m = cls.multiplicity;
  if (m <= c) {
    out.failure = "refused: multiplicity does not exceed c";
    return out;
  }
  IntPoly f;
  try {
    f = find_hyperbolic_polynomial(static_cast<unsigned>(m), c);
  } catch (const Error& e) {
    out.failure = e.what();
    return out;
  }
  RatMatrix w = kronecker(RatMatrix::companion(f), cls.dimension());
  auto cert = verify_witness(cls.sub_rep.multiple(m), w, c, ConstructionPath::TensorShortcut);
  if (cert.valid())
    out.certificate = std::move(cert);
  else
    out.failure = "tensor witness failed verification";
  return out;
}

IntPoly norm_char_poly(const NumberField& field, const FieldMatrix& c0) {
  std::size_t k = c0.size();
  std::size_t n = field.degree();
  if (k == 0) throw InvalidInput("empty matrix over the field");
  // Faddeev-LeVerrier over F: coefficients a_{k-i} of the characteristic polynomial.
  auto mat_mul = [&](const FieldMatrix& x, const FieldMatrix& y) {
    FieldMatrix z(k, std::vector<FieldElem>(k, field.zero()));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        if (field.is_zero(x[i][l])) continue;
        for (std::size_t j = 0; j < k; ++j) z[i][j] = field.add(z[i][j], field.mul(x[i][l], y[l][j]));
      }
    return z;
  };
  std::vector<FieldElem> coeff(k + 1, field.zero());
  coeff[k] = field.one();
  FieldMatrix mk(k, std::vector<FieldElem>(k, field.zero()));
  for (std::size_t i = 1; i <= k; ++i) {
    // M_i = A M_{i-1} + a_{k-i+1} I, a_{k-i} = -tr(A M_i) / i.
    FieldMatrix am = mat_mul(c0, mk);
    for (std::size_t d = 0; d < k; ++d) am[d][d] = field.add(am[d][d], coeff[k - i + 1]);
    mk = std::move(am);
    FieldMatrix a_mk = mat_mul(c0, mk);
    FieldElem tr = field.zero();
    for (std::size_t d = 0; d < k; ++d) tr = field.add(tr, a_mk[d][d]);
    for (auto& q : tr) q = -q / Rational(static_cast<long>(i));
    coeff[k - i] = tr;
  }
  RatPoly g = field.min_poly().to_rat();
  std::size_t total = n * k;
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= total; ++t) {
    long x = (t % 2 == 1) ? static_cast<long>((t + 1) / 2) : -static_cast<long>(t / 2);
    std::vector<Rational> hy(n, Rational(0));
    Rational xp = 1;
    for (std::size_t l = 0; l <= k; ++l) {
      for (std::size_t j = 0; j < n; ++j) hy[j] += coeff[l][j] * xp;
      xp *= x;
    }
    RatPoly h(hy);
    Rational value;
    if (h.is_zero())
      value = 0;
    else if (h.degree() == 0) {
      value = 1;
      for (std::size_t j = 0; j < n; ++j) value *= h.coeff(0);
    } else {
      value = resultant(g, h);
    }
    xs.emplace_back(x);
    ys.push_back(value);
  }
  return interpolate(xs, ys).primitive_integer_part();
}

WitnessAttempt block_companion_witness(const ComponentProfile& cls, unsigned c, long height_bound) {
  WitnessAttempt out;
  const RationalRep& rho = cls.sub_rep;
  auto centre = algebra_center(commutant(rho));
  std::size_t n = centre.size();
  // A generator of the centre field (identity when the centre is Q).
  RatMatrix theta = RatMatrix::identity(rho.dim());
  IntPoly g{0, 1};
  if (n > 1) {
    bool found = false;
    for (const auto& f : field_candidates({}, centre, 7, 40)) {
      if (static_cast<std::size_t>(f.poly.degree()) == n) {
        theta = f.theta;
        g = f.poly;
        found = true;
        break;
      }
    }
    if (!found) {
      out.failure = "no generator of the centre field";
      return out;
    }
  } else {
    theta = RatMatrix(rho.dim(), rho.dim());
  }
  NumberField field = NumberField::make(g);
  std::size_t m = cls.multiplicity;
  std::vector<FieldElem> units{field.one()};
  FieldElem minus_one = field.zero();
  minus_one[0] = -1;
  units.push_back(minus_one);
  if (n > 1) {
    for (const auto& u : default_unit_generators(field)) {
      for (long e : {1L, -1L}) {
        FieldElem v = field.pow(u.coords, e);
        units.push_back(v);
        FieldElem neg = v;
        for (auto& q : neg) q = -q;
        units.push_back(neg);
      }
    }
  }
  std::size_t free = n * (m - 1);
  RatMatrix generator = rho.generator_images().empty() ? RatMatrix::identity(rho.dim()) : rho.generator_images().front();
  for (long h = 0; h <= height_bound; ++h) {
    std::vector<long> e(free, -h);
    while (true) {
      long mx = 0;
      for (long v : e) mx = std::max(mx, std::labs(v));
      if (mx == h) {
        for (const auto& a0 : units) {
          // f_0 = X^m + a_{m-1} X^{m-1} + ... + a_1 X + a_0; companion over F.
          std::vector<FieldElem> a(m, field.zero());
          a[0] = a0;
          for (std::size_t j = 1; j < m; ++j)
            for (std::size_t t = 0; t < n; ++t) a[j][t] = e[(j - 1) * n + t];
          FieldMatrix comp(m, std::vector<FieldElem>(m, field.zero()));
          for (std::size_t i = 0; i + 1 < m; ++i) comp[i + 1][i] = field.one();
          for (std::size_t i = 0; i < m; ++i) {
            FieldElem v = a[i];
            for (auto& q : v) q = -q;
            comp[i][m - 1] = v;
          }
          IntPoly norm = norm_char_poly(field, comp);
          if (!norm.is_monic() || abs(norm.coeff(0)) != 1) continue;
          HyperbolicityReport rep;
          try {
            rep = is_c_hyperbolic_poly(norm, c);
          } catch (const Undecided&) {
            continue;
          }
          if (!rep.verdict) continue;
          std::vector<RatMatrix> coeffs;
          for (const auto& aj : a) coeffs.push_back(n > 1 ? eval_coords(aj, theta) : aj[0] * RatMatrix::identity(rho.dim()));
          RatMatrix w = block_companion(coeffs, generator);
          auto cert = verify_witness(rho.multiple(m), w, c, ConstructionPath::BlockCompanion);
          if (cert.valid()) {
            out.certificate = std::move(cert);
            return out;
          }
        }
      }
      std::size_t i = free;
      while (i > 0 && e[i - 1] == h) e[--i] = -h;
      if (i == 0) break;
      ++e[i - 1];
    }
  }
  out.failure = "no block-companion polynomial within the height bound";
  return out;
}

namespace {

// Calls visit(matrix) on integer combinations by increasing height; stops when visit returns true.
template <class Visit>
std::size_t enumerate_lattice(const std::vector<RatMatrix>& basis, long height_bound, std::size_t max_candidates,
                              Visit visit) {
  std::size_t seen = 0;
  std::size_t d = basis.size();
  if (d == 0) return 0;
  for (long h = 1; h <= height_bound; ++h) {
    std::vector<long> e(d, -h);
    while (true) {
      long mx = 0;
      for (long v : e) mx = std::max(mx, std::labs(v));
      if (mx == h) {
        if (seen++ == max_candidates) return seen - 1;
        RatMatrix cm(basis.front().rows(), basis.front().cols());
        for (std::size_t i = 0; i < d; ++i)
          if (e[i] != 0) cm = cm + Rational(e[i]) * basis[i];
        if (visit(cm)) return seen;
      }
      std::size_t i = d;
      while (i > 0 && e[i - 1] == h) e[--i] = -h;
      if (i == 0) break;
      ++e[i - 1];
    }
  }
  return seen;
}

enum class Screen { NotIntegerLike, IntegerLike, Hyperbolic };

Screen screen_candidate(const RatMatrix& cm, unsigned c) {
  RatPoly cp = char_poly(cm);
  if (!cp.is_integral()) return Screen::NotIntegerLike;
  Rational c0 = cp.coeff(0);
  if (c0 != 1 && c0 != -1) return Screen::NotIntegerLike;
  try {
    if (is_c_hyperbolic_poly(cp.to_int(), c).verdict) return Screen::Hyperbolic;
  } catch (const Undecided&) {
  }
  return Screen::IntegerLike;
}

std::vector<RatMatrix> integral_commutant(const RationalRep& rep) {
  std::vector<RatMatrix> basis;
  for (const auto& b : commutant(rep)) basis.push_back(primitive_integral(b));
  return basis;
}

}  // namespace

WitnessAttempt lattice_search(const RationalRep& rep, unsigned c, long height_bound, [[maybe_unused]] std::uint64_t seed,
                              std::size_t max_candidates) {
  WitnessAttempt out;
  auto basis = integral_commutant(rep);
  enumerate_lattice(basis, height_bound, max_candidates, [&](const RatMatrix& cm) {
    if (screen_candidate(cm, c) != Screen::Hyperbolic) return false;
    auto cert = verify_witness(rep, cm, c, ConstructionPath::LatticeSearch);
    if (!cert.valid()) return false;
    out.certificate = std::move(cert);
    return true;
  });
  if (!out.certificate) out.failure = "no lattice point within the height bound";
  return out;
}

LatticeCensus lattice_census(const RationalRep& rep, unsigned c, long height_bound, std::size_t max_candidates) {
  LatticeCensus census;
  auto basis = integral_commutant(rep);
  census.candidates = enumerate_lattice(basis, height_bound, max_candidates, [&](const RatMatrix& cm) {
    Screen s = screen_candidate(cm, c);
    if (s != Screen::NotIntegerLike) ++census.integer_like;
    if (s == Screen::Hyperbolic) {
      ++census.hits;
      if (!census.first_hit) census.first_hit = cm;
    }
    return false;
  });
  return census;
}

ComplexMatrix::ComplexMatrix(std::size_t size) : n(size), a(size * size) {}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t l = 0; l < x.n; ++l)
      for (std::size_t j = 0; j < x.n; ++j) z(i, j) = z(i, j) + x(i, l) * y(l, j);
  return z;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  std::size_t n = m.n;
  ComplexMatrix a = m;
  ComplexMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Complex(Real(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(a(r, col)) > abs(a(piv, col))) piv = r;
    if (abs(a(piv, col)) == 0) throw Undecided("numerically singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    Complex p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Complex f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

Real max_abs(const ComplexMatrix& m) {
  Real best = 0;
  for (const auto& z : m.a) best = std::max(best, Real(abs(z)));
  return best;
}

namespace {

ComplexMatrix kron_identity(const ComplexMatrix& v, std::size_t k) {
  ComplexMatrix out(v.n * k);
  for (std::size_t i = 0; i < v.n; ++i)
    for (std::size_t j = 0; j < v.n; ++j)
      for (std::size_t d = 0; d < k; ++d) out(i * k + d, j * k + d) = v(i, j);
  return out;
}

ComplexMatrix from_rational(const RatMatrix& m) {
  ComplexMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex(to_real(m(i, j)));
  return out;
}

std::size_t nearest_root(const std::vector<Complex>& roots, const Complex& z) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (abs(roots[i] - z) < abs(roots[best] - z)) best = i;
  return best;
}

// Automorphisms theta -> h(theta) of F, found by matching h(theta_i) to a permutation of the roots.
std::vector<FieldElem> field_automorphisms(const NumberField& field, const ComplexMatrix& vinv) {
  std::size_t n = field.degree();
  std::vector<FieldElem> out;
  if (n == 1) {
    out.push_back(field.theta());
    return out;
  }
  if (n > 8) {
    out.push_back(field.theta());
    return out;
  }
  const IntPoly& g = field.min_poly();
  Integer disc = abs(resultant(g, g.derivative()));
  if (mpz_sizeinbase(disc.get_mpz_t(), 2) > field.precision_bits() / 3) {
    out.push_back(field.theta());
    return out;
  }
  using cd = std::complex<double>;
  std::vector<cd> roots;
  for (const auto& z : field.embeddings()) roots.emplace_back(z.re.convert_to<double>(), z.im.convert_to<double>());
  std::vector<cd> vinv_d(n * n);
  for (std::size_t i = 0; i < n * n; ++i) vinv_d[i] = cd(vinv.a[i].re.convert_to<double>(), vinv.a[i].im.convert_to<double>());
  double dd = disc.get_d();
  RatPoly gr = g.to_rat();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) rest.push_back(i);
    bool found = false;
    do {
      std::vector<std::size_t> pi{j};
      pi.insert(pi.end(), rest.begin(), rest.end());
      bool ok = true;
      std::vector<double> coords(n);
      for (std::size_t r = 0; r < n && ok; ++r) {
        cd s = 0;
        for (std::size_t i = 0; i < n; ++i) s += vinv_d[r * n + i] * roots[pi[i]];
        double scaled = s.real() * dd;
        if (std::fabs(s.imag()) > 1e-6 || std::fabs(scaled - std::round(scaled)) > 1e-4) ok = false;
        coords[r] = s.real();
      }
      if (!ok) continue;
      // High-precision coordinates, rounded with denominator disc, then verified exactly.
      FieldElem h(n);
      for (std::size_t r = 0; r < n; ++r) {
        Complex s;
        for (std::size_t i = 0; i < n; ++i) s = s + vinv(r, i) * field.embeddings()[pi[i]];
        Integer num = round_to_integer(s.re * to_real(disc));
        h[r] = Rational(num) / Rational(disc);
      }
      RatPoly hp(h);
      RatPoly comp;
      for (std::size_t t = g.coeffs().size(); t-- > 0;) comp = (comp * hp + RatPoly(std::vector<Rational>{Rational(g.coeff(t))})) % gr;
      if (comp.is_zero()) {
        out.push_back(h);
        found = true;
      }
    } while (!found && std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

}  // namespace

VandermondeData vandermonde_P(const NumberField& field, std::size_t k) {
  if (k == 0) throw InvalidInput("vandermonde_P needs k >= 1");
  PrecisionScope scope(field.precision_bits());
  std::size_t n = field.degree();
  const auto& roots = field.embeddings();
  ComplexMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex p(Real(1));
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p = p * roots[i];
    }
  }
  ComplexMatrix vinv = inverse(v);
  Real cond = max_abs(v) * max_abs(vinv) * Real(n);
  if (cond > 1 / pow2_neg(field.precision_bits() / 2)) throw Undecided("Vandermonde matrix too ill-conditioned at this precision");
  VandermondeData out;
  out.k = k;
  out.q = kron_identity(v, k);
  out.p = kron_identity(vinv, k);
  Real tol = pow2_neg(field.precision_bits() / 2);
  for (const auto& h : field_automorphisms(field, vinv)) {
    std::vector<std::size_t> images(n);
    ComplexMatrix sigma_q(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex hi = eval_complex(h, roots[i]);
      images[i] = nearest_root(roots, hi);
      Complex p(Real(1));
      for (std::size_t j = 0; j < n; ++j) {
        sigma_q(i, j) = p;
        p = p * hi;
      }
    }
    Permutation pi(images);
    ComplexMatrix sigma_p = inverse(kron_identity(sigma_q, k));
    ComplexMatrix rhs = out.p * from_rational(kronecker(perm_matrix(pi.inverse()), k));
    ComplexMatrix diff(n * k);
    for (std::size_t i = 0; i < diff.a.size(); ++i) diff.a[i] = sigma_p.a[i] - rhs.a[i];
    Real residual = max_abs(diff);
    if (residual > tol) throw InconsistentResult("sigma(P) = P K identity fails numerically");
    out.actions.push_back(GaloisAction{h, pi, residual});
  }
  return out;
}

RatMatrix restriction_of_scalars(const NumberField& field, const FieldMatrix& c0) {
  std::size_t k = c0.size();
  std::size_t n = field.degree();
  RatMatrix mt = field.mult_matrix(field.theta());
  RatMatrix out(n * k, n * k);
  RatMatrix power_t = RatMatrix::identity(n);
  for (std::size_t t = 0; t < n; ++t) {
    RatMatrix ct(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) ct(a, b) = c0[a][b][t];
    out = out + kron(power_t, ct);
    power_t = power_t * mt;
  }
  return out;
}

RatMatrix rationalize_conjugate_blockdiag(const NumberField& field, const VandermondeData& vd, const FieldMatrix& c0,
                                          const std::vector<RatMatrix>& commute_with) {
  std::size_t k = c0.size();
  std::size_t n = field.degree();
  if (vd.k != k || vd.p.n != n * k) throw InvalidInput("Vandermonde data does not match the matrix size");
  PrecisionScope scope(field.precision_bits());
  Integer l = 1;
  for (const auto& row : c0)
    for (const auto& e : row)
      for (const auto& q : e) l = lcm(l, Integer(q.get_den()));
  ComplexMatrix b(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t bb = 0; bb < k; ++bb) b(i * k + a, i * k + bb) = eval_complex(c0[a][bb], field.embeddings()[i]);
  ComplexMatrix r = vd.p * b * vd.q;
  RatMatrix out(n * k, n * k);
  Real tol = pow2_neg(field.precision_bits() / 4);
  Real lr = to_real(l);
  for (std::size_t i = 0; i < n * k; ++i)
    for (std::size_t j = 0; j < n * k; ++j) {
      const Complex& z = r(i, j);
      Integer num = round_to_integer(z.re * lr);
      Rational q = Rational(num) / Rational(l);
      Real err = boost::multiprecision::abs(z.re - to_real(q));
      if (err > tol * (1 + boost::multiprecision::abs(z.re)) || boost::multiprecision::abs(z.im) > tol)
        throw Undecided("rationalization rounding failed; raise the precision");
      out(i, j) = q;
    }
  if (out != restriction_of_scalars(field, c0))
    throw InconsistentResult("rounded matrix differs from the exact restriction of scalars");
  for (const auto& g : commute_with)
    if (g * out != out * g) throw InconsistentResult("rationalized matrix does not commute with the representation");
  if (char_poly(out).primitive_integer_part() != norm_char_poly(field, c0))
    throw InconsistentResult("rationalized characteristic polynomial differs from the norm");
  return out;
}

}  // namespace anosov
