#include "anosov/repdec.hpp"

#include <algorithm>

#include "anosov/factor.hpp"

namespace anosov {

std::vector<RatMatrix> intertwiners(const std::vector<RatMatrix>& a, const std::vector<RatMatrix>& b) {
  if (a.size() != b.size() || a.empty()) throw InvalidInput("intertwiner systems need matching nonempty lists");
  const std::size_t da = a.front().rows(), db = b.front().rows();
  const std::size_t unknowns = db * da;
  RatMatrix sys(a.size() * unknowns, unknowns);
  // Unknown X(i, j) sits at i * da + j; equation (X A - B X)(i, j) = 0.
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        const std::size_t row = s * unknowns + i * da + j;
        for (std::size_t k = 0; k < da; ++k) sys(row, i * da + k) += a[s](k, j);
        for (std::size_t k = 0; k < db; ++k) sys(row, k * da + j) -= b[s](i, k);
      }
  RatMatrix ker = kernel_basis(sys);
  std::vector<RatMatrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RatMatrix x(db, da);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) x(i, j) = ker(i * da + j, c);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<RatMatrix> commutant(const RationalRep& rep) {
  auto gens = rep.generator_images();
  return intertwiners(gens, gens);
}

std::vector<RatMatrix> algebra_center(const std::vector<RatMatrix>& basis) {
  if (basis.empty()) return {};
  const std::size_t n = basis.front().rows(), d = basis.size();
  RatMatrix sys(d * n * n, d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < d; ++i) {
      RatMatrix comm = basis[l] * basis[i] - basis[i] * basis[l];
      for (std::size_t e = 0; e < n * n; ++e) sys(i * n * n + e, l) = comm.data()[e];
    }
  RatMatrix ker = kernel_basis(sys);
  std::vector<RatMatrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RatMatrix x(n, n);
    for (std::size_t l = 0; l < d; ++l) x = x + ker(l, c) * basis[l];
    out.push_back(std::move(x));
  }
  return out;
}

RatMatrix invariant_complement(const RationalRep& rep, const RatMatrix& subspace) {
  const std::size_t n = rep.dim(), u = subspace.cols();
  // Extend the subspace basis by standard vectors to a basis of Q^n.
  std::vector<std::size_t> piv;
  rref(hstack({subspace, RatMatrix::identity(n)}), &piv);
  RatMatrix full = subspace;
  for (std::size_t p : piv)
    if (p >= u) full = hstack({full, RatMatrix::identity(n).column(p - u)});
  RatMatrix proj_diag(n, n);
  for (std::size_t i = 0; i < u; ++i) proj_diag(i, i) = 1;
  RatMatrix proj = full * proj_diag * inverse(full);
  RatMatrix avg(n, n);
  const auto& g = rep.group();
  for (std::size_t x = 0; x < g.order(); ++x) avg = avg + rep.image(x) * proj * rep.image(g.inv(x));
  avg = Rational(1, static_cast<long>(g.order())) * avg;
  return kernel_basis(avg);
}

namespace {

IntPoly integral_char_poly(const RatMatrix& j) { return char_poly(j).primitive_integer_part(); }

// Tries to split with one commutant element; returns true and fills `out` on success.
bool try_split(const RationalRep& rep, const RatMatrix& j, std::size_t dim_e, SplitResult& out, bool& field_certificate) {
  field_certificate = false;
  auto factors = factor_over_Q(integral_char_poly(j));
  if (factors.size() > 1) {
    IntPoly p1{1}, p2{1};
    for (unsigned i = 0; i < factors[0].multiplicity; ++i) p1 = p1 * factors[0].poly;
    for (std::size_t f = 1; f < factors.size(); ++f)
      for (unsigned i = 0; i < factors[f].multiplicity; ++i) p2 = p2 * factors[f].poly;
    out.irreducible = false;
    out.first = kernel_basis(poly_eval(p1.to_rat(), j));
    out.second = kernel_basis(poly_eval(p2.to_rat(), j));
    return true;
  }
  const IntPoly& p = factors[0].poly;
  RatMatrix pj = poly_eval(p.to_rat(), j);
  if (!pj.is_zero()) {
    RatMatrix u = kernel_basis(pj);
    out.irreducible = false;
    out.first = u;
    out.second = invariant_complement(rep, u);
    return true;
  }
  field_certificate = static_cast<std::size_t>(p.degree()) == dim_e;
  return false;
}

// Smallest invariant subspace containing the columns of v.
RatMatrix submodule_span(const std::vector<RatMatrix>& gens, const RatMatrix& v) {
  RatMatrix w = column_space(v);
  for (;;) {
    std::vector<RatMatrix> parts{w};
    for (const auto& g : gens) parts.push_back(g * w);
    RatMatrix next = column_space(hstack(parts));
    if (next.cols() == w.cols()) return w;
    w = std::move(next);
  }
}

// Cyclic submodules generated by eigenvectors of single group elements.
bool try_module_split(const RationalRep& rep, SplitResult& out) {
  const auto gens = rep.generator_images();
  const auto& g = rep.group();
  const std::size_t n = rep.dim();
  const std::size_t limit = std::min<std::size_t>(g.order(), kModuleSplitElements);
  for (std::size_t x = 1; x < limit; ++x) {
    const RatMatrix& img = rep.image(x);
    for (const auto& f : factor_over_Q(integral_char_poly(img))) {
      RatMatrix ker = kernel_basis(poly_eval(f.poly.to_rat(), img));
      if (ker.cols() == 0 || ker.cols() == n) continue;
      for (std::size_t c = 0; c < ker.cols(); ++c) {
        RatMatrix w = submodule_span(gens, ker.column(c));
        if (w.cols() < n) {
          out.irreducible = false;
          out.first = w;
          out.second = invariant_complement(rep, w);
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

SplitResult split_once(const RationalRep& rep, std::mt19937_64& rng, unsigned trials) {
  SplitResult out;
  auto basis = commutant(rep);
  if (basis.size() <= 1) {
    out.irreducible = true;
    out.certificate = Certificate::Exact;
    return out;
  }
  bool field = false;
  for (const auto& b : basis) {
    if (try_split(rep, b, basis.size(), out, field)) return out;
    if (field) {
      out.irreducible = true;
      out.certificate = Certificate::Exact;
      return out;
    }
  }
  // A non-commutative commutant is a matrix algebra or a division algebra;
  // zero divisors are rarer among random elements, so search longer.
  bool commutative = true;
  for (std::size_t i = 0; i < basis.size() && commutative; ++i)
    for (std::size_t k = i + 1; k < basis.size() && commutative; ++k)
      commutative = basis[i] * basis[k] == basis[k] * basis[i];
  if (!commutative && try_module_split(rep, out)) return out;
  if (!commutative) trials = std::max(trials, kNoncommutativeSplitTrials);
  std::uniform_int_distribution<long> wide(-5, 5);
  std::uniform_int_distribution<long> narrow(-2, 2);
  for (unsigned t = 0; t < trials; ++t) {
    RatMatrix j(rep.dim(), rep.dim());
    for (const auto& b : basis) j = j + Rational(t % 2 == 0 ? wide(rng) : narrow(rng)) * b;
    if (j.is_zero()) continue;
    if (try_split(rep, j, basis.size(), out, field)) return out;
    if (field) {
      out.irreducible = true;
      out.certificate = Certificate::Exact;
      return out;
    }
  }
  out.irreducible = true;
  out.certificate = Certificate::Randomized;
  return out;
}

SplitResult split_once(const RationalRep& rep, std::uint64_t seed, unsigned trials) {
  std::mt19937_64 rng(seed);
  return split_once(rep, rng, trials);
}

std::string to_string(FsSign s) {
  switch (s) {
    case FsSign::Plus: return "+";
    case FsSign::Zero: return "0";
    case FsSign::Minus: return "-";
  }
  return "?";
}

ComponentProfile component_profile(const RationalRep& irreducible, Certificate certificate) {
  ComponentProfile prof;
  prof.sub_rep = irreducible;
  prof.subspace_basis = RatMatrix::identity(irreducible.dim());
  prof.copies = {prof.subspace_basis};
  prof.certificate = certificate;
  auto e_basis = commutant(irreducible);
  prof.dim_E = e_basis.size();
  prof.n_field = algebra_center(e_basis).size();
  if (prof.n_field == 0 || prof.dim_E % prof.n_field != 0)
    throw InconsistentResult("commutant dimension is not a multiple of its center dimension");
  const std::size_t sq = prof.dim_E / prof.n_field;
  std::size_t m = 1;
  while (m * m < sq) ++m;
  if (m * m != sq) throw InconsistentResult("dim_E / n is not a perfect square; decomposition is not irreducible");
  prof.m_schur = m;
  prof.e_complex = m * prof.n_field;
  const Rational fs = irreducible.fs_indicator_value();
  const Rational e(static_cast<long>(prof.e_complex));
  if (fs == e) {
    prof.fs_sign = FsSign::Plus;
    prof.r_components = prof.e_complex;
  } else if (fs == 0 || fs == -e) {
    prof.fs_sign = fs == 0 ? FsSign::Zero : FsSign::Minus;
    if (prof.e_complex % 2 != 0) throw InconsistentResult("odd number of complex components for a non-real type");
    prof.r_components = prof.e_complex / 2;
  } else {
    throw InconsistentResult("indicator sum " + to_string(fs) + " is not one of e, 0, -e");
  }
  if (irreducible.dim() % prof.e_complex != 0)
    throw InconsistentResult("component dimension is not divisible by the number of complex components");
  prof.k_dim = irreducible.dim() / prof.e_complex;
  return prof;
}

namespace {

struct Irreducible {
  RatMatrix basis;
  RationalRep rep;
  Certificate certificate;
};

}  // namespace

std::vector<ComponentProfile> decompose(const RationalRep& rep, std::uint64_t seed, unsigned trials) {
  std::mt19937_64 rng(seed);
  std::vector<Irreducible> pieces;
  std::vector<RatMatrix> work{RatMatrix::identity(rep.dim())};
  while (!work.empty()) {
    RatMatrix basis = std::move(work.back());
    work.pop_back();
    RationalRep sub = rep.restricted(basis);
    SplitResult s = split_once(sub, rng, trials);
    if (s.irreducible) {
      pieces.push_back({basis, sub, s.certificate});
    } else {
      if (s.first.cols() == 0 || s.second.cols() == 0 || s.first.cols() + s.second.cols() != sub.dim())
        throw InconsistentResult("split produced invalid subspaces");
      // Push the second part first so the first part is processed next.
      work.push_back(basis * s.second);
      work.push_back(basis * s.first);
    }
  }

  std::vector<ComponentProfile> classes;
  std::vector<std::vector<Rational>> characters;
  for (auto& piece : pieces) {
    auto chi = piece.rep.character();
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      if (classes[c].dimension() != piece.rep.dim() || characters[c] != chi) continue;
      auto hom = intertwiners(classes[c].sub_rep.generator_images(), piece.rep.generator_images());
      if (hom.empty()) continue;
      // hom[0] maps class coordinates to piece coordinates equivariantly.
      classes[c].copies.push_back(piece.basis * hom[0]);
      ++classes[c].multiplicity;
      if (piece.certificate == Certificate::Randomized) classes[c].certificate = Certificate::Randomized;
      placed = true;
    }
    if (placed) continue;
    ComponentProfile prof = component_profile(piece.rep, piece.certificate);
    prof.subspace_basis = piece.basis;
    prof.copies = {piece.basis};
    classes.push_back(std::move(prof));
    characters.push_back(std::move(chi));
  }
  return classes;
}

RatMatrix aligned_basis(const std::vector<ComponentProfile>& classes) {
  std::vector<RatMatrix> cols;
  for (const auto& c : classes)
    for (const auto& b : c.copies) cols.push_back(b);
  return hstack(cols);
}

}  // namespace anosov
