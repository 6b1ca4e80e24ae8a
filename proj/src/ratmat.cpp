#include "anosov/ratmat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace anosov {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == nc, "ragged matrix");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::column_vector(const std::vector<Rational>& v) {
  RatMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

RatMatrix RatMatrix::companion(const RatPoly& f) {
  require(f.is_monic() && f.degree() >= 1, "companion matrix needs a monic polynomial of degree >= 1");
  auto n = static_cast<std::size_t>(f.degree());
  RatMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool RatMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

Rational RatMatrix::trace() const {
  require(is_square(), "trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::column(std::size_t j) const { return columns(j, 1); }

RatMatrix RatMatrix::columns(std::size_t first, std::size_t count) const {
  return block(0, first, rows_, count);
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  require(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_, "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<std::vector<Rational>> RatMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "dimension mismatch in matrix addition");
  RatMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "dimension mismatch in matrix subtraction");
  RatMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a) {
  RatMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = -a.data_[i];
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols_ == b.rows_, "dimension mismatch in matrix product");
  RatMatrix c(a.rows_, b.cols_);
  Rational acc;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) == 0) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    int c = cmp(a.data_[i], b.data_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) { return a * b; }
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) { return a + b; }
RatMatrix mat_scale(const Rational& s, const RatMatrix& a) { return s * a; }

RatMatrix power(const RatMatrix& m, long e) {
  require(m.is_square(), "power of a non-square matrix");
  RatMatrix base = e < 0 ? inverse(m) : m;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RatMatrix result = RatMatrix::identity(m.rows());
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational det(const RatMatrix& m) {
  require(m.is_square(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss elimination; every division below is exact in the integral case.
  RatMatrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
  RatMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (a(row, j) != 0) a(i, j) -= f * a(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

RatMatrix inverse(const RatMatrix& m) {
  require(m.is_square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug = hstack({m, RatMatrix::identity(n)});
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidInput("matrix is singular");
  return r.block(0, n, n, n);
}

RatMatrix kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  RatMatrix r = rref(m, &piv);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < nc; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMatrix basis(nc, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t fc = free_cols[f];
    basis(fc, f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], f) = -r(i, fc);
  }
  return basis;
}

RatMatrix column_space(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  std::vector<RatMatrix> cols;
  for (auto p : piv) cols.push_back(m.column(p));
  if (cols.empty()) return RatMatrix(m.rows(), 0);
  return hstack(cols);
}

RatMatrix solve_in_span(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows() == b.rows(), "dimension mismatch in solve");
  RatMatrix aug = hstack({a, b});
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  const std::size_t n = a.cols();
  if (piv.size() != n || (n > 0 && piv[n - 1] != n - 1))
    throw InvalidInput("solve: coefficient matrix lacks full column rank");
  if (std::any_of(piv.begin(), piv.end(), [&](std::size_t p) { return p >= n; }))
    throw InvalidInput("solve: right-hand side outside the column space");
  return r.block(0, n, n, b.cols());
}

RatPoly char_poly(const RatMatrix& m) {
  require(m.is_square(), "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Similarity reduction to upper Hessenberg form, then the Hessenberg recurrence.
  RatMatrix h = m;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t p = k + 1;
    while (p < n && h(p, k) == 0) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k + 1));
    }
    for (std::size_t j = k + 2; j < n; ++j) {
      if (h(j, k) == 0) continue;
      Rational u = h(j, k) / h(k + 1, k);
      for (std::size_t c = 0; c < n; ++c) h(j, c) -= u * h(k + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, k + 1) += u * h(r, j);
    }
  }
  // p[i] = characteristic polynomial of the leading i x i block.
  std::vector<RatPoly> p(n + 1);
  p[0] = RatPoly({1});
  const RatPoly x = RatPoly::x();
  for (std::size_t mm = 1; mm <= n; ++mm) {
    p[mm] = (x - RatPoly(std::vector<Rational>{h(mm - 1, mm - 1)})) * p[mm - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < mm; ++i) {
      t *= h(mm - i, mm - i - 1);
      if (t == 0) break;
      Rational coef = t * h(mm - i - 1, mm - 1);
      if (coef != 0) p[mm] = p[mm] - coef * p[mm - i - 1];
    }
  }
  return p[n];
}

RatMatrix poly_eval(const RatPoly& p, const RatMatrix& m) {
  require(m.is_square(), "polynomial evaluation at a non-square matrix");
  RatMatrix acc(m.rows(), m.cols());
  for (long i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    if (p.coeff(static_cast<std::size_t>(i)) != 0)
      acc = acc + p.coeff(static_cast<std::size_t>(i)) * RatMatrix::identity(m.rows());
  }
  return acc;
}

RatPoly min_poly(const RatMatrix& m) {
  require(m.is_square(), "minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RatPoly({1});
  std::vector<RatMatrix> powers{RatMatrix::identity(n)};
  for (std::size_t d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * m);
    RatMatrix flat(n * n, d + 1);
    for (std::size_t k = 0; k <= d; ++k)
      for (std::size_t idx = 0; idx < n * n; ++idx) flat(idx, k) = powers[k].data()[idx];
    RatMatrix ker = kernel_basis(flat);
    if (ker.cols() > 0) {
      std::vector<Rational> c(d + 1);
      for (std::size_t k = 0; k <= d; ++k) c[k] = ker(k, 0);
      return RatPoly(c).monic();
    }
  }
  throw InconsistentResult("minimal polynomial exceeds the matrix size");
}

RatMatrix hstack(const std::vector<RatMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t nr = blocks.front().rows(), nc = 0;
  for (const auto& b : blocks) {
    require(b.rows() == nr, "hstack: row mismatch");
    nc += b.cols();
  }
  RatMatrix out(nr, nc);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c0, b);
    c0 += b.cols();
  }
  return out;
}

RatMatrix vstack(const std::vector<RatMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t nc = blocks.front().cols(), nr = 0;
  for (const auto& b : blocks) {
    require(b.cols() == nc, "vstack: column mismatch");
    nr += b.rows();
  }
  RatMatrix out(nr, nc);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, 0, b);
    r0 += b.rows();
  }
  return out;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  RatMatrix out(nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

RatMatrix kronecker(const RatMatrix& m, std::size_t k) {
  require(k > 0, "kronecker: block size must be positive");
  return kron(m, RatMatrix::identity(k));
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    require(v < images_.size() && !seen[v], "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), std::size_t{0});
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> im;
  im.reserve(images.size());
  for (auto v : images) {
    require(v >= 1, "one-based permutation image must be >= 1");
    im.push_back(v - 1);
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.size() == b.size(), "permutation size mismatch");
  std::vector<std::size_t> im(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) im[i] = a(b(i));
  return Permutation(std::move(im));
}

RatMatrix perm_matrix(const Permutation& pi) {
  RatMatrix k(pi.size(), pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) k(i, pi(i)) = 1;
  return k;
}

}  // namespace anosov
