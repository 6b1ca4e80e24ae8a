#pragma once

// Dense exact rational matrices and the permutation/Kronecker calculus.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "anosov/poly.hpp"
#include "anosov/rational.hpp"

namespace anosov {

class RatMatrix {
public:
  RatMatrix() = default;
  /// Zero matrix.
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Row-major literal, e.g. {{0, -1}, {1, -1}}.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix column_vector(const std::vector<Rational>& v);
  /// Companion matrix of a monic polynomial: subdiagonal ones, last column -f_0..-f_{n-1}.
  static RatMatrix companion(const RatPoly& f);
  static RatMatrix companion(const IntPoly& f) { return companion(f.to_rat()); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const;
  bool is_integral() const;
  bool is_identity() const;
  Rational trace() const;
  RatMatrix transpose() const;
  RatMatrix column(std::size_t j) const;
  RatMatrix columns(std::size_t first, std::size_t count) const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);
  std::vector<std::vector<Rational>> to_rows() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  /// Arbitrary total order so matrices can key ordered containers.
  friend bool operator<(const RatMatrix& a, const RatMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_scale(const Rational& s, const RatMatrix& a);
RatMatrix power(const RatMatrix& m, long e);

Rational det(const RatMatrix& m);
/// Throws InvalidInput when m is singular or not square.
RatMatrix inverse(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Reduced row echelon form; pivot columns are returned through `pivots` when given.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);
/// Basis of the right null space as the columns of the result (cols() may be 0).
RatMatrix kernel_basis(const RatMatrix& m);
/// Basis of the column space (columns of m at pivot positions).
RatMatrix column_space(const RatMatrix& m);
/// Solves a*x = b for a of full column rank whose column space contains b's columns.
RatMatrix solve_in_span(const RatMatrix& a, const RatMatrix& b);

/// det(X*I - m), monic of degree n.
RatPoly char_poly(const RatMatrix& m);
/// p(m) by Horner's rule.
RatMatrix poly_eval(const RatPoly& p, const RatMatrix& m);
/// Monic minimal polynomial, via the Krylov dependency of a spanning set of vectors.
RatPoly min_poly(const RatMatrix& m);

RatMatrix hstack(const std::vector<RatMatrix>& blocks);
RatMatrix vstack(const std::vector<RatMatrix>& blocks);
RatMatrix block_diag(const std::vector<RatMatrix>& blocks);
/// General Kronecker product a (x) b.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
/// m (x) I_k: every entry m_ij replaced by the block m_ij * I_k. Throws for k == 0.
RatMatrix kronecker(const RatMatrix& m, std::size_t k);

/// A permutation of {0,...,n-1}, stored as images[i] = pi(i).
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// Builds from 1-based images, e.g. {2, 1} for the transposition (1 2).
  static Permutation from_one_based(const std::vector<std::size_t>& images);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)), i.e. apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<std::size_t> images_;
};

/// Permutation matrix with (K_pi)_{ij} = 1 iff j = pi(i). Row i of K_pi * M is row pi(i) of M,
/// and K_{p1} K_{p2} = K_{p2 * p1}.
RatMatrix perm_matrix(const Permutation& pi);

}  // namespace anosov
