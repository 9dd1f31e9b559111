#ifndef HOPFKIT_LINALG_HPP
#define HOPFKIT_LINALG_HPP

// Dense exact matrices, vectors and subspaces over a cyclotomic field.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hopfkit/cyclotomic.hpp"

namespace hopfkit {

using Vec = std::vector<CycNumber>;

Vec zero_vec(std::size_t n, int conductor);
Vec unit_vec(std::size_t n, std::size_t i, int conductor);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const CycNumber& s, const Vec& v);
/// acc += s * v
void axpy(Vec& acc, const CycNumber& s, const Vec& v);
Vec embed(const Vec& v, int conductor);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int conductor);

  static Matrix identity(std::size_t n, int conductor);
  /// Rows must all have length `cols`.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, int conductor);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows, int conductor);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }

  CycNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  const std::vector<CycNumber>& entries() const { return data_; }

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  CycNumber trace() const;
  bool is_zero() const;
  bool is_identity() const;
  Matrix embedded(int conductor) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.conductor_ == b.conductor_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int conductor_ = 1;
  std::vector<CycNumber> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const CycNumber& s, const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Matrix& m, unsigned e);

/// Incremental reduced row echelon basis.  Rows are inserted one at a time;
/// every stored row has a unit pivot and zeros in all other pivot columns.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t ambient, int conductor) : ambient_(ambient), conductor_(conductor) {}

  /// Reduces v against the basis; returns true (and stores it) when v was
  /// independent.
  bool insert(Vec v);
  /// v minus its projection along the pivots; zero iff v is in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  int conductor() const { return conductor_; }
  /// Rows sorted by pivot column: the canonical RREF basis.
  std::vector<Vec> sorted_rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t ambient_;
  int conductor_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivot_;
};

class Subspace;

struct RrefResult {
  Matrix rref;  // rank rows, canonical
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// {v : m v = 0}
Subspace nullspace(const Matrix& m);
/// One exact solution of a x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

class Subspace {
 public:
  Subspace(std::size_t ambient, int conductor);

  static Subspace span(std::size_t ambient, int conductor, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient, int conductor);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  int conductor() const { return conductor_; }
  /// RREF rows.
  const std::vector<Vec>& basis() const { return basis_; }
  Matrix basis_matrix() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {v : u^T B v = 0 for all u in this}
  Subspace orthogonal_complement(const Matrix& pairing) const;
  /// Orthogonal complement under the standard pairing.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.conductor_ == b.conductor_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  int conductor_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;

  void check_ambient(const Subspace& other) const;
};

using BilinearMap = std::function<Vec(const Vec&, const Vec&)>;

/// Smallest subspace containing s and closed under m.
Subspace bilinear_closure(const Subspace& s, const BilinearMap& m);

}  // namespace hopfkit

#endif  // HOPFKIT_LINALG_HPP
