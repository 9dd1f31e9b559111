#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hopfkit/errors.hpp"

namespace hopfkit {

Vec zero_vec(std::size_t n, int conductor) { return Vec(n, CycNumber(conductor)); }

Vec unit_vec(std::size_t n, std::size_t i, int conductor) {
  Vec v = zero_vec(n, conductor);
  v.at(i) = CycNumber(conductor, 1L);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNumber& x) { return x.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidParameter("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!b[i].is_zero()) r[i] += b[i];
  }
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidParameter("vector length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!b[i].is_zero()) r[i] -= b[i];
  }
  return r;
}

Vec scale(const CycNumber& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) {
    if (!x.is_zero()) x *= s;
  }
  return r;
}

void axpy(Vec& acc, const CycNumber& s, const Vec& v) {
  if (s.is_zero()) return;
  const bool unit = s.is_one();
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (unit) {
      acc[i] += v[i];
    } else {
      acc[i] += s * v[i];
    }
  }
}

Vec embed(const Vec& v, int conductor) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(embed(x, conductor));
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(rows * cols, CycNumber(conductor)) {}

Matrix Matrix::identity(std::size_t n, int conductor) {
  Matrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNumber(conductor, 1L);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, int conductor) {
  Matrix m(rows.size(), cols, conductor);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidParameter("row length mismatch in Matrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows, int conductor) {
  Matrix m(rows, cols.size(), conductor);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidParameter("column length mismatch in Matrix::from_cols");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, conductor_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw InvalidParameter("dimension mismatch in Matrix::apply");
  Vec out = zero_vec(rows_, conductor_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const CycNumber& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

CycNumber Matrix::trace() const {
  CycNumber t(conductor_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycNumber& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const CycNumber& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::embedded(int conductor) const {
  Matrix m(rows_, cols_, conductor);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = embed(data_[i], conductor);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidParameter("dimension mismatch in matrix product");
  if (a.conductor() != b.conductor()) throw ConductorMismatch("conductor mismatch in matrix product");
  Matrix m(a.rows(), b.cols(), a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const CycNumber& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const CycNumber& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidParameter("dimension mismatch in matrix sum");
  Matrix m = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) += b(r, c);
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidParameter("dimension mismatch in matrix difference");
  Matrix m = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) -= b(r, c);
  }
  return m;
}

Matrix scale(const CycNumber& s, const Matrix& m) {
  Matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!r(i, j).is_zero()) r(i, j) *= s;
    }
  }
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.conductor() != b.conductor()) throw ConductorMismatch("conductor mismatch in kron");
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const CycNumber& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const CycNumber& y = b(k, l);
          if (!y.is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
      }
    }
  }
  return m;
}

Matrix matrix_power(const Matrix& m, unsigned e) {
  Matrix result = Matrix::identity(m.rows(), m.conductor());
  Matrix base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const CycNumber c = v[pivot_[r]];
    if (c.is_zero()) continue;
    const Vec& row = rows_[r];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j] -= c * row[j];
    }
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != ambient_) throw InvalidParameter("vector length mismatch in EchelonBasis::insert");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const CycNumber inv = v[p].inverse();
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    const CycNumber c = row[p];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!v[j].is_zero()) row[j] -= c * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivot_.push_back(p);
  return true;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<Vec> EchelonBasis::sorted_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> p = pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

RrefResult rref(const Matrix& m) {
  EchelonBasis eb(m.cols(), m.conductor());
  for (std::size_t r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
  RrefResult res;
  res.rank = eb.rank();
  res.pivots = eb.pivots();
  res.rref = Matrix::from_rows(eb.sorted_rows(), m.cols(), m.conductor());
  return res;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis eb(m.cols(), m.conductor());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    eb.insert(m.row(r));
    if (eb.rank() == m.cols()) break;
  }
  return eb.rank();
}

Subspace nullspace(const Matrix& m) {
  const int cond = m.conductor();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.cols(), cond);
    v[f] = CycNumber(cond, 1L);
    for (std::size_t r = 0; r < rr.rank; ++r) {
      const CycNumber& x = rr.rref(r, f);
      if (!x.is_zero()) v[rr.pivots[r]] = -x;
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), cond, vecs);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw InvalidParameter("dimension mismatch in solve");
  const int cond = a.conductor();
  // Reduce the augmented matrix [a | b].
  EchelonBasis eb(a.cols() + 1, cond);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    row.push_back(b[r]);
    eb.insert(std::move(row));
  }
  Vec x = zero_vec(a.cols(), cond);
  auto rows = eb.sorted_rows();
  auto piv = eb.pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (piv[i] == a.cols()) return std::nullopt;
    x[piv[i]] = rows[i][a.cols()];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const int cond = m.conductor();
  EchelonBasis eb(2 * n, cond);
  for (std::size_t r = 0; r < n; ++r) {
    Vec row = m.row(r);
    for (std::size_t j = 0; j < n; ++j) row.push_back(CycNumber(cond, j == r ? 1L : 0L));
    eb.insert(std::move(row));
  }
  auto piv = eb.pivots();
  if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
  auto rows = eb.sorted_rows();
  Matrix inv(n, n, cond);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  }
  return inv;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient, int conductor) : ambient_(ambient), conductor_(conductor) {}

Subspace Subspace::span(std::size_t ambient, int conductor, const std::vector<Vec>& vectors) {
  EchelonBasis eb(ambient, conductor);
  for (const auto& v : vectors) {
    eb.insert(v);
    if (eb.rank() == ambient) break;
  }
  Subspace s(ambient, conductor);
  s.basis_ = eb.sorted_rows();
  s.pivots_ = eb.pivots();
  return s;
}

Subspace Subspace::full(std::size_t ambient, int conductor) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(ambient, i, conductor));
  return span(ambient, conductor, vs);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_, conductor_); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw InvalidParameter("ambient dimension mismatch in Subspace::contains");
  Vec w = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const CycNumber c = w[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_[r][j].is_zero()) w[j] -= c * basis_[r][j];
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other);
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

void Subspace::check_ambient(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    throw InvalidParameter("ambient dimension mismatch: " + std::to_string(ambient_) + " vs " +
                           std::to_string(other.ambient_));
  }
}

Subspace Subspace::operator+(const Subspace& other) const {
  check_ambient(other);
  std::vector<Vec> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, conductor_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(other);
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_, conductor_);
  // Solve sum a_i u_i - sum b_j v_j = 0; the intersection is spanned by sum a_i u_i.
  const std::size_t du = dim();
  const std::size_t dv = other.dim();
  Matrix m(ambient_, du + dv, conductor_);
  for (std::size_t i = 0; i < du; ++i) {
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  }
  for (std::size_t j = 0; j < dv; ++j) {
    for (std::size_t r = 0; r < ambient_; ++r) m(r, du + j) = -other.basis_[j][r];
  }
  Subspace ns = nullspace(m);
  std::vector<Vec> vs;
  for (const auto& coef : ns.basis()) {
    Vec v = zero_vec(ambient_, conductor_);
    for (std::size_t i = 0; i < du; ++i) axpy(v, coef[i], basis_[i]);
    vs.push_back(std::move(v));
  }
  return span(ambient_, conductor_, vs);
}

Subspace Subspace::orthogonal_complement(const Matrix& pairing) const {
  if (pairing.rows() != ambient_ || pairing.cols() != ambient_) {
    throw InvalidParameter("pairing matrix has wrong shape");
  }
  if (dim() == 0) return full(ambient_, conductor_);
  return nullspace(basis_matrix() * pairing);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_, conductor_);
  return nullspace(basis_matrix());
}

Subspace bilinear_closure(const Subspace& s, const BilinearMap& m) {
  EchelonBasis eb(s.ambient_dim(), s.conductor());
  std::vector<Vec> found;
  std::size_t processed = 0;
  for (const auto& v : s.basis()) {
    if (eb.insert(v)) found.push_back(v);
  }
  // Worklist: each newly found vector is multiplied against every vector
  // found so far (including itself) on both sides.
  while (processed < found.size()) {
    const Vec v = found[processed];
    for (std::size_t j = 0; j <= processed; ++j) {
      const Vec w = found[j];
      for (Vec prod : {m(v, w), m(w, v)}) {
        if (eb.insert(prod)) found.push_back(std::move(prod));
      }
    }
    ++processed;
  }
  return Subspace::span(s.ambient_dim(), s.conductor(), found);
}

}  // namespace hopfkit
