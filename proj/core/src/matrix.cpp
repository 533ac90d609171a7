#include "quintic/matrix.hpp"

#include <utility>

#include "quintic/error.hpp"

namespace quintic {

namespace {

std::size_t bits(const mpq_class& q) {
  if (q == 0) return 0;
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Echelon rref_rational(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<mpq_class> a(R * C);
  for (std::size_t i = 0; i < R * C; ++i) a[i] = m.entries()[i].rational();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t best = R, best_bits = 0;
    for (std::size_t i = r; i < R; ++i) {
      std::size_t b = bits(a[i * C + c]);
      if (b != 0 && (best == R || b < best_bits)) {
        best = i;
        best_bits = b;
      }
    }
    if (best == R) continue;
    if (best != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(a[r * C + j], a[best * C + j]);
    }
    mpq_class inv = 1 / a[r * C + c];
    for (std::size_t j = c; j < C; ++j) a[r * C + j] *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a[i * C + c] == 0) continue;
      mpq_class f = a[i * C + c];
      for (std::size_t j = c; j < C; ++j) {
        if (a[r * C + j] != 0) a[i * C + j] -= f * a[r * C + j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m.field(), R, C);
  for (std::size_t i = 0; i < R * C; ++i) out.at(i / C, i % C) = Scalar::from_mpq(m.field(), a[i]);
  return {std::move(out), std::move(pivots)};
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Echelon rref_modular(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::uint64_t p = m.field().modulus();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t i = 0; i < R * C; ++i) a[i] = m.entries()[i].residue();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i) {
      if (a[i * C + c]) {
        piv = i;
        break;
      }
    }
    if (piv == R) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(a[r * C + j], a[piv * C + j]);
    }
    std::uint64_t inv = pow_mod(a[r * C + c], p - 2, p);
    for (std::size_t j = c; j < C; ++j) a[r * C + j] = a[r * C + j] * inv % p;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a[i * C + c] == 0) continue;
      std::uint64_t f = p - a[i * C + c];
      for (std::size_t j = c; j < C; ++j) a[i * C + j] = (a[i * C + j] + f * a[r * C + j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m.field(), R, C);
  for (std::size_t i = 0; i < R * C; ++i) out.at(i / C, i % C) = Scalar::from_int(m.field(), long(a[i]));
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].field() == f)) throw FieldMismatch("matrix entry in " + rows[i][j].field().name());
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::reduce(Field target) const {
  Matrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].reduce(target);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product across fields");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Echelon rref(const Matrix& m) { return m.field().is_rational() ? rref_rational(m) : rref_modular(m); }

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(r, m.cols());
  return x;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (!a.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
      det = -det;
    }
    det *= a.at(c, c);
    Scalar inv = a.at(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      Scalar f = a.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.reduced.at(r, n + c);
  return inv;
}

}  // namespace quintic
