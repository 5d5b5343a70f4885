#include "dynwg/linalg.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace dynwg {

Scalar parse_scalar(const std::string& text) {
  auto bad = [&] { return InvalidArgument("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t k = start; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      if (slash) throw bad();
      slash = true;
    } else if (c >= '0' && c <= '9') {
      (slash ? digit_after : digit_before) = true;
    } else {
      throw bad();
    }
  }
  if (!digit_before || (slash && !digit_after)) throw bad();
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Scalar q;
  if (q.set_str(body, 10) != 0) throw bad();
  if (slash && q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& q) { return q.get_str(); }

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, int rows) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw InvalidArgument("column length mismatch");
    for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

QVector QMatrix::column(int c) const {
  QVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix dimension mismatch");
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidArgument("vector dimension mismatch");
  QVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix dimension mismatch");
  QMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix dimension mismatch");
  QMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return sgn(q) == 0; });
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (sgn(m(r, col)) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Scalar inv = 1 / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Scalar f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidArgument("inverse of non-square matrix");
  const int n = rows_;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1))
    throw InvalidArgument("matrix is singular");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

int QMatrix::rank() const {
  QMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<int> QMatrix::pivot_columns() const {
  QMatrix m = *this;
  return rref(m);
}

std::vector<QVector> QMatrix::nullspace() const {
  QMatrix m = *this;
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols_);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector QMatrix::solve(const QVector& b) const {
  if (rows_ != cols_ || static_cast<int>(b.size()) != rows_) throw InvalidArgument("solve dimension mismatch");
  const int n = rows_;
  QMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1))
    throw InvalidArgument("matrix is singular");
  QVector x(n);
  for (int i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

void SparseMatrix::add(int r, int c, const Scalar& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InvalidArgument("sparse index out of range");
  if (sgn(value) == 0) return;
  auto& row = row_data_[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (sgn(it->second) == 0) row.erase(it);
  } else {
    row.insert(it, Entry{c, value});
  }
}

Scalar SparseMatrix::at(int r, int c) const {
  const auto& row = row_data_[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : row_data_) n += r.size();
  return n;
}

QVector SparseMatrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidArgument("dimension mismatch in matrix-vector product");
  QVector out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, a] : row_data_[r]) out[r] += a * v[c];
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("sparse dimension mismatch");
  SparseMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    std::map<int, Scalar> acc;
    for (const auto& [k, a] : row_data_[r])
      for (const auto& [c, b] : o.row_data_[k]) acc[c] += a * b;
    auto& dst = out.row_data_[r];
    for (auto& [c, v] : acc)
      if (sgn(v) != 0) dst.emplace_back(c, std::move(v));
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("sparse dimension mismatch");
  SparseMatrix out = *this;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : o.row_data_[r]) out.add(r, c, v);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const { return *this + o.scaled(-1); }

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  SparseMatrix out(rows_, cols_);
  if (sgn(s) == 0) return out;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_data_[r]) out.row_data_[r].emplace_back(c, v * s);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && row_data_ == o.row_data_;
}

QMatrix SparseMatrix::block(int r0, int nr, int c0, int nc) const {
  QMatrix m(nr, nc);
  for (int r = 0; r < nr; ++r) {
    const auto& row = row_data_[static_cast<std::size_t>(r0 + r)];
    auto it = std::lower_bound(row.begin(), row.end(), c0, [](const Entry& e, int col) { return e.first < col; });
    for (; it != row.end() && it->first < c0 + nc; ++it) m(r, it->first - c0) = it->second;
  }
  return m;
}

std::vector<std::tuple<int, int, Scalar>> SparseMatrix::triplets() const {
  std::vector<std::tuple<int, int, Scalar>> out;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_data_[r]) out.emplace_back(r, c, v);
  return out;
}

}  // namespace dynwg
