#include "suptrop/matrix.hpp"

#include <algorithm>

#include "suptrop/errors.hpp"

namespace suptrop {

bool is_tangible_vec(const Vec& v) {
  bool some = false;
  for (const auto& e : v) {
    if (e.is_ghost()) return false;
    if (!e.is_bottom()) some = true;
  }
  return some;
}

bool all_ghost_or_bottom(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Element& e) { return e.ghost_or_bottom(); });
}

Vec scale_vec(const Element& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Element>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  e_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw DimensionError("ragged matrix initializer");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Element::one();
  return m;
}

Matrix Matrix::diag(const Vec& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

Matrix Matrix::permutation(const Perm& p) {
  Matrix m(static_cast<int>(p.size()), static_cast<int>(p.size()));
  for (size_t i = 0; i < p.size(); ++i)
    m.at(static_cast<int>(i), p[i]) = Element::one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  Matrix m(static_cast<int>(rows.size()),
           rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw DimensionError("ragged row list");
    m.set_row(static_cast<int>(i), rows[i]);
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionError("row length " + std::to_string(v.size()) +
                         " does not match " + shape_str());
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::pow(int m) const {
  if (!is_square()) throw DimensionError("power requires square matrix, got " + shape_str());
  if (m < 0) throw DomainError("negative matrix power");
  Matrix acc = identity(rows_);
  for (int k = 0; k < m; ++k) acc = acc * *this;
  return acc;
}

Matrix Matrix::submatrix(const std::vector<int>& rows,
                         const std::vector<int>& cols) const {
  Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return s;
}

Matrix Matrix::nu() const {
  Matrix m = *this;
  for (auto& e : m.e_) e = e.nu();
  return m;
}

Matrix Matrix::lift() const {
  Matrix m = *this;
  for (auto& e : m.e_) e = e.lift();
  return m;
}

Matrix Matrix::tangible_part() const {
  Matrix m = *this;
  for (auto& e : m.e_)
    if (e.is_ghost()) e = Element::bottom();
  return m;
}

bool Matrix::all_ghost_or_bottom() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const Element& e) { return e.ghost_or_bottom(); });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("sum of " + a.shape_str() + " and " + b.shape_str());
  Matrix c = a;
  for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = c.e_[k] + b.e_[k];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("product of " + a.shape_str() + " and " +
                         b.shape_str());
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      Element acc = Element::bottom();
      for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      c.at(i, j) = acc;
    }
  return c;
}

Matrix operator*(const Element& c, const Matrix& a) {
  Matrix m = a;
  for (auto& e : m.e_) e = c * e;
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != static_cast<int>(v.size()))
    throw DimensionError("apply of " + a.shape_str() + " to length-" +
                         std::to_string(v.size()) + " vector");
  Vec out(a.rows_);
  for (int i = 0; i < a.rows_; ++i) {
    Element acc = Element::bottom();
    for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

std::string Matrix::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

std::string to_string(DetClass c) {
  switch (c) {
    case DetClass::nonsingular: return "nonsingular";
    case DetClass::singular: return "singular";
    case DetClass::strictly_singular: return "strictly singular";
  }
  return "?";
}

}  // namespace suptrop
