#pragma once

// Dense exact vectors, matrices and linear maps on based spaces.
// Dimensions in scope are tiny (<= 32), so everything is plain dense storage
// and all values are immutable once built.

#include <initializer_list>
#include <string>
#include <vector>

#include "mpk/field.hpp"

namespace mpk {

class Vec {
 public:
  Vec(FieldSpec f, int dim)
      : field_(f), dim_(dim), c_(dim, Scalar::zero(f)) {
    if (dim <= 0) throw Error("Vec dimension must be positive");
  }

  static Vec basis(FieldSpec f, int dim, int i) {
    Vec v(f, dim);
    v.at(i) = Scalar::one(f);
    return v;
  }

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }

  Scalar& at(int i) {
    if (i < 0 || i >= dim_) throw Error("Vec index out of range");
    return c_[i];
  }
  const Scalar& at(int i) const {
    if (i < 0 || i >= dim_) throw Error("Vec index out of range");
    return c_[i];
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  Vec operator+(const Vec& o) const {
    shape_check(o);
    Vec r(*this);
    for (int i = 0; i < dim_; ++i) r.c_[i] += o.c_[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    shape_check(o);
    Vec r(*this);
    for (int i = 0; i < dim_; ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  Vec operator-() const {
    Vec r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Vec scaled(const Scalar& s) const {
    Vec r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
  }
  Vec& operator+=(const Vec& o) { return *this = *this + o; }
  Vec& operator-=(const Vec& o) { return *this = *this - o; }

  bool operator==(const Vec& o) const {
    shape_check(o);
    return c_ == o.c_;
  }
  bool operator!=(const Vec& o) const { return !(*this == o); }

  // Basis-combination rendering: "2 e3 + 1/2 e5", "0" when zero.
  std::string str(const std::string& sym = "e") const;

 private:
  void shape_check(const Vec& o) const {
    if (field_ != o.field_ || dim_ != o.dim_)
      throw Error("Vec shape/field mismatch");
  }

  FieldSpec field_;
  int dim_;
  std::vector<Scalar> c_;
};

class Mat {
 public:
  Mat(FieldSpec f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows <= 0 || cols <= 0) throw Error("Mat shape must be positive");
  }

  static Mat identity(FieldSpec f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw Error("Mat index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  const Scalar& at(int i, int j) const {
    return const_cast<Mat*>(this)->at(i, j);
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Vec apply(const Vec& v) const {
    if (v.dim() != cols_ || v.field() != field_)
      throw Error("Mat/Vec shape mismatch");
    Vec r(field_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i) += at(i, j) * v.at(j);
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
      throw Error("Mat product shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    shape_check(o);
    Mat r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    shape_check(o);
    Mat r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Mat operator-() const {
    Mat r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Mat scaled(const Scalar& s) const {
    Mat r(*this);
    for (auto& x : r.a_) x *= s;
    return r;
  }
  Mat& operator+=(const Mat& o) { return *this = *this + o; }
  Mat& operator-=(const Mat& o) { return *this = *this - o; }

  Mat transposed() const {
    Mat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const {
    shape_check(o);
    return a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Exact determinant by Gaussian elimination (square matrices).
  Scalar determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    Mat m(*this);
    Scalar det = Scalar::one(field_);
    for (int col = 0; col < cols_; ++col) {
      int pivot = -1;
      for (int r = col; r < rows_; ++r)
        if (!m.at(r, col).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Scalar::zero(field_);
      if (pivot != col) {
        for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        det = -det;
      }
      det *= m.at(col, col);
      Scalar inv = m.at(col, col).inverse();
      for (int r = col + 1; r < rows_; ++r) {
        if (m.at(r, col).is_zero()) continue;
        Scalar factor = m.at(r, col) * inv;
        for (int j = col; j < cols_; ++j)
          m.at(r, j) -= factor * m.at(col, j);
      }
    }
    return det;
  }

  std::string str() const;

 private:
  void shape_check(const Mat& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
      throw Error("Mat shape/field mismatch");
  }

  FieldSpec field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// A linear map between two based spaces; matrix columns are images of the
// domain basis vectors.
struct LinearMap {
  int domain_dim;
  int codomain_dim;
  Mat matrix;

  LinearMap(int dom, int cod, Mat m)
      : domain_dim(dom), codomain_dim(cod), matrix(std::move(m)) {
    if (matrix.rows() != cod || matrix.cols() != dom)
      throw Error("LinearMap matrix shape mismatch");
  }

  static LinearMap zero(FieldSpec f, int dom, int cod) {
    return LinearMap(dom, cod, Mat(f, cod, dom));
  }
  static LinearMap identity(FieldSpec f, int n) {
    return LinearMap(n, n, Mat::identity(f, n));
  }

  Vec apply(const Vec& v) const { return matrix.apply(v); }
  Vec apply_basis(int i) const {
    Vec r(matrix.field(), codomain_dim);
    for (int k = 0; k < codomain_dim; ++k) r.at(k) = matrix.at(k, i);
    return r;
  }
};

namespace detail {

inline void append_term(std::string& out, const Scalar& c, bool& first,
                        const std::string& basis_part) {
  std::string cs = c.str();
  bool neg = !cs.empty() && cs[0] == '-';
  std::string mag = neg ? cs.substr(1) : cs;
  if (first) {
    if (neg) out += "- ";
    first = false;
  } else {
    out += neg ? " - " : " + ";
  }
  if (mag != "1") out += mag + " ";
  out += basis_part;
}

}  // namespace detail

inline std::string Vec::str(const std::string& sym) const {
  std::string out;
  bool first = true;
  for (int i = 0; i < dim_; ++i) {
    if (c_[i].is_zero()) continue;
    detail::append_term(out, c_[i], first, sym + std::to_string(i + 1));
  }
  return first ? "0" : out;
}

inline std::string Mat::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace mpk
