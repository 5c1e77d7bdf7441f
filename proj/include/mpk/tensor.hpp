#pragma once

// Small dense tensors of rank 1..5 over a based space, with the three
// primitives every tensor identity in scope reduces to: kron, slot-wise
// matrix application and slot permutation.  Storage is row-major, so a rank-2
// tensor flattens as (i, j) -> i * dimR + j with the row as the left factor.

#include <numeric>
#include <string>
#include <vector>

#include "mpk/linalg.hpp"

namespace mpk {

class Tensor {
 public:
  Tensor(FieldSpec f, std::vector<int> shape)
      : field_(f), shape_(std::move(shape)) {
    if (shape_.empty() || shape_.size() > 5)
      throw Error("Tensor rank must be 1..5");
    size_t n = 1;
    for (int d : shape_) {
      if (d <= 0) throw Error("Tensor dimensions must be positive");
      n *= static_cast<size_t>(d);
    }
    a_.assign(n, Scalar::zero(f));
  }

  static Tensor from_vec(const Vec& v) {
    Tensor t(v.field(), {v.dim()});
    for (int i = 0; i < v.dim(); ++i) t.a_[i] = v.at(i);
    return t;
  }

  static Tensor from_mat(const Mat& m) {
    Tensor t(m.field(), {m.rows(), m.cols()});
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) t.at({i, j}) = m.at(i, j);
    return t;
  }

  const FieldSpec& field() const { return field_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  size_t size() const { return a_.size(); }

  Scalar& at(const std::vector<int>& idx) { return a_[offset(idx)]; }
  const Scalar& at(const std::vector<int>& idx) const {
    return a_[offset(idx)];
  }
  Scalar& flat(size_t i) { return a_[i]; }
  const Scalar& flat(size_t i) const { return a_[i]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Tensor operator+(const Tensor& o) const {
    shape_check(o);
    Tensor r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Tensor operator-(const Tensor& o) const {
    shape_check(o);
    Tensor r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Tensor operator-() const {
    Tensor r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Tensor scaled(const Scalar& s) const {
    Tensor r(*this);
    for (auto& x : r.a_) x *= s;
    return r;
  }
  Tensor& operator+=(const Tensor& o) { return *this = *this + o; }
  Tensor& operator-=(const Tensor& o) { return *this = *this - o; }

  bool operator==(const Tensor& o) const {
    shape_check(o);
    return a_ == o.a_;
  }
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  // Decode a flat offset into multi-indices (row-major).
  std::vector<int> unflatten(size_t off) const {
    std::vector<int> idx(shape_.size());
    for (int s = rank() - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(off % shape_[s]);
      off /= shape_[s];
    }
    return idx;
  }

  // "e1^e2 - e2^e1" style rendering; "0" when zero.
  std::string str(const std::string& sym = "e") const {
    std::string out;
    bool first = true;
    for (size_t off = 0; off < a_.size(); ++off) {
      if (a_[off].is_zero()) continue;
      auto idx = unflatten(off);
      std::string basis;
      for (size_t s = 0; s < idx.size(); ++s) {
        if (s) basis += "^";
        basis += sym + std::to_string(idx[s] + 1);
      }
      detail::append_term(out, a_[off], first, basis);
    }
    return first ? "0" : out;
  }

 private:
  size_t offset(const std::vector<int>& idx) const {
    if (idx.size() != shape_.size()) throw Error("Tensor rank mismatch");
    size_t off = 0;
    for (size_t s = 0; s < idx.size(); ++s) {
      if (idx[s] < 0 || idx[s] >= shape_[s])
        throw Error("Tensor index out of range");
      off = off * shape_[s] + idx[s];
    }
    return off;
  }

  void shape_check(const Tensor& o) const {
    if (field_ != o.field_ || shape_ != o.shape_)
      throw Error("Tensor shape/field mismatch");
  }

  FieldSpec field_;
  std::vector<int> shape_;
  std::vector<Scalar> a_;
};

// Tensor product: entry (i.., j..) = a(i..) * b(j..).
inline Tensor kron(const Tensor& a, const Tensor& b) {
  if (a.field() != b.field()) throw Error("kron field mismatch");
  std::vector<int> shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  Tensor r(a.field(), shape);
  size_t bn = b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.flat(i).is_zero()) continue;
    for (size_t j = 0; j < bn; ++j) r.flat(i * bn + j) = a.flat(i) * b.flat(j);
  }
  return r;
}

inline Tensor kron(const Vec& a, const Vec& b) {
  return kron(Tensor::from_vec(a), Tensor::from_vec(b));
}

// Contract a matrix against one slot, leaving the others fixed:
// out[.., i, ..] = sum_j m(i, j) * t[.., j, ..].  Slots are 0-based.
inline Tensor apply_slot(const Tensor& t, const Mat& m, int slot) {
  if (slot < 0 || slot >= t.rank()) throw Error("apply_slot: slot out of range");
  if (m.cols() != t.shape()[slot] || m.field() != t.field())
    throw Error("apply_slot: shape mismatch");
  std::vector<int> shape = t.shape();
  shape[slot] = m.rows();
  Tensor r(t.field(), shape);
  for (size_t off = 0; off < t.size(); ++off) {
    if (t.flat(off).is_zero()) continue;
    std::vector<int> idx = t.unflatten(off);
    int j = idx[slot];
    for (int i = 0; i < m.rows(); ++i) {
      if (m.at(i, j).is_zero()) continue;
      idx[slot] = i;
      r.at(idx) += m.at(i, j) * t.flat(off);
    }
  }
  return r;
}

// Slot permutation; perm[s] is the destination slot of source slot s, so a
// simple tensor v_0 x v_1 x .. maps to the tensor with v_s in slot perm[s].
inline Tensor permute(const Tensor& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.rank())
    throw Error("permute: permutation length must equal rank");
  std::vector<bool> seen(perm.size(), false);
  for (int d : perm) {
    if (d < 0 || d >= t.rank() || seen[d])
      throw Error("permute: invalid permutation");
    seen[d] = true;
  }
  std::vector<int> shape(t.rank());
  for (int s = 0; s < t.rank(); ++s) shape[perm[s]] = t.shape()[s];
  Tensor r(t.field(), shape);
  std::vector<int> dst(t.rank());
  for (size_t off = 0; off < t.size(); ++off) {
    if (t.flat(off).is_zero()) continue;
    std::vector<int> src = t.unflatten(off);
    for (int s = 0; s < t.rank(); ++s) dst[perm[s]] = src[s];
    r.at(dst) = t.flat(off);
  }
  return r;
}

// The flip tau on rank 2.
inline Tensor flip(const Tensor& t) { return permute(t, {1, 0}); }

}  // namespace mpk
