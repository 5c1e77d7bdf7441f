#pragma once

// Structure-constant data types: bilinear operations c[i][j][k] (e_i * e_j =
// sum_k c_ijk e_k), comultiplications d[k][i][j] (delta(e_k) = sum d_k^ij
// e_i x e_j), bilinear forms, and representation actions (one module-sized
// matrix per acting basis vector).

#include <optional>
#include <string>
#include <vector>

#include "mpk/tensor.hpp"

namespace mpk {

enum class Symmetry { none, symmetric, antisymmetric };

class BilinearOp {
 public:
  BilinearOp(FieldSpec f, int dim, Symmetry tag = Symmetry::none)
      : field_(f), dim_(dim), tag_(tag),
        c_(static_cast<size_t>(dim) * dim * dim, Scalar::zero(f)) {
    if (dim <= 0) throw Error("BilinearOp dimension must be positive");
  }

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  Symmetry tag() const { return tag_; }
  void set_tag(Symmetry t) { tag_ = t; }

  Scalar& at(int i, int j, int k) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
      throw Error("BilinearOp index out of range");
    return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  const Scalar& at(int i, int j, int k) const {
    return const_cast<BilinearOp*>(this)->at(i, j, k);
  }

  // e_i * e_j as a vector.
  Vec on_basis(int i, int j) const {
    Vec r(field_, dim_);
    for (int k = 0; k < dim_; ++k) r.at(k) = at(i, j, k);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const BilinearOp& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_;
  }

  // Whether the stored table actually satisfies the tag's constraint.
  bool satisfies(Symmetry tag) const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j <= i; ++j)
        for (int k = 0; k < dim_; ++k) {
          if (tag == Symmetry::symmetric && at(i, j, k) != at(j, i, k))
            return false;
          if (tag == Symmetry::antisymmetric) {
            if (i == j && !at(i, i, k).is_zero()) return false;
            if (at(i, j, k) != -at(j, i, k)) return false;
          }
        }
    return true;
  }

 private:
  FieldSpec field_;
  int dim_;
  Symmetry tag_;
  std::vector<Scalar> c_;
};

// (u * v)_k = sum_{i,j} u_i v_j c_ijk.
inline Vec multiply(const BilinearOp& op, const Vec& u, const Vec& v) {
  if (u.dim() != op.dim() || v.dim() != op.dim() || u.field() != op.field() ||
      v.field() != op.field())
    throw Error("multiply: dim/field mismatch");
  Vec r(op.field(), op.dim());
  for (int i = 0; i < op.dim(); ++i) {
    if (u.at(i).is_zero()) continue;
    for (int j = 0; j < op.dim(); ++j) {
      if (v.at(j).is_zero()) continue;
      Scalar uv = u.at(i) * v.at(j);
      for (int k = 0; k < op.dim(); ++k) {
        const Scalar& c = op.at(i, j, k);
        if (!c.is_zero()) r.at(k) += uv * c;
      }
    }
  }
  return r;
}

// J(x,y,z) = [[x,y],z] + [[z,x],y] + [[y,z],x].
inline Vec jacobiator(const BilinearOp& b, const Vec& x, const Vec& y,
                      const Vec& z) {
  return multiply(b, multiply(b, x, y), z) +
         multiply(b, multiply(b, z, x), y) +
         multiply(b, multiply(b, y, z), x);
}

class Comultiplication {
 public:
  Comultiplication(FieldSpec f, int dim)
      : field_(f), dim_(dim),
        d_(static_cast<size_t>(dim) * dim * dim, Scalar::zero(f)) {
    if (dim <= 0) throw Error("Comultiplication dimension must be positive");
  }

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }

  Scalar& at(int k, int i, int j) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
      throw Error("Comultiplication index out of range");
    return d_[(static_cast<size_t>(k) * dim_ + i) * dim_ + j];
  }
  const Scalar& at(int k, int i, int j) const {
    return const_cast<Comultiplication*>(this)->at(k, i, j);
  }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Comultiplication& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && d_ == o.d_;
  }

  // delta(e_k) as a rank-2 tensor.
  Tensor on_basis(int k) const {
    Tensor t(field_, {dim_, dim_});
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) t.at({i, j}) = at(k, i, j);
    return t;
  }

  // Linear extension to an arbitrary element.
  Tensor on(const Vec& x) const {
    if (x.dim() != dim_ || x.field() != field_)
      throw Error("Comultiplication argument mismatch");
    Tensor t(field_, {dim_, dim_});
    for (int k = 0; k < dim_; ++k) {
      if (x.at(k).is_zero()) continue;
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
          const Scalar& d = at(k, i, j);
          if (!d.is_zero()) t.at({i, j}) += x.at(k) * d;
        }
    }
    return t;
  }

 private:
  FieldSpec field_;
  int dim_;
  std::vector<Scalar> d_;
};

// Dual operation on A*: [xi_i, xi_j]* = sum_k d_k^ij xi_k, fixed by
// <delta(x), xi x eta> = <x, [xi, eta]*> in dual-basis coordinates.
inline BilinearOp dualize(const Comultiplication& co) {
  BilinearOp op(co.field(), co.dim());
  for (int i = 0; i < co.dim(); ++i)
    for (int j = 0; j < co.dim(); ++j)
      for (int k = 0; k < co.dim(); ++k) op.at(i, j, k) = co.at(k, i, j);
  return op;
}

// Inverse identification (the comultiplication whose dual is the given op).
inline Comultiplication co_of(const BilinearOp& op) {
  Comultiplication co(op.field(), op.dim());
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j)
      for (int k = 0; k < op.dim(); ++k) co.at(k, i, j) = op.at(i, j, k);
  return co;
}

// Replace one slot by two via a comultiplication:
// out[.., a, b, ..] = sum_x t[.., x, ..] d_x^ab.
inline Tensor expand_slot(const Tensor& t, const Comultiplication& co,
                          int slot) {
  if (slot < 0 || slot >= t.rank())
    throw Error("expand_slot: slot out of range");
  if (t.shape()[slot] != co.dim() || t.field() != co.field())
    throw Error("expand_slot: shape mismatch");
  std::vector<int> shape = t.shape();
  shape.insert(shape.begin() + slot, co.dim());
  Tensor r(t.field(), shape);
  std::vector<int> dst(shape.size());
  for (size_t off = 0; off < t.size(); ++off) {
    if (t.flat(off).is_zero()) continue;
    std::vector<int> src = t.unflatten(off);
    for (int s = 0; s < slot; ++s) dst[s] = src[s];
    for (int s = slot + 1; s < t.rank(); ++s) dst[s + 1] = src[s];
    int x = src[slot];
    for (int a = 0; a < co.dim(); ++a)
      for (int b = 0; b < co.dim(); ++b) {
        const Scalar& d = co.at(x, a, b);
        if (d.is_zero()) continue;
        dst[slot] = a;
        dst[slot + 1] = b;
        r.at(dst) += t.flat(off) * d;
      }
  }
  return r;
}

// Merge slots (slot, slot+1) via a bilinear operation:
// out[.., k, ..] = sum_{i,j} t[.., i, j, ..] c_ijk.
inline Tensor contract_pair(const Tensor& t, const BilinearOp& op, int slot) {
  if (slot < 0 || slot + 1 >= t.rank())
    throw Error("contract_pair: slot out of range");
  if (t.shape()[slot] != op.dim() || t.shape()[slot + 1] != op.dim() ||
      t.field() != op.field())
    throw Error("contract_pair: shape mismatch");
  std::vector<int> shape = t.shape();
  shape.erase(shape.begin() + slot + 1);
  Tensor r(t.field(), shape);
  std::vector<int> dst(shape.size());
  for (size_t off = 0; off < t.size(); ++off) {
    if (t.flat(off).is_zero()) continue;
    std::vector<int> src = t.unflatten(off);
    for (int s = 0; s < slot; ++s) dst[s] = src[s];
    for (int s = slot + 2; s < t.rank(); ++s) dst[s - 1] = src[s];
    int i = src[slot], j = src[slot + 1];
    for (int k = 0; k < op.dim(); ++k) {
      const Scalar& c = op.at(i, j, k);
      if (c.is_zero()) continue;
      dst[slot] = k;
      r.at(dst) += t.flat(off) * c;
    }
  }
  return r;
}

class BilinearForm {
 public:
  BilinearForm(FieldSpec f, int dim)
      : field_(f), dim_(dim),
        b_(static_cast<size_t>(dim) * dim, Scalar::zero(f)) {
    if (dim <= 0) throw Error("BilinearForm dimension must be positive");
  }

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }

  Scalar& at(int i, int j) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
      throw Error("BilinearForm index out of range");
    return b_[static_cast<size_t>(i) * dim_ + j];
  }
  const Scalar& at(int i, int j) const {
    return const_cast<BilinearForm*>(this)->at(i, j);
  }

  Scalar eval(const Vec& u, const Vec& v) const {
    if (u.dim() != dim_ || v.dim() != dim_) throw Error("form dim mismatch");
    Scalar s = Scalar::zero(field_);
    for (int i = 0; i < dim_; ++i) {
      if (u.at(i).is_zero()) continue;
      for (int j = 0; j < dim_; ++j)
        if (!at(i, j).is_zero()) s += u.at(i) * v.at(j) * at(i, j);
    }
    return s;
  }

  Mat as_matrix() const {
    Mat m(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m.at(i, j) = at(i, j);
    return m;
  }

  bool is_symmetric() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < i; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool is_nondegenerate() const { return !as_matrix().determinant().is_zero(); }

 private:
  FieldSpec field_;
  int dim_;
  std::vector<Scalar> b_;
};

// phi : A -> A* with <phi(x), y> = B(x, y); in dual-basis coordinates the
// matrix is B transposed.
inline LinearMap form_to_map(const BilinearForm& B) {
  return LinearMap(B.dim(), B.dim(), B.as_matrix().transposed());
}

// Residual tensors of the two Yang-Baxter equations for r in A x A, computed
// from the expanded double-sum formulas (no unit element is adjoined):
//   C(r) = r12 o r13 - r23 o r12 + r13 o r23
//   M(r) = [r12, r13] + [r12, r23] + [r13, r23]
inline std::pair<Tensor, Tensor> mpybe_residuals_of(const BilinearOp& product,
                                                    const BilinearOp& bracket,
                                                    const Tensor& r) {
  int d = product.dim();
  if (bracket.dim() != d || r.rank() != 2 || r.shape()[0] != d ||
      r.shape()[1] != d || r.field() != product.field())
    throw Error("mpybe residuals: shape/field mismatch");
  FieldSpec f = r.field();
  Tensor C(f, {d, d, d}), M(f, {d, d, d});
  auto rat = [&r](int i, int j) -> const Scalar& { return r.at({i, j}); };
  for (int a = 0; a < d; ++a)
    for (int bb = 0; bb < d; ++bb)
      for (int c = 0; c < d; ++c) {
        Scalar sc = Scalar::zero(f), sm = Scalar::zero(f);
        for (int u = 0; u < d; ++u)
          for (int v = 0; v < d; ++v) {
            // r12 o r13 -> sum_us r_ub r_sc (e_u o e_s)_a ; same index
            // pattern for [r12, r13].
            Scalar w1 = rat(u, bb) * rat(v, c);
            if (!w1.is_zero()) {
              sc += w1 * product.at(u, v, a);
              sm += w1 * bracket.at(u, v, a);
            }
            // r23 o r12 = sum x_j (x_i o y_j) y_i ; [r12, r23] analogous.
            Scalar w2 = rat(u, c) * rat(a, v);
            if (!w2.is_zero()) {
              sc -= w2 * product.at(u, v, bb);
              sm += rat(a, u) * rat(v, c) * bracket.at(u, v, bb);
            }
            // r13 o r23 and [r13, r23].
            Scalar w3 = rat(a, u) * rat(bb, v);
            if (!w3.is_zero()) {
              sc += w3 * product.at(u, v, c);
              sm += w3 * bracket.at(u, v, c);
            }
          }
        C.at({a, bb, c}) = sc;
        M.at({a, bb, c}) = sm;
      }
  return {C, M};
}

// A family of module-endomorphism matrices, one per acting basis vector.
class RepAction {
 public:
  RepAction(FieldSpec f, int acting_dim, int module_dim)
      : field_(f), acting_dim_(acting_dim), module_dim_(module_dim),
        mats_(acting_dim, Mat(f, module_dim, module_dim)) {
    if (acting_dim <= 0 || module_dim <= 0)
      throw Error("RepAction dimensions must be positive");
  }

  const FieldSpec& field() const { return field_; }
  int acting_dim() const { return acting_dim_; }
  int module_dim() const { return module_dim_; }

  Mat& mat(int i) {
    if (i < 0 || i >= acting_dim_) throw Error("RepAction index out of range");
    return mats_[i];
  }
  const Mat& mat(int i) const {
    return const_cast<RepAction*>(this)->mat(i);
  }

  bool is_zero() const {
    for (const auto& m : mats_)
      if (!m.is_zero()) return false;
    return true;
  }

  bool operator==(const RepAction& o) const {
    return field_ == o.field_ && acting_dim_ == o.acting_dim_ &&
           mats_ == o.mats_;
  }

  // Matrix of the action of an arbitrary acting element (linear extension).
  Mat of(const Vec& x) const {
    if (x.dim() != acting_dim_ || x.field() != field_)
      throw Error("RepAction: acting element mismatch");
    Mat m(field_, module_dim_, module_dim_);
    for (int i = 0; i < acting_dim_; ++i)
      if (!x.at(i).is_zero()) m += mats_[i].scaled(x.at(i));
    return m;
  }

  Vec apply(const Vec& x, const Vec& v) const { return of(x).apply(v); }
  Vec apply(int i, const Vec& v) const { return mat(i).apply(v); }

 private:
  FieldSpec field_;
  int acting_dim_, module_dim_;
  std::vector<Mat> mats_;
};

}  // namespace mpk
