#pragma once

// Representation actions and their verification, canonical examples
// (adjoint, left multiplication, duals in dual-basis coordinates), and the
// semidirect-product constructions.

#include "mpk/laws.hpp"

namespace mpk {

// mats[i] is the matrix of y -> [e_i, y].
inline RepAction adjoint_rep(const BilinearOp& bracket) {
  RepAction r(bracket.field(), bracket.dim(), bracket.dim());
  for (int i = 0; i < bracket.dim(); ++i)
    for (int j = 0; j < bracket.dim(); ++j)
      for (int k = 0; k < bracket.dim(); ++k)
        r.mat(i).at(k, j) = bracket.at(i, j, k);
  return r;
}

// mats[i] is the matrix of y -> e_i o y (the regular representation).
inline RepAction left_mult_rep(const BilinearOp& product) {
  return adjoint_rep(product);
}

// Dual action on V* in dual-basis coordinates (<xi_i, e_j> = delta_ij):
// sign=+1 gives theta* with matrices -theta(e_i)^T, sign=-1 gives -theta*
// with matrices +theta(e_i)^T (realizing -L*; the coadjoint ad* is sign=+1
// applied to the adjoint).
inline RepAction dual_rep(const RepAction& act, int sign) {
  if (sign != 1 && sign != -1) throw Error("dual_rep sign must be +1 or -1");
  RepAction r(act.field(), act.acting_dim(), act.module_dim());
  for (int i = 0; i < act.acting_dim(); ++i) {
    Mat t = act.mat(i).transposed();
    r.mat(i) = (sign == 1) ? -t : t;
  }
  return r;
}

// A module over a base algebra: actions plus optional operations on the
// module space itself.
struct ModuleSpec {
  AlgebraSpec base;
  int module_dim = 0;
  std::optional<RepAction> rho;        // bracket-side action
  std::optional<RepAction> mu;         // product-side action
  std::optional<BilinearOp> vbracket;  // [.,.]_V
  std::optional<BilinearOp> vproduct;  // o_V

  void validate() const {
    base.validate();
    if (module_dim <= 0) throw Error("module dimension must be positive");
    for (const RepAction* a : {rho ? &*rho : nullptr, mu ? &*mu : nullptr}) {
      if (!a) continue;
      if (a->acting_dim() != base.dim || a->module_dim() != module_dim ||
          a->field() != base.field)
        throw Error("module action shape mismatch");
    }
    for (const BilinearOp* o :
         {vbracket ? &*vbracket : nullptr, vproduct ? &*vproduct : nullptr})
      if (o && (o->dim() != module_dim || o->field() != base.field))
        throw Error("module operation shape mismatch");
  }

  Bindings bindings() const {
    Bindings b = algebra_bindings(base);
    b.rho = rho ? &*rho : nullptr;
    b.mu = mu ? &*mu : nullptr;
    b.vbracket = vbracket ? &*vbracket : nullptr;
    b.vproduct = vproduct ? &*vproduct : nullptr;
    return b;
  }
};

enum class RepKind {
  assoc_rep,
  malcev_rep,
  mp_rep,
  module_assoc,
  module_malcev,
  module_mp,
};

inline std::string rep_kind_name(RepKind k) {
  switch (k) {
    case RepKind::assoc_rep: return "assoc-rep";
    case RepKind::malcev_rep: return "malcev-rep";
    case RepKind::mp_rep: return "mp-rep";
    case RepKind::module_assoc: return "module-assoc";
    case RepKind::module_malcev: return "module-malcev";
    case RepKind::module_mp: return "module-mp";
  }
  throw Error("unknown representation kind");
}

inline std::optional<RepKind> rep_kind_from_name(const std::string& s) {
  for (RepKind k : {RepKind::assoc_rep, RepKind::malcev_rep, RepKind::mp_rep,
                    RepKind::module_assoc, RepKind::module_malcev,
                    RepKind::module_mp})
    if (rep_kind_name(k) == s) return k;
  return std::nullopt;
}

inline std::vector<LawId> rep_laws(RepKind k) {
  switch (k) {
    case RepKind::assoc_rep:
      return {LawId::ASSOC_REP};
    case RepKind::malcev_rep:
      return {LawId::MALCEV_REP};
    case RepKind::mp_rep:
      return {LawId::ASSOC_REP, LawId::MALCEV_REP, LawId::MP_REP_1,
              LawId::MP_REP_2};
    case RepKind::module_assoc:
      return {LawId::ASSOC_REP, LawId::MOD_ASSOC};
    case RepKind::module_malcev:
      return {LawId::MALCEV_REP, LawId::MOD_MALCEV_1, LawId::MOD_MALCEV_2,
              LawId::MOD_MALCEV_3};
    case RepKind::module_mp:
      return {LawId::ASSOC_REP, LawId::MALCEV_REP, LawId::MP_REP_1,
              LawId::MP_REP_2, LawId::MOD_ASSOC, LawId::MOD_MALCEV_1,
              LawId::MOD_MALCEV_2, LawId::MOD_MALCEV_3, LawId::MOD_MP_1,
              LawId::MOD_MP_2};
  }
  throw Error("unknown representation kind");
}

// One report per law of the kind, in catalog order.
inline std::vector<Report> check_representation(RepKind kind,
                                                const ModuleSpec& m,
                                                const std::string& target =
                                                    "module") {
  m.validate();
  Bindings b = m.bindings();
  std::vector<Report> out;
  for (LawId law : rep_laws(kind)) out.push_back(check_law(law, b, target));
  return out;
}

namespace detail {

// Copies a dim^3 block of structure constants with index offsets.
inline void copy_block(BilinearOp& dst, const BilinearOp& src, int oi, int oj,
                       int ok) {
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j)
      for (int k = 0; k < src.dim(); ++k) {
        const Scalar& c = src.at(i, j, k);
        if (!c.is_zero()) dst.at(oi + i, oj + j, ok + k) = c;
      }
}

}  // namespace detail

// Bracket on A + V:  [x+u, y+v] = [x,y] + rho(x)v - rho(y)u (+ the module
// bracket when one is supplied).
inline BilinearOp semidirect_bracket(const BilinearOp& bracket,
                                     const RepAction& rho,
                                     const BilinearOp* vbracket) {
  int dA = bracket.dim(), dV = rho.module_dim();
  Symmetry tag = bracket.satisfies(Symmetry::antisymmetric) &&
                         (!vbracket ||
                          vbracket->satisfies(Symmetry::antisymmetric))
                     ? Symmetry::antisymmetric
                     : Symmetry::none;
  BilinearOp out(bracket.field(), dA + dV, tag);
  detail::copy_block(out, bracket, 0, 0, 0);
  for (int i = 0; i < dA; ++i)
    for (int a = 0; a < dV; ++a)
      for (int k = 0; k < dV; ++k) {
        const Scalar& c = rho.mat(i).at(k, a);
        if (c.is_zero()) continue;
        out.at(i, dA + a, dA + k) = c;
        out.at(dA + a, i, dA + k) = -c;
      }
  if (vbracket) detail::copy_block(out, *vbracket, dA, dA, dA);
  return out;
}

// Product on A + V:  (x+u) o (y+v) = x o y + mu(x)v + mu(y)u (+ the module
// product when one is supplied).
inline BilinearOp semidirect_product(const BilinearOp& product,
                                     const RepAction& mu,
                                     const BilinearOp* vproduct) {
  int dA = product.dim(), dV = mu.module_dim();
  Symmetry tag = product.satisfies(Symmetry::symmetric) &&
                         (!vproduct || vproduct->satisfies(Symmetry::symmetric))
                     ? Symmetry::symmetric
                     : Symmetry::none;
  BilinearOp out(product.field(), dA + dV, tag);
  detail::copy_block(out, product, 0, 0, 0);
  for (int i = 0; i < dA; ++i)
    for (int a = 0; a < dV; ++a)
      for (int k = 0; k < dV; ++k) {
        const Scalar& c = mu.mat(i).at(k, a);
        if (c.is_zero()) continue;
        out.at(i, dA + a, dA + k) = c;
        out.at(dA + a, i, dA + k) = c;
      }
  if (vproduct) detail::copy_block(out, *vproduct, dA, dA, dA);
  return out;
}

// Semi-direct product of a Malcev algebra with a plain representation.
inline AlgebraSpec semidirect_malcev(const AlgebraSpec& A, int vdim,
                                     const RepAction& rho,
                                     std::string name = "sd") {
  A.validate();
  if (!A.bracket) throw Error("semidirect_malcev: base has no bracket");
  if (rho.acting_dim() != A.dim || rho.module_dim() != vdim)
    throw Error("semidirect_malcev: action shape mismatch");
  AlgebraSpec out;
  out.name = std::move(name);
  out.field = A.field;
  out.dim = A.dim + vdim;
  out.kind = Kind::malcev;
  out.bracket = semidirect_bracket(*A.bracket, rho, nullptr);
  return out;
}

// Semi-direct product of a Malcev-Poisson algebra with a module; absent
// module operations default to zero (the plain-representation case).
inline AlgebraSpec semidirect_mp(const AlgebraSpec& A, const ModuleSpec& m,
                                 std::string name = "sd") {
  if (!A.bracket || !A.product)
    throw Error("semidirect_mp: base must have bracket and product");
  if (!m.rho || !m.mu) throw Error("semidirect_mp: module needs rho and mu");
  for (const RepAction* a : {&*m.rho, &*m.mu})
    if (a->acting_dim() != A.dim || a->module_dim() != m.module_dim ||
        a->field() != A.field)
      throw Error("semidirect_mp: action shape mismatch");
  AlgebraSpec out;
  out.name = std::move(name);
  out.field = A.field;
  out.dim = A.dim + m.module_dim;
  out.kind = Kind::malcev_poisson;
  out.bracket = semidirect_bracket(*A.bracket, *m.rho,
                                   m.vbracket ? &*m.vbracket : nullptr);
  out.product = semidirect_product(*A.product, *m.mu,
                                   m.vproduct ? &*m.vproduct : nullptr);
  return out;
}

}  // namespace mpk
