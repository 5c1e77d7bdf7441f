#pragma once

// Matched pairs of algebras: the direct-sum operations and the full
// compatibility-law checker.  The two sides are connected by the paper-level
// equivalence "the direct sum is again a structure of the same kind iff the
// pair is matched", which the test suite uses as an oracle in both
// directions.

#include "mpk/reps.hpp"

namespace mpk {

enum class PairKind { malcev, assoc, mp };

inline std::string pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::malcev: return "malcev";
    case PairKind::assoc: return "assoc";
    case PairKind::mp: return "mp";
  }
  throw Error("unknown pair kind");
}

// (A1, A2, rho1, mu1, rho2, mu2): rho1/mu1 act A1 -> End(A2), rho2/mu2 act
// A2 -> End(A1).  Malcev-only pairs omit the mu's, associative-only pairs
// omit the rho's.
struct MatchedPairSpec {
  AlgebraSpec a1, a2;
  std::optional<RepAction> rho1, mu1, rho2, mu2;

  void validate(PairKind kind) const {
    if (a1.field != a2.field) throw Error("matched pair: field mismatch");
    auto check_action = [&](const std::optional<RepAction>& a, int dact,
                            int dmod, const char* what) {
      if (!a) throw Error(std::string("matched pair: missing ") + what);
      if (a->acting_dim() != dact || a->module_dim() != dmod ||
          a->field() != a1.field)
        throw Error(std::string("matched pair: ") + what + " shape mismatch");
    };
    if (kind != PairKind::assoc) {
      if (!a1.bracket || !a2.bracket)
        throw Error("matched pair: both brackets required");
      check_action(rho1, a1.dim, a2.dim, "rho1");
      check_action(rho2, a2.dim, a1.dim, "rho2");
    }
    if (kind != PairKind::malcev) {
      if (!a1.product || !a2.product)
        throw Error("matched pair: both products required");
      check_action(mu1, a1.dim, a2.dim, "mu1");
      check_action(mu2, a2.dim, a1.dim, "mu2");
    }
  }

  Bindings bindings() const {
    Bindings b;
    b.bracket = a1.bracket ? &*a1.bracket : nullptr;
    b.product = a1.product ? &*a1.product : nullptr;
    b.bracket2 = a2.bracket ? &*a2.bracket : nullptr;
    b.product2 = a2.product ? &*a2.product : nullptr;
    b.rho = rho1 ? &*rho1 : nullptr;
    b.mu = mu1 ? &*mu1 : nullptr;
    b.rho2 = rho2 ? &*rho2 : nullptr;
    b.mu2 = mu2 ? &*mu2 : nullptr;
    return b;
  }
};

// Bracket on A1 + A2 per
//   [x1+x2, y1+y2] = [x1,y1]_1 + rho2(x2)y1 - rho2(y2)x1
//                  + [x2,y2]_2 + rho1(x1)y2 - rho1(y1)x2
inline BilinearOp direct_sum_bracket(const BilinearOp& b1,
                                     const BilinearOp& b2,
                                     const RepAction& rho1,
                                     const RepAction& rho2) {
  int d1 = b1.dim(), d2 = b2.dim();
  Symmetry tag = b1.satisfies(Symmetry::antisymmetric) &&
                         b2.satisfies(Symmetry::antisymmetric)
                     ? Symmetry::antisymmetric
                     : Symmetry::none;
  BilinearOp out(b1.field(), d1 + d2, tag);
  detail::copy_block(out, b1, 0, 0, 0);
  detail::copy_block(out, b2, d1, d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int a = 0; a < d2; ++a) {
      for (int k = 0; k < d1; ++k) {
        const Scalar& c = rho2.mat(a).at(k, i);  // rho2(f_a) e_i
        if (c.is_zero()) continue;
        out.at(d1 + a, i, k) = c;
        out.at(i, d1 + a, k) = -c;
      }
      for (int k = 0; k < d2; ++k) {
        const Scalar& c = rho1.mat(i).at(k, a);  // rho1(e_i) f_a
        if (c.is_zero()) continue;
        out.at(i, d1 + a, d1 + k) = c;
        out.at(d1 + a, i, d1 + k) = -c;
      }
    }
  return out;
}

// Product on A1 + A2 per
//   (x1+x2) o (y1+y2) = x1 o1 y1 + mu2(x2)y1 + mu2(y2)x1
//                     + x2 o2 y2 + mu1(x1)y2 + mu1(y1)x2
inline BilinearOp direct_sum_product(const BilinearOp& p1,
                                     const BilinearOp& p2,
                                     const RepAction& mu1,
                                     const RepAction& mu2) {
  int d1 = p1.dim(), d2 = p2.dim();
  Symmetry tag = p1.satisfies(Symmetry::symmetric) &&
                         p2.satisfies(Symmetry::symmetric)
                     ? Symmetry::symmetric
                     : Symmetry::none;
  BilinearOp out(p1.field(), d1 + d2, tag);
  detail::copy_block(out, p1, 0, 0, 0);
  detail::copy_block(out, p2, d1, d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int a = 0; a < d2; ++a) {
      for (int k = 0; k < d1; ++k) {
        const Scalar& c = mu2.mat(a).at(k, i);
        if (c.is_zero()) continue;
        out.at(d1 + a, i, k) = c;
        out.at(i, d1 + a, k) = c;
      }
      for (int k = 0; k < d2; ++k) {
        const Scalar& c = mu1.mat(i).at(k, a);
        if (c.is_zero()) continue;
        out.at(i, d1 + a, d1 + k) = c;
        out.at(d1 + a, i, d1 + k) = c;
      }
    }
  return out;
}

// The candidate structure on A1 + A2 (first summand's basis first).  Whether
// it actually satisfies the kind's axioms is exactly the matched-pair
// condition.
inline AlgebraSpec direct_sum_ops(const MatchedPairSpec& mp, PairKind kind,
                                  std::string name = "sum") {
  mp.validate(kind);
  AlgebraSpec out;
  out.name = std::move(name);
  out.field = mp.a1.field;
  out.dim = mp.a1.dim + mp.a2.dim;
  switch (kind) {
    case PairKind::malcev:
      out.kind = Kind::malcev;
      out.bracket =
          direct_sum_bracket(*mp.a1.bracket, *mp.a2.bracket, *mp.rho1,
                             *mp.rho2);
      break;
    case PairKind::assoc:
      out.kind = Kind::comm_assoc;
      out.product =
          direct_sum_product(*mp.a1.product, *mp.a2.product, *mp.mu1,
                             *mp.mu2);
      break;
    case PairKind::mp:
      out.kind = Kind::malcev_poisson;
      out.bracket =
          direct_sum_bracket(*mp.a1.bracket, *mp.a2.bracket, *mp.rho1,
                             *mp.rho2);
      out.product =
          direct_sum_product(*mp.a1.product, *mp.a2.product, *mp.mu1,
                             *mp.mu2);
      break;
  }
  return out;
}

namespace detail {

// Bindings with the two sides of a pair swapped, for side-2 representation
// laws.
inline Bindings swap_sides(const Bindings& b) {
  Bindings s = b;
  std::swap(s.bracket, s.bracket2);
  std::swap(s.product, s.product2);
  s.rho = b.rho2;
  s.mu = b.mu2;
  s.rho2 = b.rho;
  s.mu2 = b.mu;
  return s;
}

}  // namespace detail

// All conditions the kind's matched-pair theorem requires: both subalgebras
// valid, the actions genuine representations, and the compatibility laws.
// The conjunction is equivalent to "direct_sum_ops output passes its
// structure suite".
inline std::vector<Report> check_matched_pair(PairKind kind,
                                              const MatchedPairSpec& mp) {
  mp.validate(kind);
  Bindings b = mp.bindings();
  Bindings b2 = detail::swap_sides(b);
  std::vector<Report> out;
  auto run = [&](LawId law, const Bindings& bn, const std::string& target) {
    out.push_back(check_law(law, bn, target));
  };

  Kind alg_kind = kind == PairKind::malcev ? Kind::malcev
                  : kind == PairKind::assoc ? Kind::comm_assoc
                                            : Kind::malcev_poisson;
  for (LawId law : structure_laws(alg_kind)) run(law, b, mp.a1.name);
  for (LawId law : structure_laws(alg_kind)) run(law, b2, mp.a2.name);

  if (kind != PairKind::assoc) {
    run(LawId::MALCEV_REP, b, "rho1");
    run(LawId::MALCEV_REP, b2, "rho2");
  }
  if (kind != PairKind::malcev) {
    run(LawId::ASSOC_REP, b, "mu1");
    run(LawId::ASSOC_REP, b2, "mu2");
  }
  if (kind == PairKind::mp) {
    run(LawId::MP_REP_1, b, "rho1,mu1");
    run(LawId::MP_REP_2, b, "rho1,mu1");
    run(LawId::MP_REP_1, b2, "rho2,mu2");
    run(LawId::MP_REP_2, b2, "rho2,mu2");
  }

  if (kind != PairKind::assoc)
    for (LawId law : {LawId::MATCHED_M1, LawId::MATCHED_M2, LawId::MATCHED_M3,
                      LawId::MATCHED_M4, LawId::MATCHED_M5, LawId::MATCHED_M6})
      run(law, b, "pair");
  if (kind != PairKind::malcev)
    for (LawId law : {LawId::MATCHED_A1, LawId::MATCHED_A2})
      run(law, b, "pair");
  if (kind == PairKind::mp)
    for (LawId law : {LawId::MATCHED_MP1, LawId::MATCHED_MP2,
                      LawId::MATCHED_MP3, LawId::MATCHED_MP4})
      run(law, b, "pair");
  return out;
}

}  // namespace mpk
