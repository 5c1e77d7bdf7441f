#pragma once

// Invariant bilinear forms, Manin triples, the standard double on A + A*
// built from coadjoint-type actions, and the computational harness for the
// matched-pair / bialgebra / Manin-triple equivalence theorems.

#include <algorithm>

#include "mpk/matched.hpp"

namespace mpk {

// <x+xi, y+eta> = <x,eta> + <xi,y> in block coordinates (A first).
inline BilinearForm standard_form(FieldSpec f, int dimA) {
  BilinearForm B(f, 2 * dimA);
  for (int i = 0; i < dimA; ++i) {
    B.at(i, dimA + i) = Scalar::one(f);
    B.at(dimA + i, i) = Scalar::one(f);
  }
  return B;
}

namespace detail {

inline Report simple_report(const std::string& law, const std::string& target,
                            bool holds, long tuples,
                            std::optional<Counterexample> ce = std::nullopt) {
  Report r;
  r.law = law;
  r.target = target;
  r.holds = holds;
  r.checked_tuples = tuples;
  r.counterexample = std::move(ce);
  return r;
}

}  // namespace detail

// Symmetry, nondegeneracy (exact determinant), and the applicable invariance
// laws of a form on an algebra.
inline std::vector<Report> check_form(const BilinearForm& B,
                                      const AlgebraSpec& spec) {
  if (B.dim() != spec.dim) throw Error("check_form: dimension mismatch");
  std::vector<Report> out;

  {
    bool sym = true;
    Counterexample ce;
    long tuples = 0;
    for (int i = 0; i < B.dim() && sym; ++i)
      for (int j = 0; j <= i && sym; ++j) {
        ++tuples;
        if (B.at(i, j) != B.at(j, i)) {
          sym = false;
          ce.indices = {i + 1, j + 1};
          ce.lhs = B.at(i, j).str();
          ce.rhs = B.at(j, i).str();
        }
      }
    out.push_back(detail::simple_report(
        "FORM_SYM", spec.name, sym, tuples,
        sym ? std::nullopt : std::optional<Counterexample>(ce)));
  }
  {
    Scalar det = B.as_matrix().determinant();
    bool nd = !det.is_zero();
    std::optional<Counterexample> ce;
    if (!nd) ce = Counterexample{{}, "det = 0", "det != 0"};
    out.push_back(
        detail::simple_report("FORM_NONDEG", spec.name, nd, 1, std::move(ce)));
  }
  Bindings b = algebra_bindings(spec);
  b.form = &B;
  if (b.product) out.push_back(check_law(LawId::FORM_INV_A, b, spec.name));
  if (b.bracket) out.push_back(check_law(LawId::FORM_INV_M, b, spec.name));
  return out;
}

// Subalgebra and isotropy checks for a candidate Manin triple (D, D+, D-)
// with the given form, followed by D's own structure suite.  "Subalgebra"
// means: products of basis vectors inside a part have zero coordinates
// outside the part.
inline std::vector<Report> check_manin_triple(const AlgebraSpec& D,
                                              const std::vector<int>& plus,
                                              const std::vector<int>& minus,
                                              const BilinearForm& B) {
  D.validate();
  if (B.dim() != D.dim) throw Error("check_manin_triple: form dim mismatch");
  std::vector<bool> seen(D.dim, false);
  for (int i : plus) {
    if (i < 0 || i >= D.dim) throw Error("part index out of range");
    if (seen[i]) throw Error("parts overlap at index " + std::to_string(i + 1));
    seen[i] = true;
  }
  for (int i : minus) {
    if (i < 0 || i >= D.dim) throw Error("part index out of range");
    if (seen[i]) throw Error("parts overlap at index " + std::to_string(i + 1));
    seen[i] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error("parts do not partition the basis");

  std::vector<Report> out;
  auto part_closed = [&](const std::vector<int>& part,
                         const std::string& label) {
    std::vector<bool> inside(D.dim, false);
    for (int i : part) inside[i] = true;
    for (const auto& [opname, op] : D.present_ops()) {
      bool ok = true;
      Counterexample ce;
      long tuples = 0;
      for (size_t a = 0; a < part.size() && ok; ++a)
        for (size_t c = 0; c < part.size() && ok; ++c) {
          ++tuples;
          Vec v = op->on_basis(part[a], part[c]);
          Vec proj = v;
          for (int k = 0; k < D.dim; ++k)
            if (!inside[k]) proj.at(k) = Scalar::zero(D.field);
          if (v != proj) {
            ok = false;
            ce.indices = {part[a] + 1, part[c] + 1};
            ce.lhs = v.str();
            ce.rhs = proj.str();
          }
        }
      out.push_back(detail::simple_report(
          "CLOSED_" + opname, label, ok, tuples,
          ok ? std::nullopt : std::optional<Counterexample>(ce)));
    }
  };
  auto part_isotropic = [&](const std::vector<int>& part,
                            const std::string& label) {
    bool ok = true;
    Counterexample ce;
    long tuples = 0;
    for (size_t a = 0; a < part.size() && ok; ++a)
      for (size_t c = 0; c < part.size() && ok; ++c) {
        ++tuples;
        Scalar v = B.at(part[a], part[c]);
        if (!v.is_zero()) {
          ok = false;
          ce.indices = {part[a] + 1, part[c] + 1};
          ce.lhs = v.str();
          ce.rhs = "0";
        }
      }
    out.push_back(detail::simple_report(
        "ISOTROPIC", label, ok, tuples,
        ok ? std::nullopt : std::optional<Counterexample>(ce)));
  };

  part_closed(plus, "plus");
  part_closed(minus, "minus");
  part_isotropic(plus, "plus");
  part_isotropic(minus, "minus");
  for (Report& r : check_form(B, D)) out.push_back(std::move(r));
  for (Report& r : check_structure(D)) out.push_back(std::move(r));
  return out;
}

// The coadjoint matched-pair candidate (A, A*, ad*, -L*, ad*_{A*}, -L*_{A*})
// where the A* operations are the duals of the given comultiplications.
// Passing no coproduct builds the Malcev-only pair.
inline MatchedPairSpec coadjoint_pair(const AlgebraSpec& A,
                                      const Comultiplication* Delta,
                                      const Comultiplication& delta) {
  A.validate();
  if (!A.bracket) throw Error("coadjoint_pair: A must have a bracket");
  if (delta.dim() != A.dim || delta.field() != A.field)
    throw Error("coadjoint_pair: cobracket shape mismatch");
  MatchedPairSpec mp;
  mp.a1 = A;
  mp.a2.name = A.name + "_dual";
  mp.a2.field = A.field;
  mp.a2.dim = A.dim;
  mp.a2.kind = Delta ? Kind::malcev_poisson : Kind::malcev;
  mp.a2.bracket = dualize(delta);
  mp.rho1 = dual_rep(adjoint_rep(*A.bracket), +1);
  mp.rho2 = dual_rep(adjoint_rep(*mp.a2.bracket), +1);
  if (Delta) {
    if (!A.product) throw Error("coadjoint_pair: A has no product");
    if (Delta->dim() != A.dim || Delta->field() != A.field)
      throw Error("coadjoint_pair: coproduct shape mismatch");
    mp.a2.product = dualize(*Delta);
    mp.mu1 = dual_rep(left_mult_rep(*A.product), -1);
    mp.mu2 = dual_rep(left_mult_rep(*mp.a2.product), -1);
  }
  return mp;
}

// Candidate structure on A + A* from the coadjoint pair; basis order is
// (e_1..e_n, xi_1..xi_n), so A and A* are complementary isotropic subspaces
// of the standard form by construction.
inline AlgebraSpec build_standard_double(const AlgebraSpec& A,
                                         const Comultiplication* Delta,
                                         const Comultiplication& delta,
                                         std::string name = "double") {
  MatchedPairSpec mp = coadjoint_pair(A, Delta, delta);
  PairKind kind = Delta ? PairKind::mp : PairKind::malcev;
  return direct_sum_ops(mp, kind, std::move(name));
}

// The three equivalent predicates of the bialgebra theorems, evaluated
// independently: (i) the bialgebra laws on (A, Delta, delta), (ii) the
// coadjoint matched-pair laws, (iii) the Manin-triple laws on the standard
// double.  Disagreement between them is a reportable finding, never silently
// resolved.
struct HarnessResult {
  bool bialgebra = false;
  bool matched_pair = false;
  bool manin_triple = false;
  std::vector<Report> bialgebra_reports;
  std::vector<Report> matched_reports;
  std::vector<Report> manin_reports;

  bool agree() const {
    return bialgebra == matched_pair && matched_pair == manin_triple;
  }
  bool all_true() const { return bialgebra && matched_pair && manin_triple; }
};

inline std::vector<LawId> bialgebra_laws(bool with_product) {
  if (!with_product)
    return {LawId::CO_ANTI, LawId::CO_MALCEV, LawId::BI_MALCEV_1,
            LawId::BI_MALCEV_2};
  return {LawId::CO_COCOMM, LawId::CO_COASSOC, LawId::CO_ANTI,
          LawId::CO_MALCEV, LawId::CO_MP,      LawId::BI_INF,
          LawId::BI_MALCEV_1, LawId::BI_MALCEV_2, LawId::BI_MP_1,
          LawId::BI_MP_2};
}

inline HarnessResult equivalence_harness(const AlgebraSpec& A,
                                         const Comultiplication* Delta,
                                         const Comultiplication& delta) {
  A.validate();
  bool with_product = Delta != nullptr;
  if (with_product && !A.product)
    throw Error("equivalence_harness: coproduct given but A has no product");

  HarnessResult res;

  Bindings bb = algebra_bindings(A);
  bb.cobracket = &delta;
  bb.coproduct = Delta;
  for (LawId law : bialgebra_laws(with_product))
    res.bialgebra_reports.push_back(check_law(law, bb, A.name));
  res.bialgebra = all_hold(res.bialgebra_reports);

  MatchedPairSpec mp = coadjoint_pair(A, Delta, delta);
  PairKind kind = with_product ? PairKind::mp : PairKind::malcev;
  res.matched_reports = check_matched_pair(kind, mp);
  res.matched_pair = all_hold(res.matched_reports);

  AlgebraSpec D = direct_sum_ops(mp, kind, A.name + "_double");
  std::vector<int> plus(A.dim), minus(A.dim);
  for (int i = 0; i < A.dim; ++i) {
    plus[i] = i;
    minus[i] = A.dim + i;
  }
  res.manin_reports =
      check_manin_triple(D, plus, minus, standard_form(A.field, A.dim));
  res.manin_triple = all_hold(res.manin_reports);

  return res;
}

}  // namespace mpk
