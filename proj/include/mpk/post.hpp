#pragma once

// Post-structures: the four-operation record, the structure induced by a
// weighted relative Rota-Baxter operator, sub-adjacent algebras, and
// homomorphism checks.

#include "mpk/ybe.hpp"

namespace mpk {

// (A, [.,.], <>, ., |>): bracket antisymmetric, dot symmetric.
struct PostStructure {
  FieldSpec field;
  int dim = 0;
  BilinearOp bracket;
  BilinearOp diamond;
  BilinearOp dot;
  BilinearOp triangle;

  PostStructure(FieldSpec f, int d)
      : field(f), dim(d),
        bracket(f, d, Symmetry::antisymmetric),
        diamond(f, d),
        dot(f, d, Symmetry::symmetric),
        triangle(f, d) {}

  AlgebraSpec as_algebra(std::string name = "post") const {
    AlgebraSpec a;
    a.name = std::move(name);
    a.field = field;
    a.dim = dim;
    a.kind = Kind::post_malcev_poisson;
    a.bracket = bracket;
    a.diamond = diamond;
    a.dot = dot;
    a.triangle = triangle;
    return a;
  }
};

inline std::vector<Report> check_post(const PostStructure& p,
                                      const std::string& name = "post") {
  return check_structure(p.as_algebra(name));
}

// Structure induced on V by a weighted relative Rota-Baxter operator R:
//   {a,b} = lambda [a,b]_V,  a<>b = rho(R(a))b,
//   a.b   = lambda a o_V b,  a|>b = mu(R(a))b.
// The theorem's hypothesis (R passes the weighted RRB laws) is enforced
// unless the caller explicitly asks to construct anyway.
inline PostStructure induced_post_mp(const AlgebraSpec& A, const ModuleSpec& m,
                                     const LinearMap& R, const Scalar& lambda,
                                     bool enforce = true) {
  if (!m.rho || !m.mu)
    throw Error("induced_post_mp: module needs rho and mu");
  if (R.domain_dim != m.module_dim || R.codomain_dim != A.dim)
    throw Error("induced_post_mp: R must map V to A");
  if (enforce) {
    auto reports = check_weighted_rrb(A, m, R, lambda);
    for (const Report& r : reports)
      if (!r.holds)
        throw Error("induced_post_mp: R fails " + r.law +
                    " (use the construct-anyway flag to build regardless)");
  }
  int dV = m.module_dim;
  PostStructure p(A.field, dV);
  for (int a = 0; a < dV; ++a)
    for (int c = 0; c < dV; ++c) {
      Vec dia = m.rho->of(R.apply_basis(a)).apply(Vec::basis(A.field, dV, c));
      Vec tri = m.mu->of(R.apply_basis(a)).apply(Vec::basis(A.field, dV, c));
      for (int k = 0; k < dV; ++k) {
        p.diamond.at(a, c, k) = dia.at(k);
        p.triangle.at(a, c, k) = tri.at(k);
        if (m.vbracket) p.bracket.at(a, c, k) = lambda * m.vbracket->at(a, c, k);
        if (m.vproduct) p.dot.at(a, c, k) = lambda * m.vproduct->at(a, c, k);
      }
    }
  if (!p.bracket.satisfies(Symmetry::antisymmetric))
    p.bracket.set_tag(Symmetry::none);
  if (!p.dot.satisfies(Symmetry::symmetric)) p.dot.set_tag(Symmetry::none);
  return p;
}

// Sub-adjacent Malcev-Poisson structure:
//   x o y = x|>y + y|>x + x.y,   {x,y} = x<>y - y<>x + [x,y].
inline AlgebraSpec subadjacent_mp(const PostStructure& p,
                                  std::string name = "subadjacent") {
  AlgebraSpec out;
  out.name = std::move(name);
  out.field = p.field;
  out.dim = p.dim;
  out.kind = Kind::malcev_poisson;
  BilinearOp br(p.field, p.dim, Symmetry::none);
  BilinearOp pr(p.field, p.dim, Symmetry::none);
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < p.dim; ++j)
      for (int k = 0; k < p.dim; ++k) {
        br.at(i, j, k) = p.diamond.at(i, j, k) - p.diamond.at(j, i, k) +
                         p.bracket.at(i, j, k);
        pr.at(i, j, k) = p.triangle.at(i, j, k) + p.triangle.at(j, i, k) +
                         p.dot.at(i, j, k);
      }
  if (br.satisfies(Symmetry::antisymmetric))
    br.set_tag(Symmetry::antisymmetric);
  if (pr.satisfies(Symmetry::symmetric)) pr.set_tag(Symmetry::symmetric);
  out.bracket = std::move(br);
  out.product = std::move(pr);
  return out;
}

// Sub-adjacent Malcev algebra of a post-Malcev pair (bracket, diamond).
inline AlgebraSpec subadjacent_malcev(const BilinearOp& bracket,
                                      const BilinearOp& diamond,
                                      std::string name = "subadjacent") {
  if (bracket.dim() != diamond.dim() || bracket.field() != diamond.field())
    throw Error("subadjacent_malcev: op shape mismatch");
  AlgebraSpec out;
  out.name = std::move(name);
  out.field = bracket.field();
  out.dim = bracket.dim();
  out.kind = Kind::malcev;
  BilinearOp br(out.field, out.dim);
  for (int i = 0; i < out.dim; ++i)
    for (int j = 0; j < out.dim; ++j)
      for (int k = 0; k < out.dim; ++k)
        br.at(i, j, k) = diamond.at(i, j, k) - diamond.at(j, i, k) +
                         bracket.at(i, j, k);
  if (br.satisfies(Symmetry::antisymmetric))
    br.set_tag(Symmetry::antisymmetric);
  out.bracket = std::move(br);
  return out;
}

// f(x * y) = f(x) * f(y) for every operation slot present in both algebras,
// checked on basis pairs.
inline std::vector<Report> check_homomorphism(const LinearMap& f,
                                              const AlgebraSpec& src,
                                              const AlgebraSpec& dst,
                                              const std::string& target =
                                                  "f") {
  if (f.domain_dim != src.dim || f.codomain_dim != dst.dim)
    throw Error("check_homomorphism: map shape mismatch");
  std::vector<Report> out;
  for (const auto& [opname, sop] : src.present_ops()) {
    const BilinearOp* dop = dst.op(opname);
    if (!dop)
      throw Error("check_homomorphism: target algebra lacks " + opname);
    bool ok = true;
    Counterexample ce;
    long tuples = 0;
    for (int i = 0; i < src.dim && ok; ++i)
      for (int j = 0; j < src.dim && ok; ++j) {
        ++tuples;
        Vec lhs = f.apply(sop->on_basis(i, j));
        Vec rhs = multiply(*dop, f.apply_basis(i), f.apply_basis(j));
        if (lhs != rhs) {
          ok = false;
          ce.indices = {i + 1, j + 1};
          ce.lhs = lhs.str();
          ce.rhs = rhs.str();
        }
      }
    out.push_back(detail::simple_report(
        "HOM_" + opname, target, ok, tuples,
        ok ? std::nullopt : std::optional<Counterexample>(ce)));
  }
  return out;
}

}  // namespace mpk
