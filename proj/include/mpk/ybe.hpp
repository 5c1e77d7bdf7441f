#pragma once

// Yang-Baxter residuals, the identification of r in A x A with a map
// A* -> A, O-operators and weighted relative Rota-Baxter operators, and the
// T -> T - sigma(T) construction into the semidirect double.

#include "mpk/manin.hpp"

namespace mpk {

// Both residual tensors C_A(r), M_A(r) in A x A x A.
inline std::pair<Tensor, Tensor> mpybe_residuals(const AlgebraSpec& A,
                                                 const Tensor& r) {
  A.validate();
  if (!A.bracket || !A.product)
    throw Error("mpybe_residuals: A must carry bracket and product");
  return mpybe_residuals_of(*A.product, *A.bracket, r);
}

inline bool is_skew(const Tensor& r) {
  if (r.rank() != 2 || r.shape()[0] != r.shape()[1])
    throw Error("is_skew: r must be a square rank-2 tensor");
  return (r + flip(r)).is_zero();
}

// r as a map A* -> A: <a*, r(b*)> = <a* x b*, r>, i.e. r(xi_j) = sum_i
// r_ij e_i, so the matrix is r itself.
inline LinearMap r_as_map(const Tensor& r) {
  if (r.rank() != 2 || r.shape()[0] != r.shape()[1])
    throw Error("r_as_map: r must be a square rank-2 tensor");
  int d = r.shape()[0];
  Mat m(r.field(), d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = r.at({i, j});
  return LinearMap(d, d, m);
}

inline Tensor map_as_r(const LinearMap& f) {
  if (f.domain_dim != f.codomain_dim)
    throw Error("map_as_r: map must be square");
  return Tensor::from_mat(f.matrix);
}

// The dual module (V*, rho*, -mu*) of (V, rho, mu), in dual-basis
// coordinates; module operations on V* are zero.
inline ModuleSpec dual_module(const ModuleSpec& m) {
  if (!m.rho || !m.mu) throw Error("dual_module: module needs rho and mu");
  ModuleSpec d;
  d.base = m.base;
  d.module_dim = m.module_dim;
  d.rho = dual_rep(*m.rho, +1);
  d.mu = dual_rep(*m.mu, -1);
  return d;
}

// O-operator check: the weight-0 relative Rota-Baxter laws.
inline std::vector<Report> check_o_operator(const AlgebraSpec& A,
                                            const ModuleSpec& m,
                                            const LinearMap& T,
                                            const std::string& target = "T") {
  Bindings b = algebra_bindings(A);
  b.rho = m.rho ? &*m.rho : nullptr;
  b.mu = m.mu ? &*m.mu : nullptr;
  b.T = &T;
  b.weight = Scalar::zero(A.field);
  std::vector<Report> out;
  out.push_back(check_law(LawId::RRB_A, b, target));
  out.push_back(check_law(LawId::RRB_M, b, target));
  return out;
}

// Weighted relative Rota-Baxter check at weight lambda.
inline std::vector<Report> check_weighted_rrb(const AlgebraSpec& A,
                                              const ModuleSpec& m,
                                              const LinearMap& R,
                                              const Scalar& lambda,
                                              const std::string& target =
                                                  "R") {
  Bindings b = algebra_bindings(A);
  b.rho = m.rho ? &*m.rho : nullptr;
  b.mu = m.mu ? &*m.mu : nullptr;
  b.vbracket = m.vbracket ? &*m.vbracket : nullptr;
  b.vproduct = m.vproduct ? &*m.vproduct : nullptr;
  b.T = &R;
  b.weight = lambda;
  std::vector<Report> out;
  out.push_back(check_law(LawId::RRB_A, b, target));
  out.push_back(check_law(LawId::RRB_M, b, target));
  return out;
}

struct TtoR {
  AlgebraSpec double_alg;  // A semidirect V* via (rho*, -mu*)
  Tensor r;                // T - sigma(T) inside the double
};

// Embeds T : V -> A as sum_i T(v_i) x v_i* in (A + V*)^{x2} and returns the
// skew tensor r = T - sigma(T) together with the double it lives in.
inline TtoR t_to_r(const AlgebraSpec& A, const ModuleSpec& m,
                   const LinearMap& T) {
  if (!m.rho || !m.mu) throw Error("t_to_r: module needs rho and mu");
  if (T.domain_dim != m.module_dim || T.codomain_dim != A.dim)
    throw Error("t_to_r: T must map V to A");
  AlgebraSpec D = semidirect_mp(A, dual_module(m), A.name + "_x_Vdual");
  int n = A.dim, dim = n + m.module_dim;
  Tensor t(A.field, {dim, dim});
  for (int i = 0; i < m.module_dim; ++i)
    for (int j = 0; j < n; ++j) t.at({j, n + i}) = T.matrix.at(j, i);
  return TtoR{std::move(D), t - flip(t)};
}

}  // namespace mpk
