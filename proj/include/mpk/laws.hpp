#pragma once

// The law catalog: every identity in scope, evaluated by exhaustive basis
// enumeration.  Each law is multilinear in its element slots, so checking all
// basis tuples decides it; the one quadratic identity (MALCEV, where x occurs
// twice) is decided by checking the diagonal together with its full
// polarization, which is complete over any field.  Verdicts are therefore
// formal: they are stable under extension of the ground field.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mpk/algebra.hpp"
#include "mpk/report.hpp"

namespace mpk {

// Named slots a law may draw on.  A law pulls exactly the entities its
// identity mentions and rejects missing ones.
struct Bindings {
  const BilinearOp* bracket = nullptr;    // [.,.] on A (or A1)
  const BilinearOp* product = nullptr;    // o on A (or A1)
  const BilinearOp* diamond = nullptr;
  const BilinearOp* dot = nullptr;
  const BilinearOp* triangle = nullptr;
  const BilinearOp* bracket2 = nullptr;   // [.,.] on A2
  const BilinearOp* product2 = nullptr;   // o on A2
  const BilinearOp* vbracket = nullptr;   // [.,.]_V
  const BilinearOp* vproduct = nullptr;   // o_V
  const RepAction* rho = nullptr;         // rho / rho1
  const RepAction* mu = nullptr;          // mu / mu1
  const RepAction* rho2 = nullptr;
  const RepAction* mu2 = nullptr;
  const Comultiplication* cobracket = nullptr;  // delta
  const Comultiplication* coproduct = nullptr;  // Delta
  const BilinearForm* form = nullptr;
  const Tensor* r = nullptr;
  const LinearMap* T = nullptr;           // T or R
  std::optional<Scalar> weight;           // lambda, defaults to 0
};

// Matrix of y -> [x, y] (and of y -> x o y for products).
inline Mat ad_mat(const BilinearOp& br, const Vec& x) {
  Mat m(br.field(), br.dim(), br.dim());
  for (int i = 0; i < br.dim(); ++i) {
    if (x.at(i).is_zero()) continue;
    for (int j = 0; j < br.dim(); ++j)
      for (int k = 0; k < br.dim(); ++k) {
        const Scalar& c = br.at(i, j, k);
        if (!c.is_zero()) m.at(k, j) += x.at(i) * c;
      }
  }
  return m;
}

inline Mat left_mat(const BilinearOp& op, const Vec& x) { return ad_mat(op, x); }

namespace lawdetail {

template <class T>
const T* need(const T* p, const char* what) {
  if (!p) throw Error(std::string("missing binding: ") + what);
  return p;
}

struct Eval {
  std::vector<int> dims;  // per-slot basis dimensions
  std::function<std::pair<Tensor, Tensor>(const std::vector<int>&)> sides;
};

inline std::pair<Tensor, Tensor> sides(const Vec& l, const Vec& r) {
  return {Tensor::from_vec(l), Tensor::from_vec(r)};
}
inline std::pair<Tensor, Tensor> sides(const Mat& l, const Mat& r) {
  return {Tensor::from_mat(l), Tensor::from_mat(r)};
}
inline std::pair<Tensor, Tensor> sides(const Tensor& l, const Tensor& r) {
  return {l, r};
}

inline Eval make_eval(LawId law, const Bindings& bn) {
  using V = Vec;
  switch (law) {
    case LawId::COMM: {
      const BilinearOp* p = need(bn.product, "product");
      return {{p->dim(), p->dim()}, [p](const std::vector<int>& ix) {
                return sides(p->on_basis(ix[0], ix[1]),
                             p->on_basis(ix[1], ix[0]));
              }};
    }
    case LawId::ASSOC: {
      const BilinearOp* p = need(bn.product, "product");
      int d = p->dim();
      return {{d, d, d}, [p, d](const std::vector<int>& ix) {
                V x = V::basis(p->field(), d, ix[0]);
                V z = V::basis(p->field(), d, ix[2]);
                return sides(multiply(*p, p->on_basis(ix[0], ix[1]), z),
                             multiply(*p, x, p->on_basis(ix[1], ix[2])));
              }};
    }
    case LawId::ANTI: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      return {{br->dim(), br->dim()}, [br](const std::vector<int>& ix) {
                if (ix[0] == ix[1])
                  return sides(br->on_basis(ix[0], ix[0]),
                               Vec(br->field(), br->dim()));
                return sides(br->on_basis(ix[0], ix[1]),
                             -br->on_basis(ix[1], ix[0]));
              }};
    }
    case LawId::JACOBI: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      int d = br->dim();
      return {{d, d, d}, [br, d](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                V z = V::basis(br->field(), d, ix[2]);
                return sides(jacobiator(*br, x, y, z), Vec(br->field(), d));
              }};
    }
    case LawId::MALCEV: {
      // J(x,y,[x,z]) = [J(x,y,z),x], quadratic in x.  Slots are
      // (x-part, x-part, y, z); off-diagonal tuples carry the polarized
      // identity, so the whole enumeration decides the formal identity.
      const BilinearOp* br = need(bn.bracket, "bracket");
      int d = br->dim();
      return {{d, d, d, d}, [br, d](const std::vector<int>& ix) {
                V x1 = V::basis(br->field(), d, ix[0]);
                V x2 = V::basis(br->field(), d, ix[1]);
                V y = V::basis(br->field(), d, ix[2]);
                V z = V::basis(br->field(), d, ix[3]);
                if (ix[0] == ix[1])
                  return sides(
                      jacobiator(*br, x1, y, multiply(*br, x1, z)),
                      multiply(*br, jacobiator(*br, x1, y, z), x1));
                V lhs = jacobiator(*br, x1, y, multiply(*br, x2, z)) +
                        jacobiator(*br, x2, y, multiply(*br, x1, z));
                V rhs = multiply(*br, jacobiator(*br, x1, y, z), x2) +
                        multiply(*br, jacobiator(*br, x2, y, z), x1);
                return sides(lhs, rhs);
              }};
    }
    case LawId::SAGLE: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      int d = br->dim();
      return {{d, d, d, d}, [br, d](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                V z = V::basis(br->field(), d, ix[2]);
                V t = V::basis(br->field(), d, ix[3]);
                auto m = [br](const V& a, const V& c) {
                  return multiply(*br, a, c);
                };
                V lhs = m(m(x, z), m(y, t));
                V rhs = m(m(m(x, y), z), t) + m(m(m(y, z), t), x) +
                        m(m(m(z, t), x), y) + m(m(m(t, x), y), z);
                return sides(lhs, rhs);
              }};
    }
    case LawId::LEIBNIZ: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const BilinearOp* p = need(bn.product, "product");
      int d = br->dim();
      return {{d, d, d}, [br, p, d](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                V z = V::basis(br->field(), d, ix[2]);
                return sides(multiply(*br, x, multiply(*p, y, z)),
                             multiply(*p, multiply(*br, x, y), z) +
                                 multiply(*p, y, multiply(*br, x, z)));
              }};
    }
    case LawId::ASSOC_REP: {
      const BilinearOp* p = need(bn.product, "product");
      const RepAction* mu = need(bn.mu, "mu");
      int d = p->dim();
      return {{d, d}, [p, mu, d](const std::vector<int>& ix) {
                return sides(mu->of(p->on_basis(ix[0], ix[1])),
                             mu->mat(ix[0]) * mu->mat(ix[1]));
              }};
    }
    case LawId::MALCEV_REP: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const RepAction* rho = need(bn.rho, "rho");
      int d = br->dim();
      return {{d, d, d}, [br, rho, d](const std::vector<int>& ix) {
                V z = V::basis(br->field(), d, ix[2]);
                Mat rx = rho->mat(ix[0]), ry = rho->mat(ix[1]),
                    rz = rho->mat(ix[2]);
                Mat lhs = rho->of(
                    multiply(*br, br->on_basis(ix[0], ix[1]), z));
                Mat rhs = rz * ry * rx - ry * rx * rz +
                          rx * rho->of(br->on_basis(ix[1], ix[2])) +
                          rho->of(br->on_basis(ix[0], ix[2])) * ry;
                return sides(lhs, rhs);
              }};
    }
    case LawId::MP_REP_1: {
      const BilinearOp* p = need(bn.product, "product");
      const RepAction* rho = need(bn.rho, "rho");
      const RepAction* mu = need(bn.mu, "mu");
      int d = p->dim();
      return {{d, d}, [p, rho, mu](const std::vector<int>& ix) {
                return sides(rho->of(p->on_basis(ix[0], ix[1])),
                             mu->mat(ix[1]) * rho->mat(ix[0]) +
                                 mu->mat(ix[0]) * rho->mat(ix[1]));
              }};
    }
    case LawId::MP_REP_2: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const RepAction* rho = need(bn.rho, "rho");
      const RepAction* mu = need(bn.mu, "mu");
      int d = br->dim();
      return {{d, d}, [br, rho, mu](const std::vector<int>& ix) {
                return sides(mu->of(br->on_basis(ix[0], ix[1])),
                             rho->mat(ix[0]) * mu->mat(ix[1]) -
                                 mu->mat(ix[1]) * rho->mat(ix[0]));
              }};
    }
    case LawId::MATCHED_A1:
    case LawId::MATCHED_A2: {
      // mu1(x1)(x2 o2 y2) = (mu1(x1)x2) o2 y2 + mu1(mu2(x2)x1)y2, and the
      // mirrored condition with the roles of the summands swapped.
      bool mirror = (law == LawId::MATCHED_A2);
      const BilinearOp* pB = need(mirror ? bn.product : bn.product2,
                                  mirror ? "product" : "product2");
      const RepAction* mA = need(mirror ? bn.mu2 : bn.mu,
                                 mirror ? "mu2" : "mu1");
      const RepAction* mB = need(mirror ? bn.mu : bn.mu2,
                                 mirror ? "mu1" : "mu2");
      int dA = mA->acting_dim(), dB = pB->dim();
      return {{dA, dB, dB}, [pB, mA, mB, dA, dB](const std::vector<int>& ix) {
                V x1 = V::basis(pB->field(), dA, ix[0]);
                V x2 = V::basis(pB->field(), dB, ix[1]);
                V y2 = V::basis(pB->field(), dB, ix[2]);
                V lhs = mA->of(x1).apply(multiply(*pB, x2, y2));
                V rhs = multiply(*pB, mA->of(x1).apply(x2), y2) +
                        mA->of(mB->of(x2).apply(x1)).apply(y2);
                return sides(lhs, rhs);
              }};
    }
    case LawId::MATCHED_M1:
    case LawId::MATCHED_M2: {
      // Three elements of one summand, one of the other; M2 swaps roles.
      // Compositions like rho2(rho1(y1))(rho1(x1)x2)z1 are read with the
      // inner action applied first: rho2(rho1(y1)(rho1(x1)x2)) z1.
      bool mirror = (law == LawId::MATCHED_M2);
      const BilinearOp* bA = need(mirror ? bn.bracket2 : bn.bracket,
                                  mirror ? "bracket2" : "bracket");
      const RepAction* rA = need(mirror ? bn.rho2 : bn.rho,
                                 mirror ? "rho2" : "rho1");
      const RepAction* rB = need(mirror ? bn.rho : bn.rho2,
                                 mirror ? "rho1" : "rho2");
      int dA = bA->dim(), dB = rB->acting_dim();
      return {{dA, dA, dA, dB}, [bA, rA, rB, dA, dB](
                                    const std::vector<int>& ix) {
                V x1 = V::basis(bA->field(), dA, ix[0]);
                V y1 = V::basis(bA->field(), dA, ix[1]);
                V z1 = V::basis(bA->field(), dA, ix[2]);
                V x2 = V::basis(bA->field(), dB, ix[3]);
                auto br = [bA](const V& u, const V& v) {
                  return multiply(*bA, u, v);
                };
                auto p1 = [rA](const V& x, const V& w) {
                  return rA->of(x).apply(w);
                };
                auto p2 = [rB](const V& x, const V& w) {
                  return rB->of(x).apply(w);
                };
                V sum = br(br(p2(x2, x1), y1), z1) -
                        br(p2(x2, br(y1, z1)), x1) -
                        br(p2(p1(x1, x2), y1), z1) -
                        br(br(p2(x2, z1), x1), y1) +
                        p2(p1(y1, p1(x1, x2)), z1) +
                        br(br(x1, z1), p2(x2, y1)) -
                        p2(x2, br(br(x1, y1), z1)) +
                        p2(p1(y1, x2), br(x1, z1)) +
                        br(p2(p1(z1, x2), x1), y1) +
                        p2(p1(br(y1, z1), x2), x1) -
                        p2(p1(x1, p1(z1, x2)), y1);
                return sides(sum, Vec(bA->field(), dA));
              }};
    }
    case LawId::MATCHED_M3:
    case LawId::MATCHED_M4: {
      bool mirror = (law == LawId::MATCHED_M4);
      const BilinearOp* bA = need(mirror ? bn.bracket2 : bn.bracket,
                                  mirror ? "bracket2" : "bracket");
      const BilinearOp* bB = need(mirror ? bn.bracket : bn.bracket2,
                                  mirror ? "bracket" : "bracket2");
      const RepAction* rA = need(mirror ? bn.rho2 : bn.rho,
                                 mirror ? "rho2" : "rho1");
      const RepAction* rB = need(mirror ? bn.rho : bn.rho2,
                                 mirror ? "rho1" : "rho2");
      int dA = bA->dim(), dB = bB->dim();
      return {{dA, dA, dB, dB}, [bA, bB, rA, rB, dA, dB](
                                    const std::vector<int>& ix) {
                V x1 = V::basis(bA->field(), dA, ix[0]);
                V y1 = V::basis(bA->field(), dA, ix[1]);
                V x2 = V::basis(bA->field(), dB, ix[2]);
                V y2 = V::basis(bA->field(), dB, ix[3]);
                auto b1 = [bA](const V& u, const V& v) {
                  return multiply(*bA, u, v);
                };
                auto b2 = [bB](const V& u, const V& v) {
                  return multiply(*bB, u, v);
                };
                auto p1 = [rA](const V& x, const V& w) {
                  return rA->of(x).apply(w);
                };
                auto p2 = [rB](const V& x, const V& w) {
                  return rB->of(x).apply(w);
                };
                V sum = p2(p1(x1, b2(x2, y2)), y1) -
                        p2(p1(x1, x2), p2(y2, y1)) +
                        p2(x2, b1(p2(y2, x1), y1)) -
                        b1(p2(y2, p2(x2, y1)), x1) -
                        b1(p2(b2(x2, y2), x1), y1) +
                        p2(p1(y1, y2), p2(x2, x1)) -
                        p2(b2(p1(y1, x2), y2), x1) -
                        p2(y2, p2(x2, b1(x1, y1))) +
                        b1(p2(x2, x1), p2(y2, y1)) -
                        p2(x2, p2(p1(x1, y2), y1)) +
                        p2(p1(p2(x2, y1), y2), x1);
                return sides(sum, Vec(bA->field(), dA));
              }};
    }
    case LawId::MATCHED_M5:
    case LawId::MATCHED_M6: {
      bool mirror = (law == LawId::MATCHED_M6);
      const BilinearOp* bA = need(mirror ? bn.bracket2 : bn.bracket,
                                  mirror ? "bracket2" : "bracket");
      const BilinearOp* bB = need(mirror ? bn.bracket : bn.bracket2,
                                  mirror ? "bracket" : "bracket2");
      const RepAction* rA = need(mirror ? bn.rho2 : bn.rho,
                                 mirror ? "rho2" : "rho1");
      const RepAction* rB = need(mirror ? bn.rho : bn.rho2,
                                 mirror ? "rho1" : "rho2");
      int dA = bA->dim(), dB = bB->dim();
      return {{dA, dA, dB, dB}, [bA, bB, rA, rB, dA, dB](
                                    const std::vector<int>& ix) {
                V x1 = V::basis(bA->field(), dA, ix[0]);
                V y1 = V::basis(bA->field(), dA, ix[1]);
                V x2 = V::basis(bA->field(), dB, ix[2]);
                V y2 = V::basis(bA->field(), dB, ix[3]);
                auto b1 = [bA](const V& u, const V& v) {
                  return multiply(*bA, u, v);
                };
                auto b2 = [bB](const V& u, const V& v) {
                  return multiply(*bB, u, v);
                };
                auto p1 = [rA](const V& x, const V& w) {
                  return rA->of(x).apply(w);
                };
                auto p2 = [rB](const V& x, const V& w) {
                  return rB->of(x).apply(w);
                };
                V sum = p2(x2, b1(p2(y2, y1), x1)) -
                        p2(b2(p1(x1, y2), x2), y1) -
                        b1(p2(x2, p2(y2, x1)), y1) +
                        p2(y2, b1(p2(x2, x1), y1)) -
                        b1(p2(y2, p2(x2, y1)), x1) -
                        p2(b2(p1(y1, x2), y2), x1) -
                        p2(y2, p2(p1(x1, x2), y1)) -
                        p2(x2, p2(p1(y1, y2), x1)) +
                        p2(b2(x2, y2), b1(x1, y1)) +
                        p2(p1(p2(x2, y1), y2), x1) +
                        p2(p1(p2(y2, x1), x2), y1);
                return sides(sum, Vec(bA->field(), dA));
              }};
    }
    case LawId::MATCHED_MP1:
    case LawId::MATCHED_MP2: {
      // rho2(x2)(x1 o1 y1) = (rho2(x2)x1) o1 y1 + x1 o1 (rho2(x2)y1)
      //                      - mu2(rho1(x1)x2)y1 - mu2(rho1(y1)x2)x1
      bool mirror = (law == LawId::MATCHED_MP2);
      const BilinearOp* pA = need(mirror ? bn.product2 : bn.product,
                                  mirror ? "product2" : "product");
      const RepAction* rA = need(mirror ? bn.rho2 : bn.rho,
                                 mirror ? "rho2" : "rho1");
      const RepAction* rB = need(mirror ? bn.rho : bn.rho2,
                                 mirror ? "rho1" : "rho2");
      const RepAction* mB = need(mirror ? bn.mu : bn.mu2,
                                 mirror ? "mu1" : "mu2");
      int dA = pA->dim(), dB = rB->acting_dim();
      return {{dB, dA, dA}, [pA, rA, rB, mB, dA, dB](
                                const std::vector<int>& ix) {
                V x2 = V::basis(pA->field(), dB, ix[0]);
                V x1 = V::basis(pA->field(), dA, ix[1]);
                V y1 = V::basis(pA->field(), dA, ix[2]);
                V lhs = rB->of(x2).apply(multiply(*pA, x1, y1));
                V rhs = multiply(*pA, rB->of(x2).apply(x1), y1) +
                        multiply(*pA, x1, rB->of(x2).apply(y1)) -
                        mB->of(rA->of(x1).apply(x2)).apply(y1) -
                        mB->of(rA->of(y1).apply(x2)).apply(x1);
                return sides(lhs, rhs);
              }};
    }
    case LawId::MATCHED_MP3:
    case LawId::MATCHED_MP4: {
      // [x1, mu2(x2)y1]1 - rho2(mu1(y1)x2)x1 =
      //     mu2(rho1(x1)x2)y1 - (rho2(x2)x1) o1 y1 + mu2(x2)[x1,y1]1
      bool mirror = (law == LawId::MATCHED_MP4);
      const BilinearOp* bA = need(mirror ? bn.bracket2 : bn.bracket,
                                  mirror ? "bracket2" : "bracket");
      const BilinearOp* pA = need(mirror ? bn.product2 : bn.product,
                                  mirror ? "product2" : "product");
      const RepAction* rA = need(mirror ? bn.rho2 : bn.rho,
                                 mirror ? "rho2" : "rho1");
      const RepAction* rB = need(mirror ? bn.rho : bn.rho2,
                                 mirror ? "rho1" : "rho2");
      const RepAction* mA = need(mirror ? bn.mu2 : bn.mu,
                                 mirror ? "mu2" : "mu1");
      const RepAction* mB = need(mirror ? bn.mu : bn.mu2,
                                 mirror ? "mu1" : "mu2");
      int dA = bA->dim(), dB = rB->acting_dim();
      return {{dA, dA, dB}, [bA, pA, rA, rB, mA, mB, dA, dB](
                                const std::vector<int>& ix) {
                V x1 = V::basis(bA->field(), dA, ix[0]);
                V y1 = V::basis(bA->field(), dA, ix[1]);
                V x2 = V::basis(bA->field(), dB, ix[2]);
                V lhs = multiply(*bA, x1, mB->of(x2).apply(y1)) -
                        rB->of(mA->of(y1).apply(x2)).apply(x1);
                V rhs = mB->of(rA->of(x1).apply(x2)).apply(y1) -
                        multiply(*pA, rB->of(x2).apply(x1), y1) +
                        mB->of(x2).apply(multiply(*bA, x1, y1));
                return sides(lhs, rhs);
              }};
    }
    case LawId::FORM_INV_A:
    case LawId::FORM_INV_M: {
      const BilinearForm* B = need(bn.form, "form");
      const BilinearOp* op = (law == LawId::FORM_INV_A)
                                 ? need(bn.product, "product")
                                 : need(bn.bracket, "bracket");
      int d = op->dim();
      if (B->dim() != d) throw Error("form dimension mismatch");
      return {{d, d, d}, [B, op, d](const std::vector<int>& ix) {
                V x = V::basis(op->field(), d, ix[0]);
                V z = V::basis(op->field(), d, ix[2]);
                Tensor lhs(op->field(), {1});
                Tensor rhs(op->field(), {1});
                lhs.flat(0) = B->eval(op->on_basis(ix[0], ix[1]), z);
                rhs.flat(0) = B->eval(x, op->on_basis(ix[1], ix[2]));
                return std::make_pair(lhs, rhs);
              }};
    }
    case LawId::CO_COCOMM: {
      const Comultiplication* D = need(bn.coproduct, "coproduct");
      return {{D->dim()}, [D](const std::vector<int>& ix) {
                Tensor t = D->on_basis(ix[0]);
                return sides(flip(t), t);
              }};
    }
    case LawId::CO_COASSOC: {
      const Comultiplication* D = need(bn.coproduct, "coproduct");
      return {{D->dim()}, [D](const std::vector<int>& ix) {
                Tensor t = D->on_basis(ix[0]);
                return sides(expand_slot(t, *D, 1), expand_slot(t, *D, 0));
              }};
    }
    case LawId::CO_ANTI: {
      const Comultiplication* del = need(bn.cobracket, "cobracket");
      return {{del->dim()}, [del](const std::vector<int>& ix) {
                Tensor t = del->on_basis(ix[0]);
                return sides(flip(t), -t);
              }};
    }
    case LawId::CO_MALCEV: {
      // (delta x delta) delta = (id + s + s^2 + s^3)(delta x id x id)
      // (delta x id) delta, with s the cyclic shift on four factors.
      const Comultiplication* del = need(bn.cobracket, "cobracket");
      return {{del->dim()}, [del](const std::vector<int>& ix) {
                Tensor t = del->on_basis(ix[0]);
                Tensor lhs = expand_slot(expand_slot(t, *del, 0), *del, 2);
                Tensor base = expand_slot(expand_slot(t, *del, 0), *del, 0);
                Tensor rhs = base;
                Tensor cur = base;
                for (int k = 0; k < 3; ++k) {
                  cur = permute(cur, {3, 0, 1, 2});
                  rhs += cur;
                }
                return sides(lhs, rhs);
              }};
    }
    case LawId::CO_MP: {
      // (id x Delta)delta - (delta x id)Delta - (tau x id)(id x delta)Delta
      const Comultiplication* del = need(bn.cobracket, "cobracket");
      const Comultiplication* D = need(bn.coproduct, "coproduct");
      if (del->dim() != D->dim())
        throw Error("comultiplication dim mismatch");
      return {{del->dim()}, [del, D](const std::vector<int>& ix) {
                Tensor sum = expand_slot(del->on_basis(ix[0]), *D, 1) -
                             expand_slot(D->on_basis(ix[0]), *del, 0) -
                             permute(expand_slot(D->on_basis(ix[0]), *del, 1),
                                     {1, 0, 2});
                Tensor zero(del->field(), sum.shape());
                return sides(sum, zero);
              }};
    }
    case LawId::BI_INF: {
      const BilinearOp* p = need(bn.product, "product");
      const Comultiplication* D = need(bn.coproduct, "coproduct");
      int d = p->dim();
      return {{d, d}, [p, D, d](const std::vector<int>& ix) {
                V x = V::basis(p->field(), d, ix[0]);
                V y = V::basis(p->field(), d, ix[1]);
                Tensor lhs = D->on(p->on_basis(ix[0], ix[1]));
                Tensor rhs = apply_slot(D->on(y), left_mat(*p, x), 0) +
                             apply_slot(D->on(x), left_mat(*p, y), 1);
                return sides(lhs, rhs);
              }};
    }
    case LawId::BI_MALCEV_1: {
      // Right-applied operators such as delta([y,z])(id x ad(x)) are read as
      // the operator applied to the tensor element.
      const BilinearOp* br = need(bn.bracket, "bracket");
      const Comultiplication* del = need(bn.cobracket, "cobracket");
      int d = br->dim();
      return {{d, d, d}, [br, del, d](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                V z = V::basis(br->field(), d, ix[2]);
                auto m = [br](const V& a, const V& c) {
                  return multiply(*br, a, c);
                };
                Mat adx = ad_mat(*br, x), ady = ad_mat(*br, y),
                    adz = ad_mat(*br, z);
                Tensor lhs = del->on(m(m(x, y), z)) +
                             apply_slot(del->on(m(y, z)), adx, 1) +
                             apply_slot(del->on(m(x, z)), ady, 0);
                Tensor rhs =
                    apply_slot(del->on(x), ad_mat(*br, m(z, y)), 0) +
                    apply_slot(apply_slot(del->on(x), adz, 0), ady, 1) +
                    apply_slot(del->on(x), adz * ady, 1) -
                    apply_slot(del->on(y), adz * adx, 0) -
                    apply_slot(apply_slot(del->on(y), adx, 0), adz, 1) +
                    apply_slot(del->on(y), ad_mat(*br, m(x, z)), 1) +
                    apply_slot(del->on(z), adx * ady, 0) -
                    apply_slot(del->on(z), ady * adx, 1);
                return sides(lhs, rhs);
              }};
    }
    case LawId::BI_MALCEV_2: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const Comultiplication* del = need(bn.cobracket, "cobracket");
      int d = br->dim();
      return {{d, d}, [br, del, d](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                Mat adx = ad_mat(*br, x), ady = ad_mat(*br, y);
                Tensor dx = del->on(x), dy = del->on(y);
                Tensor lhs =
                    expand_slot(del->on(multiply(*br, x, y)), *del, 1);
                Tensor rhs =
                    apply_slot(expand_slot(dy, *del, 1), adx, 2) +
                    expand_slot(apply_slot(dy, adx, 0), *del, 0) +
                    contract_pair(permute(kron(dy, dx), {0, 2, 1, 3}), *br,
                                  1) -
                    apply_slot(expand_slot(dx, *del, 0), ady, 0) -
                    apply_slot(expand_slot(dx, *del, 0), ady, 2) +
                    contract_pair(permute(kron(dx, dy), {0, 2, 1, 3}), *br,
                                  2) -
                    permute(apply_slot(expand_slot(dy, *del, 0), adx, 2),
                            {0, 2, 1}) +
                    permute(expand_slot(apply_slot(dx, ady, 0), *del, 0),
                            {0, 2, 1}) -
                    apply_slot(expand_slot(dx, *del, 1), ady, 1) +
                    permute(apply_slot(expand_slot(dy, *del, 0), adx, 0),
                            {0, 2, 1});
                return sides(lhs, rhs);
              }};
    }
    case LawId::BI_MP_1: {
      // delta(x o y) + (ad(y) x id)Delta(x) - (id x L(x))delta(y)
      //             + (ad(x) x id)Delta(y) - (id x L(y))delta(x) = 0
      const BilinearOp* br = need(bn.bracket, "bracket");
      const BilinearOp* p = need(bn.product, "product");
      const Comultiplication* del = need(bn.cobracket, "cobracket");
      const Comultiplication* D = need(bn.coproduct, "coproduct");
      int d = br->dim();
      return {{d, d}, [br, p, del, D, d](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                Tensor sum = del->on(p->on_basis(ix[0], ix[1])) +
                             apply_slot(D->on(x), ad_mat(*br, y), 0) -
                             apply_slot(del->on(y), left_mat(*p, x), 1) +
                             apply_slot(D->on(y), ad_mat(*br, x), 0) -
                             apply_slot(del->on(x), left_mat(*p, y), 1);
                Tensor zero(br->field(), sum.shape());
                return sides(sum, zero);
              }};
    }
    case LawId::BI_MP_2: {
      // Delta([x,y]) - (L(y) x id)delta(x) - (id x ad(x))Delta(y)
      //             + (id x L(y))delta(x) - (ad(x) x id)Delta(y) = 0
      const BilinearOp* br = need(bn.bracket, "bracket");
      const BilinearOp* p = need(bn.product, "product");
      const Comultiplication* del = need(bn.cobracket, "cobracket");
      const Comultiplication* D = need(bn.coproduct, "coproduct");
      int d = br->dim();
      return {{d, d}, [br, p, del, D, d](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                Tensor sum = D->on(br->on_basis(ix[0], ix[1])) -
                             apply_slot(del->on(x), left_mat(*p, y), 0) -
                             apply_slot(D->on(y), ad_mat(*br, x), 1) +
                             apply_slot(del->on(x), left_mat(*p, y), 1) -
                             apply_slot(D->on(y), ad_mat(*br, x), 0);
                Tensor zero(br->field(), sum.shape());
                return sides(sum, zero);
              }};
    }
    case LawId::MOD_ASSOC: {
      const RepAction* mu = need(bn.mu, "mu");
      const BilinearOp* vp = need(bn.vproduct, "module product");
      int dA = mu->acting_dim(), dV = vp->dim();
      return {{dA, dV, dV}, [mu, vp, dV](const std::vector<int>& ix) {
                V a = V::basis(vp->field(), dV, ix[1]);
                V c = V::basis(vp->field(), dV, ix[2]);
                V lhs = mu->mat(ix[0]).apply(vp->on_basis(ix[1], ix[2]));
                V rhs = multiply(*vp, mu->mat(ix[0]).apply(a), c);
                return sides(lhs, rhs);
              }};
    }
    case LawId::MOD_MALCEV_1: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const RepAction* rho = need(bn.rho, "rho");
      const BilinearOp* vb = need(bn.vbracket, "module bracket");
      int dA = br->dim(), dV = vb->dim();
      return {{dA, dA, dV, dV},
              [br, rho, vb, dV](const std::vector<int>& ix) {
                V a = V::basis(br->field(), dV, ix[2]);
                V c = V::basis(br->field(), dV, ix[3]);
                Mat rx = rho->mat(ix[0]), ry = rho->mat(ix[1]);
                auto vm = [vb](const V& u, const V& v) {
                  return multiply(*vb, u, v);
                };
                V lhs = rho->of(br->on_basis(ix[0], ix[1]))
                            .apply(vb->on_basis(ix[2], ix[3]));
                V rhs = rx.apply(vm(ry.apply(a), c)) -
                        vm((ry * rx).apply(a), c) -
                        vm((rx * ry).apply(c), a) +
                        ry.apply(vm(rx.apply(c), a));
                return sides(lhs, rhs);
              }};
    }
    case LawId::MOD_MALCEV_2: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const RepAction* rho = need(bn.rho, "rho");
      const BilinearOp* vb = need(bn.vbracket, "module bracket");
      int dA = br->dim(), dV = vb->dim();
      return {{dA, dA, dV, dV},
              [br, rho, vb, dV](const std::vector<int>& ix) {
                V a = V::basis(br->field(), dV, ix[2]);
                V c = V::basis(br->field(), dV, ix[3]);
                Mat rx = rho->mat(ix[0]), ry = rho->mat(ix[1]);
                auto vm = [vb](const V& u, const V& v) {
                  return multiply(*vb, u, v);
                };
                V lhs = vm(rx.apply(a), ry.apply(c));
                V rhs = vm(rho->of(br->on_basis(ix[0], ix[1])).apply(a), c) -
                        rx.apply(vm(ry.apply(a), c)) +
                        (ry * rx).apply(vb->on_basis(ix[2], ix[3])) +
                        vm((ry * rx).apply(c), a);
                return sides(lhs, rhs);
              }};
    }
    case LawId::MOD_MALCEV_3: {
      const RepAction* rho = need(bn.rho, "rho");
      const BilinearOp* vb = need(bn.vbracket, "module bracket");
      int dA = rho->acting_dim(), dV = vb->dim();
      return {{dA, dV, dV, dV}, [rho, vb, dV](const std::vector<int>& ix) {
                Mat rx = rho->mat(ix[0]);
                V a = V::basis(vb->field(), dV, ix[1]);
                V c = V::basis(vb->field(), dV, ix[2]);
                V e = V::basis(vb->field(), dV, ix[3]);
                auto vm = [vb](const V& u, const V& v) {
                  return multiply(*vb, u, v);
                };
                V lhs = vm(rx.apply(a), vb->on_basis(ix[2], ix[3]));
                V rhs = vm(vm(rx.apply(c), a), e) -
                        rx.apply(vm(vm(c, a), e)) -
                        vm(rx.apply(vm(a, e)), c) -
                        vm(vm(rx.apply(e), c), a);
                return sides(lhs, rhs);
              }};
    }
    case LawId::MOD_MP_1: {
      const RepAction* rho = need(bn.rho, "rho");
      const BilinearOp* vp = need(bn.vproduct, "module product");
      int dA = rho->acting_dim(), dV = vp->dim();
      return {{dA, dV, dV}, [rho, vp, dV](const std::vector<int>& ix) {
                Mat rx = rho->mat(ix[0]);
                V a = V::basis(vp->field(), dV, ix[1]);
                V c = V::basis(vp->field(), dV, ix[2]);
                V lhs = rx.apply(vp->on_basis(ix[1], ix[2]));
                V rhs = multiply(*vp, rx.apply(a), c) +
                        multiply(*vp, a, rx.apply(c));
                return sides(lhs, rhs);
              }};
    }
    case LawId::MOD_MP_2: {
      // [a, mu(x)b]_V = -(rho(x)a) o_V b + mu(x)[a,b]_V
      const RepAction* rho = need(bn.rho, "rho");
      const RepAction* mu = need(bn.mu, "mu");
      const BilinearOp* vb = need(bn.vbracket, "module bracket");
      const BilinearOp* vp = need(bn.vproduct, "module product");
      int dA = rho->acting_dim(), dV = vb->dim();
      return {{dA, dV, dV}, [rho, mu, vb, vp, dV](const std::vector<int>& ix) {
                Mat rx = rho->mat(ix[0]), mx = mu->mat(ix[0]);
                V a = V::basis(vb->field(), dV, ix[1]);
                V c = V::basis(vb->field(), dV, ix[2]);
                V lhs = multiply(*vb, a, mx.apply(c));
                V rhs = -multiply(*vp, rx.apply(a), c) +
                        mx.apply(vb->on_basis(ix[1], ix[2]));
                return sides(lhs, rhs);
              }};
    }
    case LawId::DENDRI_1:
    case LawId::DENDRI_2: {
      const BilinearOp* dt = need(bn.dot, "dot");
      const BilinearOp* tr = need(bn.triangle, "triangle");
      int d = dt->dim();
      bool first = (law == LawId::DENDRI_1);
      return {{d, d, d}, [dt, tr, d, first](const std::vector<int>& ix) {
                V x = V::basis(dt->field(), d, ix[0]);
                V y = V::basis(dt->field(), d, ix[1]);
                V z = V::basis(dt->field(), d, ix[2]);
                if (first) {
                  V xy = multiply(*tr, x, y) + multiply(*tr, y, x) +
                         multiply(*dt, x, y);
                  return sides(multiply(*tr, xy, z),
                               multiply(*tr, x, multiply(*tr, y, z)));
                }
                return sides(multiply(*dt, multiply(*tr, x, y), z),
                             multiply(*tr, x, multiply(*dt, y, z)));
              }};
    }
    case LawId::POST_M1:
    case LawId::POST_M2:
    case LawId::POST_M3:
    case LawId::POST_M4: {
      // {x,y} below is the sub-adjacent bracket x<>y - y<>x + [x,y].
      const BilinearOp* br = need(bn.bracket, "bracket");
      const BilinearOp* di = need(bn.diamond, "diamond");
      int d = br->dim();
      return {{d, d, d, d}, [br, di, d, law](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                V z = V::basis(br->field(), d, ix[2]);
                V t = V::basis(br->field(), d, ix[3]);
                auto bk = [br](const V& u, const V& v) {
                  return multiply(*br, u, v);
                };
                auto dm = [di](const V& u, const V& v) {
                  return multiply(*di, u, v);
                };
                auto sb = [&](const V& u, const V& v) {
                  return dm(u, v) - dm(v, u) + bk(u, v);
                };
                switch (law) {
                  case LawId::POST_M1:
                    return sides(dm(sb(x, z), bk(y, t)),
                                 dm(x, bk(dm(z, y), t)) -
                                     bk(dm(z, dm(x, y)), t) -
                                     bk(dm(x, dm(z, t)), y) +
                                     dm(z, bk(dm(x, t), y)));
                  case LawId::POST_M2:
                    return sides(bk(dm(x, z), dm(y, t)),
                                 bk(dm(sb(x, y), z), t) -
                                     dm(x, bk(dm(y, z), t)) +
                                     dm(y, dm(x, bk(z, t))) +
                                     bk(dm(y, dm(x, t)), z));
                  case LawId::POST_M3:
                    return sides(bk(dm(x, z), bk(y, t)),
                                 bk(bk(dm(x, y), z), t) -
                                     dm(x, bk(bk(y, z), t)) -
                                     bk(dm(x, bk(z, t)), y) -
                                     bk(bk(dm(x, t), y), z));
                  default:
                    return sides(dm(sb(y, z), dm(x, t)),
                                 dm(sb(sb(x, y), z), t) +
                                     dm(y, dm(sb(x, z), t)) +
                                     dm(x, dm(y, dm(z, t))) -
                                     dm(z, dm(x, dm(y, t))));
                }
              }};
    }
    case LawId::POST_MP1:
    case LawId::POST_MP2:
    case LawId::POST_MP3:
    case LawId::POST_MP4: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const BilinearOp* di = need(bn.diamond, "diamond");
      const BilinearOp* dt = need(bn.dot, "dot");
      const BilinearOp* tr = need(bn.triangle, "triangle");
      int d = br->dim();
      return {{d, d, d}, [br, di, dt, tr, d, law](const std::vector<int>& ix) {
                V x = V::basis(br->field(), d, ix[0]);
                V y = V::basis(br->field(), d, ix[1]);
                V z = V::basis(br->field(), d, ix[2]);
                auto bk = [br](const V& u, const V& v) {
                  return multiply(*br, u, v);
                };
                auto dm = [di](const V& u, const V& v) {
                  return multiply(*di, u, v);
                };
                auto pr = [dt](const V& u, const V& v) {
                  return multiply(*dt, u, v);
                };
                auto tg = [tr](const V& u, const V& v) {
                  return multiply(*tr, u, v);
                };
                auto sb = [&](const V& u, const V& v) {
                  return dm(u, v) - dm(v, u) + bk(u, v);
                };
                auto circ = [&](const V& u, const V& v) {
                  return tg(u, v) + tg(v, u) + pr(u, v);
                };
                switch (law) {
                  case LawId::POST_MP1:
                    return sides(dm(x, pr(y, z)),
                                 pr(dm(x, y), z) + pr(y, dm(x, z)));
                  case LawId::POST_MP2:
                    return sides(bk(x, tg(z, y)),
                                 tg(z, bk(x, y)) - pr(y, dm(z, x)));
                  case LawId::POST_MP3:
                    return sides(dm(circ(y, z), x),
                                 tg(z, dm(y, x)) + tg(y, dm(z, x)));
                  default:
                    return sides(tg(sb(x, z), y),
                                 dm(x, tg(z, y)) - tg(z, dm(x, y)));
                }
              }};
    }
    case LawId::RRB_A:
    case LawId::RB_A: {
      const BilinearOp* p = need(bn.product, "product");
      const LinearMap* R = need(bn.T, "operator");
      Scalar lam = bn.weight.value_or(Scalar::zero(p->field()));
      if (law == LawId::RB_A) {
        int d = p->dim();
        if (R->domain_dim != d || R->codomain_dim != d)
          throw Error("RB operator must be an endomorphism of A");
        return {{d, d}, [p, R, lam, d](const std::vector<int>& ix) {
                  V x = V::basis(p->field(), d, ix[0]);
                  V y = V::basis(p->field(), d, ix[1]);
                  V Rx = R->apply_basis(ix[0]), Ry = R->apply_basis(ix[1]);
                  V lhs = multiply(*p, Rx, Ry);
                  V inner = multiply(*p, Rx, y) + multiply(*p, x, Ry) +
                            p->on_basis(ix[0], ix[1]).scaled(lam);
                  return sides(lhs, R->apply(inner));
                }};
      }
      const RepAction* mu = need(bn.mu, "mu");
      int dV = mu->module_dim();
      if (R->domain_dim != dV || R->codomain_dim != p->dim())
        throw Error("relative RB operator shape mismatch");
      const BilinearOp* vp = bn.vproduct;
      if (!lam.is_zero() && !vp)
        throw Error("missing binding: module product (lambda != 0)");
      return {{dV, dV}, [p, mu, R, vp, lam, dV](const std::vector<int>& ix) {
                V a = V::basis(p->field(), dV, ix[0]);
                V c = V::basis(p->field(), dV, ix[1]);
                V Ra = R->apply_basis(ix[0]), Rc = R->apply_basis(ix[1]);
                V lhs = multiply(*p, Ra, Rc);
                V inner = mu->of(Ra).apply(c) + mu->of(Rc).apply(a);
                if (vp && !lam.is_zero())
                  inner += vp->on_basis(ix[0], ix[1]).scaled(lam);
                return sides(lhs, R->apply(inner));
              }};
    }
    case LawId::RRB_M:
    case LawId::RB_M: {
      const BilinearOp* br = need(bn.bracket, "bracket");
      const LinearMap* R = need(bn.T, "operator");
      Scalar lam = bn.weight.value_or(Scalar::zero(br->field()));
      if (law == LawId::RB_M) {
        int d = br->dim();
        if (R->domain_dim != d || R->codomain_dim != d)
          throw Error("RB operator must be an endomorphism of A");
        return {{d, d}, [br, R, lam, d](const std::vector<int>& ix) {
                  V x = V::basis(br->field(), d, ix[0]);
                  V y = V::basis(br->field(), d, ix[1]);
                  V Rx = R->apply_basis(ix[0]), Ry = R->apply_basis(ix[1]);
                  V lhs = multiply(*br, Rx, Ry);
                  V inner = multiply(*br, Rx, y) + multiply(*br, x, Ry) +
                            br->on_basis(ix[0], ix[1]).scaled(lam);
                  return sides(lhs, R->apply(inner));
                }};
      }
      const RepAction* rho = need(bn.rho, "rho");
      int dV = rho->module_dim();
      if (R->domain_dim != dV || R->codomain_dim != br->dim())
        throw Error("relative RB operator shape mismatch");
      const BilinearOp* vb = bn.vbracket;
      if (!lam.is_zero() && !vb)
        throw Error("missing binding: module bracket (lambda != 0)");
      return {{dV, dV}, [br, rho, R, vb, lam, dV](const std::vector<int>& ix) {
                V a = V::basis(br->field(), dV, ix[0]);
                V c = V::basis(br->field(), dV, ix[1]);
                V Ra = R->apply_basis(ix[0]), Rc = R->apply_basis(ix[1]);
                V lhs = multiply(*br, Ra, Rc);
                V inner = rho->of(Ra).apply(c) - rho->of(Rc).apply(a);
                if (vb && !lam.is_zero())
                  inner += vb->on_basis(ix[0], ix[1]).scaled(lam);
                return sides(lhs, R->apply(inner));
              }};
    }
    default:
      throw Error("law " + law_name(law) + " has no tuple evaluator");
  }
}

}  // namespace lawdetail

// Evaluates a law's identity on every tuple of basis vectors in lexicographic
// order; holds iff every residual vanishes.  Evaluation stops at the first
// failing tuple, which is recorded with both evaluated sides.
inline Report check_law(LawId law, const Bindings& b,
                        const std::string& target = "") {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.law = law_name(law);
  rep.target = target;

  if (law == LawId::YBE_C || law == LawId::YBE_M) {
    const Tensor* r = lawdetail::need(b.r, "r");
    const BilinearOp* op = (law == LawId::YBE_C)
                               ? lawdetail::need(b.product, "product")
                               : lawdetail::need(b.bracket, "bracket");
    // Each equation reads only one of the two operations.
    BilinearOp zero(op->field(), op->dim());
    Tensor res = (law == LawId::YBE_C)
                     ? mpybe_residuals_of(*op, zero, *r).first
                     : mpybe_residuals_of(zero, *op, *r).second;
    rep.checked_tuples = static_cast<long>(res.size());
    if (!res.is_zero()) {
      rep.holds = false;
      for (size_t off = 0; off < res.size(); ++off)
        if (!res.flat(off).is_zero()) {
          Counterexample ce;
          for (int v : res.unflatten(off)) ce.indices.push_back(v + 1);
          ce.lhs = res.str();
          ce.rhs = "0";
          rep.counterexample = ce;
          break;
        }
    }
  } else {
    lawdetail::Eval ev = lawdetail::make_eval(law, b);
    std::vector<int> ix(ev.dims.size(), 0);
    long count = 0;
    bool done = ev.dims.empty();
    while (!done) {
      ++count;
      auto [lhs, rhs] = ev.sides(ix);
      if (lhs != rhs) {
        rep.holds = false;
        Counterexample ce;
        for (int v : ix) ce.indices.push_back(v + 1);
        ce.lhs = lhs.str();
        ce.rhs = rhs.str();
        rep.counterexample = ce;
        break;
      }
      int s = static_cast<int>(ix.size()) - 1;
      while (s >= 0 && ++ix[s] == ev.dims[s]) ix[s--] = 0;
      if (s < 0) done = true;
    }
    rep.checked_tuples = count;
  }

  rep.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

// Re-evaluates one law at a specific tuple (1-based indices); used to confirm
// reported counterexamples.
inline std::pair<std::string, std::string> eval_law_sides(
    LawId law, const Bindings& b, const std::vector<int>& indices) {
  lawdetail::Eval ev = lawdetail::make_eval(law, b);
  if (indices.size() != ev.dims.size())
    throw Error("eval_law_sides: index arity mismatch");
  std::vector<int> ix;
  for (int v : indices) ix.push_back(v - 1);
  auto [lhs, rhs] = ev.sides(ix);
  return {lhs.str(), rhs.str()};
}

// Laws required by each structure kind, in catalog order.
inline std::vector<LawId> structure_laws(Kind k) {
  switch (k) {
    case Kind::malcev:
      return {LawId::ANTI, LawId::MALCEV};
    case Kind::comm_assoc:
      return {LawId::COMM, LawId::ASSOC};
    case Kind::malcev_poisson:
      return {LawId::COMM, LawId::ASSOC, LawId::ANTI, LawId::MALCEV,
              LawId::LEIBNIZ};
    case Kind::post_malcev:
      return {LawId::ANTI, LawId::MALCEV, LawId::POST_M1, LawId::POST_M2,
              LawId::POST_M3, LawId::POST_M4};
    case Kind::comm_dendriform_tri:
      return {LawId::COMM, LawId::ASSOC, LawId::DENDRI_1, LawId::DENDRI_2};
    case Kind::post_malcev_poisson:
      return {LawId::COMM, LawId::ASSOC, LawId::ANTI, LawId::MALCEV,
              LawId::LEIBNIZ, LawId::DENDRI_1, LawId::DENDRI_2,
              LawId::POST_M1, LawId::POST_M2, LawId::POST_M3, LawId::POST_M4,
              LawId::POST_MP1, LawId::POST_MP2, LawId::POST_MP3,
              LawId::POST_MP4};
  }
  throw Error("unknown kind");
}

// Element-law bindings for an algebra's own operations.  For the post kinds
// the commutative associative part is the dot operation.
inline Bindings algebra_bindings(const AlgebraSpec& a) {
  Bindings b;
  b.bracket = a.bracket ? &*a.bracket : nullptr;
  b.product = a.product ? &*a.product : (a.dot ? &*a.dot : nullptr);
  b.diamond = a.diamond ? &*a.diamond : nullptr;
  b.dot = a.dot ? &*a.dot : nullptr;
  b.triangle = a.triangle ? &*a.triangle : nullptr;
  return b;
}

// One report per law the algebra's kind requires, in catalog order.
inline std::vector<Report> check_structure(const AlgebraSpec& a) {
  a.validate();
  Bindings b = algebra_bindings(a);
  std::vector<Report> out;
  for (LawId law : structure_laws(a.kind))
    out.push_back(check_law(law, b, a.name));
  return out;
}

}  // namespace mpk
