#pragma once

// A named algebra given by structure constants, with a declared structure
// kind that fixes which operations must be present and which laws its
// structure suite runs.

#include <optional>
#include <string>
#include <vector>

#include "mpk/ops.hpp"
#include "mpk/report.hpp"

namespace mpk {

enum class Kind {
  malcev,
  comm_assoc,
  malcev_poisson,
  post_malcev,
  comm_dendriform_tri,
  post_malcev_poisson,
};

inline std::string kind_name(Kind k) {
  switch (k) {
    case Kind::malcev: return "malcev";
    case Kind::comm_assoc: return "comm-assoc";
    case Kind::malcev_poisson: return "malcev-poisson";
    case Kind::post_malcev: return "post-malcev";
    case Kind::comm_dendriform_tri: return "comm-dendriform-tri";
    case Kind::post_malcev_poisson: return "post-malcev-poisson";
  }
  throw Error("unknown kind");
}

inline std::optional<Kind> kind_from_name(const std::string& s) {
  for (Kind k : {Kind::malcev, Kind::comm_assoc, Kind::malcev_poisson,
                 Kind::post_malcev, Kind::comm_dendriform_tri,
                 Kind::post_malcev_poisson})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

struct AlgebraSpec {
  std::string name;
  FieldSpec field;
  int dim = 0;
  Kind kind = Kind::malcev;
  std::optional<BilinearOp> bracket;   // [.,.]
  std::optional<BilinearOp> product;   // o  (commutative associative)
  std::optional<BilinearOp> diamond;   // post-Malcev operation
  std::optional<BilinearOp> dot;       // trialgebra commutative product
  std::optional<BilinearOp> triangle;  // trialgebra operation

  // Ops the declared kind requires, in (bracket, product, diamond, dot,
  // triangle) order.
  static std::vector<std::string> required_ops(Kind k) {
    switch (k) {
      case Kind::malcev: return {"bracket"};
      case Kind::comm_assoc: return {"product"};
      case Kind::malcev_poisson: return {"bracket", "product"};
      case Kind::post_malcev: return {"bracket", "diamond"};
      case Kind::comm_dendriform_tri: return {"dot", "triangle"};
      case Kind::post_malcev_poisson:
        return {"bracket", "diamond", "dot", "triangle"};
    }
    throw Error("unknown kind");
  }

  const BilinearOp* op(const std::string& which) const {
    if (which == "bracket") return bracket ? &*bracket : nullptr;
    if (which == "product") return product ? &*product : nullptr;
    if (which == "diamond") return diamond ? &*diamond : nullptr;
    if (which == "dot") return dot ? &*dot : nullptr;
    if (which == "triangle") return triangle ? &*triangle : nullptr;
    throw Error("unknown operation slot " + which);
  }

  // All present operations, with their slot names.
  std::vector<std::pair<std::string, const BilinearOp*>> present_ops() const {
    std::vector<std::pair<std::string, const BilinearOp*>> v;
    for (const char* w :
         {"bracket", "product", "diamond", "dot", "triangle"})
      if (const BilinearOp* o = op(w)) v.emplace_back(w, o);
    return v;
  }

  void validate() const {
    if (dim <= 0) throw Error("algebra " + name + ": dim must be positive");
    for (const auto& [w, o] : present_ops()) {
      if (o->dim() != dim)
        throw Error("algebra " + name + ": " + w + " dimension mismatch");
      if (o->field() != field)
        throw Error("algebra " + name + ": " + w + " field mismatch");
    }
    for (const auto& w : required_ops(kind))
      if (!op(w))
        throw Error("algebra " + name + " (kind " + kind_name(kind) +
                    "): missing " + w);
  }
};

// Abelian algebra of the given kind: all required ops present and zero.
inline AlgebraSpec zero_algebra(FieldSpec f, int dim, Kind kind,
                                std::string name = "A") {
  AlgebraSpec a;
  a.name = std::move(name);
  a.field = f;
  a.dim = dim;
  a.kind = kind;
  for (const auto& w : AlgebraSpec::required_ops(kind)) {
    Symmetry tag = Symmetry::none;
    if (w == "bracket") tag = Symmetry::antisymmetric;
    if (w == "product" || w == "dot") tag = Symmetry::symmetric;
    BilinearOp op(f, dim, tag);
    if (w == "bracket") a.bracket = op;
    else if (w == "product") a.product = op;
    else if (w == "diamond") a.diamond = op;
    else if (w == "dot") a.dot = op;
    else a.triangle = op;
  }
  return a;
}

}  // namespace mpk
