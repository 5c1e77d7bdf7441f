#pragma once

// Canonical re-emission of constructed structures in the workspace language.
// Output is deterministic: fixed block order, entries sorted by basis index,
// antisymmetric tables written as their upper triangle.

#include <sstream>

#include "mpk/dsl.hpp"

namespace mpk {

namespace dsl {

inline std::string combo_str(const Vec& v) { return v.str(); }

inline void write_op_table(std::ostringstream& out, const std::string& name,
                           const BilinearOp& op) {
  Symmetry tag = name == "bracket"
                     ? Symmetry::antisymmetric
                     : (name == "product" || name == "dot")
                           ? Symmetry::symmetric
                           : Symmetry::none;
  if (tag != Symmetry::none && !op.satisfies(tag))
    throw Error("cannot emit a " + name + " table that violates its " +
                (tag == Symmetry::symmetric ? std::string("symmetric")
                                            : std::string("antisymmetric")) +
                " completion");
  std::ostringstream body;
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j) {
      if (tag == Symmetry::antisymmetric && j <= i) continue;
      if (tag == Symmetry::symmetric && j < i) continue;
      Vec v = op.on_basis(i, j);
      if (v.is_zero()) continue;
      body << "    e" << (i + 1) << " e" << (j + 1) << " -> " << combo_str(v)
           << "\n";
    }
  std::string entries = body.str();
  if (entries.empty()) return;
  out << "  " << name << " {\n" << entries << "  }\n";
}

}  // namespace dsl

inline std::string write_field(FieldSpec f) { return "field " + f.str(); }

inline std::string write_algebra(const AlgebraSpec& a) {
  std::ostringstream out;
  out << "algebra " << a.name << " {\n";
  out << "  dim = " << a.dim << "\n";
  out << "  kind = " << kind_name(a.kind) << "\n";
  for (const auto& [name, op] : a.present_ops())
    dsl::write_op_table(out, name, *op);
  out << "}\n";
  return out.str();
}

// A one-algebra workspace document.
inline std::string write_workspace_algebra(const AlgebraSpec& a) {
  return write_field(a.field) + "\n\n" + write_algebra(a);
}

inline bool same_ops(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.field != b.field || a.dim != b.dim || a.kind != b.kind) return false;
  for (const char* w : {"bracket", "product", "diamond", "dot", "triangle"}) {
    const BilinearOp* x = a.op(w);
    const BilinearOp* y = b.op(w);
    if ((x == nullptr) != (y == nullptr)) return false;
    if (x && !(*x == *y)) return false;
  }
  return true;
}

}  // namespace mpk
