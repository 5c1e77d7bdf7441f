#pragma once

// The workspace definition language: a line-oriented format for algebras,
// actions, maps, tensors, forms, comultiplications and modules.  Parsing is
// single-pass (declare before use); every diagnostic carries a source span
// and no partially constructed workspace escapes.
//
//   field Q                       # or: field F5
//   algebra A {
//     dim = 6
//     kind = malcev-poisson       # optional; inferred from the ops otherwise
//     bracket { e1 e2 -> e3 }     # antisymmetric completion, no diagonal
//     product { e1 e1 -> e5 }     # symmetric completion
//   }
//   action ad : A on A { e1: e2 -> e3 }
//   map T : A -> A { e1 -> 2 e3 + 1/2 e5 }
//   tensor r : A x A { e1^e2 = 1 }
//   form B : A { e1 e2 = 3 }      # symmetric completion
//   cobracket d : A { e1 -> e1^e2 - e2^e1 }
//   coproduct D : A { e1 -> 2 e1^e1 }
//   module M : A on V { rho = ad  mu = L }

#include <string>
#include <string_view>
#include <vector>

#include "mpk/reps.hpp"

namespace mpk {

struct SourceSpan {
  int line = 1, col = 1;
};

struct ParseError : Error {
  SourceSpan span;
  ParseError(const std::string& file, SourceSpan sp, const std::string& msg)
      : Error(file + ":" + std::to_string(sp.line) + ":" +
              std::to_string(sp.col) + ": " + msg),
        span(sp) {}
};

struct ActionDecl {
  std::string name, actor, space;
  RepAction action;
  SourceSpan span;
};

struct MapDecl {
  std::string name, src, dst;
  LinearMap map;
  SourceSpan span;
};

struct TensorDecl {
  std::string name, left, right;
  Tensor tensor;
  SourceSpan span;
};

struct FormDecl {
  std::string name, alg;
  BilinearForm form;
  SourceSpan span;
};

struct CoDecl {
  std::string name, alg;
  bool is_cobracket = true;
  Comultiplication co;
  SourceSpan span;
};

struct ModuleDecl {
  std::string name, base, space;
  std::string rho_name, mu_name;  // empty = absent
  SourceSpan span;
};

struct Workspace {
  std::string source_label;
  FieldSpec field;
  std::vector<AlgebraSpec> algebras;
  std::vector<ActionDecl> actions;
  std::vector<MapDecl> maps;
  std::vector<TensorDecl> tensors;
  std::vector<FormDecl> forms;
  std::vector<CoDecl> comults;
  std::vector<ModuleDecl> modules;

  const AlgebraSpec* find_algebra(const std::string& n) const {
    for (const auto& a : algebras)
      if (a.name == n) return &a;
    return nullptr;
  }
  const ActionDecl* find_action(const std::string& n) const {
    for (const auto& a : actions)
      if (a.name == n) return &a;
    return nullptr;
  }
  const MapDecl* find_map(const std::string& n) const {
    for (const auto& a : maps)
      if (a.name == n) return &a;
    return nullptr;
  }
  const TensorDecl* find_tensor(const std::string& n) const {
    for (const auto& a : tensors)
      if (a.name == n) return &a;
    return nullptr;
  }
  const FormDecl* find_form(const std::string& n) const {
    for (const auto& a : forms)
      if (a.name == n) return &a;
    return nullptr;
  }
  const CoDecl* find_co(const std::string& n) const {
    for (const auto& a : comults)
      if (a.name == n) return &a;
    return nullptr;
  }
  const ModuleDecl* find_module(const std::string& n) const {
    for (const auto& a : modules)
      if (a.name == n) return &a;
    return nullptr;
  }

  bool name_taken(const std::string& n) const {
    return find_algebra(n) || find_action(n) || find_map(n) ||
           find_tensor(n) || find_form(n) || find_co(n) || find_module(n);
  }

  // Assembles the module: actions by name, module operations from the space
  // algebra's own operations (absent ones are zero).
  ModuleSpec module_spec(const ModuleDecl& md) const {
    const AlgebraSpec* base = find_algebra(md.base);
    const AlgebraSpec* space = find_algebra(md.space);
    if (!base || !space) throw Error("module references unknown algebra");
    ModuleSpec m;
    m.base = *base;
    m.module_dim = space->dim;
    if (!md.rho_name.empty()) m.rho = find_action(md.rho_name)->action;
    if (!md.mu_name.empty()) m.mu = find_action(md.mu_name)->action;
    if (space->bracket) m.vbracket = space->bracket;
    if (space->product) m.vproduct = space->product;
    return m;
  }
};

namespace dsl {

enum class Tok { word, number, punct, arrow, newline, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  long long value = 0;  // for numbers
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string file)
      : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (c == '\n') {
        out.push_back({Tok::newline, "\n", 0, here()});
        advance();
        continue;
      }
      if (c == '\r' || c == ' ' || c == '\t') {
        advance();
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        Token t{Tok::word, "", 0, here()};
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          t.text += text_[pos_];
          advance();
        }
        out.push_back(std::move(t));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Token t{Tok::number, "", 0, here()};
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          t.text += text_[pos_];
          advance();
        }
        if (t.text.size() > 15)
          throw ParseError(file_, t.span, "integer literal too large");
        t.value = std::stoll(t.text);
        out.push_back(std::move(t));
        continue;
      }
      if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        out.push_back({Tok::arrow, "->", 0, here()});
        advance();
        advance();
        continue;
      }
      if (std::string("{}=:;^+-/").find(c) != std::string::npos) {
        out.push_back({Tok::punct, std::string(1, c), 0, here()});
        advance();
        continue;
      }
      throw ParseError(file_, here(),
                       std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::end, "", 0, here()});
    return out;
  }

 private:
  SourceSpan here() const { return {line_, col_}; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::string label)
      : file_(std::move(label)), toks_(Lexer(text, file_).run()) {}

  Workspace run() {
    ws_.source_label = file_;
    skip_seps();
    parse_field_header();
    skip_seps();
    while (!at(Tok::end)) {
      const Token& t = peek();
      if (t.kind != Tok::word) fail(t.span, "expected a declaration");
      if (t.text == "algebra") parse_algebra();
      else if (t.text == "action") parse_action();
      else if (t.text == "map") parse_map();
      else if (t.text == "tensor") parse_tensor();
      else if (t.text == "form") parse_form();
      else if (t.text == "cobracket") parse_co(true);
      else if (t.text == "coproduct") parse_co(false);
      else if (t.text == "module") parse_module();
      else
        fail(t.span, "unknown declaration '" + t.text + "'");
      skip_seps();
    }
    return std::move(ws_);
  }

 private:
  [[noreturn]] void fail(SourceSpan sp, const std::string& msg) const {
    throw ParseError(file_, sp, msg);
  }

  const Token& peek(int ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_punct(const char* s) const {
    return peek().kind == Tok::punct && peek().text == s;
  }
  bool at_word(const char* s) const {
    return peek().kind == Tok::word && peek().text == s;
  }
  void skip_seps() {
    while (at(Tok::newline) || at_punct(";")) ++pos_;
  }
  const Token& expect_word(const char* what) {
    if (!at(Tok::word)) fail(peek().span, std::string("expected ") + what);
    return next();
  }
  void expect_punct(const char* s) {
    if (!at_punct(s))
      fail(peek().span, std::string("expected '") + s + "'");
    ++pos_;
  }
  void expect_arrow() {
    if (!at(Tok::arrow)) fail(peek().span, "expected '->'");
    ++pos_;
  }
  void expect_stmt_end() {
    if (at(Tok::newline) || at_punct(";") || at_punct("}") || at(Tok::end)) {
      skip_seps();
      return;
    }
    fail(peek().span, "unexpected trailing input on this line");
  }

  std::string fresh_name(const Token& t) {
    if (t.kind != Tok::word) fail(t.span, "expected a name");
    if (t.text.size() >= 2 && t.text[0] == 'e' &&
        std::isdigit(static_cast<unsigned char>(t.text[1])))
      fail(t.span, "names of the form e<n> are reserved for basis vectors");
    if (ws_.name_taken(t.text)) fail(t.span, "duplicate name '" + t.text + "'");
    return t.text;
  }

  void parse_field_header() {
    const Token& kw = peek();
    if (!(kw.kind == Tok::word && kw.text == "field"))
      fail(kw.span, "workspace must start with a 'field' header");
    ++pos_;
    const Token& v = expect_word("a field (Q or F<p>)");
    if (v.text == "Q") {
      ws_.field = FieldSpec::rationals();
    } else if (v.text.size() > 1 && v.text[0] == 'F') {
      for (size_t i = 1; i < v.text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(v.text[i])))
          fail(v.span, "expected a field of the form F<p>");
      long long p = std::stoll(v.text.substr(1));
      if (p < 2 || p > 1'000'000'000 || !detail::is_prime_u32(
                                            static_cast<std::uint32_t>(p)))
        fail(v.span, "characteristic " + v.text.substr(1) + " is not prime");
      ws_.field = FieldSpec::prime(static_cast<std::uint32_t>(p));
    } else {
      fail(v.span, "expected Q or F<p>");
    }
    expect_stmt_end();
  }

  // e<i>, 1-based in the source, 0-based in memory.
  int parse_basis(int dim, const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::word || t.text.size() < 2 || t.text[0] != 'e')
      fail(t.span, std::string("expected a basis vector e<i> (") + what + ")");
    for (size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
        fail(t.span, "expected a basis vector e<i>");
    long long idx = std::stoll(t.text.substr(1));
    if (idx < 1 || idx > dim)
      fail(t.span, "basis index " + std::to_string(idx) + " out of range 1.." +
                       std::to_string(dim));
    ++pos_;
    return static_cast<int>(idx - 1);
  }

  // [-] int [/ int]; fractions only over the rationals.
  Scalar parse_scalar() {
    bool neg = false;
    if (at_punct("-")) {
      neg = true;
      ++pos_;
    }
    const Token& n = peek();
    if (n.kind != Tok::number) fail(n.span, "expected a scalar");
    long long num = n.value;
    ++pos_;
    long long den = 1;
    if (at_punct("/")) {
      SourceSpan sp = peek().span;
      ++pos_;
      const Token& d = peek();
      if (d.kind != Tok::number) fail(d.span, "expected a denominator");
      if (!ws_.field.is_rational())
        fail(sp, "fractions are not allowed over " + ws_.field.str() +
                     "; write an integer");
      den = d.value;
      if (den == 0) fail(d.span, "zero denominator");
      ++pos_;
    }
    return Scalar::of_fraction(ws_.field, neg ? -num : num, den);
  }

  // Linear combination "2 e3 + 1/2 e5", "e3", "- e3 + e4", or "0".
  Vec parse_combo(int dim) {
    Vec v(ws_.field, dim);
    if (at(Tok::number) && peek().value == 0 &&
        (peek(1).kind == Tok::newline || peek(1).kind == Tok::end ||
         (peek(1).kind == Tok::punct &&
          (peek(1).text == ";" || peek(1).text == "}")))) {
      ++pos_;
      return v;
    }
    bool first = true;
    while (true) {
      Scalar sign = Scalar::one(ws_.field);
      if (at_punct("-")) {
        sign = -sign;
        ++pos_;
      } else if (at_punct("+")) {
        if (first) fail(peek().span, "a combination cannot start with '+'");
        ++pos_;
      } else if (!first) {
        break;
      }
      Scalar coeff = Scalar::one(ws_.field);
      if (at(Tok::number)) coeff = parse_scalar();
      int k = parse_basis(dim, "combination term");
      v.at(k) += sign * coeff;
      first = false;
      if (!(at_punct("+") || at_punct("-"))) break;
    }
    return v;
  }

  // Sum of scalar e<i>^e<j> terms, or "0".
  Tensor parse_co_combo(int dim) {
    Tensor t(ws_.field, {dim, dim});
    if (at(Tok::number) && peek().value == 0 &&
        (peek(1).kind == Tok::newline || peek(1).kind == Tok::end ||
         (peek(1).kind == Tok::punct &&
          (peek(1).text == ";" || peek(1).text == "}")))) {
      ++pos_;
      return t;
    }
    bool first = true;
    while (true) {
      Scalar sign = Scalar::one(ws_.field);
      if (at_punct("-")) {
        sign = -sign;
        ++pos_;
      } else if (at_punct("+")) {
        if (first) fail(peek().span, "a combination cannot start with '+'");
        ++pos_;
      } else if (!first) {
        break;
      }
      Scalar coeff = Scalar::one(ws_.field);
      if (at(Tok::number)) coeff = parse_scalar();
      int i = parse_basis(dim, "tensor term");
      expect_punct("^");
      int j = parse_basis(dim, "tensor term");
      t.at({i, j}) += sign * coeff;
      first = false;
      if (!(at_punct("+") || at_punct("-"))) break;
    }
    return t;
  }

  const AlgebraSpec& resolve_algebra(const Token& t) {
    if (t.kind != Tok::word) fail(t.span, "expected an algebra name");
    const AlgebraSpec* a = ws_.find_algebra(t.text);
    if (!a) fail(t.span, "unknown algebra '" + t.text + "'");
    return *a;
  }

  void parse_algebra() {
    ++pos_;  // 'algebra'
    SourceSpan sp = peek().span;
    std::string name = fresh_name(next());
    expect_punct("{");
    skip_seps();

    int dim = -1;
    std::optional<Kind> kind;
    std::optional<BilinearOp> ops[5];
    const char* opnames[5] = {"bracket", "product", "diamond", "dot",
                              "triangle"};

    while (!at_punct("}")) {
      const Token& t = peek();
      if (t.kind != Tok::word)
        fail(t.span, "expected dim, kind or an operation block");
      if (t.text == "dim") {
        ++pos_;
        expect_punct("=");
        const Token& n = peek();
        if (n.kind != Tok::number || n.value < 1 || n.value > 64)
          fail(n.span, "dim must be a positive integer (at most 64)");
        if (dim != -1) fail(t.span, "duplicate dim");
        dim = static_cast<int>(n.value);
        ++pos_;
        expect_stmt_end();
      } else if (t.text == "kind") {
        ++pos_;
        expect_punct("=");
        std::string kname = expect_word("a structure kind").text;
        while (at_punct("-")) {
          ++pos_;
          kname += "-" + expect_word("a structure kind").text;
        }
        kind = kind_from_name(kname);
        if (!kind) fail(t.span, "unknown kind '" + kname + "'");
        expect_stmt_end();
      } else {
        int which = -1;
        for (int i = 0; i < 5; ++i)
          if (t.text == opnames[i]) which = i;
        if (which < 0)
          fail(t.span, "unknown algebra item '" + t.text + "'");
        if (dim == -1)
          fail(t.span, "dim must be declared before operation tables");
        if (ops[which]) fail(t.span, "duplicate " + t.text + " block");
        ++pos_;
        ops[which] = parse_op_table(dim, which);
        expect_stmt_end();
      }
      skip_seps();
    }
    expect_punct("}");

    if (dim == -1) fail(sp, "algebra '" + name + "' has no dim");

    AlgebraSpec a;
    a.name = name;
    a.field = ws_.field;
    a.dim = dim;
    a.bracket = std::move(ops[0]);
    a.product = std::move(ops[1]);
    a.diamond = std::move(ops[2]);
    a.dot = std::move(ops[3]);
    a.triangle = std::move(ops[4]);
    if (!kind) kind = infer_kind(a, sp);
    a.kind = *kind;
    // Required ops left unspecified are zero.
    for (const auto& w : AlgebraSpec::required_ops(a.kind)) {
      if (a.op(w)) continue;
      Symmetry tag = Symmetry::none;
      if (w == "bracket") tag = Symmetry::antisymmetric;
      if (w == "product" || w == "dot") tag = Symmetry::symmetric;
      BilinearOp z(ws_.field, dim, tag);
      if (w == "bracket") a.bracket = z;
      else if (w == "product") a.product = z;
      else if (w == "diamond") a.diamond = z;
      else if (w == "dot") a.dot = z;
      else a.triangle = z;
    }
    try {
      a.validate();
    } catch (const Error& e) {
      fail(sp, e.what());
    }
    ws_.algebras.push_back(std::move(a));
  }

  Kind infer_kind(const AlgebraSpec& a, SourceSpan sp) const {
    bool br = a.bracket.has_value(), pr = a.product.has_value();
    bool di = a.diamond.has_value(), dt = a.dot.has_value();
    bool tr = a.triangle.has_value();
    if (br && di && dt && tr && !pr) return Kind::post_malcev_poisson;
    if (br && di && !pr && !dt && !tr) return Kind::post_malcev;
    if (dt && tr && !br && !pr && !di) return Kind::comm_dendriform_tri;
    if (br && pr && !di && !dt && !tr) return Kind::malcev_poisson;
    if (br && !pr && !di && !dt && !tr) return Kind::malcev;
    if (pr && !br && !di && !dt && !tr) return Kind::comm_assoc;
    if (!br && !pr && !di && !dt && !tr) return Kind::malcev_poisson;
    fail(sp, "cannot infer the structure kind from the given operations; "
             "declare 'kind = ...'");
  }

  // which: 0 bracket (antisymmetric), 1 product / 3 dot (symmetric),
  // 2 diamond / 4 triangle (no completion).
  BilinearOp parse_op_table(int dim, int which) {
    Symmetry tag = which == 0 ? Symmetry::antisymmetric
                   : (which == 1 || which == 3) ? Symmetry::symmetric
                                                : Symmetry::none;
    BilinearOp op(ws_.field, dim, tag);
    std::vector<bool> defined(static_cast<size_t>(dim) * dim, false);
    expect_punct("{");
    skip_seps();
    while (!at_punct("}")) {
      SourceSpan esp = peek().span;
      int i = parse_basis(dim, "left factor");
      int j = parse_basis(dim, "right factor");
      expect_arrow();
      Vec v = parse_combo(dim);
      expect_stmt_end();
      if (tag == Symmetry::antisymmetric && i == j)
        fail(esp, "diagonal entry in an antisymmetric table");
      if (defined[static_cast<size_t>(i) * dim + j])
        fail(esp, "duplicate table entry for e" + std::to_string(i + 1) +
                      " e" + std::to_string(j + 1) +
                      (tag != Symmetry::none ? " (possibly via its completed mirror)"
                                             : ""));
      defined[static_cast<size_t>(i) * dim + j] = true;
      for (int k = 0; k < dim; ++k) op.at(i, j, k) = v.at(k);
      if (tag != Symmetry::none && i != j) {
        defined[static_cast<size_t>(j) * dim + i] = true;
        for (int k = 0; k < dim; ++k)
          op.at(j, i, k) = tag == Symmetry::antisymmetric ? -v.at(k) : v.at(k);
      }
    }
    expect_punct("}");
    return op;
  }

  void parse_action() {
    ++pos_;
    SourceSpan sp = peek().span;
    std::string name = fresh_name(next());
    expect_punct(":");
    const AlgebraSpec& actor = resolve_algebra(next());
    if (!at_word("on")) fail(peek().span, "expected 'on'");
    ++pos_;
    const AlgebraSpec& space = resolve_algebra(next());
    RepAction act(ws_.field, actor.dim, space.dim);
    std::vector<bool> defined(static_cast<size_t>(actor.dim) * space.dim,
                              false);
    expect_punct("{");
    skip_seps();
    while (!at_punct("}")) {
      SourceSpan esp = peek().span;
      int i = parse_basis(actor.dim, "acting basis vector");
      expect_punct(":");
      int j = parse_basis(space.dim, "module basis vector");
      expect_arrow();
      Vec v = parse_combo(space.dim);
      expect_stmt_end();
      if (defined[static_cast<size_t>(i) * space.dim + j])
        fail(esp, "duplicate action entry");
      defined[static_cast<size_t>(i) * space.dim + j] = true;
      for (int k = 0; k < space.dim; ++k) act.mat(i).at(k, j) = v.at(k);
    }
    expect_punct("}");
    ws_.actions.push_back({name, actor.name, space.name, std::move(act), sp});
  }

  void parse_map() {
    ++pos_;
    SourceSpan sp = peek().span;
    std::string name = fresh_name(next());
    expect_punct(":");
    const AlgebraSpec& src = resolve_algebra(next());
    expect_arrow();
    const AlgebraSpec& dst = resolve_algebra(next());
    Mat m(ws_.field, dst.dim, src.dim);
    std::vector<bool> defined(static_cast<size_t>(src.dim), false);
    expect_punct("{");
    skip_seps();
    while (!at_punct("}")) {
      SourceSpan esp = peek().span;
      int i = parse_basis(src.dim, "domain basis vector");
      expect_arrow();
      Vec v = parse_combo(dst.dim);
      expect_stmt_end();
      if (defined[i]) fail(esp, "duplicate map entry");
      defined[i] = true;
      for (int k = 0; k < dst.dim; ++k) m.at(k, i) = v.at(k);
    }
    expect_punct("}");
    ws_.maps.push_back(
        {name, src.name, dst.name, LinearMap(src.dim, dst.dim, m), sp});
  }

  void parse_tensor() {
    ++pos_;
    SourceSpan sp = peek().span;
    std::string name = fresh_name(next());
    expect_punct(":");
    const AlgebraSpec& left = resolve_algebra(next());
    if (!at_word("x")) fail(peek().span, "expected 'x'");
    ++pos_;
    const AlgebraSpec& right = resolve_algebra(next());
    Tensor t(ws_.field, {left.dim, right.dim});
    std::vector<bool> defined(static_cast<size_t>(left.dim) * right.dim,
                              false);
    expect_punct("{");
    skip_seps();
    while (!at_punct("}")) {
      SourceSpan esp = peek().span;
      int i = parse_basis(left.dim, "left slot");
      expect_punct("^");
      int j = parse_basis(right.dim, "right slot");
      expect_punct("=");
      Scalar s = parse_scalar();
      expect_stmt_end();
      if (defined[static_cast<size_t>(i) * right.dim + j])
        fail(esp, "duplicate tensor entry");
      defined[static_cast<size_t>(i) * right.dim + j] = true;
      t.at({i, j}) = s;
    }
    expect_punct("}");
    ws_.tensors.push_back({name, left.name, right.name, std::move(t), sp});
  }

  void parse_form() {
    ++pos_;
    SourceSpan sp = peek().span;
    std::string name = fresh_name(next());
    expect_punct(":");
    const AlgebraSpec& alg = resolve_algebra(next());
    BilinearForm B(ws_.field, alg.dim);
    std::vector<bool> defined(static_cast<size_t>(alg.dim) * alg.dim, false);
    expect_punct("{");
    skip_seps();
    while (!at_punct("}")) {
      SourceSpan esp = peek().span;
      int i = parse_basis(alg.dim, "left argument");
      int j = parse_basis(alg.dim, "right argument");
      expect_punct("=");
      Scalar s = parse_scalar();
      expect_stmt_end();
      if (defined[static_cast<size_t>(i) * alg.dim + j])
        fail(esp, "duplicate form entry (possibly via its symmetric mirror)");
      defined[static_cast<size_t>(i) * alg.dim + j] = true;
      defined[static_cast<size_t>(j) * alg.dim + i] = true;
      B.at(i, j) = s;
      B.at(j, i) = s;
    }
    expect_punct("}");
    ws_.forms.push_back({name, alg.name, std::move(B), sp});
  }

  void parse_co(bool is_cobracket) {
    ++pos_;
    SourceSpan sp = peek().span;
    std::string name = fresh_name(next());
    expect_punct(":");
    const AlgebraSpec& alg = resolve_algebra(next());
    Comultiplication co(ws_.field, alg.dim);
    std::vector<bool> defined(static_cast<size_t>(alg.dim), false);
    expect_punct("{");
    skip_seps();
    while (!at_punct("}")) {
      SourceSpan esp = peek().span;
      int k = parse_basis(alg.dim, "argument basis vector");
      expect_arrow();
      Tensor t = parse_co_combo(alg.dim);
      expect_stmt_end();
      if (defined[k]) fail(esp, "duplicate comultiplication entry");
      defined[k] = true;
      for (int i = 0; i < alg.dim; ++i)
        for (int j = 0; j < alg.dim; ++j) co.at(k, i, j) = t.at({i, j});
    }
    expect_punct("}");
    ws_.comults.push_back({name, alg.name, is_cobracket, std::move(co), sp});
  }

  void parse_module() {
    ++pos_;
    SourceSpan sp = peek().span;
    std::string name = fresh_name(next());
    expect_punct(":");
    const AlgebraSpec& base = resolve_algebra(next());
    if (!at_word("on")) fail(peek().span, "expected 'on'");
    ++pos_;
    const AlgebraSpec& space = resolve_algebra(next());
    ModuleDecl md;
    md.name = name;
    md.base = base.name;
    md.space = space.name;
    md.span = sp;
    expect_punct("{");
    skip_seps();
    while (!at_punct("}")) {
      const Token& t = peek();
      if (t.kind != Tok::word || (t.text != "rho" && t.text != "mu"))
        fail(t.span, "expected 'rho = <action>' or 'mu = <action>'");
      bool is_rho = t.text == "rho";
      ++pos_;
      expect_punct("=");
      const Token& an = expect_word("an action name");
      const ActionDecl* act = ws_.find_action(an.text);
      if (!act) fail(an.span, "unknown action '" + an.text + "'");
      if (act->actor != base.name || act->space != space.name)
        fail(an.span, "action '" + an.text + "' is " + act->actor + " on " +
                          act->space + ", expected " + base.name + " on " +
                          space.name);
      std::string& slot = is_rho ? md.rho_name : md.mu_name;
      if (!slot.empty())
        fail(t.span, std::string("duplicate ") + (is_rho ? "rho" : "mu"));
      slot = an.text;
      expect_stmt_end();
      skip_seps();
    }
    expect_punct("}");
    if (md.rho_name.empty() && md.mu_name.empty())
      fail(sp, "module must name at least one action");
    ws_.modules.push_back(std::move(md));
  }

  std::string file_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  Workspace ws_;
};

}  // namespace dsl

inline Workspace parse_workspace(std::string_view text,
                                 std::string label = "<input>") {
  return dsl::Parser(text, std::move(label)).run();
}

}  // namespace mpk
