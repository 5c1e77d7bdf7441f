#pragma once

// Command-line surface: parse -> construct -> check -> report.
//
//   check <file> [--target <name>] [--laws <ids>]
//   build semidirect|double|direct-sum|post-from-rb|subadjacent <file> ...
//   search ybe|rb <file> --target <name> [--field p] [--lambda s] [--limit n]
//   harness equivalence <file> --algebra <name> [--trials n] [--seed s]
//
// Exit codes: 0 = all checks pass / search completed / harness agreement,
// 1 = some law failed or a disagreement was found, 2 = usage, parse or
// validation error.

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "mpk/dsl.hpp"
#include "mpk/dsl_write.hpp"
#include "mpk/json_report.hpp"
#include "mpk/search.hpp"

namespace mpk::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Scalar parse_scalar_string(FieldSpec f, const std::string& s) {
  size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start) throw Error("invalid scalar '" + s + "'");
  long long num = std::stoll(s.substr(start, pos - start));
  long long den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == dstart || pos != s.size())
      throw Error("invalid scalar '" + s + "'");
    if (!f.is_rational())
      throw Error("fractions are not allowed over " + f.str());
    den = std::stoll(s.substr(dstart));
  } else if (pos != s.size()) {
    throw Error("invalid scalar '" + s + "'");
  }
  return Scalar::of_fraction(f, neg ? -num : num, den);
}

inline Scalar reduce_scalar(const Scalar& s, FieldSpec fp) {
  if (!s.field().is_rational()) {
    if (s.field() != fp) throw Error("workspace field differs from --field");
    return s;
  }
  const mpq_class& q = s.rational();
  mpz_class p(static_cast<unsigned long>(fp.characteristic));
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw Error("denominator of " + s.str() + " vanishes mod " + fp.str());
  if (num < 0) num += p;
  Scalar n = Scalar::of_int(fp, num.get_si());
  Scalar d = Scalar::of_int(fp, den.get_si());
  return n / d;
}

inline BilinearOp reduce_op(const BilinearOp& op, FieldSpec fp) {
  BilinearOp out(fp, op.dim(), op.tag());
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j)
      for (int k = 0; k < op.dim(); ++k)
        out.at(i, j, k) = reduce_scalar(op.at(i, j, k), fp);
  return out;
}

inline RepAction reduce_action(const RepAction& a, FieldSpec fp) {
  RepAction out(fp, a.acting_dim(), a.module_dim());
  for (int i = 0; i < a.acting_dim(); ++i)
    for (int r = 0; r < a.module_dim(); ++r)
      for (int c = 0; c < a.module_dim(); ++c)
        out.mat(i).at(r, c) = reduce_scalar(a.mat(i).at(r, c), fp);
  return out;
}

inline AlgebraSpec reduce_algebra(const AlgebraSpec& a, FieldSpec fp) {
  AlgebraSpec out = a;
  out.field = fp;
  if (a.bracket) out.bracket = reduce_op(*a.bracket, fp);
  if (a.product) out.product = reduce_op(*a.product, fp);
  if (a.diamond) out.diamond = reduce_op(*a.diamond, fp);
  if (a.dot) out.dot = reduce_op(*a.dot, fp);
  if (a.triangle) out.triangle = reduce_op(*a.triangle, fp);
  return out;
}

inline ModuleSpec reduce_module(const ModuleSpec& m, FieldSpec fp) {
  ModuleSpec out;
  out.base = reduce_algebra(m.base, fp);
  out.module_dim = m.module_dim;
  if (m.rho) out.rho = reduce_action(*m.rho, fp);
  if (m.mu) out.mu = reduce_action(*m.mu, fp);
  if (m.vbracket) out.vbracket = reduce_op(*m.vbracket, fp);
  if (m.vproduct) out.vproduct = reduce_op(*m.vproduct, fp);
  return out;
}

inline std::string map_str(const LinearMap& f) {
  std::string s;
  for (int i = 0; i < f.domain_dim; ++i) {
    if (i) s += "; ";
    s += "e" + std::to_string(i + 1) + " -> " + f.apply_basis(i).str();
  }
  return s;
}

// Representation kind for a module entity, from the pieces it carries.
inline RepKind infer_rep_kind(const ModuleSpec& m) {
  bool ops = (m.vbracket && !m.vbracket->is_zero()) ||
             (m.vproduct && !m.vproduct->is_zero());
  if (m.rho && m.mu) return ops ? RepKind::module_mp : RepKind::mp_rep;
  if (m.rho) return ops ? RepKind::module_malcev : RepKind::malcev_rep;
  return ops ? RepKind::module_assoc : RepKind::assoc_rep;
}

inline Comultiplication random_comult(FieldSpec f, int dim,
                                      std::mt19937_64& rng) {
  Comultiplication co(f, dim);
  long bound = f.is_rational() ? 5 : f.characteristic;
  std::uniform_int_distribution<long> dist(0, bound - 1);
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        long v = dist(rng);
        co.at(k, i, j) =
            Scalar::of_int(f, f.is_rational() ? v - 2 : v);
      }
  return co;
}

struct Output {
  std::ostream& out;
  std::ostream& err;
  ReportFormat format = ReportFormat::human;
  bool verbose = false;

  int reports(const std::vector<Report>& rs, const std::string& workspace) {
    out << emit_report(rs, format, workspace, verbose);
    return all_hold(rs) ? 0 : 1;
  }
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"mpk: exact structure-constant checks for Malcev-Poisson-type "
               "algebras"};
  app.require_subcommand(1);
  std::string format = "human";
  bool verbose = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_flag("--verbose-timing", verbose,
               "Include per-check timing in reports");

  // check
  auto* c_check = app.add_subcommand("check", "Verify laws of a workspace");
  std::string check_file, check_target;
  std::vector<std::string> check_laws;
  c_check->add_option("file", check_file, "Workspace file")->required();
  c_check->add_option("--target", check_target, "Entity to check");
  c_check->add_option("--laws", check_laws, "Law ids to run")
      ->delimiter(',');

  // build <what>
  auto* c_build = app.add_subcommand("build", "Run a construction and emit "
                                              "the result in DSL form");
  c_build->require_subcommand(1);
  std::string b_file, b_name, b_out;
  std::string b_module, b_algebra, b_cobracket, b_coproduct;
  std::string b_a1, b_a2, b_rho1, b_rho2, b_mu1, b_mu2;
  std::string b_op, b_lambda = "0", b_post;
  bool b_force = false;
  auto add_common = [&](CLI::App* sc) {
    sc->add_option("file", b_file, "Workspace file")->required();
    sc->add_option("--name", b_name, "Name of the constructed algebra");
    sc->add_option("--out", b_out, "Write the DSL to this file");
  };
  auto* c_semidirect = c_build->add_subcommand(
      "semidirect", "Semidirect product of an algebra with a module");
  add_common(c_semidirect);
  c_semidirect->add_option("--module", b_module, "Module entity")->required();
  auto* c_double = c_build->add_subcommand(
      "double", "Standard double on A + A* from comultiplications");
  add_common(c_double);
  c_double->add_option("--algebra", b_algebra, "Base algebra")->required();
  c_double->add_option("--cobracket", b_cobracket, "Cobracket entity")
      ->required();
  c_double->add_option("--coproduct", b_coproduct, "Coproduct entity");
  auto* c_dsum = c_build->add_subcommand(
      "direct-sum", "Matched-pair operations on A1 + A2");
  add_common(c_dsum);
  c_dsum->add_option("--a1", b_a1)->required();
  c_dsum->add_option("--a2", b_a2)->required();
  c_dsum->add_option("--rho1", b_rho1);
  c_dsum->add_option("--rho2", b_rho2);
  c_dsum->add_option("--mu1", b_mu1);
  c_dsum->add_option("--mu2", b_mu2);
  auto* c_post = c_build->add_subcommand(
      "post-from-rb",
      "Post structure induced by a weighted relative Rota-Baxter operator");
  add_common(c_post);
  c_post->add_option("--module", b_module, "Module entity")->required();
  c_post->add_option("--op", b_op, "Operator (map entity)")->required();
  c_post->add_option("--lambda", b_lambda, "Weight");
  c_post->add_flag("--force", b_force,
                   "Construct even if the operator fails the RRB laws");
  auto* c_sub = c_build->add_subcommand(
      "subadjacent", "Sub-adjacent algebra of a post structure");
  add_common(c_sub);
  c_sub->add_option("--post", b_post, "Post algebra entity")->required();

  // search <what>
  auto* c_search = app.add_subcommand("search", "Brute-force search oracles");
  c_search->require_subcommand(1);
  std::string s_file, s_target, s_lambda = "0";
  long s_limit = -1;
  int s_box = 1;
  std::uint32_t s_field = 0;
  bool s_skew = false;
  auto add_search_common = [&](CLI::App* sc) {
    sc->add_option("file", s_file, "Workspace file")->required();
    sc->add_option("--target", s_target, "Entity to search on")->required();
    sc->add_option("--field", s_field,
                   "Search over F_p (reduces a rational workspace mod p)");
    sc->add_option("--limit", s_limit, "Stop after this many solutions");
    sc->add_option("--box", s_box,
                   "Coefficient box [-b, b] for rational searches");
  };
  auto* c_sybe = c_search->add_subcommand("ybe", "Solutions of the MPYBE");
  add_search_common(c_sybe);
  c_sybe->add_flag("--skew", s_skew, "Restrict to skew-symmetric r");
  auto* c_srb = c_search->add_subcommand(
      "rb", "Weighted relative Rota-Baxter operators");
  add_search_common(c_srb);
  c_srb->add_option("--lambda", s_lambda, "Weight");

  // harness equivalence
  auto* c_harness = app.add_subcommand("harness", "Theorem-level harnesses");
  c_harness->require_subcommand(1);
  auto* c_equiv = c_harness->add_subcommand(
      "equivalence",
      "Bialgebra / matched-pair / Manin-triple three-way agreement");
  std::string h_file, h_algebra, h_cobracket, h_coproduct;
  long h_trials = 200;
  std::uint64_t h_seed = 12345;
  c_equiv->add_option("file", h_file, "Workspace file")->required();
  c_equiv->add_option("--algebra", h_algebra, "Base algebra")->required();
  c_equiv->add_option("--cobracket", h_cobracket,
                      "Check one named cobracket instead of random trials");
  c_equiv->add_option("--coproduct", h_coproduct, "Named coproduct");
  c_equiv->add_option("--trials", h_trials, "Number of random trials");
  c_equiv->add_option("--seed", h_seed, "Random seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  detail::Output o{out, err,
                   format == "json" ? ReportFormat::json : ReportFormat::human,
                   verbose};

  try {
    if (app.got_subcommand(c_check)) {
      Workspace ws = parse_workspace(detail::read_file(check_file), check_file);
      std::vector<Report> reports;
      if (!check_laws.empty()) {
        if (check_target.empty())
          throw Error("--laws requires --target naming an algebra");
        const AlgebraSpec* a = ws.find_algebra(check_target);
        if (!a) throw Error("unknown algebra '" + check_target + "'");
        Bindings b = algebra_bindings(*a);
        for (const std::string& name : check_laws) {
          auto law = law_from_name(name);
          if (!law) throw Error("unknown law id '" + name + "'");
          reports.push_back(check_law(*law, b, a->name));
        }
      } else if (!check_target.empty()) {
        if (const AlgebraSpec* a = ws.find_algebra(check_target)) {
          reports = check_structure(*a);
        } else if (const ModuleDecl* md = ws.find_module(check_target)) {
          ModuleSpec m = ws.module_spec(*md);
          reports =
              check_representation(detail::infer_rep_kind(m), m, md->name);
        } else if (const FormDecl* fd = ws.find_form(check_target)) {
          reports = check_form(fd->form, *ws.find_algebra(fd->alg));
        } else if (const CoDecl* cd = ws.find_co(check_target)) {
          Bindings b;
          b.cobracket = &cd->co;
          b.coproduct = &cd->co;
          if (cd->is_cobracket) {
            reports.push_back(check_law(LawId::CO_ANTI, b, cd->name));
            reports.push_back(check_law(LawId::CO_MALCEV, b, cd->name));
          } else {
            reports.push_back(check_law(LawId::CO_COCOMM, b, cd->name));
            reports.push_back(check_law(LawId::CO_COASSOC, b, cd->name));
          }
        } else {
          throw Error("no checkable entity named '" + check_target + "'");
        }
      } else {
        for (const AlgebraSpec& a : ws.algebras)
          for (Report& r : check_structure(a)) reports.push_back(std::move(r));
      }
      return o.reports(reports, ws.source_label);
    }

    if (app.got_subcommand(c_build)) {
      Workspace ws = parse_workspace(detail::read_file(b_file), b_file);
      AlgebraSpec built;
      std::vector<Report> gate_reports;
      if (c_build->got_subcommand(c_semidirect)) {
        const ModuleDecl* md = ws.find_module(b_module);
        if (!md) throw Error("unknown module '" + b_module + "'");
        ModuleSpec m = ws.module_spec(*md);
        std::string name = b_name.empty() ? md->name + "_sd" : b_name;
        if (m.base.kind == Kind::malcev) {
          if (!m.rho) throw Error("semidirect over a Malcev base needs rho");
          built = semidirect_malcev(m.base, m.module_dim, *m.rho, name);
        } else {
          built = semidirect_mp(m.base, m, name);
        }
      } else if (c_build->got_subcommand(c_double)) {
        const AlgebraSpec* a = ws.find_algebra(b_algebra);
        if (!a) throw Error("unknown algebra '" + b_algebra + "'");
        const CoDecl* del = ws.find_co(b_cobracket);
        if (!del || !del->is_cobracket)
          throw Error("'" + b_cobracket + "' is not a cobracket");
        const CoDecl* Dl = nullptr;
        if (!b_coproduct.empty()) {
          Dl = ws.find_co(b_coproduct);
          if (!Dl || Dl->is_cobracket)
            throw Error("'" + b_coproduct + "' is not a coproduct");
        }
        std::string name = b_name.empty() ? a->name + "_double" : b_name;
        built = build_standard_double(*a, Dl ? &Dl->co : nullptr, del->co,
                                      name);
      } else if (c_build->got_subcommand(c_dsum)) {
        const AlgebraSpec* a1 = ws.find_algebra(b_a1);
        const AlgebraSpec* a2 = ws.find_algebra(b_a2);
        if (!a1 || !a2) throw Error("unknown algebra in --a1/--a2");
        MatchedPairSpec mp;
        mp.a1 = *a1;
        mp.a2 = *a2;
        auto pick = [&](const std::string& n) -> std::optional<RepAction> {
          if (n.empty()) return std::nullopt;
          const ActionDecl* ad = ws.find_action(n);
          if (!ad) throw Error("unknown action '" + n + "'");
          return ad->action;
        };
        mp.rho1 = pick(b_rho1);
        mp.rho2 = pick(b_rho2);
        mp.mu1 = pick(b_mu1);
        mp.mu2 = pick(b_mu2);
        PairKind kind = mp.rho1 && mp.mu1   ? PairKind::mp
                        : mp.rho1           ? PairKind::malcev
                                            : PairKind::assoc;
        std::string name =
            b_name.empty() ? a1->name + "_" + a2->name + "_sum" : b_name;
        built = direct_sum_ops(mp, kind, name);
      } else if (c_build->got_subcommand(c_post)) {
        const ModuleDecl* md = ws.find_module(b_module);
        if (!md) throw Error("unknown module '" + b_module + "'");
        const MapDecl* op = ws.find_map(b_op);
        if (!op) throw Error("unknown map '" + b_op + "'");
        ModuleSpec m = ws.module_spec(*md);
        Scalar lam = detail::parse_scalar_string(ws.field, b_lambda);
        gate_reports = check_weighted_rrb(m.base, m, op->map, lam, op->name);
        if (!all_hold(gate_reports) && !b_force) {
          o.reports(gate_reports, ws.source_label);
          err << "operator fails the weighted Rota-Baxter laws; "
                 "pass --force to construct anyway\n";
          return 1;
        }
        PostStructure p =
            induced_post_mp(m.base, m, op->map, lam, /*enforce=*/false);
        std::string name = b_name.empty() ? md->name + "_post" : b_name;
        built = p.as_algebra(name);
      } else {  // subadjacent
        const AlgebraSpec* a = ws.find_algebra(b_post);
        if (!a) throw Error("unknown algebra '" + b_post + "'");
        std::string name = b_name.empty() ? a->name + "_sub" : b_name;
        if (a->kind == Kind::post_malcev) {
          built = subadjacent_malcev(*a->bracket, *a->diamond, name);
        } else if (a->kind == Kind::post_malcev_poisson) {
          PostStructure p(a->field, a->dim);
          p.bracket = *a->bracket;
          p.diamond = *a->diamond;
          p.dot = *a->dot;
          p.triangle = *a->triangle;
          built = subadjacent_mp(p, name);
        } else {
          throw Error("'" + b_post + "' is not a post structure");
        }
      }

      std::string dsl_text = write_workspace_algebra(built);
      if (!b_out.empty()) {
        std::ofstream f(b_out, std::ios::binary);
        if (!f) throw Error("cannot write file: " + b_out);
        f << dsl_text;
      }
      if (o.format == ReportFormat::json) {
        Json j;
        j["command"] = "build";
        j["name"] = built.name;
        j["kind"] = kind_name(built.kind);
        j["dim"] = built.dim;
        j["dsl"] = dsl_text;
        if (!gate_reports.empty()) {
          j["gate"] = Json::array();
          for (const Report& r : gate_reports)
            j["gate"].push_back(report_to_json(r, verbose));
        }
        out << j.dump(2) << "\n";
      } else if (b_out.empty()) {
        out << dsl_text;
      } else {
        out << "wrote " << built.name << " (" << kind_name(built.kind)
            << ", dim " << built.dim << ") to " << b_out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_search)) {
      Workspace ws = parse_workspace(detail::read_file(s_file), s_file);
      FieldSpec field = ws.field;
      if (s_field != 0) field = FieldSpec::prime(s_field);
      if (!field.is_rational() && !ws.field.is_rational() &&
          field != ws.field)
        throw Error("--field conflicts with the workspace field");
      SearchLimits lim;
      lim.limit = s_limit;
      lim.box = s_box;
      Json j;
      long found = 0;
      std::ostringstream human;
      if (c_search->got_subcommand(c_sybe)) {
        const AlgebraSpec* a = ws.find_algebra(s_target);
        if (!a) throw Error("unknown algebra '" + s_target + "'");
        AlgebraSpec alg =
            field == ws.field ? *a : detail::reduce_algebra(*a, field);
        auto sols = search_ybe(alg, s_skew, lim);
        found = static_cast<long>(sols.size());
        j["command"] = "search-ybe";
        j["solutions"] = Json::array();
        for (const auto& r : sols) {
          j["solutions"].push_back(r.str());
          human << "r = " << r.str() << "\n";
        }
      } else {
        const ModuleDecl* md = ws.find_module(s_target);
        if (!md) throw Error("unknown module '" + s_target + "'");
        ModuleSpec m = ws.module_spec(*md);
        if (field != ws.field) m = detail::reduce_module(m, field);
        Scalar lam = detail::parse_scalar_string(field, s_lambda);
        auto sols = search_rb(m.base, m, lam, lim);
        found = static_cast<long>(sols.size());
        j["command"] = "search-rb";
        j["solutions"] = Json::array();
        for (const auto& R : sols) {
          j["solutions"].push_back(detail::map_str(R));
          human << "R: " << detail::map_str(R) << "\n";
        }
      }
      if (o.format == ReportFormat::json) {
        j["target"] = s_target;
        j["field"] = field.str();
        j["count"] = found;
        out << j.dump(2) << "\n";
      } else {
        out << human.str() << found << " solution(s) found over "
            << field.str() << "\n";
      }
      return 0;
    }

    // harness equivalence
    {
      Workspace ws = parse_workspace(detail::read_file(h_file), h_file);
      const AlgebraSpec* a = ws.find_algebra(h_algebra);
      if (!a) throw Error("unknown algebra '" + h_algebra + "'");
      if (a->kind != Kind::malcev && a->kind != Kind::malcev_poisson)
        throw Error("harness needs a malcev or malcev-poisson algebra");
      bool with_product = a->kind == Kind::malcev_poisson;

      if (!h_cobracket.empty()) {
        const CoDecl* del = ws.find_co(h_cobracket);
        if (!del || !del->is_cobracket)
          throw Error("'" + h_cobracket + "' is not a cobracket");
        const CoDecl* Dl = nullptr;
        if (with_product) {
          if (h_coproduct.empty())
            throw Error("a malcev-poisson harness needs --coproduct too");
          Dl = ws.find_co(h_coproduct);
          if (!Dl || Dl->is_cobracket)
            throw Error("'" + h_coproduct + "' is not a coproduct");
        }
        HarnessResult res =
            equivalence_harness(*a, Dl ? &Dl->co : nullptr, del->co);
        if (o.format == ReportFormat::json) {
          Json j;
          j["command"] = "harness-equivalence";
          j["algebra"] = a->name;
          j["bialgebra"] = res.bialgebra;
          j["matched_pair"] = res.matched_pair;
          j["manin_triple"] = res.manin_triple;
          j["agree"] = res.agree();
          j["bialgebra_reports"] =
              reports_to_json(res.bialgebra_reports, ws.source_label,
                              verbose)["results"];
          j["matched_reports"] =
              reports_to_json(res.matched_reports, ws.source_label,
                              verbose)["results"];
          j["manin_reports"] = reports_to_json(res.manin_reports,
                                               ws.source_label,
                                               verbose)["results"];
          out << j.dump(2) << "\n";
        } else {
          out << "bialgebra:    " << (res.bialgebra ? "true" : "false")
              << "\n";
          out << "matched pair: " << (res.matched_pair ? "true" : "false")
              << "\n";
          out << "manin triple: " << (res.manin_triple ? "true" : "false")
              << "\n";
          out << (res.agree() ? "predicates agree"
                              : "DISAGREEMENT between predicates")
              << "\n";
        }
        return res.agree() ? 0 : 1;
      }

      std::mt19937_64 rng(h_seed);
      long agreements = 0;
      Json first_bad = nullptr;
      for (long t = 0; t < h_trials; ++t) {
        Comultiplication delta =
            detail::random_comult(a->field, a->dim, rng);
        std::optional<Comultiplication> Delta;
        if (with_product)
          Delta = detail::random_comult(a->field, a->dim, rng);
        HarnessResult res =
            equivalence_harness(*a, Delta ? &*Delta : nullptr, delta);
        if (res.agree()) {
          ++agreements;
        } else if (first_bad.is_null()) {
          first_bad = Json{{"trial", t},
                           {"bialgebra", res.bialgebra},
                           {"matched_pair", res.matched_pair},
                           {"manin_triple", res.manin_triple}};
        }
      }
      bool ok = agreements == h_trials;
      if (o.format == ReportFormat::json) {
        Json j;
        j["command"] = "harness-equivalence";
        j["algebra"] = a->name;
        j["trials"] = h_trials;
        j["seed"] = h_seed;
        j["agreements"] = agreements;
        j["first_disagreement"] = first_bad;
        j["ok"] = ok;
        out << j.dump(2) << "\n";
      } else {
        out << "equivalence harness on " << a->name << ": " << agreements
            << "/" << h_trials << " trials agree\n";
        if (!ok)
          out << "first disagreement: " << first_bad.dump() << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mpk::cli
