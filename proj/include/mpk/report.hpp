#pragma once

// Law identifiers (the stable public contract used by the CLI and the report
// format) and check reports with first-counterexample recording.

#include <optional>
#include <string>
#include <vector>

#include "mpk/field.hpp"

namespace mpk {

enum class LawId {
  COMM, ASSOC, ANTI, JACOBI, MALCEV, SAGLE, LEIBNIZ,
  ASSOC_REP, MALCEV_REP, MP_REP_1, MP_REP_2,
  MATCHED_A1, MATCHED_A2,
  MATCHED_M1, MATCHED_M2, MATCHED_M3, MATCHED_M4, MATCHED_M5, MATCHED_M6,
  MATCHED_MP1, MATCHED_MP2, MATCHED_MP3, MATCHED_MP4,
  FORM_INV_A, FORM_INV_M,
  CO_COCOMM, CO_COASSOC, CO_ANTI, CO_MALCEV, CO_MP,
  BI_INF, BI_MALCEV_1, BI_MALCEV_2, BI_MP_1, BI_MP_2,
  MOD_ASSOC, MOD_MALCEV_1, MOD_MALCEV_2, MOD_MALCEV_3, MOD_MP_1, MOD_MP_2,
  DENDRI_1, DENDRI_2,
  POST_M1, POST_M2, POST_M3, POST_M4,
  POST_MP1, POST_MP2, POST_MP3, POST_MP4,
  YBE_C, YBE_M,
  RRB_A, RRB_M, RB_A, RB_M,
};

inline const std::vector<std::pair<LawId, const char*>>& law_table() {
  static const std::vector<std::pair<LawId, const char*>> t = {
      {LawId::COMM, "COMM"}, {LawId::ASSOC, "ASSOC"}, {LawId::ANTI, "ANTI"},
      {LawId::JACOBI, "JACOBI"}, {LawId::MALCEV, "MALCEV"},
      {LawId::SAGLE, "SAGLE"}, {LawId::LEIBNIZ, "LEIBNIZ"},
      {LawId::ASSOC_REP, "ASSOC_REP"}, {LawId::MALCEV_REP, "MALCEV_REP"},
      {LawId::MP_REP_1, "MP_REP_1"}, {LawId::MP_REP_2, "MP_REP_2"},
      {LawId::MATCHED_A1, "MATCHED_A1"}, {LawId::MATCHED_A2, "MATCHED_A2"},
      {LawId::MATCHED_M1, "MATCHED_M1"}, {LawId::MATCHED_M2, "MATCHED_M2"},
      {LawId::MATCHED_M3, "MATCHED_M3"}, {LawId::MATCHED_M4, "MATCHED_M4"},
      {LawId::MATCHED_M5, "MATCHED_M5"}, {LawId::MATCHED_M6, "MATCHED_M6"},
      {LawId::MATCHED_MP1, "MATCHED_MP1"}, {LawId::MATCHED_MP2, "MATCHED_MP2"},
      {LawId::MATCHED_MP3, "MATCHED_MP3"}, {LawId::MATCHED_MP4, "MATCHED_MP4"},
      {LawId::FORM_INV_A, "FORM_INV_A"}, {LawId::FORM_INV_M, "FORM_INV_M"},
      {LawId::CO_COCOMM, "CO_COCOMM"}, {LawId::CO_COASSOC, "CO_COASSOC"},
      {LawId::CO_ANTI, "CO_ANTI"}, {LawId::CO_MALCEV, "CO_MALCEV"},
      {LawId::CO_MP, "CO_MP"},
      {LawId::BI_INF, "BI_INF"}, {LawId::BI_MALCEV_1, "BI_MALCEV_1"},
      {LawId::BI_MALCEV_2, "BI_MALCEV_2"}, {LawId::BI_MP_1, "BI_MP_1"},
      {LawId::BI_MP_2, "BI_MP_2"},
      {LawId::MOD_ASSOC, "MOD_ASSOC"},
      {LawId::MOD_MALCEV_1, "MOD_MALCEV_1"},
      {LawId::MOD_MALCEV_2, "MOD_MALCEV_2"},
      {LawId::MOD_MALCEV_3, "MOD_MALCEV_3"},
      {LawId::MOD_MP_1, "MOD_MP_1"}, {LawId::MOD_MP_2, "MOD_MP_2"},
      {LawId::DENDRI_1, "DENDRI_1"}, {LawId::DENDRI_2, "DENDRI_2"},
      {LawId::POST_M1, "POST_M1"}, {LawId::POST_M2, "POST_M2"},
      {LawId::POST_M3, "POST_M3"}, {LawId::POST_M4, "POST_M4"},
      {LawId::POST_MP1, "POST_MP1"}, {LawId::POST_MP2, "POST_MP2"},
      {LawId::POST_MP3, "POST_MP3"}, {LawId::POST_MP4, "POST_MP4"},
      {LawId::YBE_C, "YBE_C"}, {LawId::YBE_M, "YBE_M"},
      {LawId::RRB_A, "RRB_A"}, {LawId::RRB_M, "RRB_M"},
      {LawId::RB_A, "RB_A"}, {LawId::RB_M, "RB_M"},
  };
  return t;
}

inline std::string law_name(LawId id) {
  for (const auto& [law, name] : law_table())
    if (law == id) return name;
  throw Error("unknown law id");
}

inline std::optional<LawId> law_from_name(const std::string& name) {
  for (const auto& [law, n] : law_table())
    if (name == n) return law;
  return std::nullopt;
}

// First failing basis tuple of a law check; indices are 1-based and both
// evaluated sides are rendered in basis notation.
struct Counterexample {
  std::vector<int> indices;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string law;     // catalog law name, or an auxiliary check id
  std::string target;  // which entity / which slot of a construction
  bool holds = true;
  std::optional<Counterexample> counterexample;
  long checked_tuples = 0;
  long micros = 0;
};

inline bool all_hold(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.holds) return false;
  return true;
}

}  // namespace mpk
