#pragma once

#include <string>

#include "hetcat/fincat.hpp"

namespace testutil {

// The chain 0 <= 1 <= 2 spelled out by hand, morphisms ordered like
// poset_chain's output so structural comparisons line up.
inline hetcat::CategorySpec chain3_spec() {
  hetcat::CategorySpec s;
  s.name = "C3";
  s.objects = {"0", "1", "2"};
  s.morphisms = {{"id_0", "0", "0"},   {"id_1", "1", "1"},   {"id_2", "2", "2"},
                 {"le_0_1", "0", "1"}, {"le_0_2", "0", "2"}, {"le_1_2", "1", "2"}};
  s.identities = {{"0", "id_0"}, {"1", "id_1"}, {"2", "id_2"}};
  for (const auto& m : s.morphisms) {
    s.compose[{m.name, "id_" + m.dom}] = m.name;
    s.compose[{"id_" + m.cod, m.name}] = m.name;
  }
  s.compose[{"le_1_2", "le_0_1"}] = "le_0_2";
  return s;
}

// Extracts the failure message of a thrown exception, empty if none thrown.
template <typename E, typename F>
std::string thrown_message(F&& fn) {
  try {
    fn();
  } catch (const E& e) {
    return e.what();
  }
  return "";
}

inline bool mentions(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

inline bool report_mentions(const hetcat::ValidationReport& report, const std::string& law) {
  for (const auto& v : report.violations) {
    if (v.law.find(law) != std::string::npos) return true;
  }
  return false;
}

}  // namespace testutil
