#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zf/linalg.hpp"
#include "zf/mpoly.hpp"

namespace zf {

struct MWTerm {
  long coeff = 1;
  std::string symbol;
  friend bool operator==(const MWTerm&, const MWTerm&) = default;
};

/// Integer combination of basis symbols, e.g. "[2]s1 - s2".
struct MWWord {
  std::vector<MWTerm> terms;
  friend bool operator==(const MWWord&, const MWWord&) = default;
  std::string str() const;
};

MWWord parse_mw_word(std::string_view text, std::size_t line = 1, std::size_t column0 = 1);

struct SectionDecl {
  std::string name;
  MPoly line{3};
  int sign = 1;
  friend bool operator==(const SectionDecl&, const SectionDecl&) = default;
};

/// C(r, word) when `equation` is empty, otherwise an explicit conic.
struct ConicDecl {
  std::string name;
  MPoly r{1};  ///< in t
  MWWord word;
  std::optional<MPoly> equation;
  friend bool operator==(const ConicDecl&, const ConicDecl&) = default;
};

/// C(r, word) with r in (a, t); `a` is the free parameter.
struct FamilyDecl {
  std::string name;
  MPoly r{2};
  MWWord word;
  friend bool operator==(const FamilyDecl&, const FamilyDecl&) = default;
};

struct ArrangementDecl {
  std::string name;
  std::vector<std::string> members;
  friend bool operator==(const ArrangementDecl&, const ArrangementDecl&) = default;
};

struct Scenario {
  std::string name;
  std::optional<std::string> builtin_quartic;
  MPoly quartic{3};
  RatVector base{0, 1, 0};
  std::optional<RatVector> second_base;
  std::vector<SectionDecl> sections;
  std::optional<Rational> expect_det;
  std::optional<RatMatrix> expect_gram;
  std::vector<ConicDecl> conics;
  std::vector<FamilyDecl> families;
  std::vector<ArrangementDecl> arrangements;
  std::vector<std::string> checks;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline const std::vector<std::string> kFamilyParamNames{"a", "t"};

Scenario parse_scenario(std::string_view text);
std::string print_scenario(const Scenario& s);
/// FNV-1a of the canonical printed form.
std::uint64_t scenario_hash(const Scenario& s);

/// Quartic forms known by name ("two-nodal-shioda-usui", "tacnodal-shioda-usui").
MPoly builtin_quartic(const std::string& name);
std::vector<std::string> builtin_quartic_names();

/// Scenario text for a built-in name.
std::string builtin_scenario_text(const std::string& name);
std::vector<std::string> builtin_scenario_names();
Scenario builtin_scenario(const std::string& name);

inline const std::vector<std::string> kCheckNames{"verify-gram",   "construct-conics",   "verify-contact",
                                                  "classify-splitting", "nplet-report", "invariance",
                                                  "sweep"};

}  // namespace zf
