#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamcong/calculus.hpp"
#include "lamcong/term.hpp"

namespace lamcong {

// Proof rules over judgments A ~ B. The structural rules are r, s, t, ell and
// app; beta1..beta5, alpha_e and eta_e are the substitution-free conditions;
// beta, alpha and eta are the classical substitution-based ones.
enum class RuleName {
  R,
  S,
  T,
  Ell,
  App,
  Beta1,
  Beta2,
  Beta3,
  Beta4,
  Beta5,
  AlphaE,
  EtaE,
  Beta,
  Alpha,
  Eta,
};

std::string_view rule_name_string(RuleName r);
std::optional<RuleName> rule_name_from(std::string_view s);
std::size_t rule_arity(RuleName r);

struct Judgment {
  TermPtr lhs;
  TermPtr rhs;
};

// An explicit proof tree. Each node carries the full instantiation of its
// rule's schematic names (x, y, A, B, C, D); nothing is inferred.
struct Derivation {
  RuleName rule;
  Judgment conclusion;
  std::map<std::string, TermPtr> bind;
  std::vector<Derivation> premises;
};

// Rule sets a derivation can be checked against. Extensional admits alpha_e
// as a derived rule; the two Theory modes use the classical beta/alpha/eta
// conditions instead of the substitution-free ones.
enum class CheckMode { Prelambda, Lambda, Extensional, TheoryLambda, TheoryExtensional };

CheckMode check_mode_of(TheoryMode mode);
std::string_view check_mode_name(CheckMode mode);
std::optional<CheckMode> check_mode_from(std::string_view s);

struct Verdict {
  bool valid;
  std::string node_path;  // premise-index path of the first failing node; "ε" = root
  std::string reason;
};

// Checks every node: rule membership in the mode, premise arity, presence and
// sort of bindings, side conditions, and word equality of the conclusion and
// premises against the rule schema.
Verdict validate(const Derivation& d, CheckMode mode);

// JSON serialization. A node is
//   {"rule": "...", "conclusion": {"lhs": "...", "rhs": "..."},
//    "bind": {"x": "...", ...}, "premises": [...]}
// with terms in the backslash syntax. Serialization is canonical, so
// save -> load -> save is byte-identical.
std::string derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const std::string& json_text);
void save_derivation(const Derivation& d, const std::filesystem::path& file);
Derivation load_derivation(const std::filesystem::path& file);

bool derivation_eq(const Derivation& a, const Derivation& b);

}  // namespace lamcong
