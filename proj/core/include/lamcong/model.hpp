#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lamcong/term.hpp"

namespace lamcong::model {

// Formulas are interned: structurally equal formulas share one id, so formula
// equality is id equality and canonical sets are sorted id vectors.
using FormulaId = std::int32_t;

// Formula pool. Atoms are variables; compounds pair a canonically ordered
// finite antecedent set with a consequent ("{f1,...,fn} |- f").
class FormulaArena {
 public:
  static FormulaArena& instance();

  FormulaId atom(VarId v);
  FormulaId compound(std::vector<FormulaId> antecedent, FormulaId consequent);

  bool is_atom(FormulaId f) const;
  VarId atom_var(FormulaId f) const;
  const std::vector<FormulaId>& antecedent(FormulaId f) const;
  FormulaId consequent(FormulaId f) const;

  // rank(atom) = 1; rank(F |- f) = 1 + max over ranks in F u {f}.
  int rank(FormulaId f) const;

  // Strict total order on formula structure (atoms first, by variable index).
  bool less(FormulaId a, FormulaId b) const;

  void reset();

  struct Impl;

 private:
  FormulaArena() = default;
  Impl& impl() const;
};

// Canonically sorted, deduplicated set of formulas.
using FormulaSet = std::vector<FormulaId>;

FormulaSet make_set(std::vector<FormulaId> fs);
bool set_contains(const FormulaSet& s, FormulaId f);
bool subset(const FormulaSet& a, const FormulaSet& b);
FormulaSet set_union(const FormulaSet& a, const FormulaSet& b);

std::string formula_to_string(FormulaId f);
// atom = variable name; compound = "{f1,...,fn} |- f" ("{}" when empty).
FormulaId parse_formula(std::string_view text);

// Total map from variables to finite formula sets with finite support and
// empty-set default. Entries with empty sets are dropped, so equality on the
// support map is equality of the functions.
struct Environment {
  std::map<VarId, FormulaSet> support;

  const FormulaSet& lookup(VarId v) const;
  friend bool operator==(const Environment&, const Environment&) = default;
};

// Functional update {F/x}σ.
Environment update(const Environment& sigma, VarId x, FormulaSet fs);

// {"x": ["y", "{} |- x"], ...}
Environment environment_from_json(const std::string& json_text);
std::string environment_to_json(const Environment& sigma);

enum class Membership3 { Member, NonMember, Unknown };

std::string_view membership_name(Membership3 m);

// Bounds for the application-case searches: candidate antecedents are drawn
// from formulas of rank < max_rank with at most max_width elements.
struct SearchBudget {
  int max_rank = 3;
  int max_width = 2;
};

// All formulas over the alphabet with rank <= max_rank and antecedent sets of
// at most max_width elements, sorted structurally.
std::vector<FormulaId> formula_universe(const std::vector<VarId>& alphabet, int max_rank,
                                        int max_width);

struct Enumeration {
  FormulaSet members;
  bool exact;  // true iff no membership query came back Unknown
};

struct RefutationResult {
  bool separated = false;
  FormulaId witness = -1;
  Environment env;
};

struct SoundnessReport {
  struct Discrepancy {
    TermPtr lhs, rhs;
    FormulaId formula;
    Environment env;
    Membership3 left, right;
  };
  int instances = 0;
  long checked = 0;
  long unknowns = 0;
  std::vector<Discrepancy> discrepancies;
};

// Membership oracle for the interpretation of terms as formula sets:
//   I(x, σ)    = σ(x)
//   I(A B, σ)  = { f | exists finite F ⊆ I(B, σ) with F |- f in I(A, σ) }
//   I(λx.A, σ) = { F |- m | m in I(A, {F/x}σ) } u {x}
// Answers are three-valued: Member and NonMember are definitive (stable under
// any larger budget); Unknown only arises when an application-case search is
// cut off. Application-free terms, variable arguments and variable functions
// are decided exactly. Definitive results are memoized per (term, formula,
// environment fingerprint).
class Oracle {
 public:
  explicit Oracle(SearchBudget budget) : budget_(budget) {}

  Membership3 member(FormulaId f, const TermPtr& a, const Environment& sigma);

  Enumeration enumerate(const TermPtr& a, const Environment& sigma,
                        const std::vector<VarId>& alphabet, int rank_bound);

  RefutationResult refute(const TermPtr& a, const TermPtr& b,
                          std::span<const Environment> samples);

  const SearchBudget& budget() const { return budget_; }

 private:
  Membership3 member_impl(FormulaId f, const TermPtr& a, const Environment& sigma, int rem);

  SearchBudget budget_;
  std::map<std::string, Membership3> cache_;
  std::map<std::string, std::vector<FormulaId>> universe_cache_;
  std::vector<VarId> universe_alphabet_;
};

// Free-function wrappers that build a one-shot oracle.
Membership3 member(FormulaId f, const TermPtr& a, const Environment& sigma, SearchBudget budget);
Enumeration enumerate(const TermPtr& a, const Environment& sigma,
                      const std::vector<VarId>& alphabet, int rank_bound, SearchBudget budget);
RefutationResult refute(const TermPtr& a, const TermPtr& b, std::span<const Environment> samples,
                        SearchBudget budget);

enum class BetaRule { Beta1, Beta2, Beta3, Beta4, Beta5 };
std::optional<BetaRule> beta_rule_from(std::string_view s);
std::string_view beta_rule_name(BetaRule r);

// Deterministic samplers used by the soundness checks.
Environment sample_environment(std::mt19937_64& rng, const std::vector<VarId>& alphabet,
                               int max_rank, int max_width);
TermPtr sample_application_free_term(std::mt19937_64& rng, const std::vector<VarId>& alphabet,
                                     int max_depth);
// lhs/rhs instance of the rule over application-free pieces; for the
// nested-binder rule the argument is resampled until the side condition
// y in F(D) holds.
std::pair<TermPtr, TermPtr> sample_beta_instance(BetaRule rule, std::mt19937_64& rng,
                                                 const std::vector<VarId>& alphabet);

// Compares definitive memberships of the two sides of each instance over the
// rank-bounded universe. Any discrepancy is an engine bug.
SoundnessReport check_beta_soundness(BetaRule rule, int instances, std::uint64_t seed,
                                     const std::vector<VarId>& alphabet, int rank_bound,
                                     SearchBudget budget);

}  // namespace lamcong::model
