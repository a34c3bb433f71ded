#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamcong/subst.hpp"
#include "lamcong/term.hpp"
#include "lamcong/varset.hpp"

namespace lamcong {

struct Derivation;  // derivation.hpp

// Which conditions the rewrite rules may use. Prelambda has only the five
// beta rules; Lambda adds alpha-identification; Extensional adds eta.
enum class TheoryMode { Prelambda, Lambda, Extensional };

std::string_view theory_mode_name(TheoryMode mode);

struct ReduceOptions {
  // Stronger sufficient side condition for the nested-binder beta rule: test
  // the inner binder against the prelambda normal form of the argument rather
  // than the argument itself.
  bool prenormalize_arg = false;
  std::size_t prenormalize_fuel = 256;
};

// One rewrite step: the whole term after the step, the rule that fired and
// the redex position as a Dewey path ("ε" for the root, "0.1" for
// fun-then-arg descent).
struct Step {
  TermPtr term;
  std::string rule;
  std::string path;
};

// Leftmost-outermost application of the first rule of `mode` that fires,
// or nullopt when the term is normal for that mode.
std::optional<Step> reduce_step(const TermPtr& t, TheoryMode mode, const ReduceOptions& opts = {});

struct NormalizationResult {
  enum class Status { Normal, FuelExhausted };
  Status status;
  TermPtr term;
  std::size_t steps = 0;
  std::vector<Step> trace;  // filled only when requested

  bool normal() const { return status == Status::Normal; }
};

NormalizationResult normalize(const TermPtr& t, TheoryMode mode, std::size_t fuel,
                              bool want_trace = false, const ReduceOptions& opts = {});

// Canonical representative of the alpha-class of t: binders renamed to v0,
// v1, ... in traversal order (skipping names that occur free in t), free
// variables untouched. Two terms are alpha-identifiable iff their canonical
// forms are word-equal.
TermPtr alpha_canonical(const TermPtr& t);

bool alpha_eq(const TermPtr& a, const TermPtr& b);

// Outcome of a sound but incomplete equivalence check. Equal is only reported
// with a checkable justification (both sides rewrote to the same canonical
// form). DistinctNormalForms is heuristic: it assumes distinct normal forms
// separate terms, which holds only if the rewrite system is confluent.
struct EqVerdict {
  enum class Kind { Equal, DistinctNormalForms, Unknown };
  Kind kind;
  std::string reason;                          // for Unknown
  std::shared_ptr<const Derivation> witness;   // optional proof, when one was built

  bool equal() const { return kind == Kind::Equal; }
};

EqVerdict equivalent(const TermPtr& a, const TermPtr& b, TheoryMode mode, std::size_t fuel,
                     const ReduceOptions& opts = {});

// Does [λx.a]z rewrite to a for some variable z distinct from x? Fast path:
// x in F(a). Otherwise runs the equivalence check against a fresh z.
struct IndependenceResult {
  enum class Kind { Yes, Unknown };
  Kind kind;
  std::optional<VarId> witness;  // the z used
  bool via_fast_path = false;

  bool yes() const { return kind == Kind::Yes; }
};

IndependenceResult independent(VarId x, const TermPtr& a, TheoryMode mode, std::size_t fuel);

// Contracts the leftmost-outermost redex [λx.A]D of the classical system:
// direct substitution when B(A) u F(D) = V, otherwise after renaming the
// binders of A away from the free variables of D.
std::optional<Step> traditional_beta_step(const TermPtr& t);

NormalizationResult traditional_normalize(const TermPtr& t, std::size_t fuel,
                                          bool want_trace = false);

inline constexpr std::size_t kDefaultFuel = 10000;

}  // namespace lamcong
