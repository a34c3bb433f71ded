#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamcong/errors.hpp"

namespace lamcong {

// An interned variable. Two VarIds are equal iff their interned indices are
// equal; the index is the interning order and doubles as the deterministic
// variable ordering used by capture-free substitution and fresh picking.
class VarId {
 public:
  constexpr explicit VarId(std::uint32_t index) : index_(index) {}
  constexpr std::uint32_t index() const { return index_; }
  friend constexpr auto operator<=>(VarId, VarId) = default;

 private:
  std::uint32_t index_;
};

// Process-wide variable pool. Insertions are serialized; the pool is unbounded
// (fresh names can always be minted).
class Interner {
 public:
  static Interner& instance();

  VarId intern(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;
  std::string name(VarId v) const;
  std::uint32_t size() const;

  // Interns the next unused name of the shape v0, v1, ...
  VarId mint();

  // Drops every interned variable. Only for test setup; any VarId obtained
  // before the reset is invalidated.
  void reset();

 private:
  Interner() = default;
  struct Impl;
  Impl& impl() const;
};

// Shorthand for Interner::instance().intern(name).
VarId var(std::string_view name);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term tree: variable, application or abstraction. Shared freely
// between threads; all operations build new nodes.
struct Term {
  enum class Kind { Var, App, Abs };

  Kind kind;
  VarId v;        // Var payload / Abs binder; unused for App
  TermPtr left;   // App function / Abs body
  TermPtr right;  // App argument

  bool is_var() const { return kind == Kind::Var; }
  bool is_app() const { return kind == Kind::App; }
  bool is_abs() const { return kind == Kind::Abs; }
};

TermPtr mk_var(VarId v);
TermPtr mk_app(TermPtr fun, TermPtr arg);
TermPtr mk_abs(VarId binder, TermPtr body);

// Word equality: structurally identical including binder names. Deliberately
// not alpha-invariant.
bool term_eq(const TermPtr& a, const TermPtr& b);

// Number of constructors in t.
std::size_t term_size(const TermPtr& t);

enum class PrintStyle {
  FullBrackets,    // "[λx [x y]]"
  Minimal,         // "\x.x y"
  MinimalUnicode,  // "λx.x y"
};

std::string print_term(const TermPtr& t, PrintStyle style = PrintStyle::Minimal);

// Grammar:
//   term := var | "(" term ")" | "[" term "]" | ("\"|"λ") var "."? term
//         | term term                      (left-assoc, binds tighter than an
//                                           abstraction body)
//   var  := letter (letter|digit|"_"|"'")*
// "λ" and "\" are interchangeable; the dot after the binder is optional, so
// both "[λx x]" and "\x.x" denote the same abstraction.
// Throws SyntaxError on malformed input.
TermPtr parse_term(std::string_view text);

}  // namespace lamcong
