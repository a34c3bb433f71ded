#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lamcong/term.hpp"

namespace lamcong {

// A set of variables that is either a finite set or the complement of one.
// The basis is kept sorted and deduplicated, so equality is structural.
class VarSet {
 public:
  enum class Polarity { Finite, Cofinite };

  static VarSet empty() { return VarSet(Polarity::Finite, {}); }
  static VarSet all() { return VarSet(Polarity::Cofinite, {}); }
  static VarSet finite(std::vector<VarId> members);
  static VarSet cofinite(std::vector<VarId> excluded);

  Polarity polarity() const { return polarity_; }
  bool is_cofinite() const { return polarity_ == Polarity::Cofinite; }
  const std::vector<VarId>& basis() const { return basis_; }

  bool contains(VarId v) const;
  bool is_all() const { return is_cofinite() && basis_.empty(); }
  bool is_empty() const { return !is_cofinite() && basis_.empty(); }

  VarSet intersect(const VarSet& other) const;
  VarSet unite(const VarSet& other) const;
  VarSet complement() const;
  VarSet with(VarId v) const;
  VarSet without(VarId v) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

  // "{x,y}" for finite sets, "V\{x,y}" for cofinite ones.
  std::string to_string() const;

 private:
  VarSet(Polarity p, std::vector<VarId> basis) : polarity_(p), basis_(std::move(basis)) {}

  Polarity polarity_;
  std::vector<VarId> basis_;
};

// The cofinite set of variables that do not occur free in t:
//   F(x) = V \ {x};  F(B C) = F(B) n F(C);  F(λx.B) = F(B) u {x}.
VarSet nonfree(const TermPtr& t);

// The cofinite set of variables that do not occur bound in t:
//   B(x) = V;  B(B C) = B(B) n B(C);  B(λx.B) = B(B) \ {x}.
VarSet nonbound(const TermPtr& t);

// The finite sets of variables occurring free / bound in t (basis views of the
// two sets above).
std::vector<VarId> free_vars(const TermPtr& t);
std::vector<VarId> bound_vars(const TermPtr& t);

// True iff B(a) u F(d) = V: the bound variables of `a` and the free variables
// of `d` are disjoint.
bool proviso_beta(const TermPtr& a, const TermPtr& d);

// Least-index variable lying in every set of want_in and outside avoid, minting
// a fresh name when no interned variable qualifies. Deterministic for a fixed
// interner state. Throws InternalError when the constraint set is empty (only
// possible with a finite-polarity intersection).
VarId pick_fresh(const VarSet& avoid, std::span<const VarSet> want_in);
VarId pick_fresh(const VarSet& avoid, std::initializer_list<VarSet> want_in);
VarId pick_fresh(std::span<const VarSet> want_in);
VarId pick_fresh(std::initializer_list<VarSet> want_in);

}  // namespace lamcong
