#pragma once

#include "lamcong/term.hpp"
#include "lamcong/varset.hpp"

namespace lamcong {

// Simple substitution ⟨d/x⟩(a): replaces free and bound occurrences of x alike
// and never renames, so it can capture. Total and purely structural:
//   ⟨d/x⟩(x) = d            ⟨d/x⟩(y) = y (x != y)
//   ⟨d/x⟩(B C) = ⟨d/x⟩(B) ⟨d/x⟩(C)
//   ⟨d/x⟩(λx.B) = λx.B      ⟨d/x⟩(λy.B) = λy.⟨d/x⟩(B) (x != y)
TermPtr subst_simple(const TermPtr& d, VarId x, const TermPtr& a);

// Capture-free substitution {d/x}(a): keeps λy bodies intact when safe and
// renames the binder to the least-index variable not occurring free in the
// body or in d when y is free in d. Recursion is well-founded by term size;
// the renaming step checks size preservation and throws InternalError if it
// ever fails to hold.
TermPtr subst_capture_free(const TermPtr& d, VarId x, const TermPtr& a);

// Renames binders of `a` bottom-up until no binder collides with a free
// variable of `d` (or with a fresh name already chosen), yielding a term g
// with B(g) u F(d) = V that is alpha-equal to `a`.
TermPtr freshen(const TermPtr& a, const TermPtr& d);

}  // namespace lamcong
