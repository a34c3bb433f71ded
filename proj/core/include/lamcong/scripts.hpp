#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamcong/derivation.hpp"

namespace lamcong {

// Inputs for a parametric derivation builder: schematic terms/variables plus
// any premise derivations the construction needs. When a required premise is
// omitted, the builder tries to construct it with the non-free-variable
// witness builder (script "propfree") and raises BindingError if it cannot.
struct ScriptArgs {
  std::map<std::string, TermPtr> bind;
  std::vector<Derivation> premises;
};

// Builds the named derivation. Throws BindingError when a binding is missing,
// ill-sorted, or violates a side condition of the construction.
Derivation script(std::string_view name, const ScriptArgs& args);

// The rule set the named script is designed to validate under.
CheckMode script_mode(std::string_view name);

std::vector<std::string> script_names();

// is the judgment [λx.a]z ~ a derivable from the beta rules alone?
// Constructive witness used as the default premise generator: requires
// x in F(a), z in B(a) and z != x.
Derivation independence_witness(VarId x, const TermPtr& a, VarId z);

}  // namespace lamcong
