#include "lamcong/scripts.hpp"

#include <functional>

#include "lamcong/subst.hpp"
#include "lamcong/varset.hpp"

namespace lamcong {

namespace {

TermPtr vt(VarId v) { return mk_var(v); }
TermPtr ab(VarId x, TermPtr b) { return mk_abs(x, std::move(b)); }
TermPtr ap(TermPtr f, TermPtr a) { return mk_app(std::move(f), std::move(a)); }
TermPtr redex(VarId x, TermPtr body, TermPtr arg) {
  return ap(ab(x, std::move(body)), std::move(arg));
}

// Node builders. Each fills the conclusion and the full instantiation map.

Derivation d_refl(TermPtr a) {
  Derivation d;
  d.rule = RuleName::R;
  d.bind = {{"A", a}};
  d.conclusion = {a, a};
  return d;
}

Derivation d_sym(Derivation p) {
  Derivation d;
  d.rule = RuleName::S;
  d.bind = {{"A", p.conclusion.lhs}, {"B", p.conclusion.rhs}};
  d.conclusion = {p.conclusion.rhs, p.conclusion.lhs};
  d.premises.push_back(std::move(p));
  return d;
}

Derivation d_trans(Derivation p, Derivation q) {
  if (!term_eq(p.conclusion.rhs, q.conclusion.lhs))
    throw BindingError("trans: premises do not chain");
  Derivation d;
  d.rule = RuleName::T;
  d.bind = {{"A", p.conclusion.lhs}, {"B", p.conclusion.rhs}, {"C", q.conclusion.rhs}};
  d.conclusion = {p.conclusion.lhs, q.conclusion.rhs};
  d.premises.push_back(std::move(p));
  d.premises.push_back(std::move(q));
  return d;
}

Derivation d_chain(std::vector<Derivation> steps) {
  if (steps.empty()) throw BindingError("chain: no steps");
  Derivation acc = std::move(steps.front());
  for (std::size_t i = 1; i < steps.size(); ++i) acc = d_trans(std::move(acc), std::move(steps[i]));
  return acc;
}

Derivation d_ell(VarId x, Derivation p) {
  Derivation d;
  d.rule = RuleName::Ell;
  d.bind = {{"x", vt(x)}, {"A", p.conclusion.lhs}, {"B", p.conclusion.rhs}};
  d.conclusion = {ab(x, p.conclusion.lhs), ab(x, p.conclusion.rhs)};
  d.premises.push_back(std::move(p));
  return d;
}

Derivation d_app(Derivation p, Derivation q) {
  Derivation d;
  d.rule = RuleName::App;
  d.bind = {{"A", p.conclusion.lhs},
            {"B", p.conclusion.rhs},
            {"C", q.conclusion.lhs},
            {"D", q.conclusion.rhs}};
  d.conclusion = {ap(p.conclusion.lhs, q.conclusion.lhs),
                  ap(p.conclusion.rhs, q.conclusion.rhs)};
  d.premises.push_back(std::move(p));
  d.premises.push_back(std::move(q));
  return d;
}

Derivation d_beta1(VarId x, TermPtr arg) {
  Derivation d;
  d.rule = RuleName::Beta1;
  d.bind = {{"x", vt(x)}, {"D", arg}};
  d.conclusion = {redex(x, vt(x), arg), arg};
  return d;
}

Derivation d_beta2(VarId x, VarId y, TermPtr arg) {
  if (x == y) throw BindingError("beta2 requires x != y");
  Derivation d;
  d.rule = RuleName::Beta2;
  d.bind = {{"x", vt(x)}, {"y", vt(y)}, {"D", arg}};
  d.conclusion = {redex(x, vt(y), arg), vt(y)};
  return d;
}

Derivation d_beta3(VarId x, TermPtr a, TermPtr b, TermPtr arg) {
  Derivation d;
  d.rule = RuleName::Beta3;
  d.bind = {{"x", vt(x)}, {"A", a}, {"B", b}, {"D", arg}};
  d.conclusion = {redex(x, ap(a, b), arg), ap(redex(x, a, arg), redex(x, b, arg))};
  return d;
}

Derivation d_beta4(VarId x, TermPtr a, TermPtr arg) {
  Derivation d;
  d.rule = RuleName::Beta4;
  d.bind = {{"x", vt(x)}, {"A", a}, {"D", arg}};
  d.conclusion = {redex(x, ab(x, a), arg), ab(x, a)};
  return d;
}

Derivation d_beta5(VarId x, VarId y, TermPtr a, TermPtr arg, Derivation premise) {
  if (x == y) throw BindingError("beta5 requires x != y");
  Derivation d;
  d.rule = RuleName::Beta5;
  d.bind = {{"x", vt(x)}, {"y", vt(y)}, {"A", a}, {"D", arg}};
  d.conclusion = {redex(x, ab(y, a), arg), ab(y, redex(x, a, arg))};
  d.premises.push_back(std::move(premise));
  return d;
}

Derivation d_alpha_e(VarId x, VarId y, TermPtr a, Derivation premise) {
  Derivation d;
  d.rule = RuleName::AlphaE;
  d.bind = {{"x", vt(x)}, {"y", vt(y)}, {"A", a}};
  d.conclusion = {ab(x, a), ab(y, ap(ab(x, a), vt(y)))};
  d.premises.push_back(std::move(premise));
  return d;
}

Derivation d_eta_e(VarId x, VarId y) {
  if (x == y) throw BindingError("eta_e requires x != y");
  Derivation d;
  d.rule = RuleName::EtaE;
  d.bind = {{"x", vt(x)}, {"y", vt(y)}};
  d.conclusion = {vt(y), ab(x, ap(vt(y), vt(x)))};
  return d;
}

void expect(bool ok, const char* what) {
  if (!ok) throw BindingError(what);
}

void expect_concl(const Derivation& p, const TermPtr& lhs, const TermPtr& rhs, const char* what) {
  if (!term_eq(p.conclusion.lhs, lhs) || !term_eq(p.conclusion.rhs, rhs)) throw BindingError(what);
}

// If p concludes [λbinder.t]z ~ t for some variable z, returns z.
std::optional<VarId> witness_arg_of(const Derivation& p, VarId binder, const TermPtr& t) {
  const TermPtr& l = p.conclusion.lhs;
  if (!term_eq(p.conclusion.rhs, t)) return std::nullopt;
  if (!l->is_app() || !l->left->is_abs() || l->left->v != binder) return std::nullopt;
  if (!term_eq(l->left->left, t) || !l->right->is_var()) return std::nullopt;
  return l->right->v;
}

// From a witness [λx.a]z ~ a with z != x, concludes [λx.a]d ~ a for an
// arbitrary argument d.
Derivation weaken_witness(VarId x, TermPtr a, TermPtr arg, VarId z, Derivation witness) {
  expect(z != x, "independence weakening needs a witness argument distinct from the binder");
  expect_concl(witness, redex(x, a, vt(z)), a, "witness must conclude [\\x.A]z ~ A");
  Derivation s1 = d_ell(x, witness);                             // λx[[λx a]z] ~ λx a
  Derivation s3 = d_app(std::move(s1), d_refl(arg));             // [λx[[λx a]z]]d ~ [λx a]d
  Derivation s4 = d_beta3(x, ab(x, a), vt(z), arg);              // ... ~ E F
  Derivation s5 = d_beta4(x, a, arg);                            // E ~ λx a
  Derivation s6 = d_beta2(x, z, arg);                            // F ~ z
  Derivation s7 = d_app(std::move(s5), std::move(s6));           // E F ~ [λx a]z
  std::vector<Derivation> chain;
  chain.push_back(d_sym(std::move(s3)));
  chain.push_back(std::move(s4));
  chain.push_back(std::move(s7));
  chain.push_back(std::move(witness));
  return d_chain(std::move(chain));  // [λx a]d ~ a
}

Derivation witness_for_abstraction(VarId x, VarId y, VarId z, TermPtr b, Derivation premise) {
  // premise: [λy.b]z ~ b. Produces [λy.(λx.b)]z ~ λx.b.
  expect(x != y, "nested-binder witness needs distinct binders");
  expect(z != x && z != y, "nested-binder witness needs z distinct from both binders");
  expect_concl(premise, redex(y, b, vt(z)), b, "premise must conclude [\\y.B]z ~ B");
  Derivation pre2 = d_beta2(x, z, vt(y));                        // [λx z]y ~ z
  Derivation s1 = d_beta5(y, x, b, vt(z), std::move(pre2));      // [λy[λx b]]z ~ λx[[λy b]z]
  Derivation s2 = d_ell(x, std::move(premise));                  // λx[[λy b]z] ~ λx b
  return d_trans(std::move(s1), std::move(s2));
}

Derivation nested_binder_swap(VarId x, VarId y, TermPtr a, TermPtr arg, VarId z,
                              Derivation witness) {
  // witness: [λy.d]z ~ d with z != y. Produces [λx.(λy.a)]d ~ λy.([λx.a]d).
  expect(x != y, "binder swap requires x != y");
  Derivation d1 = weaken_witness(y, arg, vt(x), z, std::move(witness));  // [λy d]x ~ d
  return d_beta5(x, y, a, arg, std::move(d1));
}

Derivation eta_expand_term(TermPtr a, VarId y, VarId x, VarId z, Derivation witness) {
  // witness: [λy.a]z ~ a with z != y. Produces a ~ λy.(a y). Needs x != y.
  expect(x != y, "eta expansion needs an auxiliary variable distinct from y");
  expect(z != y, "eta expansion needs a witness argument distinct from y");
  TermPtr xy = ap(vt(x), vt(y));
  Derivation s_c_b = d_beta3(x, vt(x), vt(y), a);        // [λx[x y]]a ~ [[λx x]a][[λx y]a]
  Derivation s_b1 = d_beta1(x, a);                       // [λx x]a ~ a
  Derivation s_b2 = d_beta2(x, y, a);                    // [λx y]a ~ y
  Derivation part1 = d_sym(s_b1);                        // a ~ [λx x]a
  Derivation s_b_ay = d_app(std::move(s_b1), std::move(s_b2));
  Derivation s_c_ay = d_trans(std::move(s_c_b), std::move(s_b_ay));  // [λx[x y]]a ~ a y
  Derivation s_lyC = d_ell(y, std::move(s_c_ay));        // λy[[λx[x y]]a] ~ λy[a y]
  Derivation s_eta = d_eta_e(y, x);                      // x ~ λy[x y]
  Derivation s_lxx = d_ell(x, std::move(s_eta));         // λx x ~ λx[λy[x y]]
  Derivation s_ap = d_app(std::move(s_lxx), d_refl(a));  // [λx x]a ~ [λx[λy[x y]]]a
  Derivation s_b5 = nested_binder_swap(x, y, xy, a, z, std::move(witness));
  std::vector<Derivation> chain;
  chain.push_back(std::move(part1));
  chain.push_back(std::move(s_ap));
  chain.push_back(std::move(s_b5));
  chain.push_back(std::move(s_lyC));
  return d_chain(std::move(chain));  // a ~ λy[a y]
}

}  // namespace

Derivation independence_witness(VarId x, const TermPtr& a, VarId z) {
  expect(nonfree(a).contains(x), "independence witness needs x not free in A");
  expect(nonbound(a).contains(z), "independence witness needs z not bound in A");
  expect(z != x, "independence witness needs z != x");
  switch (a->kind) {
    case Term::Kind::Var:
      return d_beta2(x, a->v, vt(z));
    case Term::Kind::App: {
      Derivation pl = independence_witness(x, a->left, z);
      Derivation pr = independence_witness(x, a->right, z);
      Derivation s1 = d_app(std::move(pl), std::move(pr));
      Derivation s2 = d_beta3(x, a->left, a->right, vt(z));
      return d_trans(std::move(s2), std::move(s1));
    }
    case Term::Kind::Abs: {
      VarId w = a->v;
      if (w == x) return d_beta4(x, a->left, vt(z));
      Derivation pre2 = d_beta2(w, z, vt(x));                    // [λw z]x ~ z
      Derivation pb = independence_witness(x, a->left, z);       // [λx b]z ~ b
      Derivation s1 = d_beta5(x, w, a->left, vt(z), std::move(pre2));
      Derivation s2 = d_ell(w, std::move(pb));
      return d_trans(std::move(s1), std::move(s2));
    }
  }
  throw BindingError("unreachable");
}

namespace {

TermPtr need_term(const ScriptArgs& args, const char* name) {
  auto it = args.bind.find(name);
  if (it == args.bind.end())
    throw BindingError(std::string("missing binding for ") + name);
  return it->second;
}

VarId need_var(const ScriptArgs& args, const char* name) {
  TermPtr t = need_term(args, name);
  if (!t->is_var()) throw BindingError(std::string("binding ") + name + " must be a variable");
  return t->v;
}

std::optional<VarId> opt_var(const ScriptArgs& args, const char* name) {
  auto it = args.bind.find(name);
  if (it == args.bind.end()) return std::nullopt;
  if (!it->second->is_var())
    throw BindingError(std::string("binding ") + name + " must be a variable");
  return it->second->v;
}

VarId fresh_for(std::initializer_list<VarSet> sets) { return pick_fresh(sets); }

VarId auto_witness_arg(const ScriptArgs& args, const char* name, const TermPtr& t,
                       std::initializer_list<VarId> distinct_from) {
  if (auto v = opt_var(args, name)) return *v;
  std::vector<VarId> avoid(distinct_from);
  return pick_fresh(VarSet::finite(std::move(avoid)), {nonfree(t), nonbound(t)});
}

// A supplied premise [λbinder.t]z ~ t, or a synthesized one with a chosen z.
struct Witness {
  Derivation d;
  VarId z;
};

Witness take_witness(const ScriptArgs& args, std::size_t i, VarId binder, const TermPtr& t,
                     std::optional<VarId> forced_z, const char* zname,
                     std::initializer_list<VarId> distinct_from) {
  if (i < args.premises.size()) {
    const Derivation& p = args.premises[i];
    auto z = witness_arg_of(p, binder, t);
    if (!z)
      throw BindingError("premise " + std::to_string(i) +
                         " must conclude [\\b.T]z ~ T for the script's binder and term");
    if (forced_z && *z != *forced_z)
      throw BindingError("premise " + std::to_string(i) + " uses a different witness argument");
    return {p, *z};
  }
  VarId z = forced_z ? *forced_z : auto_witness_arg(args, zname, t, distinct_from);
  return {independence_witness(binder, t, z), z};
}

Derivation script_idprop(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  VarId y = need_var(args, "y");
  expect(x != y, "idprop requires distinct x and y");
  Derivation p1 = d_beta2(y, x, vt(x));                    // [λy x]x ~ x
  Derivation p2 = d_alpha_e(x, y, vt(x), std::move(p1));   // λx x ~ λy[[λx x]y]
  Derivation p3 = d_beta1(x, vt(y));                       // [λx x]y ~ y
  Derivation p4 = d_ell(y, std::move(p3));                 // λy[[λx x]y] ~ λy y
  return d_trans(std::move(p2), std::move(p4));            // λx x ~ λy y
}

Derivation script_ind(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  TermPtr a = need_term(args, "A");
  TermPtr d = need_term(args, "D");
  Witness w = take_witness(args, 0, x, a, opt_var(args, "z"), "z", {x});
  return weaken_witness(x, a, d, w.z, std::move(w.d));
}

Derivation script_propfree(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  TermPtr a = need_term(args, "A");
  VarId z = auto_witness_arg(args, "z", a, {x});
  return independence_witness(x, a, z);
}

Derivation script_remalpha(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  TermPtr a = need_term(args, "A");
  if (args.premises.empty()) throw BindingError("remalpha needs the premise [\\x.A]x ~ A");
  Derivation premise = args.premises[0];
  expect_concl(premise, redex(x, a, vt(x)), a, "premise must conclude [\\x.A]x ~ A");
  return d_sym(d_ell(x, std::move(premise)));  // λx a ~ λx[[λx a]x]
}

Derivation script_lemmalpha_i(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  VarId y = need_var(args, "y");
  expect(x != y, "lemmalpha_i requires distinct x and y");
  return d_beta2(y, x, vt(x));  // [λy x]x ~ x: witness that x is independent of y
}

Derivation script_lemmalpha_ii(const ScriptArgs& args) {
  VarId y = need_var(args, "y");
  TermPtr b = need_term(args, "B");
  TermPtr c = need_term(args, "C");
  Witness wb = take_witness(args, 0, y, b, opt_var(args, "z"), "z", {y});
  Witness wc = take_witness(args, 1, y, c, wb.z, "z", {y});
  Derivation s1 = d_app(std::move(wb.d), std::move(wc.d));
  Derivation s2 = d_beta3(y, b, c, vt(wb.z));
  return d_trans(std::move(s2), std::move(s1));  // [λy (b c)]z ~ b c
}

Derivation script_lemmalpha_iii(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  VarId y = need_var(args, "y");
  TermPtr b = need_term(args, "B");
  if (x == y) {
    VarId z = auto_witness_arg(args, "z", ab(x, b), {x});
    expect(z != x, "lemmalpha_iii requires z != x");
    return d_beta4(x, b, vt(z));  // [λx[λx b]]z ~ λx b
  }
  Witness w = take_witness(args, 0, y, b, opt_var(args, "z"), "z", {x, y});
  return witness_for_abstraction(x, y, w.z, b, std::move(w.d));
}

Derivation script_beta5rev(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  VarId y = need_var(args, "y");
  TermPtr a = need_term(args, "A");
  TermPtr d = need_term(args, "D");
  Witness w = take_witness(args, 0, y, d, opt_var(args, "z"), "z", {x, y});
  return nested_binder_swap(x, y, a, d, w.z, std::move(w.d));
}

Derivation script_alpharev(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  VarId y = need_var(args, "y");
  TermPtr a = need_term(args, "A");
  Witness w = take_witness(args, 0, y, a, opt_var(args, "z"), "z", {x, y});
  expect(w.z != y, "alpharev requires z != y");
  Derivation d1 = weaken_witness(y, a, vt(x), w.z, std::move(w.d));  // [λy a]x ~ a
  return d_alpha_e(x, y, a, std::move(d1));  // λx a ~ λy[[λx a]y]
}

Derivation script_propeta(const ScriptArgs& args) {
  TermPtr a = need_term(args, "A");
  VarId y = need_var(args, "y");
  Witness w = take_witness(args, 0, y, a, opt_var(args, "z"), "z", {y});
  VarId x = opt_var(args, "x").value_or(
      fresh_for({nonfree(a), nonbound(a), VarSet::cofinite({y, w.z})}));
  expect(x != y, "propeta requires x != y");
  return eta_expand_term(a, y, x, w.z, std::move(w.d));  // a ~ λy[a y]
}

Derivation script_thmalpha(const ScriptArgs& args) {
  VarId x = need_var(args, "x");
  VarId y = need_var(args, "y");
  TermPtr a = need_term(args, "A");
  TermPtr b = need_term(args, "B");
  TermPtr e = ab(x, a);
  TermPtr f = ab(y, b);
  // The extensionality premise [λx.A]z ~ [λy.B]z fixes z; it cannot be
  // synthesized.
  if (args.premises.size() < 3)
    throw BindingError("thmalpha needs premises [\\z.A]w ~ A, [\\z.B]w ~ B, [\\x.A]z ~ [\\y.B]z");
  const Derivation& p_app = args.premises[2];
  const TermPtr& al = p_app.conclusion.lhs;
  const TermPtr& ar = p_app.conclusion.rhs;
  if (!al->is_app() || !ar->is_app() || !al->right->is_var() || !ar->right->is_var() ||
      al->right->v != ar->right->v || !term_eq(al->left, e) || !term_eq(ar->left, f))
    throw BindingError("third premise must conclude [\\x.A]z ~ [\\y.B]z");
  VarId z = al->right->v;
  Witness wa = take_witness(args, 0, z, a, opt_var(args, "w"), "w", {x, y, z});
  Witness wb = take_witness(args, 1, z, b, wa.z, "w", {x, y, z});
  Derivation s1 = d_ell(z, p_app);                               // λz[E z] ~ λz[F z]
  Derivation da = d_alpha_e(x, z, a, weaken_witness(z, a, vt(x), wa.z, std::move(wa.d)));
  Derivation db = d_alpha_e(y, z, b, weaken_witness(z, b, vt(y), wb.z, std::move(wb.d)));
  std::vector<Derivation> chain;
  chain.push_back(std::move(da));
  chain.push_back(std::move(s1));
  chain.push_back(d_sym(std::move(db)));
  return d_chain(std::move(chain));  // λx a ~ λy b
}

Derivation script_propeqext2(const ScriptArgs& args) {
  TermPtr a = need_term(args, "A");
  TermPtr b = need_term(args, "B");
  if (args.premises.size() < 3)
    throw BindingError("propeqext2 needs premises [\\z.A]w ~ A, [\\z.B]w ~ B, A z ~ B z");
  const Derivation& p_app = args.premises[2];
  const TermPtr& al = p_app.conclusion.lhs;
  const TermPtr& ar = p_app.conclusion.rhs;
  if (!al->is_app() || !ar->is_app() || !al->right->is_var() || !ar->right->is_var() ||
      al->right->v != ar->right->v || !term_eq(al->left, a) || !term_eq(ar->left, b))
    throw BindingError("third premise must conclude A z ~ B z");
  VarId z = al->right->v;
  Witness wa = take_witness(args, 0, z, a, opt_var(args, "w"), "w", {z});
  Witness wb = take_witness(args, 1, z, b, wa.z, "w", {z});
  VarId x = opt_var(args, "x").value_or(fresh_for(
      {nonfree(a), nonbound(a), nonfree(b), nonbound(b), VarSet::cofinite({z, wa.z})}));
  expect(x != z, "propeqext2 requires the auxiliary variable distinct from z");
  Derivation s1 = d_ell(z, p_app);                                      // λz[A z] ~ λz[B z]
  Derivation da = eta_expand_term(a, z, x, wa.z, std::move(wa.d));      // A ~ λz[A z]
  Derivation db = eta_expand_term(b, z, x, wb.z, std::move(wb.d));      // B ~ λz[B z]
  std::vector<Derivation> chain;
  chain.push_back(std::move(da));
  chain.push_back(std::move(s1));
  chain.push_back(d_sym(std::move(db)));
  return d_chain(std::move(chain));  // a ~ b
}

Derivation script_alpha(const ScriptArgs& args) {
  // The alpha_e conclusion rebuilt from eta_e: validates without alpha_e
  // nodes, so the eta rule subsumes renaming.
  VarId x = need_var(args, "x");
  VarId y = need_var(args, "y");
  TermPtr a = need_term(args, "A");
  Derivation premise = [&]() -> Derivation {
    if (!args.premises.empty()) {
      Derivation p = args.premises[0];
      expect_concl(p, redex(y, a, vt(x)), a, "premise must conclude [\\y.A]x ~ A");
      return p;
    }
    if (x == y) throw BindingError("alpha with x = y needs the premise [\\x.A]x ~ A");
    VarId w = pick_fresh(VarSet::cofinite({x, y}), {nonfree(a), nonbound(a)});
    return weaken_witness(y, a, vt(x), w, independence_witness(y, a, w));
  }();
  if (x == y) {
    ScriptArgs sub{{{"x", vt(x)}, {"A", a}}, {std::move(premise)}};
    return script_remalpha(sub);
  }
  VarId z = opt_var(args, "z").value_or(
      fresh_for({nonfree(a), nonbound(a), VarSet::cofinite({x, y})}));
  expect(z != x && z != y, "alpha requires z distinct from x and y");
  TermPtr lam_x_a = ab(x, a);
  Derivation d1 = weaken_witness(y, a, vt(z), x, std::move(premise));   // [λy a]z ~ a
  Derivation d2 = witness_for_abstraction(x, y, z, a, std::move(d1));   // [λy[λx a]]z ~ λx a
  VarId aux = opt_var(args, "w").value_or(fresh_for(
      {nonfree(lam_x_a), nonbound(lam_x_a), VarSet::cofinite({x, y, z})}));
  expect(aux != y, "alpha requires the auxiliary variable distinct from y");
  return eta_expand_term(lam_x_a, y, aux, z, std::move(d2));  // λx a ~ λy[[λx a]y]
}

struct ScriptEntry {
  std::function<Derivation(const ScriptArgs&)> build;
  CheckMode mode;
};

const std::map<std::string, ScriptEntry, std::less<>>& registry() {
  static const std::map<std::string, ScriptEntry, std::less<>> reg = {
      {"idprop", {script_idprop, CheckMode::Lambda}},
      {"IND", {script_ind, CheckMode::Prelambda}},
      {"propfree", {script_propfree, CheckMode::Prelambda}},
      {"remalpha", {script_remalpha, CheckMode::Prelambda}},
      {"lemmalpha_i", {script_lemmalpha_i, CheckMode::Prelambda}},
      {"lemmalpha_ii", {script_lemmalpha_ii, CheckMode::Prelambda}},
      {"lemmalpha_iii", {script_lemmalpha_iii, CheckMode::Prelambda}},
      {"beta5rev", {script_beta5rev, CheckMode::Prelambda}},
      {"alpharev", {script_alpharev, CheckMode::Lambda}},
      {"propeta", {script_propeta, CheckMode::Extensional}},
      {"thmalpha", {script_thmalpha, CheckMode::Lambda}},
      {"propeqext2", {script_propeqext2, CheckMode::Extensional}},
      {"alpha", {script_alpha, CheckMode::Extensional}},
  };
  return reg;
}

}  // namespace

Derivation script(std::string_view name, const ScriptArgs& args) {
  auto it = registry().find(name);
  if (it == registry().end())
    throw BindingError("unknown script '" + std::string(name) + "'");
  return it->second.build(args);
}

CheckMode script_mode(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end())
    throw BindingError("unknown script '" + std::string(name) + "'");
  return it->second.mode;
}

std::vector<std::string> script_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

}  // namespace lamcong
