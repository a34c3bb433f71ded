#include "lamcong/calculus.hpp"

#include <algorithm>
#include <map>

namespace lamcong {

std::string_view theory_mode_name(TheoryMode mode) {
  switch (mode) {
    case TheoryMode::Prelambda:
      return "prelambda";
    case TheoryMode::Lambda:
      return "lambda";
    case TheoryMode::Extensional:
      return "extensional";
  }
  return "?";
}

namespace {

std::string path_string(const std::vector<int>& path) {
  if (path.empty()) return "\xce\xb5";  // ε
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

struct LocalStep {
  TermPtr term;  // replacement for the subterm at the redex
  const char* rule;
};

// The rewrite rules at a single node. The beta rules discriminate on the shape
// of the abstraction body; eta contracts λx.(M x) when x is not free in M.
std::optional<LocalStep> step_at(const TermPtr& t, TheoryMode mode, const ReduceOptions& opts) {
  if (t->is_app() && t->left->is_abs()) {
    VarId x = t->left->v;
    const TermPtr& body = t->left->left;
    const TermPtr& d = t->right;
    switch (body->kind) {
      case Term::Kind::Var:
        if (body->v == x) return LocalStep{d, "beta1"};
        return LocalStep{body, "beta2"};
      case Term::Kind::App: {
        TermPtr lhs = mk_app(mk_abs(x, body->left), d);
        TermPtr rhs = mk_app(mk_abs(x, body->right), d);
        return LocalStep{mk_app(std::move(lhs), std::move(rhs)), "beta3"};
      }
      case Term::Kind::Abs: {
        VarId y = body->v;
        if (y == x) return LocalStep{body, "beta4"};
        bool side = nonfree(d).contains(y);
        if (!side && opts.prenormalize_arg) {
          // d may still be independent of y after rewriting; test its
          // prelambda normal form instead.
          ReduceOptions plain;
          NormalizationResult nd = normalize(d, TheoryMode::Prelambda,
                                             opts.prenormalize_fuel, false, plain);
          if (nd.normal()) side = nonfree(nd.term).contains(y);
        }
        if (side)
          return LocalStep{mk_abs(y, mk_app(mk_abs(x, body->left), d)), "beta5"};
        if (mode != TheoryMode::Prelambda) {
          // Blocked nested binder: rename it to a variable that is fresh for
          // the inner body and not free in d, then beta5 fires next step.
          VarId z = pick_fresh({nonfree(body->left), nonbound(body->left), nonfree(d),
                                VarSet::cofinite({x})});
          TermPtr renamed = mk_abs(z, subst_simple(mk_var(z), y, body->left));
          return LocalStep{mk_app(mk_abs(x, std::move(renamed)), d), "alpha"};
        }
        return std::nullopt;  // stuck in prelambda mode
      }
    }
  }
  if (mode == TheoryMode::Extensional && t->is_abs() && t->left->is_app() &&
      t->left->right->is_var() && t->left->right->v == t->v &&
      nonfree(t->left->left).contains(t->v)) {
    return LocalStep{t->left->left, "eta"};
  }
  return std::nullopt;
}

std::optional<Step> search(const TermPtr& t, TheoryMode mode, const ReduceOptions& opts,
                           std::vector<int>& path) {
  if (auto local = step_at(t, mode, opts))
    return Step{local->term, local->rule, path_string(path)};
  switch (t->kind) {
    case Term::Kind::Var:
      return std::nullopt;
    case Term::Kind::App: {
      path.push_back(0);
      if (auto s = search(t->left, mode, opts, path)) {
        s->term = mk_app(s->term, t->right);
        path.pop_back();
        return s;
      }
      path.back() = 1;
      if (auto s = search(t->right, mode, opts, path)) {
        s->term = mk_app(t->left, s->term);
        path.pop_back();
        return s;
      }
      path.pop_back();
      return std::nullopt;
    }
    case Term::Kind::Abs: {
      path.push_back(0);
      if (auto s = search(t->left, mode, opts, path)) {
        s->term = mk_abs(t->v, s->term);
        path.pop_back();
        return s;
      }
      path.pop_back();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Step> reduce_step(const TermPtr& t, TheoryMode mode, const ReduceOptions& opts) {
  std::vector<int> path;
  return search(t, mode, opts, path);
}

NormalizationResult normalize(const TermPtr& t, TheoryMode mode, std::size_t fuel,
                              bool want_trace, const ReduceOptions& opts) {
  NormalizationResult res{NormalizationResult::Status::Normal, t, 0, {}};
  while (res.steps < fuel) {
    auto s = reduce_step(res.term, mode, opts);
    if (!s) return res;
    res.term = s->term;
    ++res.steps;
    if (want_trace) res.trace.push_back(*s);
  }
  if (reduce_step(res.term, mode, opts)) res.status = NormalizationResult::Status::FuelExhausted;
  return res;
}

namespace {

TermPtr canonical_rec(const TermPtr& t, std::map<VarId, VarId>& scope,
                      const std::vector<VarId>& skip, std::uint32_t& counter) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = scope.find(t->v);
      return it == scope.end() ? t : mk_var(it->second);
    }
    case Term::Kind::App: {
      TermPtr fun = canonical_rec(t->left, scope, skip, counter);
      TermPtr arg = canonical_rec(t->right, scope, skip, counter);
      return mk_app(std::move(fun), std::move(arg));
    }
    case Term::Kind::Abs: {
      VarId fresh = [&] {
        for (;;) {
          VarId c = var("v" + std::to_string(counter++));
          if (std::find(skip.begin(), skip.end(), c) == skip.end()) return c;
        }
      }();
      auto it = scope.find(t->v);
      std::optional<VarId> saved;
      if (it != scope.end()) saved = it->second;
      scope.insert_or_assign(t->v, fresh);
      TermPtr body = canonical_rec(t->left, scope, skip, counter);
      if (saved)
        scope.insert_or_assign(t->v, *saved);
      else
        scope.erase(t->v);
      return mk_abs(fresh, std::move(body));
    }
  }
  return t;
}

}  // namespace

TermPtr alpha_canonical(const TermPtr& t) {
  std::vector<VarId> skip = free_vars(t);
  std::map<VarId, VarId> scope;
  std::uint32_t counter = 0;
  return canonical_rec(t, scope, skip, counter);
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  return term_eq(alpha_canonical(a), alpha_canonical(b));
}

EqVerdict equivalent(const TermPtr& a, const TermPtr& b, TheoryMode mode, std::size_t fuel,
                     const ReduceOptions& opts) {
  NormalizationResult na = normalize(a, mode, fuel, false, opts);
  NormalizationResult nb = normalize(b, mode, fuel, false, opts);
  bool match = mode == TheoryMode::Prelambda ? term_eq(na.term, nb.term)
                                             : alpha_eq(na.term, nb.term);
  if (match) return EqVerdict{EqVerdict::Kind::Equal, "", nullptr};
  if (na.normal() && nb.normal())
    return EqVerdict{EqVerdict::Kind::DistinctNormalForms, "", nullptr};
  return EqVerdict{EqVerdict::Kind::Unknown, "fuel exhausted before both normal forms", nullptr};
}

IndependenceResult independent(VarId x, const TermPtr& a, TheoryMode mode, std::size_t fuel) {
  VarSet nf = nonfree(a);
  if (nf.contains(x)) {
    VarId z = pick_fresh({nf, nonbound(a), VarSet::cofinite({x})});
    return IndependenceResult{IndependenceResult::Kind::Yes, z, true};
  }
  VarId z = pick_fresh({nf, nonbound(a), VarSet::cofinite({x})});
  EqVerdict v = equivalent(mk_app(mk_abs(x, a), mk_var(z)), a, mode, fuel);
  if (v.equal()) return IndependenceResult{IndependenceResult::Kind::Yes, z, false};
  return IndependenceResult{IndependenceResult::Kind::Unknown, std::nullopt, false};
}

namespace {

std::optional<Step> traditional_search(const TermPtr& t, std::vector<int>& path) {
  if (t->is_app() && t->left->is_abs()) {
    VarId x = t->left->v;
    const TermPtr& body = t->left->left;
    const TermPtr& d = t->right;
    if (proviso_beta(body, d))
      return Step{subst_simple(d, x, body), "beta", path_string(path)};
    return Step{subst_simple(d, x, freshen(body, d)), "rename+beta", path_string(path)};
  }
  switch (t->kind) {
    case Term::Kind::Var:
      return std::nullopt;
    case Term::Kind::App: {
      path.push_back(0);
      if (auto s = traditional_search(t->left, path)) {
        s->term = mk_app(s->term, t->right);
        path.pop_back();
        return s;
      }
      path.back() = 1;
      if (auto s = traditional_search(t->right, path)) {
        s->term = mk_app(t->left, s->term);
        path.pop_back();
        return s;
      }
      path.pop_back();
      return std::nullopt;
    }
    case Term::Kind::Abs: {
      path.push_back(0);
      if (auto s = traditional_search(t->left, path)) {
        s->term = mk_abs(t->v, s->term);
        path.pop_back();
        return s;
      }
      path.pop_back();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Step> traditional_beta_step(const TermPtr& t) {
  std::vector<int> path;
  return traditional_search(t, path);
}

NormalizationResult traditional_normalize(const TermPtr& t, std::size_t fuel, bool want_trace) {
  NormalizationResult res{NormalizationResult::Status::Normal, t, 0, {}};
  while (res.steps < fuel) {
    auto s = traditional_beta_step(res.term);
    if (!s) return res;
    res.term = s->term;
    ++res.steps;
    if (want_trace) res.trace.push_back(*s);
  }
  if (traditional_beta_step(res.term)) res.status = NormalizationResult::Status::FuelExhausted;
  return res;
}

}  // namespace lamcong
