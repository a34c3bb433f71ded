#include "lamcong/subst.hpp"

#include <algorithm>

namespace lamcong {

TermPtr subst_simple(const TermPtr& d, VarId x, const TermPtr& a) {
  switch (a->kind) {
    case Term::Kind::Var:
      return a->v == x ? d : a;
    case Term::Kind::App:
      return mk_app(subst_simple(d, x, a->left), subst_simple(d, x, a->right));
    case Term::Kind::Abs:
      if (a->v == x) return a;
      return mk_abs(a->v, subst_simple(d, x, a->left));
  }
  return a;
}

TermPtr subst_capture_free(const TermPtr& d, VarId x, const TermPtr& a) {
  switch (a->kind) {
    case Term::Kind::Var:
      return a->v == x ? d : a;
    case Term::Kind::App:
      return mk_app(subst_capture_free(d, x, a->left), subst_capture_free(d, x, a->right));
    case Term::Kind::Abs: {
      VarId y = a->v;
      if (y == x) return a;
      const TermPtr& body = a->left;
      VarSet nf_body = nonfree(body);
      if (nf_body.contains(x)) return a;  // x not free in the body
      if (nonfree(d).contains(y)) return mk_abs(y, subst_capture_free(d, x, body));
      // y is free in d: rename the binder to the first variable free in
      // neither the body nor d, then substitute in the renamed body.
      VarId z = pick_fresh({nf_body, nonfree(d)});
      TermPtr renamed = subst_capture_free(mk_var(z), y, body);
      if (term_size(renamed) != term_size(body))
        throw InternalError("subst_capture_free: renaming changed the term size");
      return mk_abs(z, subst_capture_free(d, x, renamed));
    }
  }
  return a;
}

namespace {

TermPtr freshen_rec(const TermPtr& a, const VarSet& nf_d, std::vector<VarId>& chosen) {
  switch (a->kind) {
    case Term::Kind::Var:
      return a;
    case Term::Kind::App: {
      TermPtr fun = freshen_rec(a->left, nf_d, chosen);
      TermPtr arg = freshen_rec(a->right, nf_d, chosen);
      return mk_app(std::move(fun), std::move(arg));
    }
    case Term::Kind::Abs: {
      TermPtr body = freshen_rec(a->left, nf_d, chosen);
      VarId y = a->v;
      bool collides = !nf_d.contains(y) ||
                      std::find(chosen.begin(), chosen.end(), y) != chosen.end();
      if (!collides) return mk_abs(y, std::move(body));
      VarId w = pick_fresh(VarSet::finite(chosen), {nonfree(body), nonbound(body), nf_d});
      chosen.push_back(w);
      return mk_abs(w, subst_simple(mk_var(w), y, body));
    }
  }
  return a;
}

}  // namespace

TermPtr freshen(const TermPtr& a, const TermPtr& d) {
  std::vector<VarId> chosen;
  VarSet nf_d = nonfree(d);
  return freshen_rec(a, nf_d, chosen);
}

}  // namespace lamcong
