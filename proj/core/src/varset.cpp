#include "lamcong/varset.hpp"

#include <algorithm>

namespace lamcong {

namespace {

std::vector<VarId> normalized(std::vector<VarId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<VarId> basis_union(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  std::vector<VarId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VarId> basis_intersection(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  std::vector<VarId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VarId> basis_difference(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  std::vector<VarId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool basis_contains(const std::vector<VarId>& basis, VarId v) {
  return std::binary_search(basis.begin(), basis.end(), v);
}

}  // namespace

VarSet VarSet::finite(std::vector<VarId> members) {
  return VarSet(Polarity::Finite, normalized(std::move(members)));
}

VarSet VarSet::cofinite(std::vector<VarId> excluded) {
  return VarSet(Polarity::Cofinite, normalized(std::move(excluded)));
}

bool VarSet::contains(VarId v) const {
  return is_cofinite() ? !basis_contains(basis_, v) : basis_contains(basis_, v);
}

VarSet VarSet::intersect(const VarSet& other) const {
  if (!is_cofinite() && !other.is_cofinite())
    return VarSet(Polarity::Finite, basis_intersection(basis_, other.basis_));
  if (!is_cofinite() && other.is_cofinite())
    return VarSet(Polarity::Finite, basis_difference(basis_, other.basis_));
  if (is_cofinite() && !other.is_cofinite())
    return VarSet(Polarity::Finite, basis_difference(other.basis_, basis_));
  return VarSet(Polarity::Cofinite, basis_union(basis_, other.basis_));
}

VarSet VarSet::unite(const VarSet& other) const {
  if (!is_cofinite() && !other.is_cofinite())
    return VarSet(Polarity::Finite, basis_union(basis_, other.basis_));
  if (!is_cofinite() && other.is_cofinite())
    return VarSet(Polarity::Cofinite, basis_difference(other.basis_, basis_));
  if (is_cofinite() && !other.is_cofinite())
    return VarSet(Polarity::Cofinite, basis_difference(basis_, other.basis_));
  return VarSet(Polarity::Cofinite, basis_intersection(basis_, other.basis_));
}

VarSet VarSet::complement() const {
  return VarSet(is_cofinite() ? Polarity::Finite : Polarity::Cofinite, basis_);
}

VarSet VarSet::with(VarId v) const {
  std::vector<VarId> b = basis_;
  if (is_cofinite()) {
    auto it = std::lower_bound(b.begin(), b.end(), v);
    if (it != b.end() && *it == v) b.erase(it);
  } else {
    auto it = std::lower_bound(b.begin(), b.end(), v);
    if (it == b.end() || *it != v) b.insert(it, v);
  }
  return VarSet(polarity_, std::move(b));
}

VarSet VarSet::without(VarId v) const {
  std::vector<VarId> b = basis_;
  if (is_cofinite()) {
    auto it = std::lower_bound(b.begin(), b.end(), v);
    if (it == b.end() || *it != v) b.insert(it, v);
  } else {
    auto it = std::lower_bound(b.begin(), b.end(), v);
    if (it != b.end() && *it == v) b.erase(it);
  }
  return VarSet(polarity_, std::move(b));
}

std::string VarSet::to_string() const {
  std::string out = is_cofinite() ? "V\\{" : "{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ',';
    out += Interner::instance().name(basis_[i]);
  }
  out += '}';
  return out;
}

VarSet nonfree(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return VarSet::cofinite({t->v});
    case Term::Kind::App:
      return nonfree(t->left).intersect(nonfree(t->right));
    case Term::Kind::Abs:
      return nonfree(t->left).with(t->v);
  }
  return VarSet::all();
}

VarSet nonbound(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return VarSet::all();
    case Term::Kind::App:
      return nonbound(t->left).intersect(nonbound(t->right));
    case Term::Kind::Abs:
      return nonbound(t->left).without(t->v);
  }
  return VarSet::all();
}

std::vector<VarId> free_vars(const TermPtr& t) { return nonfree(t).basis(); }

std::vector<VarId> bound_vars(const TermPtr& t) { return nonbound(t).basis(); }

bool proviso_beta(const TermPtr& a, const TermPtr& d) {
  return nonbound(a).unite(nonfree(d)).is_all();
}

VarId pick_fresh(const VarSet& avoid, std::span<const VarSet> want_in) {
  VarSet constraint = avoid.complement();
  for (const VarSet& s : want_in) constraint = constraint.intersect(s);

  if (!constraint.is_cofinite()) {
    if (constraint.is_empty()) throw InternalError("pick_fresh: constraint set is empty");
    return constraint.basis().front();
  }
  Interner& pool = Interner::instance();
  std::uint32_t n = pool.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    VarId v(i);
    if (constraint.contains(v)) return v;
  }
  // Nothing interned qualifies; a newly minted variable lies outside every
  // finite basis, hence inside the cofinite constraint.
  return pool.mint();
}

VarId pick_fresh(const VarSet& avoid, std::initializer_list<VarSet> want_in) {
  std::vector<VarSet> tmp(want_in);
  return pick_fresh(avoid, std::span<const VarSet>(tmp));
}

VarId pick_fresh(std::span<const VarSet> want_in) { return pick_fresh(VarSet::empty(), want_in); }

VarId pick_fresh(std::initializer_list<VarSet> want_in) {
  return pick_fresh(VarSet::empty(), want_in);
}

}  // namespace lamcong
