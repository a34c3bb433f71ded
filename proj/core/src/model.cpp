#include "lamcong/model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <set>

#include "json.hpp"
#include "lamcong/varset.hpp"

namespace lamcong::model {

struct FormulaArena::Impl {
  struct Node {
    bool atom;
    VarId v{0};
    std::vector<FormulaId> ante;
    FormulaId cons = -1;
    int rank = 1;
  };
  mutable std::mutex mu;
  std::vector<Node> nodes;
  std::map<std::uint32_t, FormulaId> atom_ids;
  std::map<std::pair<std::vector<FormulaId>, FormulaId>, FormulaId> compound_ids;
};

FormulaArena& FormulaArena::instance() {
  static FormulaArena a;
  return a;
}

FormulaArena::Impl& FormulaArena::impl() const {
  static Impl impl;
  return impl;
}

FormulaId FormulaArena::atom(VarId v) {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  if (auto it = im.atom_ids.find(v.index()); it != im.atom_ids.end()) return it->second;
  auto id = static_cast<FormulaId>(im.nodes.size());
  im.nodes.push_back({true, v, {}, -1, 1});
  im.atom_ids.emplace(v.index(), id);
  return id;
}

namespace {

bool less_rec(const FormulaArena::Impl& im, FormulaId a, FormulaId b);

bool less_vec(const FormulaArena::Impl& im, const std::vector<FormulaId>& a,
              const std::vector<FormulaId>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](FormulaId x, FormulaId y) { return less_rec(im, x, y); });
}

bool less_rec(const FormulaArena::Impl& im, FormulaId a, FormulaId b) {
  if (a == b) return false;
  const auto& na = im.nodes[a];
  const auto& nb = im.nodes[b];
  if (na.atom != nb.atom) return na.atom;
  if (na.atom) return na.v < nb.v;
  if (na.cons != nb.cons) return less_rec(im, na.cons, nb.cons);
  return less_vec(im, na.ante, nb.ante);
}

}  // namespace

FormulaId FormulaArena::compound(std::vector<FormulaId> antecedent, FormulaId consequent) {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  std::sort(antecedent.begin(), antecedent.end(),
            [&](FormulaId a, FormulaId b) { return less_rec(im, a, b); });
  antecedent.erase(std::unique(antecedent.begin(), antecedent.end()), antecedent.end());
  auto key = std::make_pair(antecedent, consequent);
  if (auto it = im.compound_ids.find(key); it != im.compound_ids.end()) return it->second;
  int rank = im.nodes[consequent].rank;
  for (FormulaId f : antecedent) rank = std::max(rank, im.nodes[f].rank);
  auto id = static_cast<FormulaId>(im.nodes.size());
  im.nodes.push_back({false, VarId(0), std::move(antecedent), consequent, rank + 1});
  im.compound_ids.emplace(std::move(key), id);
  return id;
}

bool FormulaArena::is_atom(FormulaId f) const { return impl().nodes[f].atom; }
VarId FormulaArena::atom_var(FormulaId f) const { return impl().nodes[f].v; }
const std::vector<FormulaId>& FormulaArena::antecedent(FormulaId f) const {
  return impl().nodes[f].ante;
}
FormulaId FormulaArena::consequent(FormulaId f) const { return impl().nodes[f].cons; }
int FormulaArena::rank(FormulaId f) const { return impl().nodes[f].rank; }
bool FormulaArena::less(FormulaId a, FormulaId b) const { return less_rec(impl(), a, b); }

void FormulaArena::reset() {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  im.nodes.clear();
  im.atom_ids.clear();
  im.compound_ids.clear();
}

FormulaSet make_set(std::vector<FormulaId> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

bool set_contains(const FormulaSet& s, FormulaId f) {
  return std::binary_search(s.begin(), s.end(), f);
}

bool subset(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string formula_to_string(FormulaId f) {
  FormulaArena& ar = FormulaArena::instance();
  if (ar.is_atom(f)) return Interner::instance().name(ar.atom_var(f));
  std::string out = "{";
  const auto& ante = ar.antecedent(f);
  // Print antecedents in structural order so output is reproducible.
  std::vector<FormulaId> sorted = ante;
  std::sort(sorted.begin(), sorted.end(),
            [&](FormulaId a, FormulaId b) { return ar.less(a, b); });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ',';
    out += formula_to_string(sorted[i]);
  }
  out += "} |- ";
  out += formula_to_string(ar.consequent(f));
  return out;
}

namespace {

struct FormulaParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(pos, msg); }

  FormulaId parse() {
    FormulaId f = parse_one();
    skip_ws();
    if (pos != text.size()) fail("trailing input after formula");
    return f;
  }

  FormulaId parse_one() {
    skip_ws();
    if (pos >= text.size()) fail("expected a formula");
    if (text[pos] == '{') {
      ++pos;
      std::vector<FormulaId> ante;
      skip_ws();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
      } else {
        for (;;) {
          ante.push_back(parse_one());
          skip_ws();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < text.size() && text[pos] == '}') {
            ++pos;
            break;
          }
          fail("expected ',' or '}' in antecedent set");
        }
      }
      skip_ws();
      if (pos + 1 >= text.size() || text[pos] != '|' || text[pos + 1] != '-')
        fail("expected '|-' after antecedent set");
      pos += 2;
      FormulaId cons = parse_one();
      return FormulaArena::instance().compound(std::move(ante), cons);
    }
    if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size()) {
        char c = text[pos];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')
          ++pos;
        else
          break;
      }
      return FormulaArena::instance().atom(var(text.substr(start, pos - start)));
    }
    fail("expected a variable or '{'");
  }
};

}  // namespace

FormulaId parse_formula(std::string_view text) { return FormulaParser{text}.parse(); }

const FormulaSet& Environment::lookup(VarId v) const {
  static const FormulaSet kEmpty;
  auto it = support.find(v);
  return it == support.end() ? kEmpty : it->second;
}

Environment update(const Environment& sigma, VarId x, FormulaSet fs) {
  Environment out = sigma;
  if (fs.empty())
    out.support.erase(x);
  else
    out.support[x] = std::move(fs);
  return out;
}

Environment environment_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) throw FormatError("", "environment must be a JSON object");
  Environment sigma;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array()) throw FormatError("/" + k, "environment values must be arrays");
    std::vector<FormulaId> fs;
    for (const auto& s : v) {
      if (!s.is_string()) throw FormatError("/" + k, "formulas must be strings");
      try {
        fs.push_back(parse_formula(s.get<std::string>()));
      } catch (const SyntaxError& e) {
        throw FormatError("/" + k, e.what());
      }
    }
    if (!fs.empty()) sigma.support[var(k)] = make_set(std::move(fs));
  }
  return sigma;
}

std::string environment_to_json(const Environment& sigma) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [v, fs] : sigma.support) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (FormulaId f : fs) arr.push_back(formula_to_string(f));
    j[Interner::instance().name(v)] = arr;
  }
  return j.dump();
}

std::string_view membership_name(Membership3 m) {
  switch (m) {
    case Membership3::Member:
      return "Member";
    case Membership3::NonMember:
      return "NonMember";
    case Membership3::Unknown:
      return "Unknown";
  }
  return "?";
}

std::vector<FormulaId> formula_universe(const std::vector<VarId>& alphabet, int max_rank,
                                        int max_width) {
  FormulaArena& ar = FormulaArena::instance();
  std::vector<FormulaId> universe;
  for (VarId v : alphabet) universe.push_back(ar.atom(v));
  std::sort(universe.begin(), universe.end(),
            [&](FormulaId a, FormulaId b) { return ar.less(a, b); });
  for (int r = 2; r <= max_rank; ++r) {
    // One widening round: antecedents and consequents from the current layer.
    std::set<FormulaId> next(universe.begin(), universe.end());
    std::vector<std::vector<FormulaId>> antes;
    antes.push_back({});
    std::size_t n = universe.size();
    // All subsets of the current universe with at most max_width elements.
    std::function<void(std::size_t, std::vector<FormulaId>&)> gen =
        [&](std::size_t start, std::vector<FormulaId>& acc) {
          if (!acc.empty()) antes.push_back(acc);
          if (static_cast<int>(acc.size()) >= max_width) return;
          for (std::size_t i = start; i < n; ++i) {
            acc.push_back(universe[i]);
            gen(i + 1, acc);
            acc.pop_back();
          }
        };
    std::vector<FormulaId> acc;
    gen(0, acc);
    for (const auto& ante : antes)
      for (FormulaId m : universe) next.insert(ar.compound(ante, m));
    universe.assign(next.begin(), next.end());
  }
  std::sort(universe.begin(), universe.end(),
            [&](FormulaId a, FormulaId b) { return ar.less(a, b); });
  return universe;
}

namespace {

std::string env_fingerprint(const Environment& sigma) {
  std::string key;
  for (const auto& [v, fs] : sigma.support) {
    key += std::to_string(v.index());
    key += ':';
    for (FormulaId f : fs) {
      key += std::to_string(f);
      key += ',';
    }
    key += ';';
  }
  return key;
}

void collect_term_vars(const TermPtr& t, std::set<VarId>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      out.insert(t->v);
      break;
    case Term::Kind::App:
      collect_term_vars(t->left, out);
      collect_term_vars(t->right, out);
      break;
    case Term::Kind::Abs:
      out.insert(t->v);
      collect_term_vars(t->left, out);
      break;
  }
}

void collect_formula_vars(FormulaId f, std::set<VarId>& out) {
  FormulaArena& ar = FormulaArena::instance();
  if (ar.is_atom(f)) {
    out.insert(ar.atom_var(f));
    return;
  }
  for (FormulaId g : ar.antecedent(f)) collect_formula_vars(g, out);
  collect_formula_vars(ar.consequent(f), out);
}

std::vector<VarId> derive_alphabet(FormulaId f, const TermPtr& t, const Environment& sigma) {
  std::set<VarId> vs;
  collect_term_vars(t, vs);
  collect_formula_vars(f, vs);
  for (const auto& [v, fs] : sigma.support) {
    vs.insert(v);
    for (FormulaId g : fs) collect_formula_vars(g, vs);
  }
  return std::vector<VarId>(vs.begin(), vs.end());
}

Membership3 join_all_of(Membership3 acc, Membership3 next) {
  // Conjunction over subgoals that must all be Member.
  if (acc == Membership3::NonMember || next == Membership3::NonMember)
    return Membership3::NonMember;
  if (acc == Membership3::Unknown || next == Membership3::Unknown) return Membership3::Unknown;
  return Membership3::Member;
}

}  // namespace

Membership3 Oracle::member(FormulaId f, const TermPtr& a, const Environment& sigma) {
  universe_alphabet_ = derive_alphabet(f, a, sigma);
  return member_impl(f, a, sigma, budget_.max_rank);
}

Membership3 Oracle::member_impl(FormulaId f, const TermPtr& a, const Environment& sigma,
                                int rem) {
  FormulaArena& ar = FormulaArena::instance();
  std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(a.get())) + "#" +
                    std::to_string(f) + "#" + env_fingerprint(sigma);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  auto remember = [&](Membership3 m) {
    if (m != Membership3::Unknown) cache_.emplace(std::move(key), m);
    return m;
  };

  switch (a->kind) {
    case Term::Kind::Var:
      return remember(set_contains(sigma.lookup(a->v), f) ? Membership3::Member
                                                          : Membership3::NonMember);
    case Term::Kind::Abs: {
      if (ar.is_atom(f))
        // The binder is the unique atomic member of an abstraction's
        // interpretation.
        return remember(ar.atom_var(f) == a->v ? Membership3::Member : Membership3::NonMember);
      FormulaSet ante(ar.antecedent(f).begin(), ar.antecedent(f).end());
      std::sort(ante.begin(), ante.end());
      return remember(
          member_impl(ar.consequent(f), a->left, update(sigma, a->v, std::move(ante)), rem));
    }
    case Term::Kind::App: {
      const TermPtr& p = a->left;
      const TermPtr& q = a->right;
      if (q->is_var()) {
        const FormulaSet& fq = sigma.lookup(q->v);
        if (p->is_abs()) {
          // Monotonicity in the antecedent: the full finite set σ(q) is the
          // optimal witness, so a single recursive query decides membership.
          return remember(member_impl(f, p->left, update(sigma, p->v, fq), rem));
        }
        if (p->is_var()) {
          const FormulaSet& fp = sigma.lookup(p->v);
          for (FormulaId g : fp) {
            if (ar.is_atom(g) || ar.consequent(g) != f) continue;
            FormulaSet ante(ar.antecedent(g).begin(), ar.antecedent(g).end());
            std::sort(ante.begin(), ante.end());
            if (subset(ante, fq)) return remember(Membership3::Member);
          }
          return remember(Membership3::NonMember);
        }
        // Function is itself an application: σ(q) is finite, so the candidate
        // antecedents can be enumerated exhaustively.
        if (fq.size() <= 16) {
          Membership3 acc = Membership3::NonMember;
          std::size_t total = std::size_t{1} << fq.size();
          for (std::size_t mask = 0; mask < total; ++mask) {
            std::vector<FormulaId> ante;
            for (std::size_t i = 0; i < fq.size(); ++i)
              if (mask & (std::size_t{1} << i)) ante.push_back(fq[i]);
            FormulaId g = ar.compound(std::move(ante), f);
            Membership3 m = member_impl(g, p, sigma, rem);
            if (m == Membership3::Member) return remember(Membership3::Member);
            if (m == Membership3::Unknown) acc = Membership3::Unknown;
          }
          return remember(acc);
        }
        return Membership3::Unknown;
      }
      if (p->is_var()) {
        // Candidates come from the finite set σ(p); each antecedent element
        // must be a member of the argument's interpretation.
        const FormulaSet& fp = sigma.lookup(p->v);
        Membership3 acc = Membership3::NonMember;
        for (FormulaId g : fp) {
          if (ar.is_atom(g) || ar.consequent(g) != f) continue;
          Membership3 all = Membership3::Member;
          for (FormulaId e : ar.antecedent(g))
            all = join_all_of(all, member_impl(e, q, sigma, rem));
          if (all == Membership3::Member) return remember(Membership3::Member);
          if (all == Membership3::Unknown) acc = Membership3::Unknown;
        }
        return remember(acc);
      }
      // Both sides are complex: bounded search over the formula universe.
      if (rem <= 0) return Membership3::Unknown;
      std::string uni_key = std::to_string(rem - 1) + "@";
      for (VarId v : universe_alphabet_) uni_key += std::to_string(v.index()) + ",";
      auto it = universe_cache_.find(uni_key);
      if (it == universe_cache_.end())
        it = universe_cache_
                 .emplace(uni_key,
                          formula_universe(universe_alphabet_, rem - 1, budget_.max_width))
                 .first;
      const std::vector<FormulaId>& pool = it->second;
      std::vector<FormulaId> members_of_q;
      for (FormulaId c : pool)
        if (member_impl(c, q, sigma, rem - 1) == Membership3::Member) members_of_q.push_back(c);
      if (p->is_abs()) {
        // Monotone in the antecedent, so test the union of everything found.
        FormulaSet fstar = make_set(members_of_q);
        Membership3 m = member_impl(f, p->left, update(sigma, p->v, std::move(fstar)), rem - 1);
        if (m == Membership3::Member) return remember(Membership3::Member);
        return Membership3::Unknown;
      }
      // Nested application: try antecedent sets up to the width bound.
      std::size_t n = std::min<std::size_t>(members_of_q.size(), 24);
      std::vector<std::vector<FormulaId>> antes;
      antes.push_back({});
      std::function<void(std::size_t, std::vector<FormulaId>&)> gen =
          [&](std::size_t start, std::vector<FormulaId>& acc2) {
            if (!acc2.empty()) antes.push_back(acc2);
            if (static_cast<int>(acc2.size()) >= budget_.max_width) return;
            for (std::size_t i = start; i < n; ++i) {
              acc2.push_back(members_of_q[i]);
              gen(i + 1, acc2);
              acc2.pop_back();
            }
          };
      std::vector<FormulaId> acc2;
      gen(0, acc2);
      for (const auto& ante : antes) {
        FormulaId g = ar.compound(ante, f);
        if (member_impl(g, p, sigma, rem - 1) == Membership3::Member)
          return remember(Membership3::Member);
      }
      return Membership3::Unknown;
    }
  }
  return Membership3::Unknown;
}

Enumeration Oracle::enumerate(const TermPtr& a, const Environment& sigma,
                              const std::vector<VarId>& alphabet, int rank_bound) {
  std::set<VarId> needed;
  collect_term_vars(a, needed);
  for (const auto& [v, fs] : sigma.support) {
    needed.insert(v);
    for (FormulaId g : fs) collect_formula_vars(g, needed);
  }
  for (VarId v : needed)
    if (std::find(alphabet.begin(), alphabet.end(), v) == alphabet.end())
      throw InternalError("enumerate: alphabet must cover the term, the environment support "
                          "and the environment's formulas");
  std::vector<FormulaId> pool = formula_universe(alphabet, rank_bound, budget_.max_width);
  universe_alphabet_ = alphabet;
  Enumeration out{{}, true};
  for (FormulaId f : pool) {
    Membership3 m = member_impl(f, a, sigma, budget_.max_rank);
    if (m == Membership3::Member) out.members.push_back(f);
    if (m == Membership3::Unknown) out.exact = false;
  }
  out.members = make_set(std::move(out.members));
  return out;
}

RefutationResult Oracle::refute(const TermPtr& a, const TermPtr& b,
                                std::span<const Environment> samples) {
  std::set<VarId> vs;
  collect_term_vars(a, vs);
  collect_term_vars(b, vs);
  for (const Environment& sigma : samples)
    for (const auto& [v, fs] : sigma.support) {
      vs.insert(v);
      for (FormulaId g : fs) collect_formula_vars(g, vs);
    }
  std::vector<VarId> alphabet(vs.begin(), vs.end());
  std::vector<FormulaId> pool = formula_universe(alphabet, budget_.max_rank, budget_.max_width);
  universe_alphabet_ = alphabet;
  for (const Environment& sigma : samples) {
    for (FormulaId f : pool) {
      Membership3 ma = member_impl(f, a, sigma, budget_.max_rank);
      if (ma == Membership3::Unknown) continue;
      Membership3 mb = member_impl(f, b, sigma, budget_.max_rank);
      if (mb == Membership3::Unknown) continue;
      if (ma != mb) return RefutationResult{true, f, sigma};
    }
  }
  return RefutationResult{};
}

Membership3 member(FormulaId f, const TermPtr& a, const Environment& sigma, SearchBudget budget) {
  return Oracle(budget).member(f, a, sigma);
}

Enumeration enumerate(const TermPtr& a, const Environment& sigma,
                      const std::vector<VarId>& alphabet, int rank_bound, SearchBudget budget) {
  return Oracle(budget).enumerate(a, sigma, alphabet, rank_bound);
}

RefutationResult refute(const TermPtr& a, const TermPtr& b, std::span<const Environment> samples,
                        SearchBudget budget) {
  return Oracle(budget).refute(a, b, samples);
}

std::optional<BetaRule> beta_rule_from(std::string_view s) {
  if (s == "beta1") return BetaRule::Beta1;
  if (s == "beta2") return BetaRule::Beta2;
  if (s == "beta3") return BetaRule::Beta3;
  if (s == "beta4") return BetaRule::Beta4;
  if (s == "beta5") return BetaRule::Beta5;
  return std::nullopt;
}

std::string_view beta_rule_name(BetaRule r) {
  switch (r) {
    case BetaRule::Beta1:
      return "beta1";
    case BetaRule::Beta2:
      return "beta2";
    case BetaRule::Beta3:
      return "beta3";
    case BetaRule::Beta4:
      return "beta4";
    case BetaRule::Beta5:
      return "beta5";
  }
  return "?";
}

Environment sample_environment(std::mt19937_64& rng, const std::vector<VarId>& alphabet,
                               int max_rank, int max_width) {
  std::vector<FormulaId> pool = formula_universe(alphabet, max_rank, max_width);
  Environment sigma;
  for (VarId v : alphabet) {
    if (rng() % 4 == 0) continue;  // leave some variables at the empty default
    std::size_t count = 1 + rng() % 3;
    std::vector<FormulaId> fs;
    for (std::size_t i = 0; i < count; ++i) fs.push_back(pool[rng() % pool.size()]);
    sigma.support[v] = make_set(std::move(fs));
  }
  return sigma;
}

TermPtr sample_application_free_term(std::mt19937_64& rng, const std::vector<VarId>& alphabet,
                                     int max_depth) {
  VarId v = alphabet[rng() % alphabet.size()];
  if (max_depth <= 1 || rng() % 3 == 0) return mk_var(v);
  return mk_abs(v, sample_application_free_term(rng, alphabet, max_depth - 1));
}

std::pair<TermPtr, TermPtr> sample_beta_instance(BetaRule rule, std::mt19937_64& rng,
                                                 const std::vector<VarId>& alphabet) {
  auto pick = [&] { return alphabet[rng() % alphabet.size()]; };
  auto redex = [](VarId x, TermPtr body, TermPtr arg) {
    return mk_app(mk_abs(x, std::move(body)), std::move(arg));
  };
  TermPtr d = sample_application_free_term(rng, alphabet, 3);
  switch (rule) {
    case BetaRule::Beta1: {
      VarId x = pick();
      return {redex(x, mk_var(x), d), d};
    }
    case BetaRule::Beta2: {
      VarId x = pick();
      VarId y = pick();
      while (y == x) y = pick();
      return {redex(x, mk_var(y), d), mk_var(y)};
    }
    case BetaRule::Beta3: {
      VarId x = pick();
      TermPtr a = sample_application_free_term(rng, alphabet, 3);
      TermPtr b = sample_application_free_term(rng, alphabet, 3);
      return {redex(x, mk_app(a, b), d),
              mk_app(redex(x, a, d), redex(x, b, d))};
    }
    case BetaRule::Beta4: {
      VarId x = pick();
      TermPtr a = sample_application_free_term(rng, alphabet, 3);
      return {redex(x, mk_abs(x, a), d), mk_abs(x, a)};
    }
    case BetaRule::Beta5: {
      VarId x = pick();
      VarId y = pick();
      while (y == x) y = pick();
      TermPtr a = sample_application_free_term(rng, alphabet, 3);
      while (!nonfree(d).contains(y)) d = sample_application_free_term(rng, alphabet, 3);
      return {redex(x, mk_abs(y, a), d), mk_abs(y, redex(x, a, d))};
    }
  }
  throw InternalError("unknown beta rule");
}

SoundnessReport check_beta_soundness(BetaRule rule, int instances, std::uint64_t seed,
                                     const std::vector<VarId>& alphabet, int rank_bound,
                                     SearchBudget budget) {
  std::mt19937_64 rng(seed);
  SoundnessReport report;
  std::vector<FormulaId> pool = formula_universe(alphabet, rank_bound, budget.max_width);
  for (int i = 0; i < instances; ++i) {
    auto [lhs, rhs] = sample_beta_instance(rule, rng, alphabet);
    Environment sigma = sample_environment(rng, alphabet, 2, budget.max_width);
    Oracle oracle(budget);
    ++report.instances;
    for (FormulaId f : pool) {
      Membership3 ml = oracle.member(f, lhs, sigma);
      Membership3 mr = oracle.member(f, rhs, sigma);
      ++report.checked;
      if (ml == Membership3::Unknown || mr == Membership3::Unknown) {
        ++report.unknowns;
        continue;
      }
      if (ml != mr)
        report.discrepancies.push_back({lhs, rhs, f, sigma, ml, mr});
    }
  }
  return report;
}

}  // namespace lamcong::model
