#include "lamcong/derivation.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lamcong/subst.hpp"
#include "lamcong/varset.hpp"

namespace lamcong {

namespace {

struct RuleInfo {
  RuleName rule;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<RuleInfo, 15> kRules = {{
    {RuleName::R, "r", 0},
    {RuleName::S, "s", 1},
    {RuleName::T, "t", 2},
    {RuleName::Ell, "ell", 1},
    {RuleName::App, "app", 2},
    {RuleName::Beta1, "beta1", 0},
    {RuleName::Beta2, "beta2", 0},
    {RuleName::Beta3, "beta3", 0},
    {RuleName::Beta4, "beta4", 0},
    {RuleName::Beta5, "beta5", 1},
    {RuleName::AlphaE, "alpha_e", 1},
    {RuleName::EtaE, "eta_e", 0},
    {RuleName::Beta, "beta", 0},
    {RuleName::Alpha, "alpha", 0},
    {RuleName::Eta, "eta", 0},
}};

const RuleInfo& info(RuleName r) {
  for (const auto& ri : kRules)
    if (ri.rule == r) return ri;
  throw InternalError("unknown rule");
}

}  // namespace

std::string_view rule_name_string(RuleName r) { return info(r).name; }

std::optional<RuleName> rule_name_from(std::string_view s) {
  for (const auto& ri : kRules)
    if (ri.name == s) return ri.rule;
  return std::nullopt;
}

std::size_t rule_arity(RuleName r) { return info(r).arity; }

CheckMode check_mode_of(TheoryMode mode) {
  switch (mode) {
    case TheoryMode::Prelambda:
      return CheckMode::Prelambda;
    case TheoryMode::Lambda:
      return CheckMode::Lambda;
    case TheoryMode::Extensional:
      return CheckMode::Extensional;
  }
  return CheckMode::Prelambda;
}

std::string_view check_mode_name(CheckMode mode) {
  switch (mode) {
    case CheckMode::Prelambda:
      return "prelambda";
    case CheckMode::Lambda:
      return "lambda";
    case CheckMode::Extensional:
      return "extensional";
    case CheckMode::TheoryLambda:
      return "theory-lambda";
    case CheckMode::TheoryExtensional:
      return "theory-extensional";
  }
  return "?";
}

std::optional<CheckMode> check_mode_from(std::string_view s) {
  if (s == "pre" || s == "prelambda") return CheckMode::Prelambda;
  if (s == "lambda") return CheckMode::Lambda;
  if (s == "ext" || s == "extensional") return CheckMode::Extensional;
  if (s == "theory-lambda") return CheckMode::TheoryLambda;
  if (s == "theory-ext" || s == "theory-extensional") return CheckMode::TheoryExtensional;
  return std::nullopt;
}

namespace {

bool rule_in_mode(RuleName r, CheckMode mode) {
  switch (r) {
    case RuleName::R:
    case RuleName::S:
    case RuleName::T:
    case RuleName::Ell:
    case RuleName::App:
      return true;
    case RuleName::Beta1:
    case RuleName::Beta2:
    case RuleName::Beta3:
    case RuleName::Beta4:
    case RuleName::Beta5:
      return mode == CheckMode::Prelambda || mode == CheckMode::Lambda ||
             mode == CheckMode::Extensional;
    case RuleName::AlphaE:
      return mode == CheckMode::Lambda || mode == CheckMode::Extensional;
    case RuleName::EtaE:
      return mode == CheckMode::Extensional;
    case RuleName::Beta:
    case RuleName::Alpha:
      return mode == CheckMode::TheoryLambda || mode == CheckMode::TheoryExtensional;
    case RuleName::Eta:
      return mode == CheckMode::TheoryExtensional;
  }
  return false;
}

struct Failure {
  std::string path;
  std::string reason;
};

using CheckResult = std::optional<Failure>;

std::string join_path(const std::vector<int>& path) {
  if (path.empty()) return "\xce\xb5";  // ε
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

class Checker {
 public:
  explicit Checker(CheckMode mode) : mode_(mode) {}

  CheckResult check(const Derivation& d, std::vector<int>& path) {
    if (!rule_in_mode(d.rule, mode_))
      return fail(path, std::string(rule_name_string(d.rule)) + " is not available in mode " +
                            std::string(check_mode_name(mode_)));
    if (d.premises.size() != rule_arity(d.rule))
      return fail(path, std::string(rule_name_string(d.rule)) + " expects " +
                            std::to_string(rule_arity(d.rule)) + " premises, got " +
                            std::to_string(d.premises.size()));
    if (auto f = check_schema(d, path)) return f;
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (auto f = check(d.premises[i], path)) return f;
      path.pop_back();
    }
    return std::nullopt;
  }

 private:
  static CheckResult fail(const std::vector<int>& path, std::string reason) {
    return Failure{join_path(path), std::move(reason)};
  }

  static TermPtr get_term(const Derivation& d, const char* name) {
    auto it = d.bind.find(name);
    return it == d.bind.end() ? nullptr : it->second;
  }

  static std::optional<VarId> get_var(const Derivation& d, const char* name) {
    TermPtr t = get_term(d, name);
    if (!t || !t->is_var()) return std::nullopt;
    return t->v;
  }

  CheckResult check_conclusion(const Derivation& d, const std::vector<int>& path,
                               const TermPtr& lhs, const TermPtr& rhs) {
    if (!term_eq(d.conclusion.lhs, lhs) || !term_eq(d.conclusion.rhs, rhs))
      return fail(path, std::string("conclusion does not match the ") +
                            std::string(rule_name_string(d.rule)) + " schema");
    return std::nullopt;
  }

  CheckResult check_premise(const Derivation& d, const std::vector<int>& path, std::size_t i,
                            const TermPtr& lhs, const TermPtr& rhs) {
    const Judgment& c = d.premises[i].conclusion;
    if (!term_eq(c.lhs, lhs) || !term_eq(c.rhs, rhs))
      return fail(path, "premise " + std::to_string(i) + " does not match the " +
                            std::string(rule_name_string(d.rule)) + " schema");
    return std::nullopt;
  }

  CheckResult check_schema(const Derivation& d, const std::vector<int>& path) {
    auto missing = [&](const char* what) {
      return fail(path, std::string(rule_name_string(d.rule)) +
                            ": missing or ill-sorted binding for " + what);
    };
    auto vx = get_var(d, "x");
    auto vy = get_var(d, "y");
    auto A = get_term(d, "A");
    auto B = get_term(d, "B");
    auto C = get_term(d, "C");
    auto D = get_term(d, "D");
    auto redex = [](VarId x, const TermPtr& body, const TermPtr& arg) {
      return mk_app(mk_abs(x, body), arg);
    };

    switch (d.rule) {
      case RuleName::R:
        if (!A) return missing("A");
        return check_conclusion(d, path, A, A);
      case RuleName::S: {
        if (!A || !B) return missing("A, B");
        if (auto f = check_premise(d, path, 0, A, B)) return f;
        return check_conclusion(d, path, B, A);
      }
      case RuleName::T: {
        if (!A || !B || !C) return missing("A, B, C");
        if (auto f = check_premise(d, path, 0, A, B)) return f;
        if (auto f = check_premise(d, path, 1, B, C)) return f;
        return check_conclusion(d, path, A, C);
      }
      case RuleName::Ell: {
        if (!vx) return missing("x");
        if (!A || !B) return missing("A, B");
        if (auto f = check_premise(d, path, 0, A, B)) return f;
        return check_conclusion(d, path, mk_abs(*vx, A), mk_abs(*vx, B));
      }
      case RuleName::App: {
        if (!A || !B || !C || !D) return missing("A, B, C, D");
        if (auto f = check_premise(d, path, 0, A, B)) return f;
        if (auto f = check_premise(d, path, 1, C, D)) return f;
        return check_conclusion(d, path, mk_app(A, C), mk_app(B, D));
      }
      case RuleName::Beta1: {
        if (!vx) return missing("x");
        if (!D) return missing("D");
        return check_conclusion(d, path, redex(*vx, mk_var(*vx), D), D);
      }
      case RuleName::Beta2: {
        if (!vx || !vy) return missing("x, y");
        if (!D) return missing("D");
        if (*vx == *vy) return fail(path, "beta2 requires x != y");
        return check_conclusion(d, path, redex(*vx, mk_var(*vy), D), mk_var(*vy));
      }
      case RuleName::Beta3: {
        if (!vx) return missing("x");
        if (!A || !B || !D) return missing("A, B, D");
        return check_conclusion(d, path, redex(*vx, mk_app(A, B), D),
                                mk_app(redex(*vx, A, D), redex(*vx, B, D)));
      }
      case RuleName::Beta4: {
        if (!vx) return missing("x");
        if (!A || !D) return missing("A, D");
        return check_conclusion(d, path, redex(*vx, mk_abs(*vx, A), D), mk_abs(*vx, A));
      }
      case RuleName::Beta5: {
        if (!vx || !vy) return missing("x, y");
        if (!A || !D) return missing("A, D");
        if (*vx == *vy) return fail(path, "beta5 requires x != y");
        if (auto f = check_premise(d, path, 0, redex(*vy, D, mk_var(*vx)), D)) return f;
        return check_conclusion(d, path, redex(*vx, mk_abs(*vy, A), D),
                                mk_abs(*vy, redex(*vx, A, D)));
      }
      case RuleName::AlphaE: {
        if (!vx || !vy) return missing("x, y");
        if (!A) return missing("A");
        if (auto f = check_premise(d, path, 0, redex(*vy, A, mk_var(*vx)), A)) return f;
        return check_conclusion(d, path, mk_abs(*vx, A),
                                mk_abs(*vy, mk_app(mk_abs(*vx, A), mk_var(*vy))));
      }
      case RuleName::EtaE: {
        if (!vx || !vy) return missing("x, y");
        if (*vx == *vy) return fail(path, "eta_e requires x != y");
        return check_conclusion(d, path, mk_var(*vy),
                                mk_abs(*vx, mk_app(mk_var(*vy), mk_var(*vx))));
      }
      case RuleName::Beta: {
        if (!vx) return missing("x");
        if (!A || !D) return missing("A, D");
        if (!proviso_beta(A, D))
          return fail(path, "beta proviso fails: B(A) u F(D) = " +
                                nonbound(A).unite(nonfree(D)).to_string() + " != V");
        return check_conclusion(d, path, redex(*vx, A, D), subst_simple(D, *vx, A));
      }
      case RuleName::Alpha: {
        if (!vx || !vy) return missing("x, y");
        if (!A) return missing("A");
        if (!nonfree(A).contains(*vy) || !nonbound(A).contains(*vy))
          return fail(path, "alpha proviso fails: y must lie in F(A) n B(A)");
        return check_conclusion(d, path, mk_abs(*vx, A),
                                mk_abs(*vy, subst_simple(mk_var(*vy), *vx, A)));
      }
      case RuleName::Eta: {
        if (!vy) return missing("y");
        if (!A) return missing("A");
        if (!nonfree(A).contains(*vy))
          return fail(path, "eta proviso fails: y must not occur free in A");
        return check_conclusion(d, path, A, mk_abs(*vy, mk_app(A, mk_var(*vy))));
      }
    }
    return fail(path, "unknown rule");
  }

  CheckMode mode_;
};

}  // namespace

Verdict validate(const Derivation& d, CheckMode mode) {
  std::vector<int> path;
  if (auto f = Checker(mode).check(d, path)) return Verdict{false, f->path, f->reason};
  return Verdict{true, "", ""};
}

namespace {

using json = nlohmann::ordered_json;

json to_json_rec(const Derivation& d) {
  json node;
  node["rule"] = std::string(rule_name_string(d.rule));
  node["conclusion"] = {{"lhs", print_term(d.conclusion.lhs)},
                        {"rhs", print_term(d.conclusion.rhs)}};
  json bind = json::object();
  for (const auto& [k, v] : d.bind) bind[k] = print_term(v);
  node["bind"] = bind;
  json prem = json::array();
  for (const auto& p : d.premises) prem.push_back(to_json_rec(p));
  node["premises"] = prem;
  return node;
}

TermPtr parse_term_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where, "expected a term string");
  try {
    return parse_term(j.get<std::string>());
  } catch (const SyntaxError& e) {
    throw FormatError(where, std::string("bad term: ") + e.what());
  }
}

Derivation from_json_rec(const json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(where, "expected a derivation node object");
  if (!j.contains("rule") || !j["rule"].is_string())
    throw FormatError(where + "/rule", "missing rule name");
  auto rule = rule_name_from(j["rule"].get<std::string>());
  if (!rule) throw FormatError(where + "/rule", "unknown rule name '" +
                                                    j["rule"].get<std::string>() + "'");
  if (!j.contains("conclusion") || !j["conclusion"].is_object())
    throw FormatError(where + "/conclusion", "missing conclusion");
  const json& c = j["conclusion"];
  if (!c.contains("lhs") || !c.contains("rhs"))
    throw FormatError(where + "/conclusion", "conclusion needs lhs and rhs");

  Derivation d;
  d.rule = *rule;
  d.conclusion.lhs = parse_term_at(c["lhs"], where + "/conclusion/lhs");
  d.conclusion.rhs = parse_term_at(c["rhs"], where + "/conclusion/rhs");

  if (j.contains("bind")) {
    if (!j["bind"].is_object()) throw FormatError(where + "/bind", "bind must be an object");
    for (const auto& [k, v] : j["bind"].items())
      d.bind[k] = parse_term_at(v, where + "/bind/" + k);
  }

  // Every schematic name the rule mentions must be bound.
  static const std::map<RuleName, std::vector<const char*>> kNeeds = {
      {RuleName::R, {"A"}},
      {RuleName::S, {"A", "B"}},
      {RuleName::T, {"A", "B", "C"}},
      {RuleName::Ell, {"x", "A", "B"}},
      {RuleName::App, {"A", "B", "C", "D"}},
      {RuleName::Beta1, {"x", "D"}},
      {RuleName::Beta2, {"x", "y", "D"}},
      {RuleName::Beta3, {"x", "A", "B", "D"}},
      {RuleName::Beta4, {"x", "A", "D"}},
      {RuleName::Beta5, {"x", "y", "A", "D"}},
      {RuleName::AlphaE, {"x", "y", "A"}},
      {RuleName::EtaE, {"x", "y"}},
      {RuleName::Beta, {"x", "A", "D"}},
      {RuleName::Alpha, {"x", "y", "A"}},
      {RuleName::Eta, {"y", "A"}},
  };
  for (const char* need : kNeeds.at(*rule))
    if (!d.bind.contains(need))
      throw FormatError(where + "/bind", std::string("unbound schematic variable '") + need +
                                             "' for rule " + std::string(rule_name_string(*rule)));

  if (j.contains("premises")) {
    if (!j["premises"].is_array())
      throw FormatError(where + "/premises", "premises must be an array");
    std::size_t i = 0;
    for (const auto& p : j["premises"]) {
      d.premises.push_back(from_json_rec(p, where + "/premises/" + std::to_string(i)));
      ++i;
    }
  }
  return d;
}

}  // namespace

std::string derivation_to_json(const Derivation& d) { return to_json_rec(d).dump(2) + "\n"; }

Derivation derivation_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), e.what());
  }
  return from_json_rec(j, "");
}

void save_derivation(const Derivation& d, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw FormatError(file.string(), "cannot open file for writing");
  out << derivation_to_json(d);
}

Derivation load_derivation(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw FormatError(file.string(), "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return derivation_from_json(ss.str());
}

bool derivation_eq(const Derivation& a, const Derivation& b) {
  if (a.rule != b.rule) return false;
  if (!term_eq(a.conclusion.lhs, b.conclusion.lhs) ||
      !term_eq(a.conclusion.rhs, b.conclusion.rhs))
    return false;
  if (a.bind.size() != b.bind.size() || a.premises.size() != b.premises.size()) return false;
  for (auto ita = a.bind.begin(), itb = b.bind.begin(); ita != a.bind.end(); ++ita, ++itb) {
    if (ita->first != itb->first || !term_eq(ita->second, itb->second)) return false;
  }
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (!derivation_eq(a.premises[i], b.premises[i])) return false;
  return true;
}

}  // namespace lamcong
