// lamcong: batch front end over the term kernel. Line-oriented output,
// deterministic for a fixed --seed. Exit codes: 0 success/Equal/Valid,
// 1 Distinct/Invalid/Separated, 2 input error, 3 Unknown/fuel/budget.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lamcong/calculus.hpp"
#include "lamcong/derivation.hpp"
#include "lamcong/model.hpp"
#include "lamcong/scripts.hpp"
#include "lamcong/subst.hpp"
#include "lamcong/term.hpp"
#include "lamcong/varset.hpp"

namespace {

using namespace lamcong;

constexpr int kExitOk = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;

std::size_t default_fuel() {
  if (const char* env = std::getenv("LAMCONG_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultFuel;
}

TheoryMode parse_theory(const std::string& s) {
  if (s == "pre" || s == "prelambda") return TheoryMode::Prelambda;
  if (s == "lambda") return TheoryMode::Lambda;
  if (s == "ext" || s == "extensional") return TheoryMode::Extensional;
  throw CLI::ValidationError("--theory must be pre, lambda or ext");
}

std::string finite_set_string(const std::vector<VarId>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += Interner::instance().name(vs[i]);
  }
  return out + "}";
}

// --bind x=x,A="\y.y x": comma-separated name=term pairs; term text never
// contains a comma.
std::map<std::string, TermPtr> parse_bindings(const std::vector<std::string>& specs) {
  std::map<std::string, TermPtr> out;
  for (const std::string& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw BindingError("binding '" + item + "' is not of the form name=term");
      std::string name = item.substr(0, eq);
      std::string text = item.substr(eq + 1);
      if (!text.empty() && text.front() == '"' && text.back() == '"' && text.size() >= 2)
        text = text.substr(1, text.size() - 2);
      out[name] = parse_term(text);
    }
  }
  return out;
}

model::Environment load_environment(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw FormatError(spec, "cannot open environment file");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return model::environment_from_json(text);
}

int run(int argc, char** argv) {
  CLI::App app{"substitution-free lambda calculus kernel"};
  app.require_subcommand(1);

  std::size_t fuel = default_fuel();
  std::uint64_t seed = 0xC0FFEE;

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "parse a term and echo it back");
  std::string parse_text;
  cmd_parse->add_option("term", parse_text, "term text")->required();
  cmd_parse->callback([&] {
    TermPtr t = parse_term(parse_text);
    std::cout << "OK: " << print_term(t, PrintStyle::MinimalUnicode) << "\n";
  });

  // print
  auto* cmd_print = app.add_subcommand("print", "re-render a term in a chosen style");
  std::string print_text, style = "minimal";
  cmd_print->add_option("term", print_text, "term text")->required();
  cmd_print->add_option("--style", style, "full | minimal (default minimal)");
  cmd_print->callback([&] {
    TermPtr t = parse_term(print_text);
    if (style == "full")
      std::cout << print_term(t, PrintStyle::FullBrackets) << "\n";
    else if (style == "minimal")
      std::cout << print_term(t, PrintStyle::Minimal) << "\n";
    else
      throw CLI::ValidationError("--style must be full or minimal");
  });

  // vars
  auto* cmd_vars = app.add_subcommand("vars", "report free, bound and independent variables");
  std::string vars_text;
  cmd_vars->add_option("term", vars_text, "term text")->required();
  cmd_vars->callback([&] {
    TermPtr t = parse_term(vars_text);
    std::cout << "free: " << finite_set_string(free_vars(t))
              << "; bound: " << finite_set_string(bound_vars(t))
              << "; independent: " << nonfree(t).to_string() << "\n";
  });

  // normalize
  auto* cmd_norm = app.add_subcommand("normalize", "rewrite to normal form");
  std::string norm_text, norm_theory = "pre";
  bool norm_trace = false, norm_prenorm = false;
  cmd_norm->add_option("term", norm_text, "term text")->required();
  cmd_norm->add_option("--theory", norm_theory, "pre | lambda | ext (default pre)");
  cmd_norm->add_option("--fuel", fuel, "max rewrite steps");
  cmd_norm->add_flag("--trace", norm_trace, "print one line per step");
  cmd_norm->add_flag("--prenormalize-arg", norm_prenorm,
                     "use the argument's normal form for the nested-binder side condition");
  cmd_norm->callback([&] {
    TermPtr t = parse_term(norm_text);
    ReduceOptions opts;
    opts.prenormalize_arg = norm_prenorm;
    NormalizationResult r = normalize(t, parse_theory(norm_theory), fuel, norm_trace, opts);
    if (norm_trace) {
      std::size_t n = 1;
      for (const Step& s : r.trace)
        std::cout << "step " << n++ << ": " << s.rule << " at " << s.path << " => "
                  << print_term(s.term, PrintStyle::MinimalUnicode) << "\n";
    }
    if (r.normal()) {
      std::cout << "normal: " << print_term(r.term, PrintStyle::MinimalUnicode) << "\n";
    } else {
      std::cout << "fuel-exhausted after " << r.steps
                << " steps: " << print_term(r.term, PrintStyle::MinimalUnicode) << "\n";
      std::exit(kExitUnknown);
    }
  });

  // eq
  auto* cmd_eq = app.add_subcommand("eq", "decide equivalence of two terms");
  std::string eq_a, eq_b, eq_theory = "pre";
  bool eq_prenorm = false;
  cmd_eq->add_option("a", eq_a, "first term")->required();
  cmd_eq->add_option("b", eq_b, "second term")->required();
  cmd_eq->add_option("--theory", eq_theory, "pre | lambda | ext (default pre)");
  cmd_eq->add_option("--fuel", fuel, "max rewrite steps per side");
  cmd_eq->add_flag("--prenormalize-arg", eq_prenorm,
                   "use the argument's normal form for the nested-binder side condition");
  cmd_eq->callback([&] {
    ReduceOptions opts;
    opts.prenormalize_arg = eq_prenorm;
    EqVerdict v = equivalent(parse_term(eq_a), parse_term(eq_b), parse_theory(eq_theory), fuel,
                             opts);
    switch (v.kind) {
      case EqVerdict::Kind::Equal:
        std::cout << "Equal\n";
        break;
      case EqVerdict::Kind::DistinctNormalForms:
        std::cout << "DistinctNormalForms\n";
        std::exit(kExitDistinct);
      case EqVerdict::Kind::Unknown:
        std::cout << "Unknown: " << v.reason << "\n";
        std::exit(kExitUnknown);
    }
  });

  // check
  auto* cmd_check = app.add_subcommand("check", "validate a derivation file");
  std::string check_file, check_mode = "lambda";
  cmd_check->add_option("file", check_file, "derivation JSON file")->required();
  cmd_check->add_option("--mode", check_mode,
                        "pre | lambda | ext | theory-lambda | theory-ext (default lambda)");
  cmd_check->callback([&] {
    auto mode = check_mode_from(check_mode);
    if (!mode) throw CLI::ValidationError("unknown --mode");
    Derivation d = load_derivation(check_file);
    Verdict v = validate(d, *mode);
    if (v.valid) {
      std::cout << "Valid\n";
    } else {
      std::cout << "Invalid at " << v.node_path << ": " << v.reason << "\n";
      std::exit(kExitDistinct);
    }
  });

  // script
  auto* cmd_script = app.add_subcommand("script", "build a library derivation");
  std::string script_name, script_out;
  std::vector<std::string> script_binds, script_premises;
  bool script_list = false;
  cmd_script->add_option("name", script_name, "script name");
  cmd_script->add_option("--bind", script_binds, "comma-separated name=term bindings");
  cmd_script->add_option("--premise", script_premises, "premise derivation file (repeatable)");
  cmd_script->add_option("--out", script_out, "output file (default stdout)");
  cmd_script->add_flag("--list", script_list, "list available scripts");
  cmd_script->callback([&] {
    if (script_list) {
      for (const std::string& n : script_names())
        std::cout << n << " (" << check_mode_name(script_mode(n)) << ")\n";
      return;
    }
    if (script_name.empty()) throw CLI::ValidationError("script name required");
    ScriptArgs args;
    args.bind = parse_bindings(script_binds);
    for (const std::string& f : script_premises) args.premises.push_back(load_derivation(f));
    Derivation d = script(script_name, args);
    Verdict v = validate(d, script_mode(script_name));
    if (!v.valid)
      throw InternalError("generated derivation failed validation at " + v.node_path + ": " +
                          v.reason);
    if (script_out.empty())
      std::cout << derivation_to_json(d);
    else
      save_derivation(d, script_out);
    std::cerr << "conclusion: " << print_term(d.conclusion.lhs, PrintStyle::MinimalUnicode)
              << " ~ " << print_term(d.conclusion.rhs, PrintStyle::MinimalUnicode) << " ["
              << check_mode_name(script_mode(script_name)) << "]\n";
  });

  // model
  auto* cmd_model = app.add_subcommand("model", "graph-algebra interpretation oracle");
  cmd_model->require_subcommand(1);
  int width = 2, rank = 3;
  cmd_model->add_option("--width", width, "max antecedent width (default 2)");
  cmd_model->add_option("--rank", rank, "max formula rank (default 3)");
  cmd_model->add_option("--seed", seed, "sampling seed");

  auto* m_member = cmd_model->add_subcommand("member", "membership of a formula");
  std::string mm_formula, mm_term, mm_env = "{}";
  m_member->add_option("--formula", mm_formula, "formula text")->required();
  m_member->add_option("--term", mm_term, "term text")->required();
  m_member->add_option("--env", mm_env, "environment JSON text or file");
  m_member->callback([&] {
    model::SearchBudget budget{rank, width};
    model::Membership3 m = model::member(model::parse_formula(mm_formula), parse_term(mm_term),
                                         load_environment(mm_env), budget);
    std::cout << model::membership_name(m) << "\n";
    if (m == model::Membership3::NonMember) std::exit(kExitDistinct);
    if (m == model::Membership3::Unknown) std::exit(kExitUnknown);
  });

  auto* m_enum = cmd_model->add_subcommand("enum", "enumerate members up to a rank bound");
  std::string me_term, me_env = "{}", me_alphabet;
  int me_rank_bound = 2;
  m_enum->add_option("--term", me_term, "term text")->required();
  m_enum->add_option("--env", me_env, "environment JSON text or file");
  m_enum->add_option("--alphabet", me_alphabet, "comma-separated variables");
  m_enum->add_option("--rank-bound", me_rank_bound, "max formula rank enumerated (default 2)");
  m_enum->callback([&] {
    TermPtr t = parse_term(me_term);
    model::Environment sigma = load_environment(me_env);
    std::vector<VarId> alphabet;
    if (me_alphabet.empty()) {
      for (VarId v : free_vars(t)) alphabet.push_back(v);
      for (VarId v : bound_vars(t)) alphabet.push_back(v);
      for (const auto& [v, fs] : sigma.support) alphabet.push_back(v);
      std::sort(alphabet.begin(), alphabet.end());
      alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    } else {
      std::stringstream ss(me_alphabet);
      std::string item;
      while (std::getline(ss, item, ',')) alphabet.push_back(var(item));
    }
    model::SearchBudget budget{rank, width};
    model::Enumeration e = model::enumerate(t, sigma, alphabet, me_rank_bound, budget);
    for (model::FormulaId f : e.members) std::cout << model::formula_to_string(f) << "\n";
    std::cout << "exact: " << (e.exact ? "true" : "false") << "\n";
  });

  auto* m_refute = cmd_model->add_subcommand("refute", "search for a separating formula");
  std::string mr_a, mr_b;
  int mr_samples = 20;
  m_refute->add_option("a", mr_a, "first term")->required();
  m_refute->add_option("b", mr_b, "second term")->required();
  m_refute->add_option("--samples", mr_samples, "number of sampled environments (default 20)");
  m_refute->callback([&] {
    TermPtr a = parse_term(mr_a);
    TermPtr b = parse_term(mr_b);
    std::vector<VarId> alphabet;
    for (VarId v : free_vars(a)) alphabet.push_back(v);
    for (VarId v : bound_vars(a)) alphabet.push_back(v);
    for (VarId v : free_vars(b)) alphabet.push_back(v);
    for (VarId v : bound_vars(b)) alphabet.push_back(v);
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    if (alphabet.empty()) alphabet.push_back(var("x"));
    std::mt19937_64 rng(seed);
    std::vector<model::Environment> samples;
    samples.push_back(model::Environment{});  // the empty environment first
    for (int i = 1; i < mr_samples; ++i)
      samples.push_back(model::sample_environment(rng, alphabet, 2, width));
    model::SearchBudget budget{rank, width};
    model::RefutationResult r = model::refute(a, b, samples, budget);
    if (r.separated) {
      std::cout << "Separated: formula " << model::formula_to_string(r.witness) << " env "
                << model::environment_to_json(r.env) << "\n";
      std::exit(kExitDistinct);
    }
    std::cout << "NotSeparated\n";
  });

  auto* m_sound = cmd_model->add_subcommand("soundness", "sampled rule soundness report");
  std::string ms_rule;
  int ms_samples = 100, ms_alpha_size = 3;
  m_sound->add_option("--rule", ms_rule, "beta1..beta5")->required();
  m_sound->add_option("--samples", ms_samples, "instances to sample (default 100)");
  m_sound->add_option("--alphabet-size", ms_alpha_size, "number of variables (default 3)");
  m_sound->callback([&] {
    auto rule = model::beta_rule_from(ms_rule);
    if (!rule) throw CLI::ValidationError("--rule must be beta1..beta5");
    std::vector<VarId> alphabet;
    const char* names[] = {"x", "y", "z", "u", "w"};
    for (int i = 0; i < ms_alpha_size && i < 5; ++i) alphabet.push_back(var(names[i]));
    model::SearchBudget budget{rank, width};
    model::SoundnessReport rep =
        model::check_beta_soundness(*rule, ms_samples, seed, alphabet, rank, budget);
    double unknown_rate = rep.checked ? 100.0 * rep.unknowns / rep.checked : 0.0;
    std::cout << "rule " << ms_rule << ": instances=" << rep.instances
              << " checked=" << rep.checked << " discrepancies=" << rep.discrepancies.size()
              << " unknown-rate=" << unknown_rate << "%\n";
    for (const auto& d : rep.discrepancies)
      std::cout << "  discrepancy: " << model::formula_to_string(d.formula) << " lhs="
                << model::membership_name(d.left) << " rhs=" << model::membership_name(d.right)
                << " on " << print_term(d.lhs, PrintStyle::MinimalUnicode) << " vs "
                << print_term(d.rhs, PrintStyle::MinimalUnicode) << "\n";
    if (!rep.discrepancies.empty()) std::exit(kExitDistinct);
  });

  CLI11_PARSE(app, argc, argv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lamcong::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitInput;
  } catch (const lamcong::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitInput;
  } catch (const lamcong::BindingError& e) {
    std::cerr << "binding error: " << e.what() << "\n";
    return kExitInput;
  } catch (const lamcong::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
