#include "lamcong/term.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>

namespace lamcong {

struct Interner::Impl {
  mutable std::mutex mu;
  std::deque<std::string> names;          // index -> name
  std::map<std::string, std::uint32_t, std::less<>> by_name;
  std::uint32_t mint_counter = 0;
};

Interner& Interner::instance() {
  static Interner inst;
  return inst;
}

Interner::Impl& Interner::impl() const {
  static Impl impl;
  return impl;
}

VarId Interner::intern(std::string_view name) {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  if (auto it = im.by_name.find(name); it != im.by_name.end()) return VarId(it->second);
  auto idx = static_cast<std::uint32_t>(im.names.size());
  im.names.emplace_back(name);
  im.by_name.emplace(std::string(name), idx);
  return VarId(idx);
}

std::optional<VarId> Interner::find(std::string_view name) const {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  if (auto it = im.by_name.find(name); it != im.by_name.end()) return VarId(it->second);
  return std::nullopt;
}

std::string Interner::name(VarId v) const {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  if (v.index() >= im.names.size()) throw InternalError("unknown variable index");
  return im.names[v.index()];
}

std::uint32_t Interner::size() const {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  return static_cast<std::uint32_t>(im.names.size());
}

VarId Interner::mint() {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  for (;;) {
    std::string candidate = "v" + std::to_string(im.mint_counter++);
    if (im.by_name.contains(candidate)) continue;
    auto idx = static_cast<std::uint32_t>(im.names.size());
    im.names.push_back(candidate);
    im.by_name.emplace(std::move(candidate), idx);
    return VarId(idx);
  }
}

void Interner::reset() {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  im.names.clear();
  im.by_name.clear();
  im.mint_counter = 0;
}

VarId var(std::string_view name) { return Interner::instance().intern(name); }

TermPtr mk_var(VarId v) {
  return std::make_shared<Term>(Term{Term::Kind::Var, v, nullptr, nullptr});
}

TermPtr mk_app(TermPtr fun, TermPtr arg) {
  return std::make_shared<Term>(Term{Term::Kind::App, VarId(0), std::move(fun), std::move(arg)});
}

TermPtr mk_abs(VarId binder, TermPtr body) {
  return std::make_shared<Term>(Term{Term::Kind::Abs, binder, std::move(body), nullptr});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var:
      return a->v == b->v;
    case Term::Kind::App:
      return term_eq(a->left, b->left) && term_eq(a->right, b->right);
    case Term::Kind::Abs:
      return a->v == b->v && term_eq(a->left, b->left);
  }
  return false;
}

std::size_t term_size(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return 1;
    case Term::Kind::App:
      return 1 + term_size(t->left) + term_size(t->right);
    case Term::Kind::Abs:
      return 1 + term_size(t->left);
  }
  return 0;
}

namespace {

constexpr std::string_view kLambdaUtf8 = "\xce\xbb";

struct Token {
  enum class Kind { Var, Lambda, Dot, LParen, RParen, LBrack, RBrack, End } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (c == '\\') {
      ++pos_;
      current_ = {Token::Kind::Lambda, "\\", start};
    } else if (text_.substr(pos_).starts_with(kLambdaUtf8)) {
      pos_ += kLambdaUtf8.size();
      current_ = {Token::Kind::Lambda, std::string(kLambdaUtf8), start};
    } else if (c == '.') {
      ++pos_;
      current_ = {Token::Kind::Dot, ".", start};
    } else if (c == '(') {
      ++pos_;
      current_ = {Token::Kind::LParen, "(", start};
    } else if (c == ')') {
      ++pos_;
      current_ = {Token::Kind::RParen, ")", start};
    } else if (c == '[') {
      ++pos_;
      current_ = {Token::Kind::LBrack, "[", start};
    } else if (c == ']') {
      ++pos_;
      current_ = {Token::Kind::RBrack, "]", start};
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size()) {
        char d = text_[end];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'')
          ++end;
        else
          break;
      }
      current_ = {Token::Kind::Var, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
    } else {
      throw SyntaxError(start, "unexpected character '" + std::string(1, c) + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::End, "", 0};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  TermPtr parse() {
    TermPtr t = parse_group();
    if (lex_.peek().kind != Token::Kind::End)
      throw SyntaxError(lex_.peek().pos, "trailing input after term");
    return t;
  }

 private:
  // Juxtaposition chain with an optional trailing abstraction whose body
  // extends to the end of the enclosing group.
  TermPtr parse_group() {
    std::vector<TermPtr> items;
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::End || t.kind == Token::Kind::RParen ||
          t.kind == Token::Kind::RBrack)
        break;
      if (t.kind == Token::Kind::Lambda) {
        items.push_back(parse_abs());
        break;
      }
      items.push_back(parse_atom());
    }
    if (items.empty()) throw SyntaxError(lex_.peek().pos, "expected a term");
    TermPtr acc = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) acc = mk_app(acc, items[i]);
    return acc;
  }

  TermPtr parse_abs() {
    lex_.next();  // lambda
    Token v = lex_.next();
    if (v.kind != Token::Kind::Var)
      throw SyntaxError(v.pos, "expected a variable after the binder");
    if (lex_.peek().kind == Token::Kind::Dot) lex_.next();
    TermPtr body = parse_group();
    return mk_abs(var(v.text), std::move(body));
  }

  TermPtr parse_atom() {
    Token t = lex_.next();
    switch (t.kind) {
      case Token::Kind::Var:
        return mk_var(var(t.text));
      case Token::Kind::LParen: {
        TermPtr inner = parse_group();
        Token close = lex_.next();
        if (close.kind != Token::Kind::RParen) throw SyntaxError(close.pos, "expected ')'");
        return inner;
      }
      case Token::Kind::LBrack: {
        TermPtr inner = parse_group();
        Token close = lex_.next();
        if (close.kind != Token::Kind::RBrack) throw SyntaxError(close.pos, "expected ']'");
        return inner;
      }
      default:
        throw SyntaxError(t.pos, "expected a term");
    }
  }

  Lexer lex_;
};

void print_full(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      out += Interner::instance().name(t->v);
      break;
    case Term::Kind::App:
      out += '[';
      print_full(t->left, out);
      out += ' ';
      print_full(t->right, out);
      out += ']';
      break;
    case Term::Kind::Abs:
      out += '[';
      out += kLambdaUtf8;
      out += Interner::instance().name(t->v);
      out += ' ';
      print_full(t->left, out);
      out += ']';
      break;
  }
}

void print_min(const TermPtr& t, std::string_view lambda, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      out += Interner::instance().name(t->v);
      break;
    case Term::Kind::App: {
      if (t->left->is_abs()) {
        out += '(';
        print_min(t->left, lambda, out);
        out += ')';
      } else {
        print_min(t->left, lambda, out);
      }
      out += ' ';
      if (t->right->is_var()) {
        print_min(t->right, lambda, out);
      } else {
        out += '(';
        print_min(t->right, lambda, out);
        out += ')';
      }
      break;
    }
    case Term::Kind::Abs:
      out += lambda;
      out += Interner::instance().name(t->v);
      out += '.';
      print_min(t->left, lambda, out);
      break;
  }
}

}  // namespace

std::string print_term(const TermPtr& t, PrintStyle style) {
  std::string out;
  switch (style) {
    case PrintStyle::FullBrackets:
      print_full(t, out);
      break;
    case PrintStyle::Minimal:
      print_min(t, "\\", out);
      break;
    case PrintStyle::MinimalUnicode:
      print_min(t, kLambdaUtf8, out);
      break;
  }
  return out;
}

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

}  // namespace lamcong
