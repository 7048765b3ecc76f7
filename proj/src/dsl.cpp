#include "cni/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "cni/errors.hpp"

namespace cni {

namespace {

enum class Tok { Ident, Int, Comma, LParen, RParen, Plus, Minus, Star, Slash, Caret, Define, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::Define: return "':='";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i)
      if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) ++col;  // count code points
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, start_col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), line, start_col});
      advance(j - i);
      continue;
    }
    if (c == ':' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Define, ":=", line, start_col});
      advance(2);
      continue;
    }
    Tok t;
    switch (c) {
      case ',': t = Tok::Comma; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '/': t = Tok::Slash; break;
      case '^': t = Tok::Caret; break;
      default: {
        std::size_t len = 1;
        unsigned char u = static_cast<unsigned char>(c);
        if (u >= 0xF0) len = 4;
        else if (u >= 0xE0) len = 3;
        else if (u >= 0xC0) len = 2;
        throw ParseError(line, start_col, "unexpected character '" + std::string(src.substr(i, len)) + "'");
      }
    }
    out.push_back({t, std::string(1, c), line, start_col});
    advance(1);
  }
  out.push_back({Tok::Newline, "\n", line, col});
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const VarTable* names) : toks_(std::move(toks)), names_(names) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok t) const { return peek().kind == t; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }

  const Token& expect(Tok t, const char* what = nullptr) {
    if (!at(t))
      fail(peek(), std::string("expected ") + (what ? what : tok_name(t)) + ", found " + describe(peek()));
    return next();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident || t.kind == Tok::Int) return "'" + t.text + "'";
    return tok_name(t.kind);
  }

  void set_names(const VarTable* names) { names_ = names; }

  RationalExpr expr() {
    RationalExpr e = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool plus = next().kind == Tok::Plus;
      RationalExpr r = term();
      e = plus ? e + r : e - r;
    }
    return e;
  }

  RationalExpr term() {
    RationalExpr e = unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      const Token& op = next();
      const Token& at_rhs = peek();
      RationalExpr r = unary();
      if (op.kind == Tok::Star) {
        e = e * r;
      } else {
        if (r.kind() == RationalExpr::Kind::Const && r.value() == 0) fail(at_rhs, "division by zero");
        e = e / r;
      }
    }
    return e;
  }

  RationalExpr unary() {
    if (at(Tok::Minus)) {
      next();
      return -unary();
    }
    return power();
  }

  RationalExpr power() {
    RationalExpr base = atom();
    if (at(Tok::Caret)) {
      next();
      const Token& n = expect(Tok::Int, "an integer exponent");
      if (n.text.size() > 3 || std::stoul(n.text) > 255) fail(n, "exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(n.text)));
    }
    return base;
  }

  RationalExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        next();
        return RationalExpr::constant(parse_rational(t.text));
      case Tok::LParen: {
        next();
        RationalExpr e = expr();
        expect(Tok::RParen);
        return e;
      }
      case Tok::Ident: {
        if (peek(1).kind == Tok::LParen) fail(t, "function '" + t.text + "' is not allowed inside an expression");
        next();
        auto id = names_->index_of(t.text);
        if (!id) fail(t, "unknown name '" + t.text + "'");
        return RationalExpr::point(*id);
      }
      default:
        fail(t, "expected an expression, found " + describe(t));
    }
  }

  std::size_t pos_ = 0;

 private:
  std::vector<Token> toks_;
  const VarTable* names_;
};

struct Call {
  Token name;
  std::vector<Token> args;
};

// name(arg, ...) with identifier arguments.
Call call(Parser& p) {
  Call c{p.expect(Tok::Ident, "a predicate"), {}};
  p.expect(Tok::LParen);
  if (!p.at(Tok::RParen)) {
    c.args.push_back(p.expect(Tok::Ident, "a point name"));
    while (p.at(Tok::Comma)) {
      p.next();
      c.args.push_back(p.expect(Tok::Ident, "a point name"));
    }
  }
  p.expect(Tok::RParen);
  return c;
}

std::vector<std::size_t> resolve(Parser& p, const Construction& c, const Call& call) {
  std::vector<std::size_t> ids;
  for (const auto& a : call.args) {
    auto id = c.points()->index_of(a.text);
    if (!id) p.fail(a, "unknown point '" + a.text + "'");
    ids.push_back(*id);
  }
  return ids;
}

void end_of_statement(Parser& p) {
  if (!p.at(Tok::Newline)) p.fail(p.peek(), "unexpected " + Parser::describe(p.peek()) + " after statement");
  p.next();
}

}  // namespace

bool is_reserved_name(std::string_view name) {
  if (name == "u" || name == "r") return true;
  return name.size() > 1 && name[0] == 'r' &&
         std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

Construction parse_program(std::string_view source) {
  Parser p(lex(source), nullptr);
  Construction c;
  std::optional<Token> prove_at;

  auto new_point = [&](const Token& t) {
    if (is_reserved_name(t.text)) p.fail(t, "'" + t.text + "' is reserved and cannot name a point");
    if (predicate_from_keyword(t.text) || declaration_from_keyword(t.text) || t.text == "point" ||
        t.text == "assume" || t.text == "prove" || t.text == "real")
      p.fail(t, "'" + t.text + "' is a keyword and cannot name a point");
    if (c.points()->index_of(t.text)) p.fail(t, "point '" + t.text + "' is already defined");
  };

  // assume/prove body: a predicate call or real(<expr>).
  auto relation = [&](bool thesis) {
    const Token& head = p.peek();
    if (head.kind == Tok::Ident && head.text == "real" && p.peek(1).kind == Tok::LParen) {
      p.next();
      p.next();
      p.set_names(c.points().get());
      RationalExpr e = p.expr();
      p.expect(Tok::RParen);
      end_of_statement(p);
      if (thesis)
        c.prove_real(e, head.line);
      else
        c.assume_real(e, head.line);
      return;
    }
    Call k = call(p);
    end_of_statement(p);
    auto kind = predicate_from_keyword(k.name.text);
    if (!kind) {
      if (thesis && k.name.text == "equal")
        throw UnsupportedStep("rn0u", k.name.line, "point equality theses are not supported");
      throw UnsupportedStep("niu", k.name.line, "unknown predicate '" + k.name.text + "'");
    }
    if (k.args.size() != predicate_arity(*kind))
      throw UnsupportedStep("nfiu", k.name.line,
                            k.name.text + " takes " + std::to_string(predicate_arity(*kind)) + " points, got " +
                                std::to_string(k.args.size()));
    auto ids = resolve(p, c, k);
    try {
      Predicate pr = make_predicate(*kind, ids);
      if (thesis)
        c.prove(pr, k.name.line);
      else
        c.assume(pr, k.name.line);
    } catch (const ConstructionError& e) {
      p.fail(k.name, e.what());
    }
  };

  while (!p.at(Tok::End)) {
    if (p.at(Tok::Newline)) {
      p.next();
      continue;
    }
    const Token head = p.expect(Tok::Ident, "a statement");
    if (prove_at && head.text != "prove") p.fail(head, "no statements may follow the prove statement");
    if (head.text == "point") {
      do {
        if (p.at(Tok::Comma)) p.next();
        const Token& name = p.expect(Tok::Ident, "a point name");
        new_point(name);
        c.add_free_point(name.text);
      } while (p.at(Tok::Comma));
      end_of_statement(p);
    } else if (head.text == "assume") {
      relation(false);
    } else if (head.text == "prove") {
      if (prove_at) p.fail(head, "only one prove statement is allowed");
      prove_at = head;
      relation(true);
    } else if (p.at(Tok::Define)) {
      new_point(head);
      p.next();
      const Token& first = p.peek();
      if (first.kind == Tok::Ident && p.peek(1).kind == Tok::LParen) {
        Call k = call(p);
        end_of_statement(p);
        auto kind = declaration_from_keyword(k.name.text);
        if (!kind) throw UnsupportedStep("niu", k.name.line, "unknown construction '" + k.name.text + "'");
        if (k.args.size() != declaration_arity(*kind))
          throw UnsupportedStep("nfiu", k.name.line,
                                k.name.text + " takes " + std::to_string(declaration_arity(*kind)) +
                                    " points, got " + std::to_string(k.args.size()));
        auto ids = resolve(p, c, k);
        c.add_declared_point(head.text, Declaration{*kind, ids}, head.line);
      } else {
        p.set_names(c.points().get());
        RationalExpr e = p.expr();
        end_of_statement(p);
        c.add_declared_point(head.text, e, std::nullopt, head.line);
      }
    } else {
      p.fail(head, "unknown statement '" + head.text + "'");
    }
  }
  if (!prove_at) {
    const Token& end = p.peek();
    throw ParseError(end.line, end.column, "missing prove statement");
  }
  return c;
}

namespace {

std::string names(const VarTable& t, const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + t.name(ids[i]);
  return s;
}

std::size_t max_point(const std::vector<RationalExpr>& es) {
  std::size_t m = 0;
  for (const auto& e : es)
    for (std::size_t p : e.points()) m = std::max(m, p + 1);
  return m;
}

}  // namespace

std::string print_program(const Construction& c) {
  const VarTable& t = *c.points();
  std::string out;
  std::size_t next_free = 0;
  // Emits the free points with id < limit that are still pending.
  auto flush = [&](std::size_t limit) {
    std::vector<std::size_t> batch;
    while (next_free < c.free_points().size() && c.free_points()[next_free] < limit)
      batch.push_back(c.free_points()[next_free++]);
    if (!batch.empty()) out += "point " + names(t, batch) + "\n";
  };
  auto relation = [&](const std::optional<Predicate>& source, const RationalExpr& e) {
    if (source) return std::string(predicate_keyword(source->kind)) + "(" + names(t, source->args) + ")";
    return "real(" + e.to_string(t) + ")";
  };
  for (const auto& step : c.steps()) {
    if (const auto* d = std::get_if<DeclarativeStep>(&step)) {
      flush(d->point);
      out += t.name(d->point) + " := ";
      if (d->sugar)
        out += std::string(declaration_keyword(d->sugar->kind)) + "(" + names(t, d->sugar->args) + ")\n";
      else
        out += d->definition.to_string(t) + "\n";
      continue;
    }
    const auto& r = std::get<RelationalStep>(step);
    const auto& shown = r.originals.empty() ? r.relations : r.originals;
    flush(max_point(shown));
    if (r.source) {
      out += "assume " + relation(r.source, RationalExpr()) + "\n";
    } else {
      for (const auto& e : shown) out += "assume " + relation(std::nullopt, e) + "\n";
    }
  }
  flush(t.size());
  if (c.thesis()) {
    const Thesis& th = *c.thesis();
    out += "prove " + relation(th.source, th.original ? *th.original : th.expr) + "\n";
  }
  return out;
}

RationalExpr parse_expression(std::string_view text, const VarTable& vars) {
  Parser p(lex(text), &vars);
  RationalExpr e = p.expr();
  if (!p.at(Tok::Newline)) p.fail(p.peek(), "unexpected " + Parser::describe(p.peek()));
  return e;
}

Polynomial parse_polynomial(std::string_view text, const VarTablePtr& vars) {
  RationalExpr e = parse_expression(text, *vars);
  NormalizedExpr n = expr_normalize(e, vars);
  if (!n.den.is_constant()) throw ParseError(1, 1, "not a polynomial");
  return (1 / *n.den.constant_value()) * n.num;
}

}  // namespace cni
