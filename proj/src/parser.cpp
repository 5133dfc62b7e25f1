#include "qe2/parser.hpp"

#include <cctype>

namespace qe2 {

namespace {

struct Token {
  enum class Type { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& cur() const { return tok_; }

  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.type = Token::Type::End;
      tok_.text.clear();
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        t += s_[pos_];
        bump();
      }
      tok_.type = Token::Type::Int;
      tok_.text = std::move(t);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        t += s_[pos_];
        bump();
      }
      tok_.type = Token::Type::Name;
      tok_.text = std::move(t);
      return;
    }
    bump();
    switch (c) {
      case '+': tok_.type = Token::Type::Plus; return;
      case '-': tok_.type = Token::Type::Minus; return;
      case '*': tok_.type = Token::Type::Star; return;
      case '/': tok_.type = Token::Type::Slash; return;
      case '^': tok_.type = Token::Type::Caret; return;
      case '(': tok_.type = Token::Type::LParen; return;
      case ')': tok_.type = Token::Type::RParen; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col_ - 1);
    }
  }

 private:
  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{Token::Type::End, "", 1, 1};
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  AstPtr parse() {
    AstPtr e = expr();
    if (lex_.cur().type != Token::Type::End)
      throw ParseError("trailing input", lex_.cur().line, lex_.cur().col);
    return e;
  }

 private:
  static std::shared_ptr<ExprAst> node(ExprAst::Kind k, int line, int col) {
    auto n = std::make_shared<ExprAst>();
    n->kind = k;
    n->line = line;
    n->col = col;
    return n;
  }

  AstPtr expr() {
    int line = lex_.cur().line, col = lex_.cur().col;
    AstPtr acc;
    if (lex_.cur().type == Token::Type::Minus) {
      lex_.advance();
      auto n = node(ExprAst::Kind::Neg, line, col);
      n->kids.push_back(term());
      acc = n;
    } else {
      acc = term();
    }
    while (lex_.cur().type == Token::Type::Plus || lex_.cur().type == Token::Type::Minus) {
      bool plus = lex_.cur().type == Token::Type::Plus;
      int l = lex_.cur().line, c = lex_.cur().col;
      lex_.advance();
      auto n = node(plus ? ExprAst::Kind::Sum : ExprAst::Kind::Diff, l, c);
      n->kids.push_back(acc);
      n->kids.push_back(term());
      acc = n;
    }
    return acc;
  }

  AstPtr term() {
    AstPtr acc = factor();
    while (lex_.cur().type == Token::Type::Star || lex_.cur().type == Token::Type::Slash) {
      bool mul = lex_.cur().type == Token::Type::Star;
      int l = lex_.cur().line, c = lex_.cur().col;
      lex_.advance();
      auto n = node(mul ? ExprAst::Kind::Product : ExprAst::Kind::Quotient, l, c);
      n->kids.push_back(acc);
      n->kids.push_back(factor());
      acc = n;
    }
    return acc;
  }

  long exponent() {
    bool neg = false;
    if (lex_.cur().type == Token::Type::Minus) {
      neg = true;
      lex_.advance();
    }
    if (lex_.cur().type != Token::Type::Int)
      throw ParseError("exponent must be an integer literal", lex_.cur().line, lex_.cur().col);
    long v = std::stol(lex_.cur().text);
    lex_.advance();
    return neg ? -v : v;
  }

  AstPtr factor() {
    const Token t = lex_.cur();
    if (t.type == Token::Type::Int) {
      lex_.advance();
      auto n = node(ExprAst::Kind::Integer, t.line, t.col);
      n->value = Int(t.text);
      return n;
    }
    if (t.type == Token::Type::Name) {
      lex_.advance();
      auto n = node(ExprAst::Kind::Symbol, t.line, t.col);
      n->name = t.text;
      if (lex_.cur().type == Token::Type::Caret) {
        lex_.advance();
        n->exp = exponent();
      }
      return n;
    }
    if (t.type == Token::Type::LParen) {
      lex_.advance();
      AstPtr inner = expr();
      if (lex_.cur().type != Token::Type::RParen)
        throw ParseError("expected ')'", lex_.cur().line, lex_.cur().col);
      lex_.advance();
      if (lex_.cur().type == Token::Type::Caret) {
        lex_.advance();
        auto n = node(ExprAst::Kind::Power, t.line, t.col);
        n->exp = exponent();
        n->kids.push_back(inner);
        return n;
      }
      return inner;
    }
    throw ParseError("expected a factor", t.line, t.col);
  }

  Lexer lex_;
};

}  // namespace

AstPtr parse_expr(const std::string& text) {
  if (text.empty()) throw ParseError("empty expression", 1, 1);
  return Parser(text).parse();
}

Element eval_expr(const AstPtr& ast, const AlgebraPtr& alg, const NamedResolver& named) {
  switch (ast->kind) {
    case ExprAst::Kind::Integer:
      return Element::scalar(alg, Scalar::integer(alg->ring(), ast->value));
    case ExprAst::Kind::Symbol: {
      int gi = alg->gen_index(ast->name);
      if (gi >= 0) return Element::generator(alg, gi, ast->exp);
      int pi = alg->ring()->index(ast->name);
      if (pi >= 0)
        return Element::scalar(alg, Scalar::param(alg->ring(), pi, static_cast<int>(ast->exp)));
      if (named) {
        if (auto e = named(ast->name)) {
          if (e->alg().get() != alg.get())
            throw ParseError("named element " + ast->name + " lives in " + e->alg()->id(),
                             ast->line, ast->col);
          return e->pow(ast->exp);
        }
      }
      throw ParseError("unknown symbol '" + ast->name + "' for algebra " + alg->id(), ast->line,
                       ast->col);
    }
    case ExprAst::Kind::Power:
      return eval_expr(ast->kids[0], alg, named).pow(ast->exp);
    case ExprAst::Kind::Product:
      return eval_expr(ast->kids[0], alg, named) * eval_expr(ast->kids[1], alg, named);
    case ExprAst::Kind::Quotient: {
      Element d = eval_expr(ast->kids[1], alg, named);
      auto inv = invert_unit(d);
      if (!inv) throw ParseError("division by a non-unit", ast->line, ast->col);
      return eval_expr(ast->kids[0], alg, named) * *inv;
    }
    case ExprAst::Kind::Sum:
      return eval_expr(ast->kids[0], alg, named) + eval_expr(ast->kids[1], alg, named);
    case ExprAst::Kind::Diff:
      return eval_expr(ast->kids[0], alg, named) - eval_expr(ast->kids[1], alg, named);
    case ExprAst::Kind::Neg:
      return -eval_expr(ast->kids[0], alg, named);
  }
  throw Error("eval_expr: unreachable");
}

Element parse_element(const std::string& text, const AlgebraPtr& alg,
                      const NamedResolver& named) {
  return eval_expr(parse_expr(text), alg, named);
}

}  // namespace qe2
