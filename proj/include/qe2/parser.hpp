#ifndef QE2_PARSER_HPP
#define QE2_PARSER_HPP

#include "qe2/pbw.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qe2 {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

struct ExprAst;
using AstPtr = std::shared_ptr<const ExprAst>;

/// Grammar:  expr := ['-'] term (('+'|'-') term)*
///           term := factor (('*'|'/') factor)*
///           factor := INT | NAME ('^' SINT)? | '(' expr ')' ('^' SINT)?
struct ExprAst {
  enum class Kind { Integer, Symbol, Power, Product, Quotient, Sum, Diff, Neg };
  Kind kind;
  Int value;         // Integer
  std::string name;  // Symbol
  long exp = 1;      // Symbol exponent, Power exponent
  std::vector<AstPtr> kids;
  int line = 1, col = 1;
};

AstPtr parse_expr(const std::string& text);

/// Resolves free names that are neither generators nor parameters
/// (catalog named elements, usually).
using NamedResolver = std::function<std::optional<Element>(const std::string&)>;

Element eval_expr(const AstPtr& ast, const AlgebraPtr& alg, const NamedResolver& named);

Element parse_element(const std::string& text, const AlgebraPtr& alg,
                      const NamedResolver& named = nullptr);

}  // namespace qe2

#endif
