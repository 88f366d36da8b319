#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtsym/macdonald.hpp"

namespace qtsym::expr {

struct Location {
  int line = 1;
  int column = 1;  // 1-based; end of input is one past the last character
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Location loc, const std::string& what);
  Location location() const { return loc_; }

 private:
  Location loc_;
};

// Raised while evaluating; the message carries the failing module's text.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// basis_name is the bare basis argument of convert(f, m).
enum class Type { scalar, symfunc, basis_name };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { integer, param, atom, macdonald, basis_ref, neg, add, sub, mul, div, pow, call };
  Kind kind = Kind::integer;
  Type type = Type::scalar;
  Location loc;
  BigInt value;           // integer
  Param param = Param::q;  // param
  Basis basis = Basis::s;  // atom, basis_ref
  Partition partition;     // atom, macdonald
  long exponent = 0;       // pow
  std::string name;        // call
  std::vector<Expr> args;  // operands or call arguments
};

Expr parse(std::string_view text);
// Minimal-parenthesis text with parse(render(e)) structurally equal to e.
std::string render(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);
int depth(const Expr& e);  // leaves have depth 1

struct Value {
  Type type = Type::scalar;
  ParamRat scalar;
  SymFunc symfunc;
};

struct Options {
  Bindings at;                 // applied to the final value
  std::optional<Basis> basis;  // target basis for SymFunc results
};

Value evaluate(const Expr& e, const Options& options = {});
// Bindings from "q=1,t=1/q"; values are scalar expressions in q,t,u.
Bindings parse_bindings(std::string_view text);

struct Term {
  std::string basis;  // empty for scalar records
  Partition partition;
  std::string coefficient;
};

struct OutputRecord {
  std::string request;
  std::string kind;  // scalar | symfunc | table | word
  std::string text;
  std::vector<Term> terms;
};

OutputRecord make_record(std::string request, const Value& v);
OutputRecord text_record(std::string request, std::string kind, std::string text);
// Rebuilds the canonical text of scalar and symfunc records from the terms.
std::string text_from_terms(const OutputRecord& r);
std::string to_json(const OutputRecord& r);
OutputRecord from_json(std::string_view json);

}  // namespace qtsym::expr
