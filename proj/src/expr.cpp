#include "qtsym/expr.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "json.hpp"
#include "qtsym/plethysm.hpp"
#include "qtsym/rectangular.hpp"
#include "qtsym/tamari.hpp"

namespace qtsym::expr {

ParseError::ParseError(Location loc, const std::string& what)
    : std::runtime_error("line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": " +
                         what),
      loc_(loc) {}

namespace {

enum class Tok { integer, ident, lbracket, rbracket, lparen, rparen, comma, plus, minus, star, slash, caret, equals, end };

struct Token {
  Tok kind;
  std::string text;
  Location loc;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Location loc;
  size_t i = 0;
  auto advance = [&](size_t k) {
    for (size_t j = 0; j < k; ++j) {
      if (src[i + j] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    i += k;
  };
  while (i < src.size()) {
    unsigned char c = src[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Location start = loc;
    if (std::isdigit(c)) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    static const std::map<char, Tok> punct = {{'[', Tok::lbracket}, {']', Tok::rbracket}, {'(', Tok::lparen},
                                              {')', Tok::rparen},   {',', Tok::comma},    {'+', Tok::plus},
                                              {'-', Tok::minus},    {'*', Tok::star},     {'/', Tok::slash},
                                              {'^', Tok::caret},    {'=', Tok::equals}};
    auto it = punct.find(static_cast<char>(c));
    if (it == punct.end()) throw ParseError(start, std::string("unexpected character '") + static_cast<char>(c) + "'");
    out.push_back({it->second, std::string(1, static_cast<char>(c)), start});
    advance(1);
  }
  out.push_back({Tok::end, "", loc});
  return out;
}

// Argument kinds of the call table. `value` accepts scalars too, promoted to
// multiples of 1.
enum class Arg { value, scalar, basis };

struct Signature {
  std::vector<Arg> args;
  size_t required;
  Type result;
};

const std::map<std::string, Signature>& call_table() {
  static const std::map<std::string, Signature> table = {
      {"nabla", {{Arg::value, Arg::scalar}, 1, Type::symfunc}},
      {"delta", {{Arg::value, Arg::value}, 1, Type::symfunc}},
      {"omega", {{Arg::value}, 1, Type::symfunc}},
      {"skew", {{Arg::value, Arg::value}, 2, Type::symfunc}},
      {"kron", {{Arg::value, Arg::value}, 2, Type::symfunc}},
      {"plethysm", {{Arg::value, Arg::value}, 2, Type::symfunc}},
      {"star", {{Arg::value}, 1, Type::symfunc}},
      {"scalar", {{Arg::value, Arg::value}, 2, Type::scalar}},
      {"qtscalar", {{Arg::value, Arg::value}, 2, Type::scalar}},
      {"convert", {{Arg::value, Arg::basis}, 2, Type::symfunc}},
      {"qmn", {{Arg::scalar, Arg::scalar, Arg::value}, 2, Type::symfunc}},
      {"seed", {{Arg::value, Arg::scalar, Arg::scalar}, 3, Type::symfunc}},
      {"catalan", {{Arg::scalar, Arg::scalar}, 2, Type::scalar}},
      {"parking", {{Arg::scalar, Arg::scalar}, 2, Type::scalar}},
      {"tamari", {{Arg::scalar, Arg::scalar}, 2, Type::scalar}},
      {"eval", {{Arg::value, Arg::scalar}, 2, Type::scalar}},
  };
  return table;
}

std::optional<Param> param_from_name(std::string_view s) {
  for (int i = 0; i < kNumParams; ++i)
    if (s == kParamNames[i]) return static_cast<Param>(i);
  return std::nullopt;
}

std::shared_ptr<Node> make(Node::Kind k, Location loc) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->loc = loc;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Expr whole() {
    Expr e = expression();
    expect(Tok::end, "end of input");
    return e;
  }

  Bindings bindings() {
    Bindings out;
    do {
      const Token& name = peek();
      expect(Tok::ident, "a parameter name");
      auto p = param_from_name(name.text);
      if (!p) throw ParseError(name.loc, "unknown parameter '" + name.text + "'");
      expect(Tok::equals, "'='");
      Expr v = expression();
      if (v->type != Type::scalar) throw ParseError(v->loc, "binding value must be a scalar");
      out[*p] = evaluate(v).scalar;
    } while (accept(Tok::comma));
    expect(Tok::end, "',' or end of input");
    return out;
  }

 private:
  const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw ParseError(peek().loc, "expected " + what + ", found " + describe(peek()));
    next();
  }

  static void require_value(const Expr& e) {
    if (e->type == Type::basis_name) throw ParseError(e->loc, "a basis name is not a value");
  }

  static Type join(const Expr& a, const Expr& b) {
    return a->type == Type::symfunc || b->type == Type::symfunc ? Type::symfunc : Type::scalar;
  }

  Expr binary(Node::Kind k, Location loc, Expr a, Expr b) {
    require_value(a);
    require_value(b);
    if (k == Node::Kind::div && b->type != Type::scalar)
      throw ParseError(b->loc, "cannot divide by a symmetric function");
    auto n = make(k, loc);
    n->type = join(a, b);
    n->args = {std::move(a), std::move(b)};
    return n;
  }

  Expr expression() {
    Expr left = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      Token op = next();
      left = binary(op.kind == Tok::plus ? Node::Kind::add : Node::Kind::sub, op.loc, left, term());
    }
    return left;
  }

  Expr term() {
    Expr left = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      Token op = next();
      left = binary(op.kind == Tok::star ? Node::Kind::mul : Node::Kind::div, op.loc, left, unary());
    }
    return left;
  }

  Expr unary() {
    if (peek().kind == Tok::minus) {
      Token op = next();
      Expr operand = unary();
      require_value(operand);
      auto n = make(Node::Kind::neg, op.loc);
      n->type = operand->type;
      n->args = {operand};
      return n;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek().kind != Tok::caret) return base;
    Token op = next();
    require_value(base);
    bool negative = accept(Tok::minus);
    const Token& k = peek();
    expect(Tok::integer, "an integer exponent");
    if (k.text.size() > 6) throw ParseError(k.loc, "exponent too large");
    auto n = make(Node::Kind::pow, op.loc);
    n->type = base->type;
    n->exponent = std::stol(k.text) * (negative ? -1 : 1);
    if (negative && base->type != Type::scalar)
      throw ParseError(k.loc, "negative powers are only defined for scalars");
    n->args = {base};
    return n;
  }

  Partition partition_list() {
    Location open = peek().loc;
    expect(Tok::lbracket, "'['");
    std::vector<int> parts;
    if (peek().kind != Tok::rbracket) {
      do {
        const Token& k = peek();
        expect(Tok::integer, "a partition part");
        if (k.text.size() > 6) throw ParseError(k.loc, "partition part too large");
        int v = std::stoi(k.text);
        if (v <= 0) throw ParseError(k.loc, "partition parts must be positive");
        if (!parts.empty() && v > parts.back()) throw ParseError(k.loc, "partition parts must be weakly decreasing");
        parts.push_back(v);
      } while (accept(Tok::comma));
    }
    expect(Tok::rbracket, "',' or ']'");
    (void)open;
    return Partition(parts);
  }

  Expr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::integer: {
        next();
        auto n = make(Node::Kind::integer, tok.loc);
        n->value = BigInt(tok.text);
        return n;
      }
      case Tok::lparen: {
        next();
        Expr e = expression();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::ident:
        return identifier();
      default:
        throw ParseError(tok.loc, "expected an expression, found " + describe(tok));
    }
  }

  Expr identifier() {
    Token tok = next();
    if (peek().kind == Tok::lbracket) {
      if (tok.text == "H") {
        auto n = make(Node::Kind::macdonald, tok.loc);
        n->type = Type::symfunc;
        n->partition = partition_list();
        return n;
      }
      auto b = basis_from_name(tok.text);
      if (!b) throw ParseError(tok.loc, "unknown basis '" + tok.text + "'");
      auto n = make(Node::Kind::atom, tok.loc);
      n->type = Type::symfunc;
      n->basis = *b;
      n->partition = partition_list();
      return n;
    }
    if (peek().kind == Tok::lparen) return call(tok);
    if (auto p = param_from_name(tok.text)) {
      auto n = make(Node::Kind::param, tok.loc);
      n->param = *p;
      return n;
    }
    if (auto b = basis_from_name(tok.text)) {
      auto n = make(Node::Kind::basis_ref, tok.loc);
      n->type = Type::basis_name;
      n->basis = *b;
      return n;
    }
    throw ParseError(tok.loc, "unknown identifier '" + tok.text + "'");
  }

  Expr call(const Token& name) {
    auto it = call_table().find(name.text);
    if (it == call_table().end()) throw ParseError(name.loc, "unknown function '" + name.text + "'");
    const Signature& sig = it->second;
    expect(Tok::lparen, "'('");
    auto n = make(Node::Kind::call, name.loc);
    n->name = name.text;
    n->type = sig.result;
    if (peek().kind != Tok::rparen) {
      do {
        Expr a = expression();
        if (n->args.size() >= sig.args.size())
          throw ParseError(a->loc, name.text + " takes at most " + std::to_string(sig.args.size()) + " arguments");
        Arg want = sig.args[n->args.size()];
        if (want == Arg::basis && a->type != Type::basis_name) throw ParseError(a->loc, "expected a basis name");
        if (want != Arg::basis) require_value(a);
        if (want == Arg::scalar && a->type != Type::scalar) throw ParseError(a->loc, "expected a scalar argument");
        n->args.push_back(a);
      } while (accept(Tok::comma));
    }
    if (n->args.size() < sig.required) {
      if (peek().kind != Tok::rparen) expect(Tok::rparen, "')'");
      throw ParseError(peek().loc, name.text + " needs at least " + std::to_string(sig.required) + " arguments");
    }
    expect(Tok::rparen, n->args.size() < sig.args.size() ? "',' or ')'" : "')'");
    return n;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::add:
    case Node::Kind::sub:
      return 1;
    case Node::Kind::mul:
    case Node::Kind::div:
      return 2;
    case Node::Kind::neg:
      return 3;
    case Node::Kind::pow:
      return 4;
    default:
      return 5;
  }
}

std::string render_at(const Expr& e, int needed) {
  std::string s = render(e);
  return precedence(*e) < needed ? "(" + s + ")" : s;
}

std::string render_parts(const Partition& mu) {
  std::string out = "[";
  for (size_t i = 0; i < mu.parts().size(); ++i) out += (i ? "," : "") + std::to_string(mu.parts()[i]);
  return out + "]";
}

// Integer argument of a call, e.g. the m in catalan(m, n).
long integer_arg(const Value& v, const Expr& at) {
  if (!v.scalar.is_constant() || v.scalar.constant_value().get_den() != 1)
    throw EvalError("column " + std::to_string(at->loc.column) + ": expected an integer, got " + v.scalar.to_string());
  BigInt k = v.scalar.constant_value().get_num();
  if (!k.fits_slong_p() || abs(k) > 100000) throw EvalError("integer argument out of range: " + k.get_str());
  return k.get_si();
}

SymFunc as_symfunc(const Value& v) { return v.type == Type::symfunc ? v.symfunc : SymFunc::scalar(v.scalar); }

Value scalar_value(ParamRat c) {
  Value v;
  v.scalar = std::move(c);
  return v;
}

Value symfunc_value(SymFunc f) {
  Value v;
  v.type = Type::symfunc;
  v.symfunc = std::move(f);
  return v;
}

Value eval_node(const Expr& e);

Value eval_call(const Node& n) {
  std::vector<Value> a;
  for (const auto& arg : n.args) a.push_back(arg->type == Type::basis_name ? Value{} : eval_node(arg));
  auto f = [&](size_t i) { return as_symfunc(a[i]); };
  auto k = [&](size_t i) { return static_cast<int>(integer_arg(a[i], n.args[i])); };
  const std::string& name = n.name;
  if (name == "nabla") return symfunc_value(nabla(f(0), a.size() > 1 ? k(1) : 1));
  if (name == "delta") return symfunc_value(a.size() > 1 ? Delta_f(f(0), f(1)) : Delta(f(0)));
  if (name == "omega") return symfunc_value(omega(f(0)));
  if (name == "skew") return symfunc_value(skew(f(0), f(1)));
  if (name == "kron") return symfunc_value(kronecker(f(0), f(1)));
  if (name == "plethysm") return symfunc_value(plethysm(f(0), f(1)));
  if (name == "star") return symfunc_value(star(f(0)));
  if (name == "scalar") return scalar_value(hall(f(0), f(1)));
  if (name == "qtscalar") return scalar_value(qt_scalar(f(0), f(1)));
  if (name == "convert") return symfunc_value(convert(f(0), n.args[1]->basis));
  if (name == "qmn") return symfunc_value(a.size() > 2 ? apply(q_operator(k(0), k(1)), f(2)) : pi_mn(k(0), k(1)));
  if (name == "seed") return symfunc_value(seed_family(f(0), k(1), k(2)));
  if (name == "catalan") return scalar_value(cat_q(k(0), k(1)));
  if (name == "parking") return scalar_value(ParamRat(parking_count(k(0), k(1))));
  if (name == "tamari") return scalar_value(ParamRat(interval_count(k(0), k(1))));
  if (name == "eval") return scalar_value(eval_scalar(f(0), a[1].scalar));
  throw EvalError("unknown function '" + name + "'");
}

Value eval_node(const Expr& e) {
  const Node& n = *e;
  switch (n.kind) {
    case Node::Kind::integer:
      return scalar_value(ParamRat(n.value));
    case Node::Kind::param:
      return scalar_value(ParamRat::param(n.param));
    case Node::Kind::atom:
      return symfunc_value(SymFunc(n.basis, n.partition));
    case Node::Kind::macdonald:
      return symfunc_value(macdonald_H(n.partition));
    case Node::Kind::basis_ref:
      throw EvalError("a basis name is not a value");
    case Node::Kind::neg: {
      Value v = eval_node(n.args[0]);
      return v.type == Type::scalar ? scalar_value(-v.scalar) : symfunc_value(-v.symfunc);
    }
    case Node::Kind::pow: {
      Value v = eval_node(n.args[0]);
      if (v.type == Type::scalar) return scalar_value(v.scalar.pow(n.exponent));
      return symfunc_value(pow(v.symfunc, static_cast<int>(n.exponent)));
    }
    case Node::Kind::add:
    case Node::Kind::sub:
    case Node::Kind::mul:
    case Node::Kind::div: {
      Value x = eval_node(n.args[0]);
      Value y = eval_node(n.args[1]);
      if (x.type == Type::scalar && y.type == Type::scalar) {
        static const std::map<Node::Kind, ArithOp> ops = {{Node::Kind::add, ArithOp::add},
                                                          {Node::Kind::sub, ArithOp::sub},
                                                          {Node::Kind::mul, ArithOp::mul},
                                                          {Node::Kind::div, ArithOp::div}};
        return scalar_value(arith(x.scalar, y.scalar, ops.at(n.kind)));
      }
      if (n.kind == Node::Kind::div) return symfunc_value(x.symfunc * (ParamRat(1) / y.scalar));
      if (n.kind == Node::Kind::mul) {
        if (x.type == Type::scalar) return symfunc_value(x.scalar * y.symfunc);
        if (y.type == Type::scalar) return symfunc_value(x.symfunc * y.scalar);
        return symfunc_value(x.symfunc * y.symfunc);
      }
      SymFunc fx = as_symfunc(x);
      SymFunc fy = as_symfunc(y);
      if (x.type == Type::scalar) fx = SymFunc::scalar(x.scalar, fy.basis());
      if (y.type == Type::scalar) fy = SymFunc::scalar(y.scalar, fx.basis());
      return symfunc_value(n.kind == Node::Kind::add ? fx + fy : fx - fy);
    }
    case Node::Kind::call:
      return eval_call(n);
  }
  throw EvalError("unreachable node kind");
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).whole(); }

Bindings parse_bindings(std::string_view text) { return Parser(text).bindings(); }

std::string render(const Expr& e) {
  const Node& n = *e;
  switch (n.kind) {
    case Node::Kind::integer:
      return n.value.get_str();
    case Node::Kind::param:
      return kParamNames[static_cast<int>(n.param)];
    case Node::Kind::atom:
      return basis_name(n.basis) + render_parts(n.partition);
    case Node::Kind::macdonald:
      return "H" + render_parts(n.partition);
    case Node::Kind::basis_ref:
      return basis_name(n.basis);
    case Node::Kind::neg:
      return "-" + render_at(n.args[0], 3);
    case Node::Kind::pow:
      return render_at(n.args[0], 5) + "^" + std::to_string(n.exponent);
    case Node::Kind::call: {
      std::string out = n.name + "(";
      for (size_t i = 0; i < n.args.size(); ++i) out += (i ? "," : "") + render(n.args[i]);
      return out + ")";
    }
    default: {
      static const std::map<Node::Kind, const char*> sym = {
          {Node::Kind::add, "+"}, {Node::Kind::sub, "-"}, {Node::Kind::mul, "*"}, {Node::Kind::div, "/"}};
      int p = precedence(n);
      return render_at(n.args[0], p) + sym.at(n.kind) + render_at(n.args[1], p + 1);
    }
  }
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a->kind != b->kind || a->type != b->type || a->value != b->value || a->param != b->param ||
      a->basis != b->basis || a->partition != b->partition || a->exponent != b->exponent || a->name != b->name ||
      a->args.size() != b->args.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!structurally_equal(a->args[i], b->args[i])) return false;
  return true;
}

int depth(const Expr& e) {
  int d = 0;
  for (const auto& a : e->args) d = std::max(d, depth(a));
  return d + 1;
}

Value evaluate(const Expr& e, const Options& options) {
  if (e->type == Type::basis_name) throw EvalError("a basis name is not a value");
  Value v;
  try {
    v = eval_node(e);
    if (!options.at.empty()) {
      if (v.type == Type::scalar) v.scalar = substitute(v.scalar, options.at);
      else v.symfunc = specialize(v.symfunc, options.at);
    }
    if (options.basis && v.type == Type::symfunc) v.symfunc = convert(v.symfunc, *options.basis);
  } catch (const EvalError&) {
    throw;
  } catch (const std::exception& ex) {
    throw EvalError(ex.what());
  }
  return v;
}

OutputRecord make_record(std::string request, const Value& v) {
  OutputRecord r;
  r.request = std::move(request);
  if (v.type == Type::scalar) {
    r.kind = "scalar";
    r.text = v.scalar.to_string();
    r.terms.push_back({"", Partition(), r.text});
    return r;
  }
  r.kind = "symfunc";
  r.text = v.symfunc.to_string();
  for (const auto& [mu, c] : v.symfunc.terms()) r.terms.push_back({basis_name(v.symfunc.basis()), mu, c.to_string()});
  return r;
}

OutputRecord text_record(std::string request, std::string kind, std::string text) {
  OutputRecord r;
  r.request = std::move(request);
  r.kind = std::move(kind);
  r.text = std::move(text);
  return r;
}

std::string text_from_terms(const OutputRecord& r) {
  if (r.kind == "scalar") return r.terms.empty() ? "0" : evaluate(parse(r.terms.at(0).coefficient)).scalar.to_string();
  if (r.kind != "symfunc") return r.text;
  if (r.terms.empty()) return "0";
  auto b = basis_from_name(r.terms.front().basis);
  if (!b) throw EvalError("unknown basis '" + r.terms.front().basis + "'");
  SymFunc f(*b);
  for (const auto& t : r.terms) {
    if (t.basis != r.terms.front().basis) throw EvalError("terms mix bases");
    f.add_term(t.partition, evaluate(parse(t.coefficient)).scalar);
  }
  return f.to_string();
}

std::string to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["request"] = r.request;
  j["kind"] = r.kind;
  j["text"] = r.text;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : r.terms) {
    nlohmann::ordered_json term;
    term["basis"] = t.basis.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(t.basis);
    term["partition"] = t.partition.parts();
    term["coefficient"] = t.coefficient;
    j["terms"].push_back(term);
  }
  return j.dump();
}

OutputRecord from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  OutputRecord r;
  r.request = j.at("request").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.text = j.at("text").get<std::string>();
  for (const auto& t : j.at("terms")) {
    Term term;
    term.basis = t.at("basis").is_null() ? "" : t.at("basis").get<std::string>();
    term.partition = Partition(t.at("partition").get<std::vector<int>>());
    term.coefficient = t.at("coefficient").get<std::string>();
    r.terms.push_back(std::move(term));
  }
  return r;
}

}  // namespace qtsym::expr
