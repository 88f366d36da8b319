// qtsym: command-line front end over the library. Exit codes: 0 success,
// 2 parse error, 3 evaluation error, 4 table mismatch, 64 usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qtsym/expr.hpp"
#include "qtsym/golden.hpp"
#include "qtsym/tamari.hpp"

using namespace qtsym;

namespace {

constexpr int kParseExit = 2;
constexpr int kEvalExit = 3;
constexpr int kMismatchExit = 4;
constexpr int kUsageExit = 64;

struct Globals {
  bool json = false;
  std::string at;
  std::string basis;
  int max_degree = 0;
};

class Runner {
 public:
  explicit Runner(const Globals& g) : g_(g) {
    if (!g.at.empty()) options_.at = expr::parse_bindings(g.at);
    if (!g.basis.empty()) {
      options_.basis = basis_from_name(g.basis);
      if (!options_.basis) throw expr::EvalError("unknown basis '" + g.basis + "'");
    }
    if (g.max_degree > 0) set_macdonald_degree_limit(g.max_degree);
  }

  // Parses a SymFunc-valued argument; scalars are promoted to multiples of 1.
  SymFunc symfunc_arg(const std::string& text) const {
    auto e = expr::parse(text);
    expr::Value v = expr::evaluate(e);
    return v.type == expr::Type::symfunc ? v.symfunc : SymFunc::scalar(v.scalar);
  }

  int emit_scalar(const std::string& request, ParamRat c) const {
    expr::Value v;
    v.scalar = std::move(c);
    return emit(request, v);
  }

  int emit_symfunc(const std::string& request, SymFunc f) const {
    expr::Value v;
    v.type = expr::Type::symfunc;
    v.symfunc = std::move(f);
    return emit(request, v);
  }

  int emit(const std::string& request, expr::Value v) const {
    if (!options_.at.empty()) {
      if (v.type == expr::Type::scalar) v.scalar = substitute(v.scalar, options_.at);
      else v.symfunc = specialize(v.symfunc, options_.at);
    }
    if (options_.basis && v.type == expr::Type::symfunc) v.symfunc = convert(v.symfunc, *options_.basis);
    print(expr::make_record(request, v));
    return 0;
  }

  void print(const expr::OutputRecord& r) const {
    if (g_.json) {
      std::cout << expr::to_json(r) << "\n";
    } else {
      std::cout << r.text;
      if (r.text.empty() || r.text.back() != '\n') std::cout << "\n";
    }
  }

 private:
  const Globals& g_;
  expr::Options options_;
};

std::string join_request(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric functions, Macdonald operators, rational Catalan combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "print a JSON record");
  app.add_option("--at", g.at, "specialize the result, e.g. q=1,t=1 or t=1/q");
  app.add_option("--basis", g.basis, "basis of SymFunc results (m, e, h, p, s, f, pi)");
  app.add_option("--max-degree", g.max_degree, "highest degree for Macdonald computations");

  std::string request = join_request(std::vector<std::string>(argv + 1, argv + argc));
  std::function<int(Runner&)> action;

  std::string x, y, kind, mu;
  int m = 0, n = 0, power = 1;
  bool flag_q = false, flag_ct = false, flag_bizley = false, flag_list = false, flag_t1 = false, flag_tinv = false;
  bool flag_qt = false, flag_star = false, flag_word = false, strict = false;
  bool intervals = false, decorated = false, dot = false, strip = false;
  std::string apply_expr, rotation;
  unsigned threads = 0;

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", x)->required();
  eval->callback([&] {
    action = [&](Runner& r) {
      auto e = expr::parse(x);
      return r.emit(x, expr::evaluate(e));
    };
  });

  auto* conv = app.add_subcommand("convert", "rewrite in another basis");
  conv->add_option("expr", x)->required();
  conv->add_option("basis", y)->required();
  conv->callback([&] {
    action = [&](Runner& r) {
      auto b = basis_from_name(y);
      if (!b) throw expr::EvalError("unknown basis '" + y + "'");
      return r.emit_symfunc(request, convert(r.symfunc_arg(x), *b));
    };
  });

  auto* sc = app.add_subcommand("scalar", "Hall scalar product <f,g>");
  sc->add_option("f", x)->required();
  sc->add_option("g", y)->required();
  auto* qt_flag = sc->add_flag("--qt", flag_qt, "q,t scalar product");
  sc->add_flag("--star", flag_star, "star scalar product")->excludes(qt_flag);
  sc->callback([&] {
    action = [&](Runner& r) {
      SymFunc f = r.symfunc_arg(x), h = r.symfunc_arg(y);
      return r.emit_scalar(request, flag_qt ? qt_scalar(f, h) : flag_star ? star_scalar(f, h) : hall(f, h));
    };
  });

  auto* nb = app.add_subcommand("nabla", "apply nabla");
  nb->add_option("expr", x)->required();
  nb->add_option("--power", power, "apply nabla^r");
  auto* t1 = nb->add_flag("--t1", flag_t1, "nabla at t=1 through h*");
  nb->add_flag("--t-inv-q", flag_tinv, "nabla at t=1/q through s*")->excludes(t1);
  nb->callback([&] {
    action = [&](Runner& r) {
      SymFunc f = r.symfunc_arg(x);
      if ((flag_t1 || flag_tinv) && power != 1) throw expr::EvalError("--power cannot be combined with --t1/--t-inv-q");
      if (flag_t1) return r.emit_symfunc(request, nabla_t1(f));
      if (flag_tinv) return r.emit_symfunc(request, nabla_t_1overq(f));
      return r.emit_symfunc(request, nabla(f, power));
    };
  });

  auto* dl = app.add_subcommand("delta", "Delta_f g, or Delta g with one argument");
  dl->add_option("f", x)->required();
  dl->add_option("g", y);
  dl->callback([&] {
    action = [&](Runner& r) {
      if (y.empty()) return r.emit_symfunc(request, Delta(r.symfunc_arg(x)));
      return r.emit_symfunc(request, Delta_f(r.symfunc_arg(x), r.symfunc_arg(y)));
    };
  });

  auto* mac = app.add_subcommand("macdonald", "H <mu>, P <mu> or qtkostka <n>");
  mac->add_option("kind", kind)->required()->check(CLI::IsMember({"H", "P", "qtkostka"}));
  mac->add_option("arg", mu)->required();
  mac->callback([&] {
    action = [&](Runner& r) {
      if (kind == "qtkostka") {
        int d = std::stoi(mu);
        auto parts = enumerate_partitions(d);
        std::string text;
        for (const auto& row : parts) {
          text += row.to_string() + ":";
          for (const auto& col : parts) text += " " + qt_kostka(col, row).to_string();
          text += "\n";
        }
        r.print(expr::text_record(request, "table", text));
        return 0;
      }
      Partition p = Partition::parse(mu);
      return r.emit_symfunc(request, kind == "H" ? macdonald_H(p) : macdonald_P(p));
    };
  });

  auto* cat = app.add_subcommand("catalan", "number of (m,n)-Dyck paths");
  cat->add_option("m", m)->required();
  cat->add_option("n", n)->required();
  cat->add_flag("--q", flag_q, "area q-analogue");
  cat->add_flag("--ct", flag_ct, "q-analogue by constant-term extraction");
  cat->add_flag("--bizley", flag_bizley, "count by the Bizley formula");
  cat->callback([&] {
    action = [&](Runner& r) {
      if (flag_ct) return r.emit_scalar(request, cat_q_constant_term(m, n));
      if (flag_q) return r.emit_scalar(request, cat_q(m, n));
      if (flag_bizley) return r.emit_scalar(request, ParamRat(bizley_cat(m, n)));
      return r.emit_scalar(request, ParamRat(static_cast<long>(dyck_paths(m, n).size())));
    };
  });

  auto* park = app.add_subcommand("parking", "number of (m,n)-parking functions");
  park->add_option("m", m)->required();
  park->add_option("n", n)->required();
  park->add_flag("--list", flag_list, "list them as '<word> on <path>'");
  park->add_flag("--bizley", flag_bizley, "count by the Bizley formula");
  park->callback([&] {
    action = [&](Runner& r) {
      if (flag_list) {
        std::string text;
        for (const auto& path : dyck_paths(m, n))
          for (const auto& pf : parking_enumerate(path)) text += pf.to_string() + "\n";
        r.print(expr::text_record(request, "table", text));
        return 0;
      }
      return r.emit_scalar(request, ParamRat(flag_bizley ? bizley_park(m, n) : parking_count(m, n)));
    };
  });

  auto* qmn = app.add_subcommand("qmn", "Q_{m,n}(1), or Q_{m,n} applied to an expression");
  qmn->add_option("m", m)->required();
  qmn->add_option("n", n)->required();
  qmn->add_option("--apply", apply_expr, "argument of the operator");
  qmn->add_flag("--word", flag_word, "print the commutator word");
  qmn->callback([&] {
    action = [&](Runner& r) {
      if (flag_word) {
        r.print(expr::text_record(request, "word", q_operator(m, n).word()));
        return 0;
      }
      if (!apply_expr.empty()) return r.emit_symfunc(request, apply(q_operator(m, n), r.symfunc_arg(apply_expr)));
      return r.emit_symfunc(request, pi_mn(m, n));
    };
  });

  auto* seed = app.add_subcommand("seed", "sum c_mu Q_{(a,b)mu}(1) for g = sum c_mu pi_mu");
  seed->add_option("g", x)->required();
  seed->add_option("a", m)->required();
  seed->add_option("b", n)->required();
  seed->callback([&] { action = [&](Runner& r) { return r.emit_symfunc(request, seed_family(r.symfunc_arg(x), m, n)); }; });

  auto* tam = app.add_subcommand("tamari", "(m,n)-Tamari lattice");
  tam->add_option("m", m)->required();
  tam->add_option("n", n)->required();
  auto* fi = tam->add_flag("--intervals", intervals, "number of intervals (default)");
  auto* fd = tam->add_flag("--decorated", decorated, "number of decorated intervals");
  auto* fx = tam->add_flag("--export-dot", dot, "Hasse diagram in Graphviz format");
  auto* fs = tam->add_flag("--strip", strip, "interval strip sum");
  fi->excludes(fd)->excludes(fx)->excludes(fs);
  fd->excludes(fx)->excludes(fs);
  fx->excludes(fs);
  tam->add_option("--rotation", rotation, "horizontal or vertical")->check(CLI::IsMember({"horizontal", "vertical"}));
  tam->callback([&] {
    action = [&](Runner& r) {
      std::optional<Rotation> rot;
      if (!rotation.empty()) rot = rotation == "vertical" ? Rotation::vertical : Rotation::horizontal;
      TamariPoset poset(m, n, rot);
      if (dot) {
        r.print(expr::text_record(request, "table", poset.to_dot()));
        return 0;
      }
      if (strip) return r.emit_symfunc(request, poset.interval_strip_sum());
      return r.emit_scalar(request, ParamRat(decorated ? poset.decorated_count() : poset.interval_count()));
    };
  });

  auto* rep = app.add_subcommand("reproduce", "recompute a printed table and diff it");
  rep->add_option("table", x)->required();
  rep->add_flag("--strict", strict, "count disputed cells as mismatches");
  rep->add_option("--threads", threads, "worker threads (default: hardware, at most 8)");
  rep->callback([&] {
    action = [&](Runner& r) {
      std::vector<std::string> names = x == "all" ? golden::table_names() : std::vector<std::string>{x};
      bool ok = true;
      for (const auto& name : names) {
        auto rp = golden::reproduce(name, strict, threads);
        r.print(expr::text_record(request, "table", rp.text));
        ok = ok && rp.ok;
      }
      return ok ? 0 : kMismatchExit;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    Runner runner(g);
    return action(runner);
  } catch (const expr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEvalExit;
  }
}
