#include "bfp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "bfp/errors.hpp"
#include "bfp/problem.hpp"

namespace bfp::cli {

namespace {

struct Options {
  std::uint32_t p = 0;
  unsigned gamma = 1;
  std::optional<unsigned> e;
  unsigned e_max = 5;
  unsigned e_cap = 16;
  std::string alpha;
  bool json = false;
  std::size_t limit_pairs = 0;
  std::vector<std::string> gens;
  std::string f;
  std::optional<std::size_t> num_vars;
  std::string input;
};

void add_common(CLI::App* sub, Options& o, bool needs_p) {
  auto* p = sub->add_option("-p", o.p, "prime characteristic");
  if (needs_p) p->required();
  sub->add_option("--gamma", o.gamma, "q = p^gamma")->capture_default_str();
  sub->add_flag("--json", o.json, "emit a JSON report");
  sub->add_option("--limit-pairs", o.limit_pairs, "Groebner pair-queue cap");
  sub->add_option("--num-vars", o.num_vars, "number of ring variables (inferred when absent)");
}

std::size_t infer_num_vars(const std::vector<std::string>& texts) {
  static const std::regex var(R"(x(\d+))");
  std::size_t n = 0;
  for (const auto& t : texts)
    for (std::sregex_iterator it(t.begin(), t.end(), var), end; it != end; ++it) {
      const std::string digits = (*it)[1];
      if (digits.size() > 9) throw ValidationError("variable index too large: x" + digits);
      n = std::max<std::size_t>(n, std::stoul(digits) + 1);
    }
  return n;
}

// "(a, b)" becomes {a, b}; anything else is a single entry.
std::vector<std::string> split_vector(const std::string& text) {
  std::string s = text;
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos || s[first] != '(') return {text};
  const auto last = s.find_last_not_of(" \t");
  if (s[last] != ')') throw ValidationError("unbalanced parenthesis in generator '" + text + "'");
  s = s.substr(first + 1, last - first - 1);
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw ValidationError("empty generator vector");
  return out;
}

Json ideal_json(const Submodule& n) { return submodule_json(n); }

void print_submodule(std::ostream& out, const Submodule& n) {
  if (n.basis().empty()) out << "  0\n";
  for (const auto& v : n.basis()) out << "  " << to_string(v) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Problem load_problem(const Options& o) {
  if (o.input.empty()) throw ValidationError("--input is required");
  return parse_problem(read_file(o.input));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_froot(const Options& o, std::ostream& out) {
  if (o.gens.empty()) throw ValidationError("at least one --gen is required");
  const CharConfig cfg(o.p, o.gamma);
  const std::size_t nv = o.num_vars ? *o.num_vars : infer_num_vars(o.gens);
  const Ring ring = make_ring(cfg, nv);
  std::vector<VectorR> gens;
  std::size_t rank = 0;
  for (const auto& g : o.gens) {
    VectorR v;
    for (const auto& part : split_vector(g)) v.push_back(parse_poly(part, ring));
    if (rank == 0) rank = v.size();
    if (v.size() != rank) throw ValidationError("generators have different lengths");
    gens.push_back(std::move(v));
  }
  const unsigned e = o.e.value_or(1);
  const Submodule root = frobenius_root(Submodule(ring, rank, std::move(gens)), e, cfg);
  if (o.json) {
    emit(out, Json{{"p", cfg.p()}, {"gamma", cfg.gamma()}, {"e", e}, {"rank", rank}, {"generators", ideal_json(root)}});
  } else {
    out << "Frobenius root at level " << e << " (q = " << cfg.q() << "), rank " << rank << ":\n";
    print_submodule(out, root);
  }
  return kOk;
}

Poly read_f(const Options& o, const CharConfig& cfg) {
  if (o.f.empty()) throw ValidationError("--f is required");
  const std::size_t nv = o.num_vars ? *o.num_vars : infer_num_vars({o.f});
  return parse_poly(o.f, make_ring(cfg, nv));
}

int cmd_tau(const Options& o, std::ostream& out) {
  const CharConfig cfg(o.p, o.gamma);
  const Poly f = read_f(o, cfg);
  if (o.alpha.empty()) throw ValidationError("--alpha is required");
  const Rational alpha = parse_rational(o.alpha);
  Json j{{"f", f.to_string()}, {"alpha", to_string(alpha)}};
  Submodule ideal = Submodule::zero(f.ring(), 1);
  if (o.e) {
    ideal = tau_f(f, alpha, *o.e, cfg);
    j["e"] = *o.e;
  } else {
    const StableTau st = tau_f_stable(f, alpha, cfg, o.e_cap);
    ideal = st.ideal;
    j["e"] = st.e;
    j["certified"] = st.certified;
  }
  j["generators"] = ideal_json(ideal);
  if (o.json) {
    emit(out, j);
  } else {
    out << "tau(f^" << to_string(alpha) << ") at e = " << j["e"].get<std::uint64_t>() << ":\n";
    print_submodule(out, ideal);
  }
  return kOk;
}

int cmd_fjump(const Options& o, std::ostream& out) {
  const CharConfig cfg(o.p, o.gamma);
  const Poly f = read_f(o, cfg);
  const FJumpReport rep = f_jumping_report(f, cfg, o.e_max);
  if (o.json) {
    Json ex = Json::array();
    for (const auto& x : rep.exponents) ex.push_back(rational_json(x));
    Json drops = Json::object();
    for (std::size_t i = 0; i < rep.drops.size(); ++i) {
      Json lv = Json::array();
      for (const auto& g : rep.drops[i]) lv.push_back(grid_json(g));
      drops[std::to_string(i + 1)] = std::move(lv);
    }
    emit(out, Json{{"f", f.to_string()},
                   {"e_max", o.e_max},
                   {"exponents", std::move(ex)},
                   {"drops", std::move(drops)},
                   {"unresolved", chains_json(rep.unresolved)}});
  } else {
    out << "F-jumping exponents of " << f.to_string() << " in (0, 1]:\n";
    for (const auto& x : rep.exponents) out << "  " << to_string(x) << "\n";
    if (!rep.unresolved.empty()) out << "unresolved chains: " << rep.unresolved.size() << "\n";
  }
  return kOk;
}

int cmd_hexpand(const Options& o, std::ostream& out) {
  const Problem pr = load_problem(o);
  const unsigned e = o.e.value_or(1);
  const HFamily h = h_expand(pr.generating_matrix(), e, pr.cfg);
  if (o.json) {
    Json table = Json::object();
    for (const auto& [n, m] : h.table) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).to_string());
        rows.push_back(std::move(row));
      }
      table[n.str()] = std::move(rows);
    }
    emit(out, Json{{"e", e}, {"tau_bound", integer_json(h.tau_bound)}, {"H", std::move(table)}});
  } else {
    out << "H^" << e << "_n(tau), tau-degree bound " << h.tau_bound << ":\n";
    for (const auto& [n, m] : h.table) out << "  n = " << n << ": " << m.to_string() << "\n";
  }
  return kOk;
}

int cmd_sset(const Options& o, std::ostream& out) {
  const Problem pr = load_problem(o);
  const unsigned e = o.e.value_or(0);
  const SeReport s = s_set(pr.matrix_list(), e, pr.cfg);
  if (o.json) {
    Json jumps = Json::array();
    for (const auto& g : s.jumps) jumps.push_back(grid_json(g));
    emit(out, Json{{"e", e}, {"jumps", std::move(jumps)}});
  } else {
    out << "S_" << e << ":";
    for (const auto& g : s.jumps) out << " " << g.to_string();
    out << "\n";
  }
  return kOk;
}

int cmd_jumps(const Options& o, std::ostream& out) {
  const Problem pr = load_problem(o);
  const EstimateReport rep = estimate_jumping_numbers(pr.matrix_list(), pr.cfg, o.e_max);
  if (o.json) {
    Json jumps = Json::array();
    for (const auto& j : rep.jumps) {
      Json w = Json::array();
      for (const auto& g : j.witnesses) w.push_back(grid_json(g));
      jumps.push_back(Json{{"lambda", rational_json(j.lambda)}, {"witnesses", std::move(w)}});
    }
    emit(out, Json{{"jumping_numbers", std::move(jumps)},
                   {"unresolved", chains_json(rep.unresolved)},
                   {"s_sets", s_sets_json(rep.s_sets)}});
  } else {
    for (const auto& s : rep.s_sets) {
      out << "S_" << s.e << ":";
      for (const auto& g : s.jumps) out << " " << g.to_string();
      out << "\n";
    }
    out << "jumping numbers:";
    for (const auto& j : rep.jumps) out << " " << to_string(j.lambda);
    out << "\n";
    if (!rep.unresolved.empty()) out << "unresolved chains: " << rep.unresolved.size() << "\n";
  }
  return kOk;
}

int cmd_bfun(const Options& o, std::ostream& out) {
  const Problem pr = load_problem(o);
  const BFunctionResult r = b_function(pr.generating_matrix(), pr.cfg, o.e_max);
  if (o.json) {
    emit(out, bfunction_json(r));
  } else {
    out << "b(s) = " << b_polynomial_string(r.roots) << (r.divides_only ? "  (divides-only bound)" : "") << "\n";
    out << "shift N: " << (r.shift_N ? std::to_string(*r.shift_N) : std::string("none")) << "\n";
    for (const auto& s : r.evidence) {
      out << "S_" << s.e << ":";
      for (const auto& g : s.jumps) out << " " << g.to_string();
      out << "\n";
    }
    for (const auto& d : r.diagnostics) out << "note: " << d << "\n";
  }
  return kOk;
}

int cmd_graphgen(const Options& o, std::ostream& out) {
  const CharConfig cfg(o.p, o.gamma);
  const Poly f = read_f(o, cfg);
  const TMatrix a = graph_generator(f, cfg);
  if (o.json)
    emit(out, problem_to_json(cfg, f.ring().num_vars, a));
  else
    out << "A(t) = " << a.to_string() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius roots, test ideals, list test modules and b-functions in characteristic p", "bfp"};
  app.require_subcommand(1);
  Options o;

  auto* froot = app.add_subcommand("froot", "Frobenius root of a submodule");
  add_common(froot, o, true);
  froot->add_option("--gen,--gens", o.gens, "generator polynomial or vector \"(a, b)\"")->required();
  froot->add_option("--e", o.e, "root level");

  auto* tau = app.add_subcommand("tau", "test ideal tau(f^alpha)");
  add_common(tau, o, true);
  tau->add_option("--f", o.f, "polynomial f")->required();
  tau->add_option("--alpha", o.alpha, "exponent as num/den")->required();
  tau->add_option("--e", o.e, "fixed level; stable value when absent");
  tau->add_option("--e-cap", o.e_cap, "level cap for the stable value")->capture_default_str();

  auto* fjump = app.add_subcommand("fjump", "F-jumping exponents in (0, 1]");
  add_common(fjump, o, true);
  fjump->add_option("--f", o.f, "polynomial f")->required();
  fjump->add_option("--e-max", o.e_max, "grid level")->capture_default_str();

  auto* hexpand = app.add_subcommand("hexpand", "H^e_n(tau) expansion of A(t)");
  add_common(hexpand, o, false);
  hexpand->add_option("--input", o.input, "problem JSON")->required();
  hexpand->add_option("--e", o.e, "level");

  auto* sset = app.add_subcommand("sset", "jump set S_e of the list test modules");
  add_common(sset, o, false);
  sset->add_option("--input", o.input, "problem JSON")->required();
  sset->add_option("--e", o.e, "level");

  auto* jumps = app.add_subcommand("jumps", "estimated jumping numbers");
  add_common(jumps, o, false);
  jumps->add_option("--input", o.input, "problem JSON")->required();
  jumps->add_option("--e-max", o.e_max, "deepest level")->capture_default_str();

  auto* bfun = app.add_subcommand("bfun", "b-function of a generating matrix");
  add_common(bfun, o, false);
  bfun->add_option("--input", o.input, "problem JSON")->required();
  bfun->add_option("--e-max", o.e_max, "deepest level")->capture_default_str();

  auto* graphgen = app.add_subcommand("graphgen", "generator [(f - t)^(q-1)] as problem JSON");
  add_common(graphgen, o, true);
  graphgen->add_option("--f", o.f, "polynomial f")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUserError;
  }

  struct LimitGuard {
    std::size_t saved = default_pair_limit();
    ~LimitGuard() { set_default_pair_limit(saved); }
  } guard;
  try {
    if (o.limit_pairs != 0) set_default_pair_limit(o.limit_pairs);
    if (froot->parsed()) return cmd_froot(o, out);
    if (tau->parsed()) return cmd_tau(o, out);
    if (fjump->parsed()) return cmd_fjump(o, out);
    if (hexpand->parsed()) return cmd_hexpand(o, out);
    if (sset->parsed()) return cmd_sset(o, out);
    if (jumps->parsed()) return cmd_jumps(o, out);
    if (bfun->parsed()) return cmd_bfun(o, out);
    if (graphgen->parsed()) return cmd_graphgen(o, out);
  } catch (const ResourceLimitError& ex) {
    err << "resource limit: " << ex.what() << "\n";
    return kResourceLimit;
  } catch (const NoStabilizationError& ex) {
    err << "resource limit: " << ex.what() << "\n";
    return kResourceLimit;
  } catch (const ValidationError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUserError;
  } catch (const InternalError& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kInternalError;
  }
  return kUserError;
}

}  // namespace bfp::cli
