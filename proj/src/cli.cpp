#include "weylpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "weylpoly/brion.hpp"
#include "weylpoly/demazure.hpp"
#include "weylpoly/expansion.hpp"
#include "weylpoly/json_io.hpp"
#include "weylpoly/root_system.hpp"
#include "weylpoly/verify.hpp"
#include "weylpoly/weyl.hpp"

namespace weylpoly {

namespace {

struct CliOptions {
  std::string algebra;
  std::string weight;
  std::string method;
  std::string expr;
  std::string format = "text";
  long long max_level = 4;
  int max_rank = 0;  // 0: not given
  std::uint64_t seed = 1;
};

Weight parse_weight_labels(const std::string& text) {
  Weight labels;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string part = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      labels.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("--weight expects comma-separated integers, got '" + text +
                                  "'");
    }
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return labels;
}

std::string weight_str(const Weight& mu) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ",";
    os << mu[i];
  }
  os << ")";
  return os.str();
}

int effective_rank_cap(const CliOptions& opts) {
  int cap = kDefaultEnumerationRankCap;
  if (const char* env = std::getenv("WEYLPOLY_MAX_RANK")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("WEYLPOLY_MAX_RANK must be an integer");
    }
  }
  // An explicit --max-rank beyond the cap is taken as a deliberate override.
  return std::max(cap, opts.max_rank);
}

RootSystem build_from_options(const CliOptions& opts) {
  if (opts.algebra.empty()) throw std::invalid_argument("--algebra is required");
  return build_root_system(parse_algebra(opts.algebra), effective_rank_cap(opts));
}

Weight dominant_weight_from_options(const RootSystem& rs, const CliOptions& opts) {
  const Weight lambda = parse_weight_labels(opts.weight);
  rs.check_weight(lambda, "--weight");
  if (!is_dominant(lambda)) throw std::invalid_argument("--weight must be dominant");
  return lambda;
}

bool json_format(const CliOptions& opts) {
  if (opts.format == "json") return true;
  if (opts.format == "text") return false;
  throw std::invalid_argument("--format must be text or json");
}

int cmd_char(const CliOptions& opts, std::ostream& out) {
  const RootSystem rs = build_from_options(opts);
  const Weight lambda = dominant_weight_from_options(rs, opts);
  const std::string method = opts.method.empty() ? "demazure" : opts.method;
  FormalSum ch;
  if (method == "demazure") {
    ch = character_demazure(rs, lambda);
  } else if (method == "weyl") {
    ch = character_weyl_division(rs, lambda);
  } else {
    throw std::invalid_argument("--method must be demazure or weyl");
  }
  if (json_format(opts)) {
    nlohmann::json j = formal_sum_to_json(ch);
    j["algebra"] = algebra_name(rs.algebra());
    j["lambda"] = weight_to_json(lambda);
    j["method"] = method;
    j["dimension"] = int_to_json(ch.coefficient_sum());
    j["support"] = ch.support_size();
    out << j.dump(2) << "\n";
  } else {
    out << "character of " << algebra_name(rs.algebra()) << " " << weight_str(lambda)
        << " [method=" << method << "]\n";
    out << "  " << ch << "\n";
    out << "dimension: " << ch.coefficient_sum() << "\n";
    out << "support: " << ch.support_size() << "\n";
  }
  return 0;
}

int cmd_polytope_sum(const CliOptions& opts, std::ostream& out) {
  const RootSystem rs = build_from_options(opts);
  const Weight lambda = dominant_weight_from_options(rs, opts);
  const PolytopeSumMethod method =
      parse_polytope_sum_method(opts.method.empty() ? "dominance" : opts.method);
  const PolytopeSumReport report = polytope_sum(rs, lambda, method);

  bool compared = false;
  bool agrees = true;
  if (method != PolytopeSumMethod::Dominance) {
    compared = true;
    agrees = report.sum == brion_oracle(rs, lambda);
  }

  if (json_format(opts)) {
    nlohmann::json j = formal_sum_to_json(report.sum);
    j["algebra"] = algebra_name(rs.algebra());
    j["lambda"] = weight_to_json(lambda);
    j["method"] = polytope_sum_method_name(method);
    j["term_count"] = report.term_count;
    if (compared) j["agrees"] = agrees;
    out << j.dump(2) << "\n";
  } else {
    out << "polytope sum of " << algebra_name(rs.algebra()) << " " << weight_str(lambda)
        << " [method=" << polytope_sum_method_name(method) << "]\n";
    out << "  " << report.sum << "\n";
    out << "terms: " << report.term_count << "\n";
    if (compared)
      out << (agrees ? "AGREES with dominance oracle" : "DIFFERS from dominance oracle") << "\n";
  }
  return agrees ? 0 : 1;
}

int cmd_expand(const CliOptions& opts, std::ostream& out) {
  const RootSystem rs = build_from_options(opts);
  const Weight lambda = dominant_weight_from_options(rs, opts);
  const PolytopeExpansion expansion = polytope_expansion(rs, lambda);
  if (json_format(opts)) {
    nlohmann::json j = expansion_to_json(expansion);
    j["algebra"] = algebra_name(rs.algebra());
    out << j.dump(2) << "\n";
  } else {
    out << "polytope expansion of " << algebra_name(rs.algebra()) << " character "
        << weight_str(lambda) << "\n";
    for (const auto& [mu, a] : expansion.coefficients)
      out << "  A" << weight_str(mu) << " = " << a << "\n";
    out << "terms: " << expansion.coefficients.size() << "\n";
  }
  return 0;
}

int cmd_apply(const CliOptions& opts, std::ostream& out) {
  const RootSystem rs = build_from_options(opts);
  const Weight mu = parse_weight_labels(opts.weight);
  rs.check_weight(mu, "--weight");
  const OperatorWord word = parse_operator_expression(rs, opts.expr);
  const FormalSum result = apply_operator_word(rs, word, monomial(mu));
  if (json_format(opts)) {
    nlohmann::json j = formal_sum_to_json(result);
    j["algebra"] = algebra_name(rs.algebra());
    j["lambda"] = weight_to_json(mu);
    j["expr"] = opts.expr;
    out << j.dump(2) << "\n";
  } else {
    out << "apply \"" << opts.expr << "\" to e" << weight_str(mu) << " in "
        << algebra_name(rs.algebra()) << "\n";
    out << "  " << result << "\n";
    out << "terms: " << result.support_size() << "\n";
  }
  return 0;
}

int print_reports(const std::vector<VerifyReport>& reports, std::ostream& out) {
  std::size_t total = 0, passed = 0;
  for (const VerifyReport& report : reports) {
    for (const VerifyCase& c : report.cases) {
      ++total;
      if (c.pass) ++passed;
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " " << c.detail;
      out << "\n";
    }
  }
  out << "summary: " << passed << "/" << total << " PASS\n";
  return passed == total ? 0 : 1;
}

int cmd_verify(const std::string& kind, const CliOptions& opts, std::ostream& out) {
  const int cap = effective_rank_cap(opts);
  std::vector<VerifyReport> reports;

  auto algebras_for_sweep = [&](int default_max_rank) {
    std::vector<AlgebraId> ids;
    if (!opts.algebra.empty()) {
      ids.push_back(parse_algebra(opts.algebra));
    } else {
      const int top = opts.max_rank > 0 ? opts.max_rank : default_max_rank;
      for (int n = 1; n <= top; ++n) ids.push_back({AlgebraFamily::A, n});
    }
    return ids;
  };

  if (kind == "theorem") {
    for (const AlgebraId& id : algebras_for_sweep(4))
      reports.push_back(verify_theorem_sweep(build_root_system(id, cap), opts.max_level));
  } else if (kind == "lemma") {
    for (const AlgebraId& id : algebras_for_sweep(5))
      reports.push_back(verify_lemma(build_root_system(id, cap)));
  } else if (kind == "rank2") {
    std::vector<AlgebraId> ids;
    if (!opts.algebra.empty()) {
      ids.push_back(parse_algebra(opts.algebra));
    } else {
      ids.push_back({AlgebraFamily::C2, 2});
      ids.push_back({AlgebraFamily::G2, 2});
    }
    for (const AlgebraId& id : ids)
      reports.push_back(verify_rank2_sweep(build_root_system(id, cap), opts.max_level));
  } else if (kind == "braid") {
    std::vector<AlgebraId> ids;
    if (!opts.algebra.empty()) {
      ids.push_back(parse_algebra(opts.algebra));
    } else {
      ids = {{AlgebraFamily::A, 2},
             {AlgebraFamily::A, 3},
             {AlgebraFamily::C2, 2},
             {AlgebraFamily::G2, 2}};
    }
    for (const AlgebraId& id : ids)
      reports.push_back(verify_braid(build_root_system(id, cap), opts.seed));
  }
  return print_reports(reports, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Weyl polytope sums, Demazure operators and Lie characters for the\n"
               "simple Lie algebras A1..A9, C2 and G2."};
  app.name("weylpoly");
  app.require_subcommand(1);

  CliOptions opts;

  auto add_common = [&](CLI::App* cmd, bool with_weight) {
    cmd->add_option("--algebra", opts.algebra, "Algebra: A1..A9, C2 or G2")->required();
    if (with_weight)
      cmd->add_option("--weight", opts.weight, "Comma-separated Dynkin labels")->required();
    cmd->add_option("--format", opts.format, "Output format: text or json");
    cmd->add_option("--max-rank", opts.max_rank, "Override the group-enumeration rank cap");
  };

  CLI::App* char_cmd = app.add_subcommand("char", "Irreducible character of a dominant weight");
  add_common(char_cmd, true);
  char_cmd->add_option("--method", opts.method, "demazure (default) or weyl");

  CLI::App* poly_cmd =
      app.add_subcommand("polytope-sum", "Weyl polytope sum of a dominant weight");
  add_common(poly_cmd, true);
  poly_cmd->add_option("--method", opts.method, "dominance (default), cones or demazure");

  CLI::App* expand_cmd =
      app.add_subcommand("expand", "Polytope expansion of an irreducible character");
  add_common(expand_cmd, true);

  CLI::App* apply_cmd =
      app.add_subcommand("apply", "Apply an operator word in r<i>, D<i>, d<i> to e^weight");
  add_common(apply_cmd, true);
  apply_cmd->add_option("--expr", opts.expr, "Whitespace-separated atoms, rightmost acts first")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Verification sweeps");
  verify_cmd->require_subcommand(1);
  std::vector<std::string> kinds = {"theorem", "lemma", "rank2", "braid"};
  std::map<std::string, CLI::App*> verify_subs;
  for (const std::string& kind : kinds) {
    CLI::App* sub = verify_cmd->add_subcommand(kind);
    sub->add_option("--algebra", opts.algebra, "Algebra (default: a standard sweep)");
    sub->add_option("--max-level", opts.max_level, "Bound on the label sum of swept weights");
    sub->add_option("--max-rank", opts.max_rank, "Largest A-family rank to sweep");
    if (kind == "braid") sub->add_option("--seed", opts.seed, "Seed for the random sums");
    verify_subs[kind] = sub;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (char_cmd->parsed()) return cmd_char(opts, out);
    if (poly_cmd->parsed()) return cmd_polytope_sum(opts, out);
    if (expand_cmd->parsed()) return cmd_expand(opts, out);
    if (apply_cmd->parsed()) return cmd_apply(opts, out);
    if (verify_cmd->parsed()) {
      for (const auto& [kind, sub] : verify_subs)
        if (sub->parsed()) return cmd_verify(kind, opts, out);
    }
    err << "error: no command given\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace weylpoly
