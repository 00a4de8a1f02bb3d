#include "braidfrac/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "braidfrac/errors.hpp"
#include "braidfrac/expression.hpp"
#include "braidfrac/families.hpp"
#include "braidfrac/harness.hpp"

namespace braidfrac {

namespace {

struct Common {
  std::string drs;
  std::string flavor = "braided";
  int degree_cap = kDefaultDegreeCap;

  void attach(CLI::App* cmd) {
    cmd->add_option("--drs", drs, "family (thompson:<n>, houghton:<n>, edgeshift:<file>) or DRS file")
        ->required();
    cmd->add_option("--flavor", flavor, "braided | pure | permutation | plain");
    cmd->add_option("--degree-cap", degree_cap, "Magnus degree cap for the pure order")
        ->check(CLI::PositiveNumber);
  }

  GroupContext context() const {
    Flavor f;
    try {
      f = parse_flavor(flavor);
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--flavor", e.what());
    }
    auto system = resolve_family(drs);
    GroupContext ctx(system, system->base(), f);
    ctx.degree_cap = degree_cap;
    return ctx;
  }
};

// Parse errors are reported per argument so the column refers to that argument.
FractionElement element_arg(const GroupContext& ctx, const std::string& text, int index) {
  try {
    return parse_expression(ctx, text);
  } catch (const ParseError& e) {
    throw ParseError("argument " + std::to_string(index) + ": " + std::string(e.what()), 0, 0);
  }
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& argv) {
  CliResult result;
  std::ostringstream out, err;

  CLI::App app{"Braided fractions: orders, normal forms and axiom suites"};
  app.name(argv.empty() ? "braidfrac" : argv[0]);
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> exprs;
  std::string mode = "left";
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  int budget = HarnessOptions{}.budget;

  auto* sign_cmd = app.add_subcommand("sign", "sign of an element: positive | negative | zero");
  auto* compare_cmd = app.add_subcommand("compare", "order of two elements: less | equal | greater");
  auto* mul_cmd = app.add_subcommand("mul", "product of the given elements, left to right");
  auto* inv_cmd = app.add_subcommand("inv", "inverse of an element");
  auto* normalize_cmd = app.add_subcommand("normalize", "remove cancelling carets");
  auto* project_cmd = app.add_subcommand("project", "forget the braid of a pure element");
  auto* realize_cmd = app.add_subcommand("realize", "PL map of a plain element");
  auto* axioms_cmd = app.add_subcommand("axioms", "run a randomized axiom suite");

  for (auto* cmd : {sign_cmd, compare_cmd, mul_cmd, inv_cmd, normalize_cmd, project_cmd, realize_cmd})
    common.attach(cmd);
  for (auto* cmd : {sign_cmd, compare_cmd})
    cmd->add_option("--mode", mode, "left | bi")->check(CLI::IsMember({"left", "bi"}));
  sign_cmd->add_option("expr", exprs)->required()->expected(1);
  compare_cmd->add_option("exprs", exprs)->required()->expected(2);
  mul_cmd->add_option("exprs", exprs)->required()->expected(1, 1 << 20);
  inv_cmd->add_option("expr", exprs)->required()->expected(1);
  normalize_cmd->add_option("expr", exprs)->required()->expected(1);
  project_cmd->add_option("expr", exprs)->required()->expected(1);
  realize_cmd->add_option("expr", exprs)->required()->expected(1);

  common.attach(axioms_cmd);
  axioms_cmd->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  axioms_cmd->add_option("--trials", trials, "number of trials");
  axioms_cmd->add_option("--seed", seed, "run seed");
  axioms_cmd->add_option("--budget", budget, "forest steps per side")->check(CLI::PositiveNumber);

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  if (args.empty()) args.push_back("braidfrac");

  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    result.code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    GroupContext ctx = common.context();
    const OrderMode order_mode = mode == "bi" ? OrderMode::Bi : OrderMode::Left;
    std::vector<FractionElement> elems;
    for (std::size_t i = 0; i < exprs.size(); ++i)
      elems.push_back(element_arg(ctx, exprs[i], static_cast<int>(i) + 1));

    if (*sign_cmd) {
      out << to_string(sign(elems[0], order_mode)) << "\n";
    } else if (*compare_cmd) {
      out << to_string(compare(elems[0], elems[1], order_mode)) << "\n";
    } else if (*mul_cmd) {
      FractionElement p = elems[0];
      for (std::size_t i = 1; i < elems.size(); ++i) p = multiply(p, elems[i]);
      out << format_element(p) << "\n";
    } else if (*inv_cmd) {
      out << format_element(invert(elems[0])) << "\n";
    } else if (*normalize_cmd) {
      out << format_element(normalize(elems[0])) << "\n";
    } else if (*project_cmd) {
      out << format_element(psi_project(elems[0])) << "\n";
    } else if (*realize_cmd) {
      if (ctx.flavor != Flavor::Plain) throw FlavorError("realize needs the plain flavor");
      out << format_plmap(realize_pair(elems[0].T(), elems[0].S())) << "\n";
    } else if (*axioms_cmd) {
      Report r = run_suite(suite, ctx, trials, seed, HarnessOptions{budget});
      out << report_format(r);
      result.code = r.passed() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    result.code = 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    result.code = 2;
  } catch (const FlavorError& e) {
    err << "flavor error: " << e.what() << "\n";
    result.code = 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.code = 1;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace braidfrac
