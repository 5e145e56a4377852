// hodge-sl2: classify horizontal SL(2)s and R-split polarized mixed Hodge
// structures on a Mumford-Tate domain given by a simple type and a grading
// element, and list the nilpotent-orbit combinatorics behind them.
//
// Subcommands:
//   classify   <type> --grading ...   classification table (text or JSON)
//   hodge-tate <type> --grading ...   Hodge-Tate existence with witness
//   orbits     <type> [--even-jm]     characteristic vectors, JM classes
//   diamond    <type> --grading ...   classification with Deligne diamonds
//
// Exit codes: 0 ok, 2 usage/parse error, 3 resource limit exceeded.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hodge/report.hpp"

namespace {

struct CommonArgs {
  std::string type;
  std::string grading;
  std::string rep;
  int n = 0;
  bool n_set = false;
  std::string format = "text";
  bool diamonds = false;
  bool include_trivial = false;
  std::size_t weyl_cap = 0;
};

std::size_t env_weyl_cap() {
  if (const char* v = std::getenv("HODGE_SL2_WEYL_CAP")) {
    try {
      long long x = std::stoll(v);
      if (x > 0) return static_cast<std::size_t>(x);
    } catch (const std::logic_error&) {
    }
    throw hodge::parse_error("bad HODGE_SL2_WEYL_CAP value");
  }
  return 1000000;
}

hodge::DomainQuery to_query(const CommonArgs& a) {
  hodge::DomainQuery q;
  q.type_str = a.type;
  q.grading_str = a.grading;
  if (!a.rep.empty()) {
    q.rep = hodge::parse_csv_ints(a.rep);
    q.weight_n = a.n_set ? a.n : 0;
  } else if (a.n_set) {
    throw hodge::parse_error("--n requires --rep");
  }
  q.diamonds = a.diamonds;
  q.include_trivial = a.include_trivial;
  q.weyl_cap = a.weyl_cap ? a.weyl_cap : env_weyl_cap();
  return q;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_grading) {
  cmd->add_option("type", a.type, "Cartan type, e.g. C3")->required();
  if (with_grading)
    cmd->add_option("--grading", a.grading,
                    "grading element: indices (\"1,3\") or 0/1 mask (\"1,0,1\")")
        ->required();
  cmd->add_option("--format", a.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--weyl-cap", a.weyl_cap, "Weyl group enumeration cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horizontal SL(2) / R-split PMHS classifier"};
  app.require_subcommand(1);

  CommonArgs ca, ha, oa, da;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classification table");
  add_common(classify_cmd, ca, true);
  classify_cmd->add_option("--rep", ca.rep, "representation by fundamental-weight coefficients");
  classify_cmd->add_option("--n", ca.n, "Hodge weight of the representation")
      ->each([&ca](const std::string&) { ca.n_set = true; });
  classify_cmd->add_flag("--diamonds", ca.diamonds, "print Deligne diamonds");
  classify_cmd->add_flag("--include-trivial", ca.include_trivial,
                         "include the trivial (empty Levi) class");

  CLI::App* ht_cmd = app.add_subcommand("hodge-tate", "Hodge-Tate existence");
  add_common(ht_cmd, ha, true);

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "nilpotent orbit data");
  add_common(orbits_cmd, oa, false);
  bool even_only = false;
  orbits_cmd->add_flag("--even-jm", even_only, "list only even Jacobson-Morosov classes");

  CLI::App* diamond_cmd = app.add_subcommand("diamond", "classification with diamonds");
  add_common(diamond_cmd, da, true);
  diamond_cmd->add_option("--rep", da.rep, "representation by fundamental-weight coefficients");
  diamond_cmd->add_option("--n", da.n, "Hodge weight of the representation")
      ->each([&da](const std::string&) { da.n_set = true; });
  diamond_cmd->add_flag("--include-trivial", da.include_trivial,
                        "include the trivial (empty Levi) class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed() || diamond_cmd->parsed()) {
      CommonArgs& a = classify_cmd->parsed() ? ca : da;
      if (diamond_cmd->parsed()) a.diamonds = true;
      auto q = to_query(a);
      auto r = hodge::run_classify(q);
      if (a.format == "json") std::cout << hodge::to_json(r).dump(2) << "\n";
      else std::cout << hodge::render_text(r, q.diamonds);
    } else if (ht_cmd->parsed()) {
      auto r = hodge::run_hodge_tate(to_query(ha));
      if (ha.format == "json") std::cout << hodge::to_json(r).dump(2) << "\n";
      else std::cout << hodge::render_text(r);
    } else if (orbits_cmd->parsed()) {
      auto r = hodge::run_orbits(oa.type);
      if (oa.format == "json") std::cout << hodge::to_json(r).dump(2) << "\n";
      else std::cout << hodge::render_text(r, even_only);
    }
  } catch (const hodge::size_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hodge::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
