#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcell/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

gcell::Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("partition parts must be integers");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return gcell::Partition{parts};  // validates positivity and ordering
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-cell decomposition of the punctual Hilbert scheme Hilb^n(k[[x,y]])"};
  app.require_subcommand(1);

  std::string format = "table";
  int n = 0;
  std::string mtext;
  bool group_by_h = false;
  bool verify = false;
  int trials = 25;
  std::int64_t field = 32003;
  std::uint64_t seed = 0;

  CLI::App* cells = app.add_subcommand("cells", "All cells of Hilb^n");
  cells->add_option("n", n, "colength")->required()->check(CLI::PositiveNumber);
  cells->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cells->add_flag("--group-by-h", group_by_h, "group cells by Hilbert function");

  CLI::App* cellcmd = app.add_subcommand("cell", "One cell, named by its partition");
  cellcmd->add_option("m", mtext, "comma-separated nondecreasing parts")->required();
  cellcmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  CLI::App* strata = app.add_subcommand("strata", "Betti strata of one cell");
  strata->add_option("m", mtext, "comma-separated nondecreasing parts")->required();
  strata->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  CLI::App* check = app.add_subcommand("check", "Counting checks and optional random verification");
  check->add_option("n", n, "colength")->required()->check(CLI::PositiveNumber);
  check->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  check->add_flag("--verify", verify, "run random-specialization verification");
  check->add_option("--trials", trials, "trials per cell")->check(CLI::PositiveNumber);
  check->add_option("--field", field, "prime field order");
  check->add_option("--seed", seed, "64-bit seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cells->parsed()) {
      gcell::DecompositionReport rep = gcell::cellular_decomposition(n);
      if (format == "json") {
        gcell::json j = gcell::report_to_json(rep);
        if (group_by_h) {
          gcell::json groups = gcell::json::array();
          for (const auto& [h, idxs] : rep.groups)
            groups.push_back(gcell::json{{"h", h.values}, {"cells", idxs}});
          j["groups"] = groups;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << gcell::report_table(rep, group_by_h);
      }
      return kExitOk;
    }
    if (cellcmd->parsed()) {
      gcell::Cell c = gcell::cell(parse_partition(mtext));
      if (format == "json")
        std::cout << gcell::cell_to_json(c).dump(2) << "\n";
      else
        std::cout << gcell::cell_table_block(c);
      return kExitOk;
    }
    if (strata->parsed()) {
      gcell::Cell c = gcell::cell(parse_partition(mtext));
      gcell::BettiStrata s = gcell::betti_strata(c.m);
      if (format == "json")
        std::cout << gcell::strata_to_json(s, c).dump(2) << "\n";
      else
        std::cout << gcell::strata_table(s, c);
      return kExitOk;
    }
    if (check->parsed()) {
      if (!gcell::is_prime(static_cast<std::uint64_t>(field))) {
        std::cerr << "error: --field must be prime\n";
        return kExitUsage;
      }
      gcell::CheckResult plaus = gcell::plausibility_check(n);
      gcell::CheckResult fib = gcell::fibration_check(n);
      bool pass = plaus.ok && fib.ok;
      gcell::json j;
      j["n"] = n;
      j["plausibility"] = plaus.ok;
      j["fibration"] = fib.ok;
      std::vector<std::string> diffs = plaus.diffs;
      diffs.insert(diffs.end(), fib.diffs.begin(), fib.diffs.end());
      if (verify) {
        gcell::DecompositionReport rep = gcell::verify_conjecture(n, trials, field, seed);
        bool vok = rep.verified_ok();
        pass = pass && vok;
        j["verify"] = vok;
        j["trials"] = trials;
        j["field"] = field;
        j["seed"] = seed;
        if (!vok)
          for (const auto& v : *rep.verification)
            diffs.insert(diffs.end(), v.failures.begin(), v.failures.end());
      }
      j["pass"] = pass;
      j["diffs"] = diffs;
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "n = " << n << "\n";
        std::cout << "plausibility (a_i = P(i, n-i)): " << (plaus.ok ? "pass" : "FAIL") << "\n";
        std::cout << "fibration (dim - dim_hom constant per h): " << (fib.ok ? "pass" : "FAIL")
                  << "\n";
        if (verify)
          std::cout << "random verification (" << trials << " trials, F_" << field << ", seed "
                    << seed << "): " << (j["verify"].get<bool>() ? "pass" : "FAIL") << "\n";
        for (const auto& d : diffs) std::cout << "  " << d << "\n";
      }
      return pass ? kExitOk : kExitCheckFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
