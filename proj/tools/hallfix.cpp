// hallfix: batch verifier for Hall subgroup fixed point formulas.
//
//   hallfix <command> [--group NAME | --file PATH] [--pi P1,P2] [--json] [--cap N]
//
// Exit codes: 0 all checks pass, 1 unexpected failure, 2 input error.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hallfix/checks.hpp"
#include "hallfix/errors.hpp"
#include "hallfix/hall.hpp"

namespace {

constexpr int kInputError = 2;

std::string command_list()
{
  std::string res;
  for (auto const &c : hallfix::check_commands())
    res += (res.empty() ? "" : ", ") + c;
  return res;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact verification of fixed point formulas for Hall subgroups"};
  app.set_version_flag("--version", "hallfix 0.1.0");

  std::string command, group_name, file_path, pi_text;
  bool json = false;
  bool list = false;
  std::uint64_t cap = hallfix::kDefaultElementCap;
  std::uint64_t tuple_cap = hallfix::kDefaultTupleCap;
  std::uint64_t n = 0;

  app.add_option("command", command, "One of: " + command_list());
  auto *group_opt = app.add_option("--group", group_name, "Builtin group name");
  app.add_option("--file", file_path, "Group file path")->excludes(group_opt);
  app.add_option("--pi", pi_text, "Comma separated prime list, e.g. 2,3");
  app.add_flag("--json", json, "Emit JSON records");
  app.add_option("--cap", cap, "Element cap for group closure");
  app.add_option("--tuple-cap", tuple_cap, "Cap on tuple counts in orbit counting");
  app.add_option("--n", n, "Exponent order for curiosity (default |G|)");
  app.add_flag("--list", list, "List builtin groups and exit");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    auto rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  if (list) {
    for (auto const &e : hallfix::builtin_corpus())
      std::cout << e.name << " order " << e.order << "\n";
    return 0;
  }

  try {
    if (command.empty())
      throw hallfix::InvalidArgument("missing command; expected one of: " + command_list());

    hallfix::CheckOptions opts;
    opts.cap = cap;
    opts.tuple_cap = tuple_cap;
    if (!pi_text.empty())
      opts.pi = hallfix::PiSet::parse(pi_text);
    if (n)
      opts.n = n;

    std::vector<hallfix::Record> records;
    if (command == "scan") {
      records = hallfix::scan_corpus(opts);
    } else {
      if (group_name.empty() && file_path.empty())
        throw hallfix::InvalidArgument(command + " needs --group or --file");
      auto target = hallfix::resolve_target(group_name.empty() ? file_path : group_name, cap);

      if (command == "lambda") {
        if (!opts.pi)
          throw hallfix::InvalidArgument("lambda requires --pi");
        try {
          auto ctx = hallfix::build_hall_context(target.group, *opts.pi);
          std::cout << (json ? hallfix::lambda_report_json(ctx) + "\n"
                             : hallfix::lambda_report_text(ctx));
          return 0;
        } catch (hallfix::NoHallSubgroup const &e) {
          std::cerr << "hallfix: " << e.what() << "\n";
          return 1;
        }
      }
      records = hallfix::run_check(command, target, opts);
    }

    if (json) {
      std::cout << hallfix::to_json(records) << "\n";
    } else if (command == "curiosity") {
      for (auto const &r : records)
        std::cout << r.witness << "\n";
    } else {
      for (auto const &r : records)
        std::cout << hallfix::to_text(r) << "\n";
    }
    return hallfix::exit_status(records);
  } catch (hallfix::ParseError const &e) {
    std::cerr << "hallfix: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (hallfix::CapExceeded const &e) {
    std::cerr << "hallfix: " << e.what() << "\n";
    return kInputError;
  } catch (hallfix::InvalidArgument const &e) {
    std::cerr << "hallfix: " << e.what() << "\n";
    return kInputError;
  } catch (hallfix::Error const &e) {
    std::cerr << "hallfix: " << e.what() << "\n";
    return 1;
  }
}
