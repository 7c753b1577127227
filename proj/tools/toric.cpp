#include "commands.hpp"

#include "toric/error.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
  using namespace toric;
  CLI::App app{"Ishida complexes, lcdef and Lefschetz maps of toric cones and fans"};
  app.require_subcommand(1);
  cli::Flags flags;
  std::string input;
  int l = -1, p = -1;

  for (const auto& name : cli::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("input", input, "input document ('-' for stdin)")->required();
    sub->add_option("--l", l, "Ishida degree l");
    sub->add_option("--p", p, "form degree p");
    sub->add_option("--seed", flags.seed, "seed for line shellings and random checks");
    sub->add_option("--budget", flags.budget, "node budget of the shelling search");
    sub->add_flag("--table", flags.table, "aligned text instead of JSON");
    sub->add_flag("--force", flags.force, "allow rank > 8 or more than 64 rays");
    sub->add_flag("--timing", flags.timing, "add wall time to the report");
  }
  CLI11_PARSE(app, argc, argv);
  if (l >= 0) flags.l = l;
  if (p >= 0) flags.p = p;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    InputDocument doc;
    if (input == "-") {
      std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
      doc = parse_document(text);
    } else {
      doc = read_document(input);
    }
    const auto report = cli::run(command, doc, flags);
    if (flags.table) std::cout << cli::render_table(report);
    else std::cout << report.dump(2) << '\n';
    return report["ok"].get<bool>() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_status(e.code());
  }
}
