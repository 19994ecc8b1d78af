#include <fstream>
#include <iostream>

#include "ffh/cli/commands.hpp"
#include "ffh/core/error.hpp"

using namespace ffh::cli;

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << "usage: ffh <verb> [options]\nverbs:";
    for (const auto& v : verbs()) std::cout << " " << v;
    std::cout << "\n";
    return args.empty() ? BadInput : Ok;
  }
  Command cmd;
  try {
    cmd = parse_command_line(args);
  } catch (const ffh::InputError& e) {
    json report{{"schema", "1"},
                {"command", {{"verb", args[0]}}},
                {"results", json::object()},
                {"diagnostics", json::array({{{"kind", "usage"}, {"message", e.what()}}})},
                {"exit_code", static_cast<int>(BadInput)}};
    std::cout << render(report);
    return BadInput;
  }
  Outcome out = run_command(cmd);
  const std::string text = cmd.has("text") ? render_text(out.report) : render(out.report);
  if (cmd.has("out")) {
    std::ofstream f(cmd.get("out"));
    if (!f) {
      std::cerr << "cannot write " << cmd.get("out") << "\n";
      return BadInput;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return out.exit_code;
}
