#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ffh::cli {

using json = nlohmann::ordered_json;

const std::vector<std::string>& verbs();

// Verb plus its options; repeated options keep every value in order.
struct Command {
  std::string verb;
  std::map<std::string, std::vector<std::string>> options;

  bool has(const std::string& key) const { return options.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const;
  long get_long(const std::string& key, long fallback) const;
  std::vector<std::string> all(const std::string& key) const;
};

// Exit codes.
enum Exit { Ok = 0, Violation = 1, BadInput = 2, Unsupported = 3 };

struct Outcome {
  json report;
  int exit_code = Ok;
};

// Unknown verbs and options raise InputError before anything is computed.
Command parse_command_line(const std::vector<std::string>& args);

// Never throws for library errors; they become diagnostics plus an exit code.
Outcome run_command(const Command& cmd);

// Golden checks; one entry per example.
json self_test(int jobs);

std::string render(const json& report);
// One "path: value" line per leaf.
std::string render_text(const json& report);

}  // namespace ffh::cli
