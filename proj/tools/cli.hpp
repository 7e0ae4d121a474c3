#ifndef STURMIAN_TOOLS_CLI_HPP
#define STURMIAN_TOOLS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sturmian::cli {

enum class Format { json, tsv };

/// One line of CLI output. Every value is a string so both formats carry
/// the same logical content.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> result;
  bool ok = true;
  std::optional<std::string> error_kind;
};

std::string to_json_line(const OutputRecord& r);

/// Writes records, emitting a TSV header whenever the column set changes.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}
  void write(const OutputRecord& r);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> header_;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmian::cli

#endif  // STURMIAN_TOOLS_CLI_HPP
