#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyclofactor::cli {

enum class Command { Binomial, Unity, Cyclotomic, Compose, Verify, Sweep };
enum class Output { Text, Json };

struct Request {
  Command command = Command::Unity;
  std::string field_spec;
  std::optional<std::string> a;
  std::optional<std::string> f;
  std::optional<std::uint64_t> n;
  std::optional<std::string> kind;  // what `verify` factors
  Output output = Output::Text;
  std::uint64_t seed = 20240601;
  bool show_plan = false;
  // sweep only
  std::vector<std::uint64_t> fields;
  std::uint64_t max_n = 60;
  bool oracle = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int parse_error = 2;
inline constexpr int math_error = 3;
}  // namespace exit_code

int run(const Request& req, std::ostream& out, std::ostream& err);

/// Parse command-line arguments and run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclofactor::cli
