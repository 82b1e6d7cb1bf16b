#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace satogr::verify {

enum class Scale { small, full };
Scale parse_scale(const std::string& s);
std::string to_string(Scale s);

struct Property {
  Property() = default;
  explicit Property(std::string n) : name(std::move(n)) {}

  std::string name;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  // First failure, or a remark on informational properties.
  std::string note;
  // Reported but not part of the verdict.
  bool informational = false;
  bool pass() const { return failures == 0; }
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  Scale scale = Scale::small;
  std::vector<Property> properties;
  bool pass() const;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
};

const std::vector<std::string>& suite_names();
const std::vector<Criterion>& criteria();
// Throws ParseError for an unknown suite.
Report run_suite(const std::string& name, std::uint64_t seed, Scale scale);

}  // namespace satogr::verify
