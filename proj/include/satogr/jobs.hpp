#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satogr::jobs {

// Values match the C status codes and the CLI exit codes.
enum class Status { ok = 0, failed = 1, parse = 2, precondition = 3, precision = 4, internal = 5 };

struct Options {
  std::string field = "q";
  std::optional<std::int64_t> deg;
  std::optional<std::int64_t> tail_depth;
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> pair_window;
  std::uint64_t seed = 1;
  std::optional<std::string> scale;
};

struct Outcome {
  Status status = Status::ok;
  // JSON document, newline terminated.
  std::string document;
};

const std::vector<std::string>& commands();
// Never throws; failures become error documents.
Outcome run(const std::string& command, const std::string& payload, const Options& options);

}  // namespace satogr::jobs
