// Command-line front end over the C library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "satogr/satogr.h"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// Errors detected before a job runs still produce a JSON document on stdout.
int usage_error(const std::string& command, const std::string& message) {
  nlohmann::json doc = {{"command", command}, {"status", "error"}, {"error", {{"kind", "parse"}, {"message", message}}}};
  std::cout << doc.dump(2) << "\n";
  return SATOGR_ERR_PARSE;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the Grassmannian of k((z)). Reads a JSON payload and writes a JSON document."};
  std::string commands_help = "one of:";
  for (const char* const* c = satogr_commands(); *c; ++c) commands_help += std::string(" ") + *c;

  std::string command, field = "q", in_path, suite = "all";
  std::optional<std::int64_t> deg, tail_depth, window, pair_window;
  std::uint64_t seed = 1;
  std::optional<std::string> scale;
  app.add_option("command", command, commands_help)->required();
  app.add_option("--field", field, "base field: q or fp:<p>");
  app.add_option("--deg", deg, "truncation degree d of the coordinate ring (tau, baker)");
  app.add_option("--tail-depth", tail_depth, "re-express input points with this tail depth N");
  app.add_option("--window", window, "z-window M (baker; abel and plus exponentials truncation)");
  app.add_option("--pair-window", pair_window, "window W for the commutator pairing");
  app.add_option("--seed", seed, "seed for verify");
  app.add_option("--scale", scale, "verify scale: small or full (default full)");
  app.add_option("--suite", suite, "verify suite name or all");
  app.add_option("--in", in_path, "payload file (default: standard input)");
  app.add_flag_callback("--version", [] {
    std::cout << satogr_version() << "\n";
    throw CLI::Success();
  }, "print the library version");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return usage_error(command, e.what());
  }

  std::string payload;
  if (command == "verify") {
    payload = nlohmann::json{{"suite", suite}}.dump();
  } else if (!in_path.empty()) {
    std::ifstream f(in_path);
    if (!f) return usage_error(command, "cannot read " + in_path);
    payload = read_all(f);
  } else {
    payload = read_all(std::cin);
  }

  satogr_context* ctx = nullptr;
  if (satogr_context_new(&ctx) != SATOGR_OK) return SATOGR_ERR_INTERNAL;
  auto configure = [&]() -> satogr_status {
    if (auto s = satogr_context_set_field(ctx, field.c_str())) return s;
    const std::pair<satogr_precision, const std::optional<std::int64_t>*> flags[] = {
        {SATOGR_DEG, &deg}, {SATOGR_TAIL_DEPTH, &tail_depth}, {SATOGR_WINDOW, &window}, {SATOGR_PAIR_WINDOW, &pair_window}};
    for (const auto& [which, v] : flags)
      if (*v)
        if (auto s = satogr_context_set_precision(ctx, which, **v)) return s;
    if (auto s = satogr_context_set_seed(ctx, seed)) return s;
    if (scale)
      if (auto s = satogr_context_set_scale(ctx, scale->c_str())) return s;
    return SATOGR_OK;
  };
  if (configure() != SATOGR_OK) {
    const std::string msg = satogr_context_last_error(ctx);
    satogr_context_free(ctx);
    return usage_error(command, msg);
  }

  satogr_result* result = nullptr;
  const satogr_status status = satogr_run(ctx, command.c_str(), payload.c_str(), &result);
  if (result) {
    std::fputs(satogr_result_document(result), stdout);
  } else {
    std::fprintf(stderr, "%s\n", satogr_context_last_error(ctx));
  }
  satogr_result_free(result);
  satogr_context_free(ctx);
  return static_cast<int>(status);
}
