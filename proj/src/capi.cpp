#include "satogr/satogr.h"

#include <new>
#include <string>

#include "satogr/jobs.hpp"
#include "satogr/scalars.hpp"
#include "satogr/verify.hpp"

struct satogr_context {
  satogr::jobs::Options options;
  std::string last_error;
};

struct satogr_result {
  satogr_status status;
  std::string document;
};

namespace {

satogr_status fail(satogr_context* ctx, satogr_status s, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  return s;
}

std::optional<std::int64_t>* slot(satogr_context* ctx, satogr_precision which) {
  switch (which) {
    case SATOGR_DEG: return &ctx->options.deg;
    case SATOGR_TAIL_DEPTH: return &ctx->options.tail_depth;
    case SATOGR_WINDOW: return &ctx->options.window;
    case SATOGR_PAIR_WINDOW: return &ctx->options.pair_window;
  }
  return nullptr;
}

}  // namespace

extern "C" {

const char* satogr_version(void) { return SATOGR_VERSION; }

const char* satogr_status_name(satogr_status status) {
  switch (status) {
    case SATOGR_OK: return "ok";
    case SATOGR_FAILED: return "failed";
    case SATOGR_ERR_PARSE: return "parse";
    case SATOGR_ERR_PRECONDITION: return "precondition";
    case SATOGR_ERR_PRECISION: return "precision";
    case SATOGR_ERR_INTERNAL: return "internal";
    case SATOGR_ERR_ARGUMENT: return "argument";
  }
  return "unknown";
}

satogr_status satogr_context_new(satogr_context** out) {
  if (!out) return SATOGR_ERR_ARGUMENT;
  *out = new (std::nothrow) satogr_context();
  return *out ? SATOGR_OK : SATOGR_ERR_INTERNAL;
}

void satogr_context_free(satogr_context* ctx) { delete ctx; }

const char* satogr_context_last_error(const satogr_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

satogr_status satogr_context_set_field(satogr_context* ctx, const char* spec) {
  if (!ctx || !spec) return fail(ctx, SATOGR_ERR_ARGUMENT, "null argument");
  try {
    satogr::BaseField::parse(spec);
  } catch (const std::exception& e) {
    return fail(ctx, SATOGR_ERR_PARSE, e.what());
  }
  ctx->options.field = spec;
  return SATOGR_OK;
}

satogr_status satogr_context_set_precision(satogr_context* ctx, satogr_precision which, int64_t value) {
  if (!ctx) return SATOGR_ERR_ARGUMENT;
  auto* s = slot(ctx, which);
  if (!s) return fail(ctx, SATOGR_ERR_ARGUMENT, "unknown precision flag");
  if (value < 0) return fail(ctx, SATOGR_ERR_ARGUMENT, "precision values must be non-negative");
  *s = value;
  return SATOGR_OK;
}

satogr_status satogr_context_clear_precision(satogr_context* ctx, satogr_precision which) {
  if (!ctx) return SATOGR_ERR_ARGUMENT;
  auto* s = slot(ctx, which);
  if (!s) return fail(ctx, SATOGR_ERR_ARGUMENT, "unknown precision flag");
  s->reset();
  return SATOGR_OK;
}

satogr_status satogr_context_set_seed(satogr_context* ctx, uint64_t seed) {
  if (!ctx) return SATOGR_ERR_ARGUMENT;
  ctx->options.seed = seed;
  return SATOGR_OK;
}

satogr_status satogr_context_set_scale(satogr_context* ctx, const char* scale) {
  if (!ctx || !scale) return fail(ctx, SATOGR_ERR_ARGUMENT, "null argument");
  try {
    satogr::verify::parse_scale(scale);
  } catch (const std::exception& e) {
    return fail(ctx, SATOGR_ERR_PARSE, e.what());
  }
  ctx->options.scale = scale;
  return SATOGR_OK;
}

const char* const* satogr_commands(void) {
  static const auto names = [] {
    std::vector<const char*> v;
    for (const auto& c : satogr::jobs::commands()) v.push_back(c.c_str());
    v.push_back(nullptr);
    return v;
  }();
  return names.data();
}

satogr_status satogr_run(satogr_context* ctx, const char* command, const char* payload, satogr_result** out) {
  if (!ctx || !command || !out) return fail(ctx, SATOGR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    auto outcome = satogr::jobs::run(command, payload ? payload : "", ctx->options);
    const auto status = static_cast<satogr_status>(outcome.status);
    *out = new satogr_result{status, std::move(outcome.document)};
    ctx->last_error.clear();
    if (status != SATOGR_OK) ctx->last_error = std::string(command) + " returned " + satogr_status_name(status);
    return status;
  } catch (const std::bad_alloc&) {
    return fail(ctx, SATOGR_ERR_INTERNAL, "out of memory");
  }
}

satogr_status satogr_result_status(const satogr_result* result) {
  return result ? result->status : SATOGR_ERR_ARGUMENT;
}

const char* satogr_result_document(const satogr_result* result) { return result ? result->document.c_str() : ""; }

void satogr_result_free(satogr_result* result) { delete result; }

}  // extern "C"
