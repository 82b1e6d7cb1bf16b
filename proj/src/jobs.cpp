#include "satogr/jobs.hpp"

#include <functional>
#include <map>

#include "satogr/pairings.hpp"
#include "satogr/serialize.hpp"
#include "satogr/tau.hpp"
#include "satogr/verify.hpp"

namespace satogr::jobs {

using io::Json;

namespace {

struct Context {
  const Options& opt;
  BaseField field;
  Json payload;
  Json used = Json::object();

  std::int64_t need(const std::optional<std::int64_t>& v, const char* flag, const std::string& cmd) {
    if (!v) throw ParseError(cmd + " requires " + flag);
    used[std::string(flag).substr(2)] = *v;
    return *v;
  }
  std::optional<std::int64_t> maybe(const std::optional<std::int64_t>& v, const char* flag) {
    if (v) used[std::string(flag).substr(2)] = *v;
    return v;
  }
  const Json& get(const char* key) const {
    auto it = payload.find(key);
    if (it == payload.end()) throw ParseError(std::string("payload is missing '") + key + "'");
    return *it;
  }
  std::string text(const char* key, const std::string& fallback) const {
    auto it = payload.find(key);
    if (it == payload.end()) return fallback;
    if (!it->is_string()) throw ParseError(std::string("'") + key + "' must be a string");
    return it->get<std::string>();
  }
  Ring ring() const { return io::ring_from_json(payload.value("ring", Json(nullptr)), field); }
  GrassPoint point(const Ring& r) {
    GrassPoint l = io::point_from_json(get("point"), r);
    if (auto n = maybe(opt.tail_depth, "--tail-depth")) {
      if (*n < l.tail_depth())
        throw PreconditionError("--tail-depth " + std::to_string(*n) + " is below the point's tail depth " +
                                std::to_string(l.tail_depth()));
      l = l.deepened(*n);
    }
    return l;
  }
  // A group element, either factored or as a series to factor.
  GammaElement gamma(const Json& j, const Ring& r) const {
    if (j.is_object() && j.contains("gminus")) return io::gamma_from_json(j, r);
    return factorize(io::series_from_json(j, r));
  }
};

Json polynomial(const Ring& r, const RingElement& a) {
  return {{"ring", io::to_json(r)}, {"poly", io::to_json(a)}, {"text", a.to_string()}};
}

Json coordinates_json(const std::vector<std::pair<Partition, RingElement>>& coords) {
  Json out = Json::array();
  for (const auto& [p, v] : coords) out.push_back({{"partition", io::to_json(p)}, {"value", io::to_json(v)}});
  return out;
}

Json report_json(const verify::Report& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json j = {{"name", p.name}, {"instances", p.instances}, {"failures", p.failures}, {"pass", p.pass()}};
    if (!p.note.empty()) j["note"] = p.note;
    if (p.informational) j["informational"] = true;
    props.push_back(j);
  }
  return {{"suite", r.suite}, {"pass", r.pass()}, {"properties", props}};
}

using Handler = std::function<Json(Context&)>;

Json cmd_factor(Context& c) {
  const Ring r = c.ring();
  return {{"gamma", io::to_json(factorize(io::series_from_json(c.get("series"), r)))}};
}

Json cmd_exp(Context& c) {
  const Ring r = c.ring();
  const auto y = io::elements_from_json(c.get("y"), r);
  const std::string sign_text = c.text("sign", "minus");
  if (sign_text != "minus" && sign_text != "plus") throw ParseError("'sign' must be \"minus\" or \"plus\"");
  const Sign sign = sign_text == "minus" ? Sign::minus : Sign::plus;
  const std::string kind = c.text("kind", c.field.is_rational() ? "char0" : "charp");
  if (kind == "charp") return {{"gamma", io::to_json(exp_charp(r, y, sign))}, {"kind", kind}};
  if (kind != "char0") throw ParseError("'kind' must be \"char0\" or \"charp\"");
  std::optional<std::int64_t> trunc;
  if (sign == Sign::plus) trunc = c.need(c.opt.window, "--window", "exp with sign plus");
  return {{"gamma", io::to_json(exp_char0(r, y, sign, trunc))}, {"kind", kind}};
}

Json cmd_witt(Context& c) {
  const Ring r = c.ring();
  const auto a = io::elements_from_json(c.get("a"), r);
  const auto b = io::elements_from_json(c.get("b"), r);
  int n = static_cast<int>(std::max(a.size(), b.size()));
  if (c.payload.contains("n")) n = c.payload.at("n").get<int>();
  Json out = Json::array();
  for (const auto& e : witt_add(r, a, b, n)) out.push_back(io::to_json(e));
  return {{"c", out}, {"n", n}};
}

Json cmd_abel(Context& c) {
  const Ring r = c.ring();
  const auto pts = io::elements_from_json(c.get("points"), r);
  if (auto m = c.maybe(c.opt.window, "--window")) {
    Json h = Json::array();
    for (const auto& e : abel_coefficients(r, pts, static_cast<int>(*m))) h.push_back(io::to_json(e));
    return {{"h", h}};
  }
  return {{"gamma", io::to_json(abel(r, pts))}};
}

Json cmd_index(Context& c) {
  const auto d = index_data(c.point(c.ring()));
  return {{"index", d.index}, {"intersection", d.intersection}, {"cokernel", d.cokernel}};
}

Json cmd_plucker(Context& c) {
  const GrassPoint l = c.point(c.ring());
  if (c.payload.contains("chart")) {
    const MayaDiagram s = io::maya_from_json(c.payload.at("chart"));
    return {{"chart", io::to_json(s)}, {"partition", io::to_json(maya_to_partition(s))},
            {"value", io::to_json(plucker(l, s))}};
  }
  const auto d = c.need(c.opt.deg, "--deg", "plucker without a chart");
  return {{"coordinates", coordinates_json(plucker_coordinates(l, static_cast<int>(d)))}};
}

Json cmd_transition(Context& c) {
  const GrassPoint l = c.point(c.ring());
  const MayaDiagram a = io::maya_from_json(c.get("from")), b = io::maya_from_json(c.get("to"));
  return {{"value", io::to_json(chart_transition(l, a, b))}};
}

Json cmd_act(Context& c) {
  const Ring r = c.ring();
  const GrassPoint l = c.point(r);
  const GammaElement g = c.gamma(c.payload.contains("gamma") ? c.payload.at("gamma") : c.get("series"), r);
  return {{"point", io::to_json(act(g, l))}};
}

Json cmd_tau(Context& c) {
  const auto d = static_cast<int>(c.need(c.opt.deg, "--deg", "tau"));
  const GrassPoint u = c.point(c.ring());
  const std::string method = c.text("method", "direct");
  TauFunction t;
  Json extra = Json::object();
  if (method == "direct") {
    t = tau_direct(u, d);
  } else if (method == "schur") {
    t = tau_schur(u, d);
  } else if (method == "both") {
    t = tau_direct(u, d);
    extra["paths_agree"] = (t.value == tau_schur(u, d).value);
  } else {
    throw ParseError("'method' must be \"direct\", \"schur\" or \"both\"");
  }
  Json out = polynomial(t.value.ring(), t.value);
  out["normalization"] = io::to_json(t.normalization);
  out["method"] = method;
  out.update(extra);
  return out;
}

Json cmd_baker(Context& c) {
  const auto d = static_cast<int>(c.need(c.opt.deg, "--deg", "baker"));
  const auto m = static_cast<int>(c.need(c.opt.window, "--window", "baker"));
  const GrassPoint u = c.point(c.ring());
  const std::string form = c.text("form", "group-law");
  LaurentSeries psi;
  if (form == "group-law")
    psi = baker(u, d, m);
  else if (form == "char0")
    psi = baker_char0(u, d, m);
  else
    throw ParseError("'form' must be \"group-law\" or \"char0\"");
  Json terms = Json::array();
  for (std::size_t i = 0; i < psi.coeffs().size(); ++i)
    if (!psi.coeffs()[i].is_zero())
      terms.push_back({{"exp", psi.min_exp() + static_cast<std::int64_t>(i)}, {"poly", io::to_json(psi.coeffs()[i])}});
  Json out = {{"ring", io::to_json(psi.ring())}, {"z_terms", terms}, {"form", form}};
  out["trunc_order"] = psi.exact() ? Json(nullptr) : Json(psi.trunc());
  if (form == "group-law") out["in_point"] = baker_in_point(psi, u);
  return out;
}

Json cmd_schur(Context& c) {
  if (c.payload.contains("element")) {
    const auto d = static_cast<int>(c.need(c.opt.deg, "--deg", "schur expansion"));
    const Ring r = coordinate_ring(c.field, d);
    Json coeffs = Json::array();
    for (const auto& [p, s] : schur_expand(io::element_from_json(c.payload.at("element"), r)))
      if (!s.is_zero()) coeffs.push_back({{"partition", io::to_json(p)}, {"coeff", s.to_string()}});
    return {{"ring", io::to_json(r)}, {"coefficients", coeffs}};
  }
  const Partition p = io::partition_from_json(c.get("partition"));
  const auto d = c.maybe(c.opt.deg, "--deg").value_or(p.size());
  if (d < 0) throw ParseError("--deg must be non-negative");
  const Ring r = coordinate_ring(c.field, static_cast<int>(d));
  c.used["deg"] = d;
  return polynomial(r, schur(p, r));
}

Json cmd_bosonize(Context& c) {
  const Ring r = c.ring();
  std::vector<std::pair<Partition, RingElement>> coords;
  int top = 0;
  for (const auto& e : c.get("coordinates")) {
    if (!e.is_object()) throw ParseError("coordinate must be {partition, value}");
    coords.emplace_back(io::partition_from_json(e.at("partition")), io::element_from_json(e.at("value"), r));
    top = std::max(top, coords.back().first.size());
  }
  const auto d = c.maybe(c.opt.deg, "--deg").value_or(top);
  c.used["deg"] = d;
  const RingElement b = bosonize(coords, r, static_cast<int>(d));
  return polynomial(b.ring(), b);
}

Json cmd_pair(Context& c) {
  const Ring r = c.ring();
  const std::string kind = c.text("kind", "residue");
  if (kind == "residue")
    return {{"kind", kind},
            {"value", io::to_json(residue_pairing(io::series_from_json(c.get("f"), r), io::series_from_json(c.get("g"), r)))}};
  if (kind != "commutator") throw ParseError("'kind' must be \"residue\" or \"commutator\"");
  const auto w = c.need(c.opt.pair_window, "--pair-window", "pair commutator");
  const GammaElement g1 = c.gamma(c.get("g1"), r), g2 = c.gamma(c.get("g2"), r);
  return {{"kind", kind},
          {"value", io::to_json(commutator_pairing(g1, g2, w))},
          {"window_bound", commutator_window_bound(g1, g2)}};
}

Json cmd_verify(Context& c, Status& status) {
  const std::string suite = c.text("suite", "all");
  const verify::Scale scale = verify::parse_scale(c.opt.scale.value_or("full"));
  c.used["seed"] = c.opt.seed;
  c.used["scale"] = verify::to_string(scale);
  Json out;
  bool pass = true;
  if (suite == "all") {
    Json crit = Json::array();
    for (const auto& cr : verify::criteria()) {
      Json reports = Json::array();
      bool ok = true;
      for (const auto& s : cr.suites) {
        const auto rep = verify::run_suite(s, c.opt.seed, scale);
        ok = ok && rep.pass();
        reports.push_back(report_json(rep));
      }
      pass = pass && ok;
      crit.push_back({{"criterion", cr.number}, {"title", cr.title}, {"pass", ok}, {"suites", reports}});
    }
    out = {{"suite", "all"}, {"criteria", crit}};
  } else {
    const auto rep = verify::run_suite(suite, c.opt.seed, scale);
    pass = rep.pass();
    out = report_json(rep);
  }
  out["pass"] = pass;
  if (!pass) status = Status::failed;
  return out;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"factor", cmd_factor}, {"exp", cmd_exp},         {"witt-add", cmd_witt},         {"abel", cmd_abel},
      {"index", cmd_index},   {"plucker", cmd_plucker}, {"transition", cmd_transition}, {"act", cmd_act},
      {"tau", cmd_tau},       {"baker", cmd_baker},     {"schur", cmd_schur},           {"bosonize", cmd_bosonize},
      {"pair", cmd_pair}};
  return h;
}

Json conventions() {
  return {{"commutator_orientation", kCommutatorOrientation},
          {"tau_normalization", "divided by the vacuum coordinate; constant term 1"},
          {"index", "dim(L cap V+) - dim(V/(L + V+))"},
          {"tail", "point = span(columns) + tail_multiplier * z^-i for i > tail_depth"},
          {"partition_order", "by size, then reverse lexicographic"},
          {"coordinates", "x_i has weight i; truncation at weighted degree > deg"}};
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::precision: return "precision";
    case ErrorKind::internal: return "internal";
  }
  return "internal";
}

Status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return Status::parse;
    case ErrorKind::precondition: return Status::precondition;
    case ErrorKind::precision: return Status::precision;
    case ErrorKind::internal: return Status::internal;
  }
  return Status::internal;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"factor", "exp",   "witt-add", "abel",  "index",    "plucker", "transition",
                                             "act",    "tau",   "baker",    "schur", "bosonize", "pair",    "verify"};
  return c;
}

Outcome run(const std::string& command, const std::string& payload, const Options& options) {
  Json doc = {{"command", command}};
  Outcome out;
  try {
    Context c{options, BaseField::parse(options.field), Json::object()};
    if (!payload.empty()) {
      c.payload = Json::parse(payload);
      if (!c.payload.is_object()) throw ParseError("payload must be a JSON object");
    }
    c.used["field"] = c.field.spec();
    for (const auto& [flag, v] : {std::pair{"--deg", options.deg}, {"--tail-depth", options.tail_depth},
                                  {"--window", options.window}, {"--pair-window", options.pair_window}}) {
      const bool may_be_zero = std::string(flag) == "--tail-depth" || std::string(flag) == "--pair-window";
      if (v && (*v < 0 || (*v == 0 && !may_be_zero))) throw ParseError(std::string(flag) + " must be positive");
    }
    Json result;
    if (command == "verify") {
      result = cmd_verify(c, out.status);
    } else {
      const auto it = handlers().find(command);
      if (it == handlers().end()) throw ParseError("unknown command '" + command + "'");
      result = it->second(c);
    }
    doc["status"] = out.status == Status::ok ? "ok" : "fail";
    doc["result"] = result;
    doc["precision_used"] = c.used;
    doc["convention_flags"] = conventions();
  } catch (const Error& e) {
    out.status = status_of(e.kind());
    doc["status"] = "error";
    doc["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
  } catch (const Json::parse_error& e) {
    out.status = Status::parse;
    doc["status"] = "error";
    doc["error"] = {{"kind", "parse"}, {"message", std::string("malformed JSON: ") + e.what()}};
  } catch (const Json::exception& e) {
    out.status = Status::parse;
    doc["status"] = "error";
    doc["error"] = {{"kind", "parse"}, {"message", std::string("payload does not match the schema: ") + e.what()}};
  } catch (const std::exception& e) {
    out.status = Status::internal;
    doc["status"] = "error";
    doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
  }
  out.document = doc.dump(2) + "\n";
  return out;
}

}  // namespace satogr::jobs
