#include "satogr/serialize.hpp"

#include <map>

namespace satogr::io {

namespace {

const Json& field_of(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + " is missing '" + key + "'");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Scalar scalar_from_json(const Json& j, const BaseField& f) {
  if (j.is_number_integer()) return Scalar::parse(f, std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw ParseError("coefficient must be a string or an integer");
}

std::vector<std::string> names_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("'vars' must be a list of names");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

VariableBlock block_from_json(const Json& j) {
  VariableBlock b;
  b.names = names_from_json(field_of(j, "vars", "variable block"));
  if (j.contains("weights")) {
    for (const auto& w : j.at("weights")) b.weights.push_back(static_cast<int>(integer(w, "weight")));
    if (b.weights.size() != b.names.size()) throw ParseError("'weights' and 'vars' differ in length");
  } else {
    b.weights.assign(b.names.size(), 1);
  }
  const Json& bound = j.contains("bound") ? j.at("bound") : field_of(j, "deg", "variable block");
  b.bound = static_cast<int>(integer(bound, "degree bound"));
  return b;
}

}  // namespace

Json to_json(const Ring& r) {
  Json blocks = Json::array();
  for (const auto& b : r->blocks()) blocks.push_back({{"vars", b.names}, {"weights", b.weights}, {"bound", b.bound}});
  return {{"field", r->field().spec()}, {"blocks", blocks}};
}

Ring ring_from_json(const Json& j, const BaseField& field) {
  if (j.is_null()) return CoeffRing::field_only(field);
  if (!j.is_object()) throw ParseError("ring must be an object");
  if (j.contains("field") && BaseField::parse(j.at("field").get<std::string>()) != field)
    throw ParseError("ring field '" + j.at("field").get<std::string>() + "' differs from --field " + field.spec());
  std::vector<VariableBlock> blocks;
  if (j.contains("blocks")) {
    for (const auto& b : j.at("blocks")) blocks.push_back(block_from_json(b));
  } else if (j.contains("vars")) {
    blocks.push_back(block_from_json(j));
  }
  try {
    return CoeffRing::make(field, std::move(blocks));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("ring: ") + e.what());
  }
}

Json to_json(const RingElement& a) {
  Json out = Json::array();
  for (const auto& [exps, c] : a.terms()) out.push_back({{"exponents", exps}, {"coeff", c.to_string()}});
  return out;
}

RingElement element_from_json(const Json& j, const Ring& r) {
  if (j.is_string() || j.is_number_integer()) return RingElement::constant(r, scalar_from_json(j, r->field()));
  if (!j.is_array()) throw ParseError("ring element must be a list of terms or a constant");
  RingElement out(r);
  for (const auto& t : j) {
    const Json& e = field_of(t, "exponents", "term");
    std::vector<int> exps;
    for (const auto& x : e) {
      const auto v = integer(x, "exponent");
      if (v < 0) throw ParseError("negative exponent");
      exps.push_back(static_cast<int>(v));
    }
    if (exps.size() != r->num_vars())
      throw ParseError("term has " + std::to_string(exps.size()) + " exponents, ring has " +
                       std::to_string(r->num_vars()) + " variables");
    if (r->find(exps) < 0) throw ParseError("term lies beyond the ring truncation");
    out += RingElement::monomial(r, exps, scalar_from_json(field_of(t, "coeff", "term"), r->field()));
  }
  return out;
}

std::vector<RingElement> elements_from_json(const Json& j, const Ring& r) {
  if (!j.is_array()) throw ParseError("expected a list of ring elements");
  std::vector<RingElement> out;
  for (const auto& e : j) out.push_back(element_from_json(e, r));
  return out;
}

Json to_json(const LaurentSeries& f) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    terms.push_back({{"exp", f.min_exp() + static_cast<std::int64_t>(i)}, {"coeff", to_json(f.coeffs()[i])}});
  }
  Json out = {{"min_exp", f.is_zero() ? Json(nullptr) : Json(f.min_exp())}, {"terms", terms}};
  out["trunc_order"] = f.exact() ? Json(nullptr) : Json(f.trunc());
  return out;
}

LaurentSeries series_from_json(const Json& j, const Ring& r) {
  const Json& terms = field_of(j, "terms", "Laurent series");
  std::int64_t trunc = kExact;
  if (j.contains("trunc_order") && !j.at("trunc_order").is_null()) trunc = integer(j.at("trunc_order"), "trunc_order");
  std::optional<std::int64_t> min_exp;
  if (j.contains("min_exp") && !j.at("min_exp").is_null()) min_exp = integer(j.at("min_exp"), "min_exp");
  std::map<std::int64_t, RingElement> coeffs;
  for (const auto& t : terms) {
    const std::int64_t e = integer(field_of(t, "exp", "series term"), "exp");
    if (e >= trunc) throw ParseError("series term z^" + std::to_string(e) + " lies at or beyond trunc_order");
    if (min_exp && e < *min_exp) throw ParseError("series term z^" + std::to_string(e) + " lies below min_exp");
    if (coeffs.count(e)) throw ParseError("repeated series exponent " + std::to_string(e));
    coeffs.emplace(e, element_from_json(field_of(t, "coeff", "series term"), r));
  }
  LaurentSeries out(r, trunc);
  for (const auto& [e, c] : coeffs) out += LaurentSeries::monomial(r, e, c).truncated(trunc);
  return out;
}

Json to_json(const GammaElement& g) {
  return {{"gminus", to_json(g.gminus())}, {"unit", to_json(g.unit())}, {"gplus", to_json(g.gplus())},
          {"zpower", g.zpower()}};
}

GammaElement gamma_from_json(const Json& j, const Ring& r) {
  const std::int64_t zp = j.contains("zpower") ? integer(j.at("zpower"), "zpower") : 0;
  return GammaElement::make(series_from_json(field_of(j, "gminus", "group element"), r),
                            element_from_json(field_of(j, "unit", "group element"), r),
                            series_from_json(field_of(j, "gplus", "group element"), r), zp);
}

Json to_json(const GrassPoint& l) {
  Json cols = Json::array();
  for (const auto& c : l.columns()) cols.push_back(to_json(c));
  Json out = {{"tail_depth", l.tail_depth()}, {"columns", cols}};
  out["window_high"] = is_exact_order(l.window_high()) ? Json(nullptr) : Json(l.window_high());
  if (!l.tail_multiplier().is_one()) out["tail_multiplier"] = to_json(l.tail_multiplier());
  return out;
}

GrassPoint point_from_json(const Json& j, const Ring& r) {
  const std::int64_t depth = integer(field_of(j, "tail_depth", "point"), "tail_depth");
  if (depth < 0) throw ParseError("tail_depth must be non-negative");
  std::vector<LaurentSeries> cols;
  for (const auto& c : field_of(j, "columns", "point")) cols.push_back(series_from_json(c, r));
  std::optional<LaurentSeries> h;
  if (j.contains("tail_multiplier") && !j.at("tail_multiplier").is_null()) h = series_from_json(j.at("tail_multiplier"), r);
  return GrassPoint(r, depth, std::move(cols), std::move(h));
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be a list of parts");
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(static_cast<int>(integer(x, "part")));
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const MayaDiagram& s) {
  return {{"tail_start", s.tail_start()}, {"members_below_tail", s.members_below_tail()}};
}

MayaDiagram maya_from_json(const Json& j) {
  if (j.is_array()) return partition_to_maya(partition_from_json(j));
  const std::int64_t tail = integer(field_of(j, "tail_start", "Maya diagram"), "tail_start");
  std::vector<std::int64_t> below;
  for (const auto& x : field_of(j, "members_below_tail", "Maya diagram")) below.push_back(integer(x, "member"));
  return MayaDiagram(tail, std::move(below));
}

}  // namespace satogr::io
