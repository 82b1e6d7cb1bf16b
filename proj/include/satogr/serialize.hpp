#pragma once

#include "json.hpp"
#include "satogr/gamma.hpp"
#include "satogr/grassmann.hpp"

// JSON encodings of the mathematical objects. Readers throw ParseError on malformed input.
namespace satogr::io {

using Json = nlohmann::json;

// {"field", "blocks": [{vars, weights, bound}]}
Json to_json(const Ring& r);
// null -> the base field; {"vars", "deg"[, "weights"]} or {"blocks": [...]}.
Ring ring_from_json(const Json& j, const BaseField& field);

// [{exponents, coeff}] with coeff "p/q" over Q and a decimal residue over F_p.
Json to_json(const RingElement& a);
// Also accepts a bare number or string as a constant.
RingElement element_from_json(const Json& j, const Ring& r);
std::vector<RingElement> elements_from_json(const Json& j, const Ring& r);

// {min_exp, trunc_order (null when exact), terms: [{exp, coeff}]}
Json to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const Json& j, const Ring& r);

// {gminus, unit, gplus, zpower}
Json to_json(const GammaElement& g);
GammaElement gamma_from_json(const Json& j, const Ring& r);

// {tail_depth, window_high, columns[, tail_multiplier]}; window_high is null when exact.
Json to_json(const GrassPoint& l);
GrassPoint point_from_json(const Json& j, const Ring& r);

// Decreasing list of positive parts.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {tail_start, members_below_tail}; a bare list is read as a partition.
Json to_json(const MayaDiagram& s);
MayaDiagram maya_from_json(const Json& j);

}  // namespace satogr::io
