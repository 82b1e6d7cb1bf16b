#pragma once

#include "satogr/sampling.hpp"

namespace satogr::testing {

using namespace satogr::sampling;

inline Ring qring(std::vector<std::string> vars, int deg) {
  return CoeffRing::truncated(BaseField::rationals(), std::move(vars), deg);
}

inline Ring fpring(std::uint64_t p, std::vector<std::string> vars, int deg) {
  return CoeffRing::truncated(BaseField::prime(p), std::move(vars), deg);
}

inline RingElement var(const Ring& r, const char* name) { return RingElement::variable(r, name); }
inline RingElement cst(const Ring& r, long c) { return RingElement::constant(r, c); }
inline RingElement frac(const Ring& r, long p, long q) {
  return RingElement::constant(r, Scalar(r->field(), mpq_class(p, q)));
}

// Laurent polynomial sum_{e=lo}^{hi} c_e z^e, then truncated at trunc.
inline LaurentSeries series(const Ring& r, std::int64_t lo, std::vector<RingElement> c,
                            std::int64_t trunc = kExact) {
  return LaurentSeries(r, lo, std::move(c), trunc);
}

}  // namespace satogr::testing
