#include "satogr/schur.hpp"

#include <map>

namespace satogr {

std::size_t coordinate_block_index(const Ring& ring) {
  if (ring->blocks().empty()) throw PreconditionError("ring has no coordinate block");
  return ring->blocks().size() - 1;
}

Ring with_coordinates(const Ring& ring, int d, const std::string& prefix) {
  if (d <= 0) throw PreconditionError("degree bound must be positive");
  return ring->extended({coordinate_block(d, prefix)});
}

RingElement schur(const Partition& p, const Ring& ring) {
  const std::size_t b = coordinate_block_index(ring);
  const VariableBlock& block = ring->blocks()[b];
  if (p.size() > block.bound)
    throw PreconditionError("partition " + p.to_string() + " has size above the degree bound " + std::to_string(block.bound));
  std::size_t offset = 0;
  for (std::size_t i = 0; i < b; ++i) offset += ring->blocks()[i].names.size();
  auto h = [&](int k) {
    if (k < 0) return RingElement(ring);
    if (k == 0) return RingElement::constant(ring, 1);
    return RingElement::variable(ring, offset + static_cast<std::size_t>(k - 1));
  };
  const std::size_t n = static_cast<std::size_t>(p.length());
  RingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i].push_back(h(p.part(i) - static_cast<int>(i) + static_cast<int>(j)));
  return determinant(ring, std::move(m));
}

RingElement schur(const Partition& p, const BaseField& field, int d) { return schur(p, coordinate_ring(field, d)); }

namespace {

// Partition whose multiplicities are the exponents of a coordinate monomial.
Partition monomial_partition(const std::vector<int>& exps) {
  std::vector<int> parts;
  for (std::size_t i = exps.size(); i-- > 0;)
    for (int k = 0; k < exps[i]; ++k) parts.push_back(static_cast<int>(i) + 1);
  return Partition(std::move(parts));
}

}  // namespace

std::vector<std::pair<Partition, Scalar>> schur_expand(const RingElement& f) {
  const Ring& ring = f.ring();
  if (ring->blocks().size() != 1) throw PreconditionError("schur_expand needs an element of k[x_1..x_d]");
  const int d = ring->blocks()[0].bound;
  const BaseField& field = ring->field();
  std::vector<std::pair<Partition, Scalar>> out;
  for (int n = 0; n <= d; ++n) {
    const auto ps = partitions_of(n);
    const std::size_t k = ps.size();
    std::map<std::vector<int>, std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) pos[ps[i].parts()] = i;
    // a[mu][lambda] = coefficient of the monomial mu in F_lambda
    ScalarMatrix a(k, std::vector<Scalar>(k, Scalar(field)));
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& [exps, c] : schur(ps[j], ring).terms()) a[pos.at(monomial_partition(exps).parts())][j] = c;
    std::vector<Scalar> b(k, Scalar(field));
    for (const auto& [exps, c] : f.terms()) {
      const Partition mu = monomial_partition(exps);
      if (mu.size() == n) b[pos.at(mu.parts())] = c;
    }
    const ScalarMatrix inv = inverse(a);
    for (std::size_t i = 0; i < k; ++i) {
      Scalar s(field);
      for (std::size_t j = 0; j < k; ++j) s.add_product(inv[i][j], b[j]);
      out.emplace_back(ps[i], s);
    }
  }
  return out;
}

Scalar duality_pair(const RingElement& f, const RingElement& g) {
  require_same_ring(f.ring(), g.ring(), "duality_pair");
  const auto a = schur_expand(f), b = schur_expand(g);
  Scalar s(f.field());
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i].second, b[i].second);
  return s;
}

RingElement bosonize(const std::vector<std::pair<Partition, RingElement>>& coords, const Ring& ring, int d) {
  const Ring target = with_coordinates(ring, d);
  RingElement out(target);
  for (const auto& [p, c] : coords) {
    require_same_ring(ring, c.ring(), "bosonize");
    if (p.size() > d) throw PreconditionError("coordinate at " + p.to_string() + " exceeds the degree bound");
    if (c.is_zero()) continue;
    out.add_product(embed(c, target), schur(p, target));
  }
  return out;
}

}  // namespace satogr
