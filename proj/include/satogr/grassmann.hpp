#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satogr/gamma.hpp"
#include "satogr/laurent.hpp"
#include "satogr/linalg.hpp"

namespace satogr {

class Partition {
 public:
  Partition() = default;
  // Weakly decreasing positive parts; throws PreconditionError otherwise.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  // Part i (0-based), zero past the length.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Partition conjugate() const;
  std::string to_string() const;

  // By size, then reverse lexicographic: (), (1), (2), (1,1), (3), (2,1), ...
  friend bool operator<(const Partition& a, const Partition& b);
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int d);

// A set of integers containing every e >= tail_start, with finitely many members below.
class MayaDiagram {
 public:
  MayaDiagram() = default;
  // Canonicalizes the tail; throws PreconditionError unless the charge is zero.
  MayaDiagram(std::int64_t tail_start, std::vector<std::int64_t> members_below_tail);
  static MayaDiagram vacuum() { return MayaDiagram(); }

  std::int64_t tail_start() const { return tail_start_; }
  const std::vector<std::int64_t>& members_below_tail() const { return below_; }
  std::int64_t min_element() const { return below_.empty() ? tail_start_ : below_.front(); }
  bool contains(std::int64_t e) const;
  // Elements of the complement that are >= lo, increasing.
  std::vector<std::int64_t> complement_from(std::int64_t lo) const;
  std::string to_string() const;

  friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;

 private:
  std::int64_t tail_start_ = 0;
  std::vector<std::int64_t> below_;
};

// #(S \ {0,1,..}) - #({0,1,..} \ S)
std::int64_t maya_charge(std::int64_t tail_start, const std::vector<std::int64_t>& members_below_tail);
Partition maya_to_partition(const MayaDiagram& s);
MayaDiagram partition_to_maya(const Partition& p);

// The closed span of the explicit columns and of h * z^{-i} for i > tail_depth, where h is
// the tail multiplier (a power series with constant term 1, exactly 1 unless a group
// element with a nontrivial positive factor has acted).
class GrassPoint {
 public:
  GrassPoint() = default;
  // Columns are reduced modulo the tail; throws when they are dependent modulo it.
  GrassPoint(Ring ring, std::int64_t tail_depth, std::vector<LaurentSeries> columns,
             std::optional<LaurentSeries> tail_multiplier = std::nullopt);
  // z^{-1} k[z^{-1}]
  static GrassPoint vacuum(const Ring& ring);

  const Ring& ring() const { return ring_; }
  std::int64_t tail_depth() const { return tail_depth_; }
  const std::vector<LaurentSeries>& columns() const { return columns_; }
  const LaurentSeries& tail_multiplier() const { return multiplier_; }
  // Rows below this exponent are known for every frame column; kExact when all are exact.
  std::int64_t window_high() const;

  // Frame at a depth >= tail_depth: h z^{-depth}, ..., h z^{-tail_depth-1}, then the columns.
  std::vector<LaurentSeries> frame(std::int64_t depth) const;
  // The same subspace described with a deeper tail.
  GrassPoint deepened(std::int64_t depth) const;

 private:
  Ring ring_;
  std::int64_t tail_depth_ = 0;
  std::vector<LaurentSeries> columns_;
  LaurentSeries multiplier_;
};

GrassPoint embed(const GrassPoint& l, const Ring& target);

struct IndexData {
  std::int64_t intersection = 0;  // dim L ∩ V+
  std::int64_t cokernel = 0;      // dim V / (L + V+)
  std::int64_t index = 0;
};
// Computed over the residue field.
IndexData index_data(const GrassPoint& l);
std::int64_t index(const GrassPoint& l);

// Rows of the frame minor for S, at the depth the minor is taken.
std::pair<std::int64_t, std::vector<std::int64_t>> chart_rows(const GrassPoint& l, const MayaDiagram& s);
RingElement plucker(const GrassPoint& l, const MayaDiagram& s);
bool in_chart(const GrassPoint& l, const MayaDiagram& s);
// plucker(l, a) / plucker(l, b)
RingElement chart_transition(const GrassPoint& l, const MayaDiagram& a, const MayaDiagram& b);
// Coordinates for every partition of size <= d, in partition order.
std::vector<std::pair<Partition, RingElement>> plucker_coordinates(const GrassPoint& l, int d);

GrassPoint act(const GammaElement& g, const GrassPoint& l);

// Whether f lies in L, on the rows that the window determines.
bool contains(const GrassPoint& l, const LaurentSeries& f);
// Whether small is contained in big; both must share the tail multiplier.
bool is_subspace(const GrassPoint& small, const GrassPoint& big);
bool same_subspace(const GrassPoint& a, const GrassPoint& b);

// Frames of L and L' at a common depth with a basis of L'/L chosen greedily among the
// frame columns of L'.
struct FiniteQuotient {
  std::int64_t depth = 0;
  std::vector<LaurentSeries> sub_frame;
  std::vector<LaurentSeries> basis;
  LaurentSeries multiplier;
};
FiniteQuotient finite_quotient(const GrassPoint& l, const GrassPoint& lp);
// Preimage of the subspace spanned by the columns of m (coordinates in the quotient basis).
GrassPoint embed_finite(const RingMatrix& m, const GrassPoint& l, const GrassPoint& lp);

}  // namespace satogr
