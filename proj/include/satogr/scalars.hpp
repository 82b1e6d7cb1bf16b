#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "satogr/errors.hpp"

namespace satogr {

// Q or F_p. Primes are limited to 63 bits so sums of residues never overflow.
class BaseField {
 public:
  BaseField() = default;
  static BaseField rationals() { return BaseField(); }
  static BaseField prime(std::uint64_t p);
  // "q" or "fp:<p>"
  static BaseField parse(std::string_view spec);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string spec() const;

  friend bool operator==(const BaseField&, const BaseField&) = default;

 private:
  friend class Scalar;
  explicit BaseField(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(const BaseField& field, long value = 0);
  Scalar(const BaseField& field, const mpq_class& value);
  // "p/q" or an integer for Q; a decimal residue (any integer is reduced) for F_p.
  static Scalar parse(const BaseField& field, std::string_view text);

  BaseField field() const;
  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  std::string to_string() const;

  // Residue for F_p; throws for Q.
  std::uint64_t residue() const;
  // Rational value; throws for F_p.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // a += b * c without a temporary for the rational case.
  void add_product(const Scalar& b, const Scalar& c);

 private:
  std::uint64_t p_ = 0;
  std::variant<std::uint64_t, mpq_class> value_;
};

// A group of variables truncated jointly: monomials with sum(w_i * e_i) > bound vanish.
struct VariableBlock {
  std::vector<std::string> names;
  std::vector<int> weights;
  int bound = 0;

  friend bool operator==(const VariableBlock&, const VariableBlock&) = default;
};

class CoeffRing;
using Ring = std::shared_ptr<const CoeffRing>;

// Tensor product over the base field of the truncated polynomial rings of each block.
// Every generator is nilpotent, so the ring is local with residue field the base field.
class CoeffRing {
 public:
  static Ring make(const BaseField& field, std::vector<VariableBlock> blocks);
  static Ring field_only(const BaseField& field) { return make(field, {}); }
  // k[names]/(total degree > bound)
  static Ring truncated(const BaseField& field, std::vector<std::string> names, int bound);
  // k[names] with weights, truncated at weighted degree > bound
  static Ring weighted(const BaseField& field, std::vector<std::string> names,
                       std::vector<int> weights, int bound);
  // Ring with this ring's blocks followed by extra ones.
  Ring extended(std::vector<VariableBlock> extra) const;

  const BaseField& field() const { return field_; }
  const std::vector<VariableBlock>& blocks() const { return blocks_; }
  std::size_t num_vars() const { return num_vars_; }
  std::vector<std::string> var_names() const;
  // Variable index of a name, or -1.
  long find_var(std::string_view name) const;
  std::size_t size() const { return monomials_.size(); }
  const std::vector<int>& monomial(std::size_t i) const { return monomials_[i]; }
  // Index of the monomial with these exponents, or -1 when it is truncated away.
  long find(const std::vector<int>& exps) const;
  // Pairs (j, k) with monomial(i) * monomial(j) = monomial(k).
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& products(std::size_t i) const {
    return products_[i];
  }
  // Weighted degree of monomial i summed over blocks.
  int weight(std::size_t i) const { return weight_[i]; }
  // Any nilpotent element raised to this power plus one is zero.
  int nilpotency_bound() const { return nilpotency_; }
  std::string describe() const;
  bool same_as(const CoeffRing& other) const {
    return this == &other || (field_ == other.field_ && blocks_ == other.blocks_);
  }

  CoeffRing(const BaseField& field, std::vector<VariableBlock> blocks);

 private:
  std::uint64_t key(const std::vector<int>& exps) const;

  BaseField field_;
  std::vector<VariableBlock> blocks_;
  std::size_t num_vars_ = 0;
  std::vector<int> var_weight_;
  std::vector<int> var_block_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::vector<int>> monomials_;
  std::vector<int> weight_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> products_;
  int nilpotency_ = 0;
};

void require_same_ring(const Ring& a, const Ring& b, const char* op);

class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(Ring ring);
  static RingElement constant(Ring ring, const Scalar& c);
  static RingElement constant(Ring ring, long c);
  static RingElement variable(Ring ring, std::size_t var);
  static RingElement variable(Ring ring, std::string_view name);
  static RingElement monomial(Ring ring, const std::vector<int>& exps, const Scalar& c);

  const Ring& ring() const { return ring_; }
  const BaseField& field() const { return ring_->field(); }
  const Scalar& coeff(std::size_t mono) const { return coeffs_[mono]; }
  void set_coeff(std::size_t mono, const Scalar& c) { coeffs_[mono] = c; }
  const Scalar& constant_term() const { return coeffs_[0]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }
  bool is_nilpotent() const { return coeffs_[0].is_zero(); }
  // Geometric series in the nilpotent part.
  RingElement inverse() const;
  RingElement pow(unsigned k) const;
  // Drop every monomial whose weighted degree exceeds bound in any block.
  RingElement truncated(const std::vector<int>& block_bounds) const;

  std::string to_string() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const Scalar& c);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const Scalar& c) { return a *= c; }
  friend RingElement operator*(const Scalar& c, RingElement a) { return a *= c; }
  friend bool operator==(const RingElement& a, const RingElement& b);

  // this += a * b
  void add_product(const RingElement& a, const RingElement& b);

  // Nonzero terms in monomial order.
  std::vector<std::pair<std::vector<int>, Scalar>> terms() const;

 private:
  Ring ring_;
  std::vector<Scalar> coeffs_;
};

// Map into a ring whose leading blocks coincide with the source ring's blocks.
RingElement embed(const RingElement& a, const Ring& target);
// Ring homomorphism sending variable v to images[v]. The caller guarantees the images
// respect the source truncation (weighted degree at least the variable's weight).
RingElement substitute(const RingElement& a, const std::vector<RingElement>& images);
// Restrict to the leading blocks of the source (the other variables are set to zero).
RingElement restrict_to(const RingElement& a, const Ring& target);

}  // namespace satogr
