#include "satogr/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

namespace satogr {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(const std::string& s) {
  if (!is_integer_text(s)) throw ParseError("not an integer: '" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

BaseField BaseField::prime(std::uint64_t p) {
  if (p >= (1ULL << 63)) throw PreconditionError("prime characteristic must be below 2^63");
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  return BaseField(p);
}

BaseField BaseField::parse(std::string_view spec) {
  std::string s = trim(spec);
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    std::string digits = s.substr(3);
    if (digits.empty() || digits.size() > 19 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw ParseError("malformed field '" + s + "'");
    try {
      return prime(std::stoull(digits));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field must be 'q' or 'fp:<p>', got '" + s + "'");
}

std::string BaseField::spec() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

Scalar::Scalar(const BaseField& field, long value) : p_(field.characteristic()) {
  if (p_ == 0) {
    value_ = mpq_class(value);
  } else {
    long r = value % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    value_ = static_cast<u64>(r);
  }
}

Scalar::Scalar(const BaseField& field, const mpq_class& value) : p_(field.characteristic()) {
  if (p_ == 0) {
    value_ = value;
    std::get<mpq_class>(value_).canonicalize();
  } else {
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class num = value.get_num() % pz;
    mpz_class den = value.get_den() % pz;
    if (num < 0) num += pz;
    if (den < 0) den += pz;
    if (den == 0) throw PreconditionError("denominator vanishes in " + field.spec());
    u64 n = mpz_get_ui(num.get_mpz_t()), d = mpz_get_ui(den.get_mpz_t());
    value_ = mul_mod(n, pow_mod(d, p_ - 2, p_), p_);
  }
}

Scalar Scalar::parse(const BaseField& field, std::string_view text) {
  std::string s = trim(text);
  if (field.is_rational()) {
    auto slash = s.find('/');
    mpz_class num = parse_integer(trim(s.substr(0, slash)));
    mpz_class den = 1;
    if (slash != std::string::npos) den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Scalar(field, mpq_class(num, den));
  }
  if (s.find('/') != std::string::npos) {
    auto slash = s.find('/');
    mpz_class num = parse_integer(trim(s.substr(0, slash)));
    mpz_class den = parse_integer(trim(s.substr(slash + 1)));
    try {
      return Scalar(field, mpq_class(num, den));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  return Scalar(field, mpq_class(parse_integer(s)));
}

BaseField Scalar::field() const { return BaseField(p_); }

bool Scalar::is_zero() const {
  if (p_ == 0) return std::get<mpq_class>(value_) == 0;
  return std::get<u64>(value_) == 0;
}

bool Scalar::is_one() const {
  if (p_ == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<u64>(value_) == 1 % p_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar r = *this;
  if (p_ == 0) {
    mpq_inv(std::get<mpq_class>(r.value_).get_mpq_t(), std::get<mpq_class>(value_).get_mpq_t());
  } else {
    r.value_ = pow_mod(std::get<u64>(value_), p_ - 2, p_);
  }
  return r;
}

std::string Scalar::to_string() const {
  if (p_ == 0) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<u64>(value_));
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw PreconditionError("residue requested for a rational scalar");
  return std::get<u64>(value_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw PreconditionError("rational value requested for a prime-field scalar");
  return std::get<mpq_class>(value_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0) {
    mpq_neg(std::get<mpq_class>(r.value_).get_mpq_t(), std::get<mpq_class>(value_).get_mpq_t());
  } else {
    u64 v = std::get<u64>(value_);
    r.value_ = v == 0 ? 0 : p_ - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (p_ != other.p_) throw PreconditionError("scalar field mismatch");
  if (p_ == 0) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  } else {
    u64 s = std::get<u64>(value_) + std::get<u64>(other.value_);
    value_ = s >= p_ ? s - p_ : s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (p_ != other.p_) throw PreconditionError("scalar field mismatch");
  if (p_ == 0) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  } else {
    u64 a = std::get<u64>(value_), b = std::get<u64>(other.value_);
    value_ = a >= b ? a - b : a + (p_ - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (p_ != other.p_) throw PreconditionError("scalar field mismatch");
  if (p_ == 0) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  } else {
    value_ = mul_mod(std::get<u64>(value_), std::get<u64>(other.value_), p_);
  }
  return *this;
}

void Scalar::add_product(const Scalar& b, const Scalar& c) {
  if (p_ != b.p_ || p_ != c.p_) throw PreconditionError("scalar field mismatch");
  if (p_ == 0) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(b.value_).get_mpq_t(),
            std::get<mpq_class>(c.value_).get_mpq_t());
    std::get<mpq_class>(value_) += tmp;
  } else {
    u64 s = std::get<u64>(value_) + mul_mod(std::get<u64>(b.value_), std::get<u64>(c.value_), p_);
    value_ = s >= p_ ? s - p_ : s;
  }
}

bool operator==(const Scalar& a, const Scalar& b) { return a.p_ == b.p_ && a.value_ == b.value_; }

// ---------------------------------------------------------------------------

namespace {

void enumerate_block(const VariableBlock& block, std::size_t v, int budget, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (v == block.names.size()) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e * block.weights[v] <= budget; ++e) {
    cur[v] = e;
    enumerate_block(block, v + 1, budget - e * block.weights[v], cur, out);
  }
  cur[v] = 0;
}

std::mutex ring_cache_mutex;
std::map<std::string, Ring>& ring_cache() {
  static std::map<std::string, Ring> cache;
  return cache;
}

}  // namespace

CoeffRing::CoeffRing(const BaseField& field, std::vector<VariableBlock> blocks)
    : field_(field), blocks_(std::move(blocks)) {
  std::set<std::string> seen;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& blk = blocks_[b];
    if (blk.names.size() != blk.weights.size())
      throw PreconditionError("variable block: names and weights differ in length");
    if (blk.bound < 0) throw PreconditionError("variable block: negative degree bound");
    for (std::size_t v = 0; v < blk.names.size(); ++v) {
      if (blk.weights[v] < 1) throw PreconditionError("variable weights must be positive");
      if (blk.names[v].empty() || !seen.insert(blk.names[v]).second)
        throw PreconditionError("duplicate or empty variable name '" + blk.names[v] + "'");
      var_weight_.push_back(blk.weights[v]);
      var_block_.push_back(static_cast<int>(b));
    }
    nilpotency_ += blk.bound;
  }
  num_vars_ = var_weight_.size();

  u128 stride = 1;
  stride_.resize(num_vars_);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    stride_[v] = static_cast<u64>(stride);
    stride *= static_cast<u128>(blocks_[var_block_[v]].bound / var_weight_[v] + 1);
    if (stride > (static_cast<u128>(1) << 62)) throw PreconditionError("ring too large");
  }

  // Cartesian product of per-block monomials.
  std::vector<std::vector<int>> mons{{}};
  for (const auto& blk : blocks_) {
    std::vector<std::vector<int>> local;
    std::vector<int> cur(blk.names.size(), 0);
    enumerate_block(blk, 0, blk.bound, cur, local);
    std::vector<std::vector<int>> next;
    next.reserve(mons.size() * local.size());
    for (const auto& m : mons)
      for (const auto& l : local) {
        auto e = m;
        e.insert(e.end(), l.begin(), l.end());
        next.push_back(std::move(e));
      }
    mons = std::move(next);
  }
  auto wt = [&](const std::vector<int>& e) {
    int w = 0;
    for (std::size_t v = 0; v < e.size(); ++v) w += e[v] * var_weight_[v];
    return w;
  };
  std::sort(mons.begin(), mons.end(), [&](const auto& a, const auto& b) {
    int wa = wt(a), wb = wt(b);
    if (wa != wb) return wa < wb;
    return a > b;
  });
  monomials_ = std::move(mons);
  const std::size_t n = monomials_.size();
  if (n > 20000) throw PreconditionError("ring too large: " + std::to_string(n) + " monomials");

  std::vector<std::vector<int>> block_deg(n, std::vector<int>(blocks_.size(), 0));
  std::vector<u64> keys(n);
  weight_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t v = 0; v < num_vars_; ++v)
      block_deg[i][var_block_[v]] += monomials_[i][v] * var_weight_[v];
    weight_[i] = wt(monomials_[i]);
    keys[i] = key(monomials_[i]);
    index_.emplace(keys[i], static_cast<std::uint32_t>(i));
  }
  products_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (std::size_t b = 0; b < blocks_.size() && ok; ++b)
        ok = block_deg[i][b] + block_deg[j][b] <= blocks_[b].bound;
      if (!ok) continue;
      products_[i].emplace_back(static_cast<std::uint32_t>(j), index_.at(keys[i] + keys[j]));
    }
  }
}

std::uint64_t CoeffRing::key(const std::vector<int>& exps) const {
  u64 k = 0;
  for (std::size_t v = 0; v < num_vars_; ++v) k += static_cast<u64>(exps[v]) * stride_[v];
  return k;
}

Ring CoeffRing::make(const BaseField& field, std::vector<VariableBlock> blocks) {
  std::string tag = field.spec();
  for (const auto& b : blocks) {
    tag += "|";
    for (std::size_t v = 0; v < b.names.size(); ++v)
      tag += b.names[v] + ":" + std::to_string(v < b.weights.size() ? b.weights[v] : 0) + ",";
    tag += "<=" + std::to_string(b.bound);
  }
  std::lock_guard<std::mutex> lock(ring_cache_mutex);
  auto& cache = ring_cache();
  auto it = cache.find(tag);
  if (it != cache.end()) return it->second;
  auto ring = std::make_shared<const CoeffRing>(field, std::move(blocks));
  cache.emplace(tag, ring);
  return ring;
}

Ring CoeffRing::truncated(const BaseField& field, std::vector<std::string> names, int bound) {
  if (names.empty()) return field_only(field);
  std::vector<int> w(names.size(), 1);
  return make(field, {VariableBlock{std::move(names), std::move(w), bound}});
}

Ring CoeffRing::weighted(const BaseField& field, std::vector<std::string> names,
                         std::vector<int> weights, int bound) {
  if (names.empty()) return field_only(field);
  return make(field, {VariableBlock{std::move(names), std::move(weights), bound}});
}

Ring CoeffRing::extended(std::vector<VariableBlock> extra) const {
  auto all = blocks_;
  for (auto& b : extra)
    if (!b.names.empty()) all.push_back(std::move(b));
  return make(field_, std::move(all));
}

std::vector<std::string> CoeffRing::var_names() const {
  std::vector<std::string> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.names.begin(), b.names.end());
  return out;
}

long CoeffRing::find_var(std::string_view name) const {
  long i = 0;
  for (const auto& b : blocks_)
    for (const auto& n : b.names) {
      if (n == name) return i;
      ++i;
    }
  return -1;
}

long CoeffRing::find(const std::vector<int>& exps) const {
  if (exps.size() != num_vars_) return -1;
  std::vector<int> deg(blocks_.size(), 0);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    if (exps[v] < 0) return -1;
    deg[var_block_[v]] += exps[v] * var_weight_[v];
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (deg[b] > blocks_[b].bound) return -1;
  return index_.at(key(exps));
}

std::string CoeffRing::describe() const {
  std::string s = field_.is_rational() ? "Q" : "F" + std::to_string(field_.characteristic());
  for (const auto& b : blocks_) {
    bool weighted = std::any_of(b.weights.begin(), b.weights.end(), [](int w) { return w != 1; });
    s += "[";
    for (std::size_t v = 0; v < b.names.size(); ++v) {
      if (v) s += ",";
      s += b.names[v];
      if (weighted) s += "^" + std::to_string(b.weights[v]);
    }
    s += "]/(" + std::string(weighted ? "wdeg>" : "deg>") + std::to_string(b.bound) + ")";
  }
  return s;
}

void require_same_ring(const Ring& a, const Ring& b, const char* op) {
  if (!a || !b) throw PreconditionError(std::string(op) + ": uninitialized ring element");
  if (a.get() != b.get() && !a->same_as(*b))
    throw PreconditionError(std::string(op) + ": ring mismatch (" + a->describe() + " vs " +
                            b->describe() + ")");
}

// ---------------------------------------------------------------------------

RingElement::RingElement(Ring ring) : ring_(std::move(ring)) {
  coeffs_.assign(ring_->size(), Scalar(ring_->field()));
}

RingElement RingElement::constant(Ring ring, const Scalar& c) {
  RingElement r(std::move(ring));
  r.coeffs_[0] = c;
  return r;
}

RingElement RingElement::constant(Ring ring, long c) {
  Scalar s(ring->field(), c);
  return constant(std::move(ring), s);
}

RingElement RingElement::variable(Ring ring, std::size_t var) {
  std::vector<int> e(ring->num_vars(), 0);
  if (var >= e.size()) throw PreconditionError("variable index out of range");
  e[var] = 1;
  Scalar one(ring->field(), 1);
  return monomial(std::move(ring), e, one);
}

RingElement RingElement::variable(Ring ring, std::string_view name) {
  long v = ring->find_var(name);
  if (v < 0) throw PreconditionError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), static_cast<std::size_t>(v));
}

RingElement RingElement::monomial(Ring ring, const std::vector<int>& exps, const Scalar& c) {
  RingElement r(ring);
  if (exps.size() != ring->num_vars()) throw PreconditionError("exponent vector has wrong length");
  long i = ring->find(exps);
  if (i >= 0) r.coeffs_[i] = c;
  return r;
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool RingElement::is_one() const { return coeffs_[0].is_one() && is_constant(); }

bool RingElement::is_constant() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

RingElement RingElement::inverse() const {
  if (!is_unit()) throw PreconditionError("ring element is not a unit (constant term is zero)");
  Scalar c_inv = coeffs_[0].inverse();
  RingElement n = *this * c_inv;
  n.coeffs_[0] = Scalar(field());
  n = -n;  // (c(1 - n'))^{-1} = c^{-1} sum n'^k
  RingElement sum = constant(ring_, 1);
  RingElement power = sum;
  for (int k = 1; k <= ring_->nilpotency_bound(); ++k) {
    power = power * n;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * c_inv;
}

RingElement RingElement::pow(unsigned k) const {
  RingElement result = constant(ring_, 1);
  RingElement base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

RingElement RingElement::truncated(const std::vector<int>& block_bounds) const {
  RingElement r = *this;
  const auto& blocks = ring_->blocks();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& e = ring_->monomial(i);
    std::size_t v = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      int deg = 0;
      for (std::size_t k = 0; k < blocks[b].names.size(); ++k, ++v) deg += e[v] * blocks[b].weights[k];
      if (b < block_bounds.size() && deg > block_bounds[b]) r.coeffs_[i] = Scalar(field());
    }
  }
  return r;
}

std::string RingElement::to_string() const {
  const auto names = ring_->var_names();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    const auto& e = ring_->monomial(i);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(ring_, other.ring_, "ring_add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!other.coeffs_[i].is_zero()) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(ring_, other.ring_, "ring_sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!other.coeffs_[i].is_zero()) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const Scalar& c) {
  for (auto& x : coeffs_)
    if (!x.is_zero()) x *= c;
  return *this;
}

void RingElement::add_product(const RingElement& a, const RingElement& b) {
  require_same_ring(ring_, a.ring_, "ring_mul");
  require_same_ring(ring_, b.ring_, "ring_mul");
  const std::size_t n = coeffs_.size();
  if (n == 1) {
    coeffs_[0].add_product(a.coeffs_[0], b.coeffs_[0]);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (const auto& [j, k] : ring_->products(i)) {
      const Scalar& bj = b.coeffs_[j];
      if (!bj.is_zero()) coeffs_[k].add_product(ai, bj);
    }
  }
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring_, b.ring_, "ring_mul");
  RingElement r(a.ring_);
  r.add_product(a, b);
  return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (!a.ring_ || !b.ring_) return a.ring_ == b.ring_;
  return a.ring_->same_as(*b.ring_) && a.coeffs_ == b.coeffs_;
}

std::vector<std::pair<std::vector<int>, Scalar>> RingElement::terms() const {
  std::vector<std::pair<std::vector<int>, Scalar>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace_back(ring_->monomial(i), coeffs_[i]);
  return out;
}

namespace {

void require_prefix(const CoeffRing& small, const CoeffRing& big, const char* op) {
  const auto& sb = small.blocks();
  const auto& bb = big.blocks();
  bool ok = small.field() == big.field() && sb.size() <= bb.size() &&
            std::equal(sb.begin(), sb.end(), bb.begin());
  if (!ok)
    throw PreconditionError(std::string(op) + ": " + small.describe() + " is not a leading factor of " +
                            big.describe());
}

}  // namespace

RingElement embed(const RingElement& a, const Ring& target) {
  require_prefix(*a.ring(), *target, "embed");
  if (a.ring().get() == target.get()) return a;
  RingElement r(target);
  for (std::size_t i = 0; i < a.ring()->size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    auto e = a.ring()->monomial(i);
    e.resize(target->num_vars(), 0);
    r.set_coeff(static_cast<std::size_t>(target->find(e)), a.coeff(i));
  }
  return r;
}

RingElement restrict_to(const RingElement& a, const Ring& target) {
  require_prefix(*target, *a.ring(), "restrict");
  RingElement r(target);
  const std::size_t nv = target->num_vars();
  for (std::size_t i = 0; i < a.ring()->size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    const auto& e = a.ring()->monomial(i);
    if (std::any_of(e.begin() + static_cast<long>(nv), e.end(), [](int x) { return x != 0; })) continue;
    std::vector<int> head(e.begin(), e.begin() + static_cast<long>(nv));
    r.set_coeff(static_cast<std::size_t>(target->find(head)), a.coeff(i));
  }
  return r;
}

RingElement substitute(const RingElement& a, const std::vector<RingElement>& images) {
  const auto& src = *a.ring();
  if (images.size() != src.num_vars())
    throw PreconditionError("substitute: expected " + std::to_string(src.num_vars()) + " images");
  if (images.empty()) throw PreconditionError("substitute: no target ring given");
  const Ring& target = images[0].ring();
  for (const auto& im : images) require_same_ring(target, im.ring(), "substitute");
  if (!(src.field() == target->field())) throw PreconditionError("substitute: base fields differ");

  std::vector<std::vector<RingElement>> powers(src.num_vars());
  auto power = [&](std::size_t v, int e) -> const RingElement& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(RingElement::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  RingElement r(target);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    const auto& e = src.monomial(i);
    RingElement term = RingElement::constant(target, a.coeff(i));
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) term = term * power(v, e[v]);
    r += term;
  }
  return r;
}

}  // namespace satogr
