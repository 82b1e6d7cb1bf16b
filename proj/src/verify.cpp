#include "satogr/verify.hpp"

#include <functional>
#include <map>

#include "satogr/oracles.hpp"
#include "satogr/pairings.hpp"
#include "satogr/sampling.hpp"
#include "satogr/tau.hpp"

namespace satogr::verify {

using sampling::Rng;

Scale parse_scale(const std::string& s) {
  if (s == "small") return Scale::small;
  if (s == "full") return Scale::full;
  throw ParseError("unknown scale '" + s + "' (expected small or full)");
}

std::string to_string(Scale s) { return s == Scale::small ? "small" : "full"; }

bool Report::pass() const {
  for (const auto& p : properties)
    if (!p.informational && !p.pass()) return false;
  return true;
}

namespace {

// Runs one instance; exceptions count as failures.
void check(Property& p, const std::string& label, const std::function<bool()>& f) {
  ++p.instances;
  std::string why;
  try {
    if (f()) return;
    why = "identity does not hold";
  } catch (const std::exception& e) {
    why = e.what();
  }
  if (p.failures++ == 0) p.note = label + ": " + why;
}

// As check, with the failure reason returned as a non-empty string.
void check_reason(Property& p, const std::string& label, const std::function<std::string()>& f) {
  ++p.instances;
  std::string why;
  try {
    why = f();
    if (why.empty()) return;
  } catch (const std::exception& e) {
    why = e.what();
  }
  if (p.failures++ == 0) p.note = label + ": " + why;
}

int count(Scale s, int small, int full) { return s == Scale::small ? small : full; }

Ring qfield() { return CoeffRing::field_only(BaseField::rationals()); }

// Shared by the tau cross-check and the KP suite.
std::vector<GrassPoint> big_cell_points(std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<GrassPoint> out;
  for (int i = 0; i < n; ++i) {
    const std::int64_t depth = 1 + static_cast<std::int64_t>(rng() % 4);
    const std::int64_t top = static_cast<std::int64_t>(rng() % 5);
    out.push_back(sampling::random_point(rng, qfield(), depth, top));
  }
  return out;
}

int tau_degree(Scale s) { return s == Scale::small ? 5 : 6; }

Report tau_crosscheck(std::uint64_t seed, Scale scale) {
  Report r;
  Property same{"tau_direct = tau_schur"}, constant{"constant term of tau is 1"},
      vector{"Schur coefficients of tau are the Pluecker vector up to one unit"};
  const int d = tau_degree(scale);
  const auto points = big_cell_points(seed, count(scale, 10, 50));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& u = points[i];
    const std::string label = "point " + std::to_string(i);
    TauFunction direct, schur_path;
    check(same, label, [&] {
      direct = tau_direct(u, d);
      schur_path = tau_schur(u, d);
      return direct.value == schur_path.value;
    });
    check(constant, label, [&] { return direct.value.constant_term().is_one(); });
    check(vector, label, [&] {
      const auto coeffs = schur_expand(direct.value);
      const auto coords = plucker_coordinates(u, d);
      const Scalar unit = direct.normalization.constant_term();
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!(coeffs[k].second * unit == coords[k].second.constant_term())) return false;
      return true;
    });
  }
  r.properties = {same, constant, vector};
  return r;
}

Report vacuum(std::uint64_t seed, Scale scale) {
  Report r;
  Property tau1{"tau of the vacuum is 1"}, baker1{"Baker function of the vacuum is v^-1 (d=5, M=6)"},
      member{"z^-1 psi lies in the point"}, char0{"Baker function agrees with its exponential form"};
  const auto q = qfield();
  const auto vac = GrassPoint::vacuum(q);
  for (int d = 1; d <= 6; ++d)
    check(tau1, "d=" + std::to_string(d), [&] {
      return tau_direct(vac, d).value.is_one() && tau_schur(vac, d).value.is_one();
    });
  LaurentSeries psi;
  check(baker1, "d=5", [&] {
    psi = baker(vac, 5, 6);
    const LaurentSeries vinv = laurent_invert(universal_v(BaseField::rationals(), 5).series());
    return psi.trunc() == 2 && psi.agrees_with(vinv);
  });
  check(member, "vacuum", [&] { return baker_in_point(psi, vac); });
  Rng rng(seed);
  for (int i = 0; i < count(scale, 2, 6); ++i) {
    const GrassPoint u = sampling::random_point(rng, q, 1 + i % 3, 3);
    const std::string label = "point " + std::to_string(i);
    LaurentSeries p;
    check(member, label, [&] {
      p = baker(u, 3, 5);
      return baker_in_point(p, u);
    });
    check(char0, label, [&] {
      const LaurentSeries e = baker_char0(u, 3, 5);
      return p.map_coeffs(e.ring(), [](const RingElement& c) { return to_power_sum_coordinates(c); }).agrees_with(e);
    });
  }
  r.properties = {tau1, baker1, member, char0};
  return r;
}

Report factorization(std::uint64_t seed, Scale scale) {
  Report r;
  Property round{"gminus * unit * gplus * z^n reproduces the input"}, unique{"refactoring the product is identical"};
  Rng rng(seed);
  const std::vector<Ring> rings = {CoeffRing::truncated(BaseField::rationals(), {"x1", "x2"}, 2),
                                   CoeffRing::truncated(BaseField::prime(5), {"x1"}, 2)};
  const int n = count(scale, 20, 100);
  for (int i = 0; i < n; ++i) {
    const Ring& ring = rings[static_cast<std::size_t>(i % 2)];
    const LaurentSeries f = sampling::random_invertible(rng, ring);
    const std::string label = "series " + std::to_string(i) + " over " + ring->describe();
    GammaElement g;
    check(round, label, [&] {
      g = factorize(f);
      const LaurentSeries back = g.series();
      return back.agrees_with(f) && back.trunc() > g.zpower();
    });
    check(unique, label, [&] {
      const GammaElement again = factorize(g.series());
      return again.zpower() == g.zpower() && again.unit() == g.unit() && again.gminus() == g.gminus() &&
             again.gplus().agrees_with(g.gplus());
    });
  }
  r.properties = {round, unique};
  return r;
}

Report cocycle(std::uint64_t seed, Scale scale) {
  Report r;
  Property co{"det(d_AB) det(d_BC) = det(d_AC)"}, self{"det(d_AA) = 1"};
  Rng rng(seed);
  const auto q = qfield();
  const auto charts = partitions_up_to(3);
  const int n = count(scale, 10, 50);
  int done = 0;
  while (done < n) {
    const std::int64_t depth = 1 + static_cast<std::int64_t>(rng() % 3);
    const GrassPoint l = sampling::random_point(rng, q, depth, 3, false);
    std::vector<MayaDiagram> in;
    for (const auto& p : charts)
      if (in_chart(l, partition_to_maya(p))) in.push_back(partition_to_maya(p));
    if (in.size() < 3) continue;
    const auto pick = [&] { return in[static_cast<std::size_t>(rng() % in.size())]; };
    const MayaDiagram a = pick(), b = pick(), c = pick();
    const std::string label = "instance " + std::to_string(done);
    check(co, label, [&] {
      return chart_transition(l, a, b) * chart_transition(l, b, c) == chart_transition(l, a, c);
    });
    check(self, label, [&] { return chart_transition(l, a, a).is_one(); });
    ++done;
  }
  r.properties = {co, self};
  return r;
}

// Every subspace of F_p^n as the column span of a reduced echelon matrix (n x m).
std::vector<ScalarMatrix> all_subspaces(const BaseField& f, int n) {
  const auto p = static_cast<int>(f.characteristic());
  std::vector<ScalarMatrix> out;
  for (std::uint32_t pivmask = 0; pivmask < (1u << n); ++pivmask) {
    std::vector<int> piv;
    for (int i = 0; i < n; ++i)
      if (pivmask & (1u << i)) piv.push_back(i);
    const int m = static_cast<int>(piv.size());
    // Free entries: column j, rows below its pivot that are not pivots of other columns.
    std::vector<std::pair<int, int>> free;
    for (int j = 0; j < m; ++j)
      for (int i = piv[static_cast<std::size_t>(j)] + 1; i < n; ++i)
        if (!(pivmask & (1u << i))) free.emplace_back(i, j);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < free.size(); ++k) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < total; ++code) {
      ScalarMatrix a(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(m), Scalar(f)));
      for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(piv[static_cast<std::size_t>(j)])][static_cast<std::size_t>(j)] = Scalar(f, 1);
      std::uint64_t c = code;
      for (const auto& [i, j] : free) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Scalar(f, static_cast<long>(c % static_cast<std::uint64_t>(p)));
        c /= static_cast<std::uint64_t>(p);
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

Report finite_embedding(std::uint64_t, Scale scale) {
  Report r;
  Property full{"j(L'/L) = L'"}, zero{"j(0) = L"},
      pl{"Pluecker coordinates of j(M) equal the finite minors up to one unit"},
      rel{"three-term Pluecker relation on the coordinates of j(M)"},
      stated_index{"i(j(M)) = i(L') + dim L'/(M+L)"},
      corrected{"i(j(M)) = i(L') - dim L'/(M+L)"};
  corrected.informational = true;
  corrected.note = "complementary relation, reported for comparison";
  std::vector<BaseField> fields = {BaseField::prime(2)};
  if (scale == Scale::full) fields.push_back(BaseField::prime(3));
  for (const auto& f : fields) {
    const Ring ring = CoeffRing::field_only(f);
    const GrassPoint l(ring, 2, {});
    std::vector<LaurentSeries> cols;
    for (int e = -2; e <= 1; ++e) cols.push_back(LaurentSeries::monomial(ring, e, 1));
    const GrassPoint lp(ring, 2, cols);
    const std::int64_t il = index(lp);
    const std::string fl = "over " + f.spec();
    check(full, fl, [&] {
      RingMatrix id(4, std::vector<RingElement>(4, RingElement(ring)));
      for (std::size_t i = 0; i < 4; ++i) id[i][i] = RingElement::constant(ring, 1);
      return same_subspace(embed_finite(id, l, lp), lp);
    });
    check(zero, fl, [&] { return same_subspace(embed_finite(RingMatrix(4), l, lp), l); });
    for (const auto& sub : all_subspaces(f, 4)) {
      const std::size_t m = sub.empty() ? 0 : sub[0].size();
      RingMatrix mat(4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < m; ++j) mat[i].push_back(RingElement::constant(ring, sub[i][j]));
      const std::string label = fl + ", dim M = " + std::to_string(m);
      GrassPoint jm;
      std::int64_t ij = 0;
      check_reason(stated_index, label, [&] {
        jm = embed_finite(mat, l, lp);
        ij = index(jm);
        const std::int64_t rhs = il + (4 - static_cast<std::int64_t>(m));
        if (ij == rhs) return std::string();
        return "i(j(M)) = " + std::to_string(ij) + ", right-hand side = " + std::to_string(rhs);
      });
      check(corrected, label, [&] { return ij == il - (4 - static_cast<std::int64_t>(m)); });
      if (m != 2) continue;
      check(pl, label, [&] {
        std::optional<RingElement> unit;
        for (const auto& p : partitions_up_to(4)) {
          const auto [depth, rows] = chart_rows(jm, partition_to_maya(p));
          const RingElement inf = plucker(jm, partition_to_maya(p));
          if (depth != 2 || rows.back() > 1) {
            if (!inf.is_zero()) return false;
            continue;
          }
          std::vector<std::size_t> fr;
          for (auto row : rows) fr.push_back(static_cast<std::size_t>(row + 2));
          const RingElement fin = oracle::finite_plucker(ring, mat, fr);
          if (fin.is_zero() != inf.is_zero()) return false;
          if (fin.is_zero()) continue;
          const RingElement ratio = inf * fin.inverse();
          if (!unit) unit = ratio;
          if (!(ratio == *unit)) return false;
        }
        return unit.has_value();
      });
      check(rel, label, [&] {
        // Rows {-2,-1,0,1} <-> 1..4; p_ij is the coordinate of the partition with those rows.
        auto coord = [&](int i, int j) {
          std::vector<std::int64_t> rows = {i - 3, j - 3};
          for (const auto& p : partitions_up_to(4)) {
            const auto cr = chart_rows(jm, partition_to_maya(p));
            if (cr.first == 2 && cr.second == rows) return plucker(jm, partition_to_maya(p));
          }
          throw Error(ErrorKind::internal, "no chart with the requested rows");
        };
        return (coord(1, 2) * coord(3, 4) - coord(1, 3) * coord(2, 4) + coord(1, 4) * coord(2, 3)).is_zero();
      });
    }
  }
  r.properties = {full, zero, pl, rel, stated_index, corrected};
  return r;
}

Report exp_char0_suite(std::uint64_t seed, Scale scale) {
  Report r;
  Property hm{"exp(y) exp(y') = exp(y + y') in Gamma-"}, hp{"exp(y) exp(y') = exp(y + y') in Gamma+"};
  Rng rng(seed);
  const Ring ring = CoeffRing::truncated(BaseField::rationals(), {"a", "b"}, 6);
  for (int i = 0; i < count(scale, 4, 20); ++i) {
    for (Sign sign : {Sign::minus, Sign::plus}) {
      std::vector<RingElement> y, yp, sum;
      for (int k = 0; k < 3; ++k) {
        y.push_back(sign == Sign::minus ? sampling::random_nilpotent(rng, ring) : sampling::random_element(rng, ring));
        yp.push_back(sign == Sign::minus ? sampling::random_nilpotent(rng, ring) : sampling::random_element(rng, ring));
        sum.push_back(y.back() + yp.back());
      }
      check(sign == Sign::minus ? hm : hp, "instance " + std::to_string(i), [&] {
        const auto lhs = gamma_mul(exp_char0(ring, y, sign, 8), exp_char0(ring, yp, sign, 8));
        return lhs.agrees_with(exp_char0(ring, sum, sign, 8));
      });
    }
  }
  r.properties = {hm, hp};
  return r;
}

Report witt(std::uint64_t, Scale scale) {
  Report r;
  Property unital{"(a) + 0 = a"}, comm{"a + b = b + a"}, assoc{"(a + b) + c = a + (b + c)"},
      series{"prod(1 - a_i w^i) prod(1 - b_i w^i) = prod(1 - c_i w^i) mod w^5"};
  const int n = 4;
  for (std::uint64_t p : {2u, 3u}) {
    const BaseField f = BaseField::prime(p);
    const Ring ring = CoeffRing::field_only(f);
    // Values per slot: all of F_p (at most 3); associativity uses {0, 1} at small scale.
    auto tuples = [&](int values) {
      std::vector<std::vector<RingElement>> out;
      int total = 1;
      for (int i = 0; i < n; ++i) total *= values;
      for (int code = 0; code < total; ++code) {
        std::vector<RingElement> t;
        int c = code;
        for (int i = 0; i < n; ++i) {
          t.push_back(RingElement::constant(ring, c % values));
          c /= values;
        }
        out.push_back(std::move(t));
      }
      return out;
    };
    const auto all = tuples(static_cast<int>(p));
    const auto assoc_set = scale == Scale::full ? all : tuples(2);
    const std::vector<RingElement> zeros(n, RingElement(ring));
    auto product = [&](const std::vector<RingElement>& a) {
      LaurentSeries s = LaurentSeries::one(ring).truncated(n + 1);
      for (std::size_t i = 0; i < a.size(); ++i)
        s = s * (LaurentSeries::one(ring) - LaurentSeries::monomial(ring, static_cast<std::int64_t>(i) + 1, a[i]));
      return s;
    };
    const std::string fl = "over " + f.spec();
    for (const auto& a : all) {
      check(unital, fl, [&] { return witt_add(ring, a, zeros, n) == a && witt_add(ring, zeros, a, n) == a; });
      for (const auto& b : all) {
        const auto ab = witt_add(ring, a, b, n);
        check(comm, fl, [&] { return ab == witt_add(ring, b, a, n); });
        check(series, fl, [&] { return (product(a) * product(b)).agrees_with(product(ab)); });
      }
    }
    for (const auto& a : assoc_set)
      for (const auto& b : assoc_set) {
        const auto ab = witt_add(ring, a, b, n);
        for (const auto& c : assoc_set)
          check(assoc, fl, [&] { return witt_add(ring, ab, c, n) == witt_add(ring, a, witt_add(ring, b, c, n), n); });
      }
  }
  r.properties = {unital, comm, assoc, series};
  return r;
}

Report pairings(std::uint64_t seed, Scale scale) {
  Report r;
  Property res{"res(z^m d z^n) = n delta(m+n)"}, plus{"commutator is 1 on Gamma+ x Gamma+"},
      minus{"commutator is 1 on Gamma- x Gamma-"}, stable{"commutator at W equals commutator at W+3"},
      bimult{"commutator is multiplicative in the first argument"},
      infinitesimal{"e t coefficient of [1 + e z^-a, 1 + t z^b] is res(z^-a d z^b)"};
  const Ring q = qfield();
  for (int m = -10; m <= 10; ++m)
    for (int n = -10; n <= 10; ++n)
      check(res, "m=" + std::to_string(m) + " n=" + std::to_string(n), [&] {
        const RingElement v = residue_pairing(LaurentSeries::monomial(q, m, 1), LaurentSeries::monomial(q, n, 1));
        return v == RingElement::constant(q, m + n == 0 ? n : 0);
      });
  Rng rng(seed);
  const Ring ring = CoeffRing::truncated(BaseField::rationals(), {"a", "b"}, 3);
  const int n = count(scale, 5, 20);
  for (int i = 0; i < n; ++i) {
    const std::string label = "instance " + std::to_string(i);
    const auto p1 = sampling::random_gamma(rng, ring, false, true, 2, true);
    const auto p2 = sampling::random_gamma(rng, ring, false, true, 2, true);
    check(plus, label, [&] { return commutator_pairing(p1, p2, commutator_window_bound(p1, p2)).is_one(); });
    const auto m1 = sampling::random_gamma(rng, ring, true, false, 2, true);
    const auto m2 = sampling::random_gamma(rng, ring, true, false, 2, true);
    check(minus, label, [&] { return commutator_pairing(m1, m2, commutator_window_bound(m1, m2)).is_one(); });
    const auto g1 = sampling::random_gamma(rng, ring, true, true, 2, true);
    const auto g2 = sampling::random_gamma(rng, ring, true, true, 2, true);
    check(stable, label, [&] {
      const auto w = commutator_window_bound(g1, g2);
      return commutator_pairing(g1, g2, w) == commutator_pairing(g1, g2, w + 3);
    });
    if (i < n / 2) {
      const auto g3 = sampling::random_gamma(rng, ring, true, true, 1, true);
      check(bimult, label, [&] {
        const auto prod = gamma_mul(g1, g3);
        const auto w = std::max(commutator_window_bound(prod, g2), commutator_window_bound(g1, g2));
        return commutator_pairing(prod, g2, w) == commutator_pairing(g1, g2, w) * commutator_pairing(g3, g2, w);
      });
    }
  }
  const Ring et = CoeffRing::truncated(BaseField::rationals(), {"e", "t"}, 2);
  const RingElement e = RingElement::variable(et, "e"), t = RingElement::variable(et, "t");
  const long et_index = et->find({1, 1});
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      check(infinitesimal, "a=" + std::to_string(a) + " b=" + std::to_string(b), [&] {
        const auto g1 = GammaElement::minus(LaurentSeries::one(et) + LaurentSeries::monomial(et, -a, e));
        const auto g2 = GammaElement::plus(LaurentSeries::one(et) + LaurentSeries::monomial(et, b, t));
        const RingElement c = commutator_pairing(g1, g2, commutator_window_bound(g1, g2));
        const RingElement rp = residue_pairing(LaurentSeries::monomial(q, -a, 1), LaurentSeries::monomial(q, b, 1));
        return c.coeff(static_cast<std::size_t>(et_index)) ==
               rp.constant_term() * Scalar(q->field(), kCommutatorOrientation);
      });
  r.properties = {res, plus, minus, stable, bimult, infinitesimal};
  return r;
}

Report schur_suite(std::uint64_t, Scale scale) {
  Report r;
  Property dual{"(F_l, F_m) = delta"}, tableaux{"Jacobi-Trudi equals the tableau sum under x_i = h_i(t)"},
      boson{"B(unit coordinate at l) = F_l"};
  const BaseField q = BaseField::rationals();
  const int dmax = scale == Scale::full ? 5 : 4;
  const Ring xr = coordinate_ring(q, dmax);
  const auto ps = partitions_up_to(dmax);
  std::vector<RingElement> f;
  for (const auto& p : ps) f.push_back(schur(p, xr));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      check(dual, ps[i].to_string() + "," + ps[j].to_string(),
            [&] { return duality_pair(f[i], f[j]) == Scalar(q, i == j ? 1 : 0); });
  for (const auto& field : {q, BaseField::prime(2)}) {
    const Ring x4 = coordinate_ring(field, 4);
    for (int m = 1; m <= 3; ++m) {
      std::vector<std::string> names;
      for (int i = 1; i <= m; ++i) names.push_back("t" + std::to_string(i));
      const Ring tr = CoeffRing::truncated(field, names, 4);
      std::vector<RingElement> images;
      for (int i = 1; i <= 4; ++i) images.push_back(oracle::complete_homogeneous(i, tr));
      for (const auto& p : partitions_up_to(4))
        check(tableaux, p.to_string() + " in " + std::to_string(m) + " variables over " + field.spec(),
              [&] { return substitute(schur(p, x4), images) == oracle::schur_by_tableaux(p, tr); });
    }
  }
  const Ring base = qfield();
  for (const auto& p : partitions_up_to(4))
    check(boson, p.to_string(), [&] {
      return bosonize({{p, RingElement::constant(base, 1)}}, base, 4) == schur(p, q, 4);
    });
  r.properties = {dual, tableaux, boson};
  return r;
}

Report kp(std::uint64_t seed, Scale scale) {
  Report r;
  Property schur_tau{"KP holds for tau = F_l"}, points{"KP holds for tau of the cross-check points"},
      witness{"KP fails for 1 + x1^2"};
  const int d = tau_degree(scale);
  const int order = d - 3;
  const Ring xr = coordinate_ring(BaseField::rationals(), d);
  for (const auto& p : partitions_up_to(4))
    check(schur_tau, p.to_string(), [&] { return hirota_kp_check(schur(p, xr), order); });
  const auto pts = big_cell_points(seed, count(scale, 10, 50));
  for (std::size_t i = 0; i < pts.size(); ++i)
    check(points, "point " + std::to_string(i), [&] { return hirota_kp_check(tau_schur(pts[i], d).value, order); });
  const RingElement x1 = RingElement::variable(xr, "x1");
  check(witness, "1 + x1^2", [&] { return !hirota_kp_check(RingElement::constant(xr, 1) + x1 * x1, order); });
  r.properties = {schur_tau, points, witness};
  return r;
}

Report index_suite(std::uint64_t seed, Scale scale) {
  Report r;
  Property inv{"index(g L) = index(L)"}, oracle_eq{"index agrees with the window computation"};
  Rng rng(seed);
  const Ring ring = CoeffRing::truncated(BaseField::rationals(), {"a", "b"}, 2);
  const int n = count(scale, 10, 50);
  int done = 0;
  while (done < n) {
    const std::int64_t depth = static_cast<std::int64_t>(rng() % 4);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 5);
    const std::int64_t top = static_cast<std::int64_t>(rng() % 4) - 1;
    std::vector<LaurentSeries> cols;
    for (std::int64_t j = 0; j < k; ++j) {
      std::vector<RingElement> c;
      for (std::int64_t e = -depth; e <= std::max(top, -depth); ++e) c.push_back(sampling::random_element(rng, ring, 0.5));
      cols.emplace_back(ring, -depth, std::move(c));
    }
    GrassPoint l;
    try {
      l = GrassPoint(ring, depth, cols);
    } catch (const PreconditionError&) {
      continue;
    }
    const auto g = sampling::random_gamma(rng, ring, true, true, 2, true);
    const std::string label = "instance " + std::to_string(done);
    check(inv, label, [&] { return index(act(g, l)) == index(l); });
    check(oracle_eq, label, [&] {
      const IndexData a = index_data(l), b = oracle::index_by_window(l);
      return a.intersection == b.intersection && a.cokernel == b.cokernel;
    });
    ++done;
  }
  r.properties = {inv, oracle_eq};
  return r;
}

using SuiteFn = Report (*)(std::uint64_t, Scale);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m = {
      {"tau-crosscheck", tau_crosscheck}, {"vacuum", vacuum},       {"factorization", factorization},
      {"cocycle", cocycle},               {"finite-embedding", finite_embedding},
      {"exp-char0", exp_char0_suite},     {"witt", witt},           {"pairings", pairings},
      {"schur", schur_suite},             {"kp", kp},               {"index", index_suite}};
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tau-crosscheck", "vacuum", "factorization", "cocycle",
                                                 "finite-embedding", "exp-char0", "witt", "pairings",
                                                 "schur", "kp", "index"};
  return names;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "tau cross-check: tau_direct = tau_schur on random big-cell points", {"tau-crosscheck"}},
      {2, "tau of the vacuum is 1 and its Baker function is v^-1", {"vacuum"}},
      {3, "factorization round trip and uniqueness", {"factorization"}},
      {4, "chart transition cocycle", {"cocycle"}},
      {5, "finite/infinite compatibility and the index relation for j(M)", {"finite-embedding"}},
      {6, "exponential homomorphism and Witt law", {"exp-char0", "witt"}},
      {7, "residue and commutator pairings", {"pairings"}},
      {8, "Schur duality, tableaux and bosonization", {"schur"}},
      {9, "Hirota/KP check", {"kp"}},
      {10, "index invariance under the group action", {"index"}}};
  return c;
}

Report run_suite(const std::string& name, std::uint64_t seed, Scale scale) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw ParseError("unknown verify suite '" + name + "'");
  Report r = it->second(seed, scale);
  r.suite = name;
  r.seed = seed;
  r.scale = scale;
  return r;
}

}  // namespace satogr::verify
