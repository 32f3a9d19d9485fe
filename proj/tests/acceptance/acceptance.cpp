// Acceptance suite: each criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails. All checks are exact unless a bound
// is stated explicitly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planeval/cluster.hpp"
#include "planeval/cones.hpp"
#include "planeval/cremona.hpp"
#include "planeval/interp.hpp"
#include "planeval/valuation.hpp"
#include "planeval/waldschmidt.hpp"

using namespace planeval;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

double run_criterion(int id, const std::string& name, const std::function<bool()>& body) {
  notes.clear();
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  criterion %d  %-28s (%.2fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs);
  if (!ok) {
    ++failures;
    for (const auto& n : notes) std::printf("      note: %s\n", n.c_str());
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
  }
  return secs;
}

bool expect(bool cond, const std::string& what) {
  if (!cond) note(what);
  return cond;
}

// ---------------------------------------------------------------------------

bool criterion1_counts() {
  auto start = std::chrono::steady_clock::now();
  const size_t expected[] = {6, 10, 16, 27, 56, 240};
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    auto classes = enumerate_minus_one(n);
    ok &= expect(classes.size() == expected[n - 3],
                 "count mismatch at n = " + std::to_string(n) + ": got " + std::to_string(classes.size()));
    for (const auto& c : classes)
      if (hudson_test(c).verdict != HudsonVerdict::MinusOneClass) {
        ok = expect(false, "hudson rejects " + render_class(c));
        break;
      }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= expect(secs < 10.0, "enumeration exceeded 10 seconds");
  return ok;
}

bool criterion2_hudson_trace() {
  HudsonTrace tr = hudson_test(parse_class("6;3,2^7"));
  bool ok = expect(tr.verdict == HudsonVerdict::MinusOneClass, "sextic class rejected");
  ok &= expect(tr.steps.size() == 5, "expected five steps, got " + std::to_string(tr.steps.size()));
  // full step-for-step sequence under the lowest-index tie-break
  const char* want[] = {"6;3,2^7", "5;2,1^2,2^5", "4;1^5,2^3", "2;1^5,0^3", "1;0^3,1^2,0^3"};
  const long long degrees[] = {6, 5, 4, 2, 1, 0};
  for (size_t s = 0; s < tr.steps.size() && ok; ++s) {
    ok &= expect(render_class(tr.steps[s].input) == want[s],
                 "step " + std::to_string(s) + " is " + render_class(tr.steps[s].input) + ", want " + want[s]);
    ok &= expect(tr.steps[s].input.d == QuadNum(Rat(degrees[s])), "degree mismatch at step " + std::to_string(s));
  }
  ok &= expect(tr.terminal.d == QuadNum(0), "terminal degree nonzero");
  int minus = 0, zero = 0;
  for (const auto& m : tr.terminal.m) {
    if (m == QuadNum(-1)) ++minus;
    if (m == QuadNum(0)) ++zero;
  }
  ok &= expect(minus == 1 && zero == 7, "terminal class is not a permutation of (0;-1,0^7)");
  return ok;
}

bool criterion3_mu_exactness() {
  MuTable table = build_mu_table(21);
  bool ok = true;

  // (a) continuity at every shared endpoint, including the bridge at phi^4
  int shared = 0;
  for (size_t i = 0; i < table.rows.size(); ++i)
    for (size_t j = 0; j < table.rows.size(); ++j) {
      if (i == j) continue;
      if (qn_cross_cmp(table.rows[i].hi, table.rows[j].lo) != 0) continue;
      ++shared;
      ok &= expect(qn_cross_cmp(table.rows[i].value_at(table.rows[i].hi),
                                table.rows[j].value_at(table.rows[j].lo)) == 0,
                   "discontinuity between " + table.rows[i].label + " and " + table.rows[j].label);
    }
  ok &= expect(shared >= 20, "too few shared endpoints found");
  QuadNum phi4(Rat(7, 2), Rat(3, 2), 5), phi2(Rat(3, 2), Rat(1, 2), 5);
  ok &= expect((QuadNum(1) + phi4) * QuadNum(Rat(1, 3)) == phi2, "(1+phi^4)/3 != phi^2");
  ok &= expect(mu_eval(table, phi4).has_value() && mu_eval(table, phi4)->value == phi2,
               "table value at phi^4 is not phi^2");

  // (b) sqrt-contact endpoints across the twelve radicands
  std::set<long long> radicands;
  for (const auto& row : table.rows) {
    if (row.contact_lo) {
      ok &= expect(row.value_at(row.lo) * row.value_at(row.lo) == row.lo, "contact fails at lo of " + row.label);
      if (!row.lo.is_rational()) radicands.insert(row.lo.k().convert_to<long long>());
    }
    if (row.contact_hi) {
      ok &= expect(row.value_at(row.hi) * row.value_at(row.hi) == row.hi, "contact fails at hi of " + row.label);
      if (!row.hi.is_rational()) radicands.insert(row.hi.k().convert_to<long long>());
    }
  }
  ok &= expect(radicands == std::set<long long>{2, 5, 7, 22, 29, 87, 177, 179, 218, 455, 457, 877},
               "contact radicands are not the twelve expected ones");

  // (c) slopes in [0, 1]
  for (const auto& row : table.rows) ok &= expect(row.slope >= 0 && row.slope <= 1, "slope outside [0,1]");

  // (d) mu(t)^2 >= t at 10^4 random rational t in the covered domain
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 10000) {
    Rat x(1 + static_cast<long long>(rng() % 32000), 1 + rng() % 4000);
    if (x < 1 || x > 9) continue;
    auto v = mu_eval(table, QuadNum(x));
    if (!v) continue;
    ++checked;
    if (!(v->value * v->value >= QuadNum(x))) {
      ok = expect(false, "mu(t)^2 < t at t = " + rat_str(x));
      break;
    }
  }

  // (e) pinned values
  ok &= expect(mu_eval(table, QuadNum(1))->value == QuadNum(1), "mu(1) != 1");
  ok &= expect(mu_eval(table, QuadNum(4))->value == QuadNum(2), "mu(4) != 2");
  ok &= expect(mu_eval(table, QuadNum(9))->value == QuadNum(3), "mu(9) != 3");
  ok &= expect(mu_eval(table, QuadNum(5))->value == QuadNum(Rat(5, 2)), "mu(5) != 5/2");
  ok &= expect(mu_eval(table, QuadNum(7))->value == QuadNum(Rat(8, 3)), "mu(7) != 8/3");
  return ok;
}

bool criterion4_orevkov() {
  MuTable table = build_mu_table(13);
  bool ok = true;
  for (int i : {1, 3, 5, 7, 9}) {
    CurveDatum d = orevkov_datum(i);
    Rat fm = fibonacci(i - 2), f = fibonacci(i), fp = fibonacci(i + 2);
    QuadNum lo(f * f / (fm * fm)), hi(fp * fp / (f * f));
    PiecewiseLinearFn fn = legendre(d.polygon);
    // scaled pieces equal the table rows exactly on [lo, hi]
    for (const auto& row : table.rows) {
      if (row.tag != MuRowTag::Fibonacci || row.index != i) continue;
      bool rising = row.slope != 0;
      const PwlPiece* piece = nullptr;
      for (const auto& p : fn.pieces)
        if ((p.slope != 0) == rising) piece = &p;
      if (!piece) {
        ok = expect(false, "missing piece for row " + row.label);
        continue;
      }
      ok &= expect(piece->slope / Rat(d.degree) == row.slope, "slope mismatch at " + row.label);
      ok &= expect(piece->intercept / Rat(d.degree) == row.intercept, "intercept mismatch at " + row.label);
    }
    // the breakpoint of the polygon is the row boundary F_{i+2}/F_{i-2}
    ok &= expect(fn.pieces.size() == 2 && fn.pieces[0].hi == QuadNum(fp / fm),
                 "breakpoint is not F_{i+2}/F_{i-2} for i = " + std::to_string(i));
    SubmaxInterval iv = submaximal_interval_from_pieces(fn, d.degree);
    ok &= expect(!iv.empty && iv.lo == lo && iv.hi == hi,
                 "submaximal interval mismatch for i = " + std::to_string(i));
  }
  return ok;
}

bool criterion5_cluster_laws() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    long long den = 1 + rng() % 40;
    long long num = den + 1 + rng() % (99 * den);
    Rat t(num, den);
    if (t <= 1 || t >= 100) {
      --rep;
      continue;
    }
    WeightedCluster c = cluster_from_cf(t, Normalization::UnitValue);
    ok &= expect(c.sum_of_squares() == t, "sum of squares != t at t = " + rat_str(t));
    Int terms = 0;
    for (const auto& n : c.cf) terms += n;
    ok &= expect(Int(c.s) == terms, "center count mismatch at t = " + rat_str(t));
    for (int j = 0; j + 1 < c.s; ++j)
      if (!c.proximity_equality_at(j)) {
        ok = expect(false, "proximity equality fails at t = " + rat_str(t));
        break;
      }
    if (!ok) break;
  }
  WeightedCluster c32 = cluster_from_cf(Rat(3, 2), Normalization::UnitValue);
  ok &= expect(c32.s == 3 && c32.v == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 2)},
               "t = 3/2 cluster is not (p1^1, p2^1/2, p3^1/2)");
  ok &= expect(c32.extra == std::vector<int>{-1, -1, 0}, "t = 3/2 proximities are wrong");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= expect(secs < 5.0, "cluster laws exceeded 5 seconds");
  return ok;
}

bool criterion6_unloading_volume() {
  bool ok = true;
  // idempotent and schedule independent
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    Rat t(2 + static_cast<long long>(rng() % 16), 1 + rng() % 7);
    if (t <= 1) continue;
    WeightedCluster c = cluster_from_cf(t, Normalization::UnitLast);
    ContractedDivisor start;
    for (int i = 0; i < c.s; ++i)
      start.mbar.push_back(Rat(static_cast<long long>(rng() % 11) - 3, 1 + rng() % 3));
    ContractedDivisor ref = unload(c, start).divisor;
    ok &= expect(unload(c, ref).divisor == ref, "unload not idempotent at t = " + rat_str(t));
    for (int sched = 0; sched < 10; ++sched) {
      std::mt19937_64 pick_rng(500 + sched);
      auto pick = [&pick_rng](const std::vector<int>& v) { return static_cast<int>(pick_rng() % v.size()); };
      if (!(unload(c, start, pick).divisor == ref)) {
        ok = expect(false, "schedule dependence at t = " + rat_str(t));
        break;
      }
    }
  }

  // D_1 = -E_1 on the t = 3/2 unit-last cluster
  WeightedCluster c32 = cluster_from_cf(Rat(3, 2), Normalization::UnitLast);
  ContractedDivisor e3;
  e3.mbar = {Rat(0), Rat(0), Rat(1)};
  ok &= expect(unload(c32, e3).divisor.mbar == std::vector<Rat>{Rat(1), Rat(0), Rat(0)},
               "D_1 != -E_1 on the t = 3/2 cluster");

  // unload((0,...,0,m)) = m D_v whenever m D_v is integral
  for (const Rat& t : {Rat(3, 2), Rat(2), Rat(7, 5)}) {
    WeightedCluster c = cluster_from_cf(t, Normalization::UnitLast);
    ContractedDivisor dv = valuation_divisor(c);
    Int m0 = numerator(c.sum_of_squares());
    for (int mult = 1; mult <= 4; ++mult) {
      ContractedDivisor start;
      start.mbar.assign(c.s, Rat(0));
      start.mbar.back() = Rat(m0) * mult;
      ContractedDivisor got = unload(c, start).divisor;
      bool same = true;
      for (int i = 0; i < c.s; ++i) same &= got.mbar[i] == Rat(m0) * mult * dv.mbar[i];
      ok &= expect(same, "unload of an integral multiple differs from m D_v at t = " + rat_str(t));
    }
  }

  // volume law |2 colength(m)/m^2 - 1/sum v^2| <= 8/m for m <= 600.
  // The stated form of this criterion puts sum v^2 on the right-hand side,
  // but dim O/I_m grows like m^2 vol/2 = m^2/(2 sum v^2): the reciprocal is
  // the only reading under which the bound can hold, and it is the volume
  // law of the source material.
  for (const Rat& t : {Rat(3, 2), Rat(2), Rat(7, 5)}) {
    WeightedCluster c = cluster_from_cf(t, Normalization::UnitLast);
    Rat vol = c.volume();
    for (long long m = 1; m <= 600; ++m) {
      Rat lhs = rat_abs(Rat(2) * colength(c, Rat(m)) / Rat(m * m) - vol);
      if (!(lhs <= Rat(8, m))) {
        ok = expect(false, "volume law fails at t = " + rat_str(t) + ", m = " + std::to_string(m));
        break;
      }
    }
  }
  return ok;
}

bool criterion7_zariski() {
  bool ok = true;
  std::mt19937_64 rng(5);  // the clusters of criterion 5, filtered to s <= 5
  std::vector<Rat> params;
  for (int rep = 0; rep < 200; ++rep) {
    long long den = 1 + rng() % 40;
    long long num = den + 1 + rng() % (99 * den);
    Rat t(num, den);
    if (t <= 1 || t >= 100) {
      --rep;
      continue;
    }
    params.push_back(t);
  }
  // plus every small parameter with denominator <= 6 below 5
  for (long long den = 1; den <= 6; ++den)
    for (long long num = den + 1; num <= 5 * den; ++num) params.emplace_back(num, den);
  int used = 0;
  for (const Rat& t : params) {
    WeightedCluster c = cluster_from_cf(t, Normalization::UnitLast);
    if (c.s > 5) continue;
    ++used;
    ContractedDivisor d;
    for (int i = 0; i < c.s; ++i)
      d.mbar.push_back(Rat(static_cast<long long>(rng() % 13) - 6, 1 + rng() % 4));
    ZariskiDecomposition z = relative_zariski(c, d);
    for (int i = 0; i < c.s; ++i) {
      Rat pd = excess(c, z.positive, i);
      ok &= expect(z.negative_strict[i] >= 0, "N not effective at t = " + rat_str(t));
      ok &= expect(pd >= 0, "P not relatively nef at t = " + rat_str(t));
      if (z.negative_strict[i] > 0) ok &= expect(pd == 0, "P not orthogonal to supp N at t = " + rat_str(t));
      ok &= expect(z.positive.mbar[i] + z.negative.mbar[i] == d.mbar[i], "P + N != D");
    }
    // the positive part of -E_s is the valuation divisor
    ContractedDivisor es;
    es.mbar.assign(c.s, Rat(0));
    es.mbar.back() = 1;
    ok &= expect(relative_zariski(c, es).positive == valuation_divisor(c),
                 "positive part of -E_s is not D_v at t = " + rat_str(t));
  }
  ok &= expect(used >= 25, "not enough small clusters sampled: " + std::to_string(used));

  // brute-force grid oracle on 2- and 3-point clusters
  for (const Rat& t : {Rat(2), Rat(3, 2), Rat(3)}) {
    WeightedCluster c = cluster_from_cf(t, Normalization::UnitLast);
    if (c.s > 3) continue;
    ContractedDivisor d;
    d.mbar.assign(c.s, Rat(0));
    d.mbar.back() = 1;  // D = -E_s
    ZariskiDecomposition z = relative_zariski(c, d);
    int found = 0;
    std::vector<int> a(c.s, 0);
    while (true) {
      std::vector<Rat> cand(c.s);
      for (int i = 0; i < c.s; ++i) cand[i] = Rat(a[i], 12);
      auto n_total = total_coeffs_from_strict(c, cand);
      ContractedDivisor p;
      for (int i = 0; i < c.s; ++i) p.mbar.push_back(d.mbar[i] + n_total[i]);
      bool valid = true;
      for (int i = 0; i < c.s && valid; ++i) {
        Rat pd = excess(c, p, i);
        if (pd < 0 || (cand[i] > 0 && pd != 0)) valid = false;
      }
      if (valid) {
        ++found;
        ok &= expect(cand == z.negative_strict, "grid oracle found a different decomposition at t = " + rat_str(t));
      }
      int pos = 0;
      while (pos < c.s && ++a[pos] > 36) a[pos++] = 0;
      if (pos == c.s) break;
    }
    ok &= expect(found == 1, "grid oracle count != 1 at t = " + rat_str(t));
  }
  return ok;
}

bool criterion8_interpolation() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  const std::uint64_t p1 = 1000003, p2 = 1000033;

  PointConfig gen5 = make_point_config(ConfigKind::General, 5, p1, 1);
  ok &= expect(dimension({gen5, 2, {1, 1, 1, 1, 1}}).vdim == 1, "(2;1^5) vdim != 1");
  DimensionResult dc = dimension({gen5, 4, {2, 2, 2, 2, 2}});
  ok &= expect(dc.vdim == 1, "(4;2^5) vdim != 1");
  ok &= expect(expected_dimension(4, {2, 2, 2, 2, 2}) == -1, "(4;2^5) expected != -1");
  ok &= expect(dc.projdim != expected_dimension(4, {2, 2, 2, 2, 2}), "(4;2^5) not flagged special");

  PointConfig gen16 = make_point_config(ConfigKind::General, 16, p1, 2);
  ok &= expect(dimension({gen16, 4, std::vector<long long>(16, 1)}).vdim == 0, "(4;1^16) vdim != 0");
  PointConfig quart16 = make_point_config(ConfigKind::OnCurve, 16, p1, 2, 4);
  ok &= expect(dimension({quart16, 4, std::vector<long long>(16, 1)}).vdim >= 1,
               "16 points on a quartic admit no quartic");

  // SHGH agreement on 100 screened random instances, two primes x two seeds
  std::mt19937_64 rng(8);
  int tested = 0;
  while (tested < 100) {
    int n = 2 + rng() % 7;
    long long d = 1 + rng() % 9;
    std::vector<long long> mult;
    for (int i = 0; i < n; ++i) mult.push_back(rng() % 4);
    DivisorClass cls;
    cls.d = QuadNum(Rat(d));
    for (long long m : mult) cls.m.push_back(QuadNum(Rat(m)));
    bool screened = true;
    for (const auto& e : enumerate_minus_one(n))
      if (pair(cls, e).sign() < 0) {
        screened = false;
        break;
      }
    if (!screened) continue;
    ++tested;
    long long want = expected_dimension(d, mult);
    for (std::uint64_t prime : {p1, p2})
      for (std::uint64_t seed : {1000 + tested, 9000 + tested}) {
        InterpProblem pr{make_point_config(ConfigKind::General, n, prime, seed), d, mult};
        if (dimension(pr).projdim != want) {
          ok = expect(false, "SHGH disagreement at n = " + std::to_string(n) + ", d = " + std::to_string(d));
          tested = 100;
          break;
        }
      }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= expect(secs < 60.0, "interpolation suite exceeded 60 seconds");
  return ok;
}

bool criterion9_cone_identities() {
  bool ok = true;
  for (long long q = 1; q <= 50; ++q)
    for (long long p = q; p <= 50; ++p)
      if (self_pairing(bqp_class(q, p)) != QuadNum(0)) {
        ok = expect(false, "B_{q,p}^2 != 0 at q = " + std::to_string(q) + ", p = " + std::to_string(p));
        break;
      }
  for (const auto& [q, p] : {std::pair{1, 2}, {6, 13}, {37, 80}})
    ok &= expect(self_pairing(bqp_class(q, p)) == QuadNum(0), "convergent pair fails");

  for (int n = 10; n <= 30; ++n)
    ok &= expect(pair(de_fernex_class(n), de_fernex_class(n)) == QuadNum(-1),
                 "D_n^2 != -1 at n = " + std::to_string(n));

  DivisorClass mk10 = canonical_class(10);
  mk10.d = -mk10.d;
  for (auto& m : mk10.m) m = -m;
  ok &= expect(de_fernex_class(10) == mk10, "D_10 != -K_10");

  for (int n = 3; n <= 8; ++n) {
    DivisorClass mk;
    mk.d = QuadNum(3);
    mk.m.assign(n, QuadNum(1));
    NefResult r = nef_test_small(mk);
    ok &= expect(r.nef && r.min_pairing.sign() > 0,
                 "-K_n not nef with positive minimum at n = " + std::to_string(n));
  }
  return ok;
}

}  // namespace

int main() {
  run_criterion(1, "(-1)-curve counts", criterion1_counts);
  run_criterion(2, "hudson trace regression", criterion2_hudson_trace);
  run_criterion(3, "mu exactness suite", criterion3_mu_exactness);
  run_criterion(4, "orevkov reproduction", criterion4_orevkov);
  run_criterion(5, "cluster laws", criterion5_cluster_laws);
  run_criterion(6, "unloading and volume", criterion6_unloading_volume);
  run_criterion(7, "relative zariski", criterion7_zariski);
  run_criterion(8, "interpolation", criterion8_interpolation);
  run_criterion(9, "cone identities", criterion9_cone_identities);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
