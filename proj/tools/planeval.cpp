// planeval: exact computations on blown-up planes, plane valuations and
// fat-point interpolation. One subcommand per module; all numeric output is
// exact (rational or a+b*sqrt(k)), with optional decimal rendering.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "planeval/cluster.hpp"
#include "planeval/cones.hpp"
#include "planeval/cremona.hpp"
#include "planeval/interp.hpp"
#include "planeval/lattice.hpp"
#include "planeval/valuation.hpp"
#include "planeval/waldschmidt.hpp"

using json = nlohmann::json;
using namespace planeval;

namespace {

struct OutputOpts {
  std::string format = "text";
  int decimals = 0;
};

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--decimals", out.decimals, "Also render decimals with this many digits")
      ->check(CLI::Range(0, 1000));
}

std::string qn_out(const QuadNum& q, const OutputOpts& o) {
  if (o.decimals > 0) return q.to_string() + " (~" + q.to_decimal(o.decimals) + ")";
  return q.to_string();
}

json class_json(const DivisorClass& c) {
  json m = json::array();
  for (const auto& mi : c.m) m.push_back(mi.to_string());
  return json{{"d", c.d.to_string()}, {"m", m}};
}

json rat_vec_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat_str(r));
  return a;
}

std::vector<Rat> parse_rat_vector(const std::string& s) {
  std::vector<Rat> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    out.push_back(parse_rat(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<long long> parse_mult_vector(const std::string& s) {
  DivisorClass c = parse_class("0;" + s);
  std::vector<long long> out;
  for (const auto& mi : c.m) {
    if (!mi.is_rational() || !rat_is_integer(mi.a()))
      fail(Errc::InvalidArgs, "multiplicities must be integers");
    out.push_back(numerator(mi.a()).convert_to<long long>());
  }
  return out;
}

ConfigKind parse_config_kind(const std::string& s) {
  if (s == "general") return ConfigKind::General;
  if (s == "online") return ConfigKind::OnLine;
  if (s == "onconic") return ConfigKind::OnConic;
  if (s == "oncubic") return ConfigKind::OnCubic;
  if (s == "oncurve") return ConfigKind::OnCurve;
  fail(Errc::InvalidArgs, "unknown point configuration '" + s + "'");
}

void emit(const json& j, const OutputOpts& o) {
  if (o.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for blown-up planes, plane valuations and fat-point interpolation"};
  app.require_subcommand(1);

  // --- negcurves -------------------------------------------------------
  OutputOpts neg_out;
  int neg_n = 6;
  auto* neg = app.add_subcommand("negcurves", "Enumerate all (-1)-classes on X_n (2 <= n <= 8)");
  neg->add_option("--n", neg_n, "Number of blown-up points")->required();
  add_output_flags(neg, neg_out);
  neg->callback([&] {
    auto classes = enumerate_minus_one(neg_n);
    if (neg_out.format == "csv") {
      for (const auto& c : classes) {
        std::cout << c.d.to_string();
        for (const auto& m : c.m) std::cout << "," << m.to_string();
        std::cout << "\n";
      }
      return;
    }
    if (neg_out.format == "json") {
      json arr = json::array();
      for (const auto& c : classes) arr.push_back(class_json(c));
      emit(json{{"n", neg_n},
                {"count", classes.size()},
                {"max_degree", max_degree(classes)},
                {"classes", arr}},
           neg_out);
      return;
    }
    std::cout << "n = " << neg_n << ": " << classes.size() << " classes, max degree " << max_degree(classes)
              << "\n";
    for (const auto& c : classes) std::cout << render_class(c) << "\n";
  });

  // --- hudson ----------------------------------------------------------
  OutputOpts hud_out;
  std::string hud_class;
  auto* hud = app.add_subcommand("hudson", "Run Hudson's test on a numerical (-1)-class");
  hud->add_option("--class", hud_class, "Class in the form \"d;m1,m2,...\"")->required();
  add_output_flags(hud, hud_out);
  hud->callback([&] {
    DivisorClass c = parse_class(hud_class);
    HudsonTrace tr = hudson_test(c);
    bool ok = tr.verdict == HudsonVerdict::MinusOneClass;
    if (hud_out.format == "json") {
      json steps = json::array();
      for (const auto& s : tr.steps)
        steps.push_back(json{{"base", {s.i, s.j, s.k}},
                             {"from", render_class(s.input)},
                             {"to", render_class(s.output)},
                             {"c", s.c.to_string()}});
      json j{{"class", render_class(c)},
             {"verdict", ok ? "minus-one-class" : "rejected"},
             {"steps", steps},
             {"terminal", render_class(tr.terminal)}};
      if (!ok) j["reason"] = tr.reason;
      emit(j, hud_out);
      return;
    }
    for (const auto& s : tr.steps)
      std::cout << render_class(s.input) << " -> " << render_class(s.output) << "  base (" << s.i << ","
                << s.j << "," << s.k << "), c = " << s.c.to_string() << "\n";
    std::cout << (ok ? "minus-one-class" : "rejected: " + tr.reason) << "\n";
  });

  // --- cremona ---------------------------------------------------------
  OutputOpts cre_out;
  std::string cre_class, cre_at;
  auto* cre = app.add_subcommand("cremona", "Apply one arithmetic Cremona transformation");
  cre->add_option("--class", cre_class, "Class \"d;m1,m2,...\"")->required();
  cre->add_option("--at", cre_at, "Base indices, e.g. \"1,2,3\"")->required();
  add_output_flags(cre, cre_out);
  cre->callback([&] {
    DivisorClass c = parse_class(cre_class);
    auto idx = parse_rat_vector(cre_at);
    if (idx.size() != 3) fail(Errc::InvalidArgs, "--at needs exactly three indices");
    int i = numerator(idx[0]).convert_to<int>(), j = numerator(idx[1]).convert_to<int>(),
        k = numerator(idx[2]).convert_to<int>();
    CremonaStep s = cremona_step(c, i, j, k);
    if (cre_out.format == "json") {
      emit(json{{"input", render_class(s.input)},
                {"base", {s.i, s.j, s.k}},
                {"c", s.c.to_string()},
                {"output", render_class(s.output)}},
           cre_out);
      return;
    }
    std::cout << render_class(s.input) << " -> " << render_class(s.output) << "  (c = " << s.c.to_string()
              << ")\n";
  });

  // --- cone ------------------------------------------------------------
  OutputOpts cone_out;
  std::string cone_class;
  int cone_n = 0;
  auto* conec = app.add_subcommand("cone", "Nonnegative-cone membership and half-space report");
  conec->add_option("--class", cone_class, "Class \"d;m1,m2,...\"; entries may be a+b*sqrt(k)")->required();
  conec->add_option("--n", cone_n, "Expected number of points (checked if given)");
  add_output_flags(conec, cone_out);
  conec->callback([&] {
    DivisorClass c = parse_class(cone_class);
    if (cone_n > 0 && cone_n != c.n())
      fail(Errc::DimensionMismatch, "--n says " + std::to_string(cone_n) + " but the class has " +
                                        std::to_string(c.n()) + " multiplicities");
    ConeReport r = cone_report(c);
    if (cone_out.format == "csv") {
      std::cout << "class,L_pairing,self_pairing,in_Q,on_boundary_Q,K_side,de_fernex_side\n";
      std::cout << "\"" << render_class(c) << "\"," << r.L_pairing.to_string() << ","
                << r.self_pairing.to_string() << "," << r.in_Q << "," << r.on_boundary_Q << ","
                << side_name(r.K_side) << "," << side_name(r.de_fernex_side) << "\n";
      return;
    }
    json j{{"class", render_class(c)},
           {"n", c.n()},
           {"L_pairing", r.L_pairing.to_string()},
           {"self_pairing", r.self_pairing.to_string()},
           {"in_Q", r.in_Q},
           {"on_boundary_Q", r.on_boundary_Q},
           {"K_side", side_name(r.K_side)},
           {"de_fernex_side", side_name(r.de_fernex_side)}};
    if (cone_out.format == "json") {
      emit(j, cone_out);
      return;
    }
    std::cout << "class          " << render_class(c) << "\n"
              << "xi.L           " << qn_out(r.L_pairing, cone_out) << "\n"
              << "xi.xi          " << qn_out(r.self_pairing, cone_out) << "\n"
              << "in Q           " << (r.in_Q ? "yes" : "no") << "\n"
              << "on boundary Q  " << (r.on_boundary_Q ? "yes" : "no") << "\n"
              << "K side         " << side_name(r.K_side) << "\n"
              << "de Fernex side " << side_name(r.de_fernex_side) << "\n";
  });

  // --- bqp -------------------------------------------------------------
  OutputOpts bqp_out;
  long long bqp_q = 1, bqp_p = 2;
  auto* bqp = app.add_subcommand("bqp", "Member of the B_{q,p} family on X_10");
  bqp->add_option("--q", bqp_q)->required();
  bqp->add_option("--p", bqp_p)->required();
  add_output_flags(bqp, bqp_out);
  bqp->callback([&] {
    DivisorClass c = bqp_class(bqp_q, bqp_p);
    json j{{"q", bqp_q},
           {"p", bqp_p},
           {"class", render_class(c)},
           {"self_pairing", self_pairing(c).to_string()}};
    if (bqp_out.format == "json") {
      emit(j, bqp_out);
      return;
    }
    std::cout << render_class(c) << "  self-pairing " << self_pairing(c).to_string() << "\n";
  });

  // --- nef -------------------------------------------------------------
  OutputOpts nef_out;
  std::string nef_class;
  int nef_n = 0;
  auto* nefc = app.add_subcommand("nef", "Nef test against all (-1)-classes (n <= 8)");
  nefc->add_option("--class", nef_class)->required();
  nefc->add_option("--n", nef_n, "Expected number of points (checked if given)");
  add_output_flags(nefc, nef_out);
  nefc->callback([&] {
    DivisorClass c = parse_class(nef_class);
    if (nef_n > 0 && nef_n != c.n()) fail(Errc::DimensionMismatch, "--n does not match the class");
    NefResult r = nef_test_small(c);
    json j{{"class", render_class(c)}, {"nef", r.nef}, {"min_pairing", r.min_pairing.to_string()}};
    if (r.witness) j["witness"] = render_class(*r.witness);
    if (nef_out.format == "json") {
      emit(j, nef_out);
      return;
    }
    if (r.nef)
      std::cout << "nef (minimum pairing " << r.min_pairing.to_string() << ")\n";
    else
      std::cout << "not nef: witness " << render_class(*r.witness) << " pairs to "
                << pair(c, *r.witness).to_string() << "\n";
  });

  // --- cluster ---------------------------------------------------------
  OutputOpts clu_out;
  std::string clu_t = "3/2", clu_norm = "unit-value";
  auto* clu = app.add_subcommand("cluster", "Weighted cluster of the quasimonomial valuation v_t");
  clu->add_option("--t", clu_t, "Rational parameter t > 1")->required();
  clu->add_option("--normalize", clu_norm)->check(CLI::IsMember({"unit-value", "unit-last"}));
  add_output_flags(clu, clu_out);
  clu->callback([&] {
    Rat t = parse_rat(clu_t);
    auto c = cluster_from_cf(t, clu_norm == "unit-value" ? Normalization::UnitValue : Normalization::UnitLast);
    json cf = json::array();
    for (const auto& n : c.cf) cf.push_back(n.str());
    json prox = json::array();
    for (int i = 0; i < c.s; ++i) {
      json parents = json::array();
      if (i > 0) parents.push_back(i);  // 1-based chain parent
      if (c.extra[i] >= 0) parents.push_back(c.extra[i] + 1);
      prox.push_back(parents);
    }
    json j{{"t", rat_str(t)},
           {"normalization", clu_norm},
           {"cf", cf},
           {"centers", c.s},
           {"weights", rat_vec_json(c.v)},
           {"proximities", prox},
           {"sum_of_squares", rat_str(c.sum_of_squares())},
           {"volume", rat_str(c.volume())}};
    if (clu_out.format == "json") {
      emit(j, clu_out);
      return;
    }
    std::cout << "t = " << rat_str(t) << " = [";
    for (size_t i = 0; i < c.cf.size(); ++i) std::cout << (i ? (i == 1 ? "; " : ", ") : "") << c.cf[i].str();
    std::cout << "], " << c.s << " centers\n";
    for (int i = 0; i < c.s; ++i) {
      std::cout << "p" << i + 1 << "  weight " << rat_str(c.v[i]);
      if (i > 0) {
        std::cout << "  proximate to p" << i;
        if (c.extra[i] >= 0) std::cout << ", p" << c.extra[i] + 1;
      }
      std::cout << "\n";
    }
    std::cout << "sum v^2 = " << rat_str(c.sum_of_squares()) << ", vol = " << rat_str(c.volume()) << "\n";
  });

  // --- unload ----------------------------------------------------------
  OutputOpts unl_out;
  std::string unl_t = "3/2";
  long long unl_m = 1;
  auto* unl = app.add_subcommand("unload", "Unload -m E_s on the unit-last cluster of t");
  unl->add_option("--t", unl_t)->required();
  unl->add_option("--m", unl_m, "Nonnegative integer value")->required();
  add_output_flags(unl, unl_out);
  unl->callback([&] {
    auto c = cluster_from_cf(parse_rat(unl_t), Normalization::UnitLast);
    ContractedDivisor start;
    start.mbar.assign(c.s, Rat(0));
    start.mbar.back() = unl_m;
    auto res = unload(c, start, {}, true);
    Rat col = colength(c, Rat(unl_m));
    if (unl_out.format == "json") {
      json steps = json::array();
      for (const auto& s : res.steps) steps.push_back(json{{"at", s.j + 1}, {"mbar", rat_vec_json(s.mbar_after)}});
      emit(json{{"t", rat_str(c.t)},
                {"m", unl_m},
                {"mbar", rat_vec_json(res.divisor.mbar)},
                {"steps", steps},
                {"colength", rat_str(col)}},
           unl_out);
      return;
    }
    std::cout << "start (0";
    for (int i = 1; i < c.s; ++i) std::cout << "," << (i + 1 == c.s ? std::to_string(unl_m) : "0");
    std::cout << ")\n";
    for (const auto& s : res.steps) {
      std::cout << "unload at p" << s.j + 1 << " -> (";
      for (size_t i = 0; i < s.mbar_after.size(); ++i) std::cout << (i ? "," : "") << rat_str(s.mbar_after[i]);
      std::cout << ")\n";
    }
    std::cout << "colength " << rat_str(col) << "\n";
  });

  // --- relzariski ------------------------------------------------------
  OutputOpts rz_out;
  std::string rz_t = "3/2", rz_div;
  auto* rz = app.add_subcommand("relzariski", "Relative Zariski decomposition on the cluster of t");
  rz->add_option("--t", rz_t)->required();
  rz->add_option("--divisor", rz_div, "E-basis coefficients of D, e.g. \"0,0,-1\" for -E_3")->required();
  add_output_flags(rz, rz_out);
  rz->callback([&] {
    auto c = cluster_from_cf(parse_rat(rz_t), Normalization::UnitLast);
    auto coeffs = parse_rat_vector(rz_div);
    if (static_cast<int>(coeffs.size()) != c.s)
      fail(Errc::DimensionMismatch, "divisor needs " + std::to_string(c.s) + " coefficients");
    ContractedDivisor d;
    for (const auto& e : coeffs) d.mbar.push_back(-e);
    auto z = relative_zariski(c, d);
    auto to_ecoeffs = [](const ContractedDivisor& cd) {
      std::vector<Rat> out;
      for (const auto& m : cd.mbar) out.push_back(-m);
      return out;
    };
    if (rz_out.format == "json") {
      emit(json{{"t", rat_str(c.t)},
                {"divisor", rat_vec_json(coeffs)},
                {"P", rat_vec_json(to_ecoeffs(z.positive))},
                {"N", rat_vec_json(to_ecoeffs(z.negative))},
                {"N_strict", rat_vec_json(z.negative_strict)}},
           rz_out);
      return;
    }
    auto show = [&](const char* name, const std::vector<Rat>& v) {
      std::cout << name << " (";
      for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << rat_str(v[i]);
      std::cout << ")\n";
    };
    show("P (E-coefficients)", to_ecoeffs(z.positive));
    show("N (E-coefficients)", to_ecoeffs(z.negative));
    show("N (strict-transform coefficients)", z.negative_strict);
  });

  // --- qval ------------------------------------------------------------
  OutputOpts qv_out;
  std::string qv_poly, qv_t = "2";
  std::uint64_t qv_seed = 0;
  bool qv_symbolic = false;
  auto* qv = app.add_subcommand("qval", "Quasimonomial valuation of a polynomial");
  qv->add_option("--poly", qv_poly, "Polynomial in x, y, e.g. \"y^2-x^3\"")->required();
  qv->add_option("--t", qv_t, "Parameter t >= 1 (rational or a+b*sqrt(k))");
  qv->add_option("--xi-seed", qv_seed, "Seed of the generic series");
  qv->add_flag("--symbolic", qv_symbolic, "Use symbolic series coefficients");
  add_output_flags(qv, qv_out);
  qv->callback([&] {
    Poly2<Rat> f = parse_poly2(qv_poly);
    PlaneSeries xi = qv_symbolic ? PlaneSeries::symbolic() : PlaneSeries::seeded(qv_seed);
    QuadNum t = parse_quad(qv_t);
    ValueResult r = quasimonomial_value(xi, t, f);
    if (qv_out.format == "json") {
      json j{{"poly", qv_poly},
             {"t", t.to_string()},
             {"value", r.value.to_string()},
             {"certified_order", r.certified_order}};
      if (qv_out.decimals > 0) j["value_decimal"] = r.value.to_decimal(qv_out.decimals);
      emit(j, qv_out);
      return;
    }
    std::cout << "v_t(f) = " << qn_out(r.value, qv_out) << "  (order " << r.certified_order << ")\n";
  });

  // --- legendre --------------------------------------------------------
  OutputOpts lg_out;
  std::string lg_poly;
  std::uint64_t lg_seed = 0;
  bool lg_symbolic = false;
  auto* lg = app.add_subcommand("legendre", "Newton polygon and its Legendre transform");
  lg->add_option("--poly", lg_poly)->required();
  lg->add_option("--xi-seed", lg_seed);
  lg->add_flag("--symbolic", lg_symbolic);
  add_output_flags(lg, lg_out);
  lg->callback([&] {
    Poly2<Rat> f = parse_poly2(lg_poly);
    PlaneSeries xi = lg_symbolic ? PlaneSeries::symbolic() : PlaneSeries::seeded(lg_seed);
    NewtonPolygon np = newton_polygon(xi, f);
    PiecewiseLinearFn fn = legendre(np);
    if (lg_out.format == "csv") {
      std::cout << "lo,hi,slope,intercept\n";
      for (const auto& p : fn.pieces)
        std::cout << p.lo.to_string() << "," << (p.unbounded ? "inf" : p.hi.to_string()) << ","
                  << rat_str(p.slope) << "," << rat_str(p.intercept) << "\n";
      return;
    }
    json verts = json::array();
    for (const auto& [i, j] : np.vertices) verts.push_back({i, j});
    json pieces = json::array();
    for (const auto& p : fn.pieces)
      pieces.push_back(json{{"lo", p.lo.to_string()},
                            {"hi", p.unbounded ? "inf" : p.hi.to_string()},
                            {"slope", rat_str(p.slope)},
                            {"intercept", rat_str(p.intercept)}});
    json j{{"poly", lg_poly},
           {"vertices", verts},
           {"pieces", pieces},
           {"certified_order", np.certified_order}};
    if (lg_out.format == "json") {
      emit(j, lg_out);
      return;
    }
    std::cout << "vertices:";
    for (const auto& [i, jj] : np.vertices) std::cout << " (" << i << "," << jj << ")";
    std::cout << "\n";
    for (const auto& p : fn.pieces)
      std::cout << "[" << p.lo.to_string() << ", " << (p.unbounded ? "inf" : p.hi.to_string()) << "]  "
                << rat_str(p.slope) << "*t + " << rat_str(p.intercept) << "\n";
  });

  // --- mu --------------------------------------------------------------
  OutputOpts mu_out;
  std::string mu_t = "2";
  int mu_fib = 21;
  bool mu_conj = false;
  auto* mu = app.add_subcommand("mu", "Evaluate the known piecewise linear part of the mu-hat function");
  mu->add_option("--t", mu_t)->required();
  mu->add_option("--max-fib-index", mu_fib)->check(CLI::Range(1, 59));
  mu->add_flag("--assume-conjecture", mu_conj, "Return sqrt(t), tagged conjectural, for unknown t >= 8+1/36");
  add_output_flags(mu, mu_out);
  mu->callback([&] {
    QuadNum t = parse_quad(mu_t);
    // size the square rows to cover the query
    int square_max = 20;
    if (t.is_rational() && t.a() > 400) square_max = (isqrt_floor(rat_ceil(t.a())) + 1).convert_to<int>();
    MuTable table = build_mu_table(mu_fib, square_max);
    auto v = mu_eval(table, t);
    json j{{"t", t.to_string()}, {"known", v.has_value()}};
    if (v) {
      j["value"] = v->value.to_string();
      j["row"] = v->row->label;
      j["residual"] = (v->value * v->value - t).to_string();
      if (mu_out.decimals > 0) j["value_decimal"] = v->value.to_decimal(mu_out.decimals);
    } else if (mu_conj && qn_cross_cmp(t, QuadNum(Rat(8) + Rat(1, 36))) >= 0) {
      if (auto rt = qn_sqrt(t)) {
        j["value"] = rt->to_string();
        j["conjectural"] = true;
      }
    }
    if (mu_out.format == "json") {
      emit(j, mu_out);
      return;
    }
    if (v)
      std::cout << "mu(" << t.to_string() << ") = " << qn_out(v->value, mu_out) << "  [" << v->row->label
                << "], residual mu^2 - t = " << (v->value * v->value - t).to_string() << "\n";
    else if (j.contains("conjectural"))
      std::cout << "mu(" << t.to_string() << ") = " << j["value"].get<std::string>()
                << "  (conjectural: sqrt(t))\n";
    else
      std::cout << "mu(" << t.to_string() << ") unknown\n";
  });

  // --- mu-sample -------------------------------------------------------
  OutputOpts ms_out;
  ms_out.format = "csv";
  std::string ms_from = "1", ms_to = "9", ms_step = "1/200";
  int ms_fib = 21;
  auto* ms = app.add_subcommand("mu-sample", "Sample the mu table on a rational grid (CSV)");
  ms->add_option("--from", ms_from);
  ms->add_option("--to", ms_to);
  ms->add_option("--step", ms_step);
  ms->add_option("--max-fib-index", ms_fib)->check(CLI::Range(1, 59));
  add_output_flags(ms, ms_out);
  ms->callback([&] {
    Rat from = parse_rat(ms_from), to = parse_rat(ms_to), step = parse_rat(ms_step);
    if (step <= 0 || from < 1 || to < from) fail(Errc::InvalidArgs, "need 1 <= from <= to and step > 0");
    MuTable table = build_mu_table(ms_fib);
    std::cout << "t,mu,known,row,sqrt_t\n";
    for (Rat t = from; t <= to; t += step) {
      auto v = mu_eval(table, QuadNum(t));
      auto rt = qn_sqrt(QuadNum(t));
      std::cout << rat_str(t) << "," << (v ? v->value.to_decimal(30) : "") << "," << (v ? 1 : 0) << ","
                << (v ? v->row->label : "") << "," << rt->to_decimal(30) << "\n";
    }
  });

  // --- interp ----------------------------------------------------------
  OutputOpts ip_out;
  int ip_n = 5;
  std::string ip_mult = "1^5", ip_config = "general";
  long long ip_degree = 2;
  std::uint64_t ip_prime = 1000003, ip_seed = 0;
  int ip_curve_degree = 4;
  auto* ip = app.add_subcommand("interp", "Dimension of a fat-point linear system over F_p");
  ip->add_option("--n", ip_n)->required();
  ip->add_option("--mult", ip_mult, "Multiplicities, e.g. \"2^5\" or \"3,2,1\"")->required();
  ip->add_option("--degree", ip_degree)->required();
  ip->add_option("--prime", ip_prime);
  ip->add_option("--seed", ip_seed);
  ip->add_option("--config", ip_config)->check(CLI::IsMember({"general", "online", "onconic", "oncubic", "oncurve"}));
  ip->add_option("--curve-degree", ip_curve_degree, "Degree for --config oncurve");
  add_output_flags(ip, ip_out);
  ip->callback([&] {
    auto mult = parse_mult_vector(ip_mult);
    if (static_cast<int>(mult.size()) != ip_n)
      fail(Errc::DimensionMismatch, "--mult has " + std::to_string(mult.size()) + " entries for n = " +
                                        std::to_string(ip_n));
    PointConfig cfg = make_point_config(parse_config_kind(ip_config), ip_n, ip_prime, ip_seed, ip_curve_degree);
    InterpProblem pr{cfg, ip_degree, mult};
    DimensionResult r = dimension(pr);
    long long exp = expected_dimension(ip_degree, mult);
    json j{{"n", ip_n},
           {"degree", ip_degree},
           {"mult", ip_mult},
           {"prime", ip_prime},
           {"seed", ip_seed},
           {"config", ip_config},
           {"vdim", r.vdim},
           {"projdim", r.projdim},
           {"expected", exp},
           {"special", r.projdim != exp}};
    if (ip_out.format == "json") {
      emit(j, ip_out);
      return;
    }
    std::cout << "vdim " << r.vdim << ", projdim " << r.projdim << ", expected " << exp
              << (r.projdim != exp ? "  SPECIAL" : "") << "\n";
  });

  // --- alpha -----------------------------------------------------------
  OutputOpts al_out;
  int al_n = 5;
  std::string al_mult = "1^5", al_config = "general";
  long long al_dmax = 100;
  std::uint64_t al_prime = 1000003, al_seed = 0;
  int al_curve_degree = 4;
  auto* al = app.add_subcommand("alpha", "Least degree with a nonzero form through the fat points");
  al->add_option("--n", al_n)->required();
  al->add_option("--mult", al_mult)->required();
  al->add_option("--dmax", al_dmax);
  al->add_option("--prime", al_prime);
  al->add_option("--seed", al_seed);
  al->add_option("--config", al_config)->check(CLI::IsMember({"general", "online", "onconic", "oncubic", "oncurve"}));
  al->add_option("--curve-degree", al_curve_degree);
  add_output_flags(al, al_out);
  al->callback([&] {
    auto mult = parse_mult_vector(al_mult);
    if (static_cast<int>(mult.size()) != al_n) fail(Errc::DimensionMismatch, "--mult size mismatch");
    PointConfig cfg = make_point_config(parse_config_kind(al_config), al_n, al_prime, al_seed, al_curve_degree);
    auto a = alpha(cfg, mult, al_dmax);
    json j = a ? json{{"alpha", *a}} : json{{"not_found_below", al_dmax}};
    if (al_out.format == "json") {
      emit(j, al_out);
      return;
    }
    if (a)
      std::cout << "alpha = " << *a << "\n";
    else
      std::cout << "no nonzero form below degree " << al_dmax << "\n";
  });

  // --- seshadri --------------------------------------------------------
  OutputOpts se_out;
  long long se_n = 10;
  auto* se = app.add_subcommand("seshadri", "Upper bound 1/sqrt(n) for the Seshadri constant");
  se->add_option("--n", se_n)->required();
  add_output_flags(se, se_out);
  se->callback([&] {
    QuadNum b = seshadri_upper_bound(se_n);
    if (se_out.format == "json") {
      json j{{"n", se_n}, {"upper_bound", b.to_string()}};
      if (se_out.decimals > 0) j["decimal"] = b.to_decimal(se_out.decimals);
      emit(j, se_out);
      return;
    }
    std::cout << "epsilon <= " << qn_out(b, se_out) << "\n";
  });

  // --- compare-roundoff -------------------------------------------------
  OutputOpts cr_out;
  std::string cr_t = "3/2";
  long long cr_m = 1;
  auto* cr = app.add_subcommand(
      "compare-roundoff", "Compare the unloading divisor D_m with m*D_v and its strict-basis round-down");
  cr->add_option("--t", cr_t)->required();
  cr->add_option("--m", cr_m)->required();
  add_output_flags(cr, cr_out);
  cr->callback([&] {
    auto c = cluster_from_cf(parse_rat(cr_t), Normalization::UnitLast);
    ContractedDivisor start;
    start.mbar.assign(c.s, Rat(0));
    start.mbar.back() = cr_m;
    ContractedDivisor dm = unload(c, start).divisor;
    ContractedDivisor dv = valuation_divisor(c);
    std::vector<Rat> mdv_total(c.s), dm_total(c.s);
    for (int i = 0; i < c.s; ++i) {
      mdv_total[i] = -Rat(cr_m) * dv.mbar[i];
      dm_total[i] = -dm.mbar[i];
    }
    auto mdv_strict = strict_coeffs_from_total(c, mdv_total);
    auto dm_strict = strict_coeffs_from_total(c, dm_total);
    std::vector<Rat> floor_strict(c.s), diff_total(c.s), diff_strict(c.s);
    for (int i = 0; i < c.s; ++i) {
      floor_strict[i] = Rat(rat_floor(mdv_strict[i]));
      diff_total[i] = mdv_total[i] - dm_total[i];
      diff_strict[i] = mdv_strict[i] - dm_strict[i];
    }
    auto floor_total = total_coeffs_from_strict(c, floor_strict);
    ContractedDivisor floor_div;
    for (const auto& e : floor_total) floor_div.mbar.push_back(-e);
    json j{{"t", rat_str(c.t)},
           {"m", cr_m},
           {"D_m", json{{"total", rat_vec_json(dm_total)}, {"strict", rat_vec_json(dm_strict)}}},
           {"m_Dv", json{{"total", rat_vec_json(mdv_total)}, {"strict", rat_vec_json(mdv_strict)}}},
           {"floor_m_Dv", json{{"total", rat_vec_json(floor_total)}, {"strict", rat_vec_json(floor_strict)}}},
           {"m_Dv_minus_D_m", json{{"total", rat_vec_json(diff_total)}, {"strict", rat_vec_json(diff_strict)}}},
           {"floor_relatively_nef", relatively_nef(c, floor_div)},
           {"floor_equals_D_m", floor_total == dm_total}};
    if (cr_out.format == "json") {
      emit(j, cr_out);
      return;
    }
    std::cout << j.dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const planeval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
