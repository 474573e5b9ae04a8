#include "gerbeflow/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "gerbeflow/deligne.hpp"
#include "gerbeflow/errors.hpp"
#include "gerbeflow/permutation.hpp"
#include "gerbeflow/sampling.hpp"

namespace gerbeflow {

namespace {

int sgn(int e) { return (e & 1) ? -1 : 1; }

Json encode(int v) { return v; }
template <class T>
Json encode(const T& x) {
  return to_json(x);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

// Records checks for one trial. Inputs are serialized only when a check fails.
struct Trial {
  int index;
  Report& report;

  template <class T, class Inputs>
  bool eq(const std::string& check, const T& lhs, const T& rhs, Inputs&& inputs) {
    count(check);
    if constexpr (requires { lhs.is_zero(); })
      if (!lhs.is_zero() || !rhs.is_zero()) ++report.nonzero_counts[check];
    if (lhs == rhs) return true;
    report.failures.push_back({index, check, false, inputs(), encode(lhs), encode(rhs)});
    return false;
  }

  template <class T, class Inputs>
  bool zero(const std::string& check, const T& value, Inputs&& inputs) {
    return eq(check, value, T(value.chart()), std::forward<Inputs>(inputs));
  }

  void count(const std::string& check) {
    ++report.checks;
    ++report.check_counts[check];
  }

  void expected_negative(const std::string& check, Json inputs, Json lhs, Json rhs) {
    report.failures.push_back({index, check, true, std::move(inputs), std::move(lhs), std::move(rhs)});
  }
};

Json list(const std::vector<MultiVector>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(to_json(x));
  return j;
}

std::vector<MultiVector> random_tuple(Rng& rng, const Chart& c, int arity, int max_mv, int max_deg, int max_terms = 2,
                                      int min_mv = 0) {
  std::vector<MultiVector> out;
  for (int i = 0; i < arity; ++i)
    out.push_back(random_multivector(rng, c, rng.uniform(std::min(min_mv, max_mv), max_mv), max_deg, max_terms));
  return out;
}

// Phi kills functions, so most tuples avoid degree 0 to keep comparisons non-vacuous.
int min_degree(Rng& rng) { return rng.uniform(0, 3) == 0 ? 0 : 1; }

Permutation random_permutation(Rng& rng, int m) {
  std::vector<int> v = Permutation::identity(m).images();
  for (int i = m - 1; i > 0; --i) std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.uniform(0, i))]);
  return Permutation(std::move(v));
}

void bump(Json& counter, const std::string& key) {
  if (!counter.is_object()) counter = Json::object();
  counter[key] = counter.value(key, 0) + 1;
}

Poly h_poly(const Chart& c) { return Poly::h_power(1, c.num_vars, c.ring); }

int mv_cap(const SuiteConfig& cfg) { return std::min(cfg.mv_deg, cfg.dim); }
int form_cap(const SuiteConfig& cfg) { return std::min(3, cfg.dim); }

using SuiteFn = std::function<void(const SuiteConfig&, Rng&, Trial&)>;

void suite_schouten(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const Chart c{cfg.dim, ArtinRing{}};
  const int M = mv_cap(cfg), D = cfg.max_deg;
  int p = rng.uniform(0, M), q = rng.uniform(0, M), r = rng.uniform(0, M);
  auto P = random_multivector(rng, c, p, D), Q = random_multivector(rng, c, q, D), R = random_multivector(rng, c, r, D);
  auto in = [&] { return Json{{"P", to_json(P)}, {"Q", to_json(Q)}, {"R", to_json(R)}}; };
  tr.eq("antisymmetry", schouten(P, Q), -schouten(Q, P) * Rational(sgn((p - 1) * (q - 1))), in);
  tr.eq("jacobi", schouten(P, schouten(Q, R)),
        schouten(schouten(P, Q), R) + schouten(Q, schouten(P, R)) * Rational(sgn((p - 1) * (q - 1))), in);
  tr.eq("leibniz", schouten(P, mv_wedge(Q, R)), mv_wedge(schouten(P, Q), R) + mv_wedge(Q, schouten(P, R)) * Rational(sgn((p - 1) * q)), in);

  // The three-sum formula on decomposables with non-coordinate factors.
  int k = rng.uniform(0, std::min(2, M)), l = rng.uniform(0, std::min(2, M));
  std::vector<MultiVector> xs, ys;
  for (int i = 0; i < k; ++i) xs.push_back(random_multivector(rng, c, 1, std::min(D, 1)));
  for (int j = 0; j < l; ++j) ys.push_back(random_multivector(rng, c, 1, std::min(D, 1)));
  Poly f = random_poly(rng, c.num_vars, D, c.ring), g = random_poly(rng, c.num_vars, D, c.ring);
  tr.eq("decomposable", schouten_decomposable(f, xs, g, ys), schouten(wedge_all(c, xs).times(f), wedge_all(c, ys).times(g)),
        [&] { return Json{{"f", to_json(f)}, {"X", list(xs)}, {"g", to_json(g)}, {"Y", list(ys)}}; });
}

void suite_phi_dgla(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const Chart c{cfg.dim, ArtinRing{}};
  const int M = mv_cap(cfg), D = cfg.max_deg, K = form_cap(cfg);

  int k = rng.uniform(0, K);
  DiffForm omega = random_form(rng, c, k, D);
  Cochain lhs = ce_differential(phi_component(omega, k));
  Cochain rhs = phi_component(de_rham_d(omega), k + 1);
  for (int j = 0; j < cfg.tuples; ++j) {
    auto args = random_tuple(rng, c, k + 1, M, D, 2, min_degree(rng));
    tr.eq("chain_map", lhs(args), rhs(args), [&] { return Json{{"omega", to_json(omega)}, {"args", list(args)}}; });
  }
  if (cfg.span_deg >= 0 && k + 1 <= 2) {
    tr.count("chain_map_span");
    if (auto bad = agree_on_span(lhs, rhs, cfg.span_deg, M))
      tr.report.failures.push_back({tr.index, "chain_map_span", false, Json{{"omega", to_json(omega)}, {"args", list(bad->args)}},
                                    to_json(bad->lhs), to_json(bad->rhs)});
  }

  int a = rng.uniform(1, K), b = rng.uniform(1, K);
  DiffForm alpha = random_form(rng, c, a, D), beta = random_form(rng, c, b, D);
  Cochain br = ce_bracket(phi_component(alpha, a), phi_component(beta, b));
  for (int j = 0; j < cfg.tuples; ++j) {
    auto args = random_tuple(rng, c, a + b - 1, M, std::min(D, 1), 1, min_degree(rng));
    tr.zero("abelian_image", br(args), [&] { return Json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"args", list(args)}}; });
    // Both composites are usually nonzero; only their graded commutator vanishes.
    if (!ce_compose(phi_component(alpha, a), phi_component(beta, b))(args).is_zero()) ++tr.report.nonzero_counts["abelian_image"];
  }
}

void suite_phixy(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const Chart c{cfg.dim, ArtinRing{}};
  const int D = cfg.max_deg;
  auto w = random_form(rng, c, 1, D);
  auto x = random_multivector(rng, c, 1, D), y = random_multivector(rng, c, 1, D);
  MultiVector lhs = -contract(w, schouten(x, y)) + schouten(contract(w, x), y) + schouten(x, contract(w, y));
  tr.eq("phixy", lhs, phi_component(de_rham_d(w), 2)({x, y}),
        [&] { return Json{{"omega", to_json(w)}, {"X", to_json(x)}, {"Y", to_json(y)}}; });
}

DiffForm closed_three_form(Rng& rng, const Chart& c, bool constant) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    DiffForm H = constant ? random_form(rng, c, 3, 0) : de_rham_d(random_form(rng, c, 2, 2));
    if (!H.is_zero()) return H;
  }
  return DiffForm::basis(c, {0, 1, 2});
}

void suite_linfty(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const Chart c{cfg.dim, ArtinRing{}};
  const int M = mv_cap(cfg), D = cfg.max_deg;
  if (cfg.negative_control) {
    DiffForm H(c);
    while (de_rham_d(H).is_zero()) H = random_form(rng, c, 3, std::max(1, D));
    auto L = TwistedLInfty::make_unchecked(H);
    Cochain defect = jacobi_defect_4(L), oracle = phi_component(de_rham_d(H), 4);
    for (int j = 0; j <= cfg.tuples; ++j) {
      std::vector<MultiVector> args;
      if (j == 0)
        for (int i = 0; i < 4; ++i) args.push_back(MultiVector::basis(c, {i}));
      else
        args = random_tuple(rng, c, 4, std::min(M, 2), std::min(D, 1));
      MultiVector value = defect(args);
      auto in = [&] { return Json{{"H", to_json(H)}, {"args", list(args)}}; };
      tr.eq("defect_equals_phi_dH", value, oracle(args), in);
      if (!value.is_zero()) tr.expected_negative("jacobi_defect_4", in(), to_json(value), to_json(MultiVector(c)));
    }
    return;
  }
  const bool constant = tr.index % 2 == 0;
  DiffForm H = closed_three_form(rng, c, constant);
  auto L = TwistedLInfty::make(H);
  Cochain d4 = jacobi_defect_4(L), d5 = jacobi_defect_5(L);
  for (int j = 0; j < cfg.tuples; ++j) {
    auto a4 = random_tuple(rng, c, 4, M, std::min(D, 2), 2, min_degree(rng));
    tr.zero("jacobi_defect_4", d4(a4), [&] { return Json{{"H", to_json(H)}, {"args", list(a4)}}; });
    auto a5 = random_tuple(rng, c, 5, M, std::min(D, 1), 1, min_degree(rng));
    tr.zero("jacobi_defect_5", d5(a5), [&] { return Json{{"H", to_json(H)}, {"args", list(a5)}}; });
  }
}

void suite_mc(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const int N = cfg.order;
  const Chart c{cfg.dim, ArtinRing(N)};
  const Poly h = h_poly(c);
  DiffForm H(c);
  int kind = tr.index % 3;
  if (c.num_vars >= 3 && kind > 0) H = closed_three_form(rng, c, kind == 1);
  auto L = TwistedLInfty::make(H);
  MultiVector pi1(c);
  while (pi1.is_zero()) pi1 = random_multivector(rng, c, 2, std::min(cfg.max_deg, 1));
  auto in = [&] { return Json{{"H", to_json(H)}, {"pi1", to_json(pi1)}, {"ring", to_json(c.ring)}}; };

  MultiVector naive = mc_residual(L, pi1.times(h));
  if (N > 2) tr.eq("naive_h2", naive.h_coefficient(2), schouten(pi1, pi1), in);
  if (N > 3) tr.eq("naive_h3", naive.h_coefficient(3), -L.l3()({pi1, pi1, pi1}), in);

  auto r = mc_solve(L, pi1, N);
  if (r.solved) {
    bump(tr.report.measurements["mc_status"], "solved");
    tr.zero("solution_residual", h_truncated(mc_residual(L, r.pi), N), in);
    tr.eq("solution_leading_term", h_truncated(r.pi, 2), pi1.times(h), in);
    if (H.is_zero()) {
      MultiVector lambda = random_multivector(rng, c, 1, cfg.max_deg).times(h);
      MCElement moved = gauge_apply_untwisted(L, lambda, MCElement(r.pi));
      tr.zero("gauge_preserves_mc", h_truncated(mc_residual(L, moved), N),
              [&] { return Json{{"pi", to_json(r.pi)}, {"lambda", to_json(lambda)}}; });
    }
  } else {
    bump(tr.report.measurements["mc_status"], "obstructed");
    tr.count("obstruction_report");
    if (r.order < 2 || r.order >= N || r.residual.is_zero() || r.residual.h_valuation() != r.order)
      tr.report.failures.push_back({tr.index, "obstruction_report", false, in(), to_json(r.residual), Json(r.order)});
  }
}

void suite_hochschild(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const int n = cfg.dim, D = cfg.max_deg;
  const ArtinRing R{};
  const Chart c{n, R};
  int p = rng.uniform(0, 3), q = rng.uniform(0, 3), r = rng.uniform(0, 3);
  auto Dop = random_mdo(rng, n, p, 2, D, R), E = random_mdo(rng, n, q, 2, D, R), F = random_mdo(rng, n, r, 2, std::min(D, 1), R);
  Poly a = random_poly(rng, n, D, R);
  auto in = [&] { return Json{{"D", to_json(Dop)}, {"E", to_json(E)}, {"F", to_json(F)}, {"a", to_json(a)}}; };
  const MultiDiffOp zero(n, R, 0);
  auto br = [](const MultiDiffOp& x, const MultiDiffOp& y) { return gerstenhaber_bracket(x, y); };

  tr.eq("delta_squared", hochschild_delta(hochschild_delta(Dop)), zero, in);
  tr.eq("antisymmetry", br(Dop, E), br(E, Dop) * Rational(-sgn((p - 1) * (q - 1))), in);
  tr.eq("jacobi", br(Dop, br(E, F)), br(br(Dop, E), F) + br(E, br(Dop, F)) * Rational(sgn((p - 1) * (q - 1))), in);
  tr.eq("delta_derivation", hochschild_delta(br(Dop, E)),
        br(hochschild_delta(Dop), E) + br(Dop, hochschild_delta(E)) * Rational(sgn(p - 1)), in);
  if (p >= 1) {
    tr.eq("i_a_anticommutes_delta", hochschild_delta(i_a_cochain(a, Dop)) + i_a_cochain(a, hochschild_delta(Dop)), zero, in);
    if (q >= 1)
      tr.eq("i_a_derivation", i_a_cochain(a, br(Dop, E)), br(i_a_cochain(a, Dop), E) + br(Dop, i_a_cochain(a, E)) * Rational(sgn(p - 1)), in);
  }
  auto pi = random_multivector(rng, c, rng.uniform(0, mv_cap(cfg)), D);
  tr.eq("hkr_closed", hochschild_delta(hkr(pi)), zero, [&] { return Json{{"pi", to_json(pi)}}; });
}

void suite_symmetry(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const int n = cfg.dim, D = cfg.max_deg, M = mv_cap(cfg);
  const ArtinRing R{};
  const Chart c{n, R};

  int k = rng.uniform(1, form_cap(cfg));
  DiffForm omega = random_form(rng, c, k, D);
  std::vector<Cochain> cochains{phi_component(omega, k), ce_differential(phi_component(omega, k))};
  for (const auto& co : cochains) {
    auto args = random_tuple(rng, c, co.arity(), M, std::min(D, 1), 2, min_degree(rng));
    MultiVector base = co(args);
    for (int i = 0; i + 1 < co.arity(); ++i) {
      auto swapped = args;
      std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
      int s = sgn(args[static_cast<std::size_t>(i)].degree() * args[static_cast<std::size_t>(i + 1)].degree());
      tr.eq("epsilon_rule", co(swapped), base * Rational(s), [&] { return Json{{"omega", to_json(omega)}, {"cochain", co.tag()}, {"args", list(args)}}; });
    }
  }

  int m = rng.uniform(1, 5);
  Permutation sigma = random_permutation(rng, m), tau = random_permutation(rng, m);
  std::vector<int> degs;
  for (int i = 0; i < m; ++i) degs.push_back(rng.uniform(0, 3));
  tr.eq("koszul_homomorphism", koszul_sign(tau * sigma, degs), koszul_sign(sigma, permute_degrees(tau, degs)) * koszul_sign(tau, degs),
        [&] { return Json{{"sigma", sigma.images()}, {"tau", tau.images()}, {"degrees", degs}}; });

  int p = rng.uniform(1, 2), q = rng.uniform(1, 2);
  auto Dop = random_mdo(rng, n, p, 2, std::min(D, 1), R), E = random_mdo(rng, n, q, 2, std::min(D, 1), R);
  Poly a = random_poly(rng, n, D, R);
  auto A = MultiDiffOp::element(a);
  auto in = [&] { return Json{{"D", to_json(Dop)}, {"E", to_json(E)}, {"a", to_json(a)}}; };
  tr.eq("i_a_displayed_is_right_adjoint", i_a_displayed(a, Dop), gerstenhaber_bracket(Dop, A), in);
  tr.eq("i_a_cochain_is_left_adjoint", i_a_cochain(a, Dop), gerstenhaber_bracket(A, Dop), in);
  tr.eq("i_a_displayed_cup", i_a_displayed(a, cup(Dop, E)), cup(i_a_displayed(a, Dop), E) + cup(Dop, i_a_displayed(a, E)) * Rational(sgn(p)), in);
  tr.eq("i_a_cochain_cup", i_a_cochain(a, cup(Dop, E)), cup(i_a_cochain(a, Dop), E) * Rational(sgn(q)) + cup(Dop, i_a_cochain(a, E)), in);
}

void suite_hkr(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const int n = cfg.dim, D = cfg.max_deg;
  const ArtinRing R{};
  const Chart c{n, R};
  int k = rng.uniform(0, mv_cap(cfg));
  auto pi = random_multivector(rng, c, k, D);
  auto in = [&] { return Json{{"pi", to_json(pi)}}; };
  auto H = hkr(pi);
  tr.eq("hkr_closed", hochschild_delta(H), MultiDiffOp(n, R, 0), in);
  std::vector<Poly> args;
  for (int i = 0; i < k; ++i) args.push_back(random_poly(rng, n, D + 1, R));
  if (k == 1) tr.eq("hkr_vector_field", mdo_eval(H, args), apply_vector_field(pi, args[0]), in);
  for (int i = 0; i + 1 < k; ++i) {
    auto swapped = args;
    std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
    tr.eq("hkr_alternating", mdo_eval(H, swapped), -mdo_eval(H, args), in);
  }
  // Measured, not asserted: how i_a on cochains compares with contraction by da.
  if (k == 0) return;
  Poly a = random_poly(rng, n, D, R);
  auto cmp = compare_hkr_ia(a, pi);
  std::string key = cmp.both_zero ? "both_zero" : cmp.ratio ? rational_to_string(*cmp.ratio) : "not_proportional";
  bump(tr.report.measurements["i_a_hkr_ratio"]["degree_" + std::to_string(k)], key);
}

void suite_deligne(const SuiteConfig& cfg, Rng& rng, Trial& tr) {
  const Chart c{cfg.dim, ArtinRing(cfg.order)};
  const Poly h = h_poly(c);
  const int D = cfg.max_deg;
  MultiVector pi0 = MultiVector::basis(c, {0, 1});
  if (c.num_vars >= 3) pi0 += MultiVector::basis(c, {1, 2});
  const bool twisted = tr.index % 2 == 1;
  NilpotentDGLA g = twisted ? NilpotentDGLA::schouten_twisted_by(pi0) : NilpotentDGLA::schouten(c);
  auto gauge_elt = [&] { return random_multivector(rng, c, 1, D).times(h); };

  // Constant bivectors are MC for both differentials; moving them by a gauge
  // gives MC elements with polynomial coefficients.
  MultiVector gamma0 = twisted ? pi0.times(h) * rng.coefficient() : random_multivector(rng, c, 2, 0).times(h);
  MultiVector lambda = gauge_elt();
  MultiVector gamma = gauge_action(g, lambda, gamma0);
  MultiVector a = gauge_elt(), b = gauge_elt(), e = gauge_elt();
  auto in = [&] {
    return Json{{"dgla", g.name()}, {"gamma", to_json(gamma)}, {"a", to_json(a)}, {"b", to_json(b)}, {"e", to_json(e)}};
  };
  tr.zero("seed_is_mc", is_mc(g, gamma0), in);
  tr.zero("gauge_preserves_mc", is_mc(g, gamma), in);
  tr.zero("gauge_preserves_mc_again", is_mc(g, gauge_action(g, a, gamma)), in);
  tr.eq("action_law", gauge_action(g, bch(g, a, b), gamma), gauge_action(g, a, gauge_action(g, b, gamma)), in);
  tr.eq("bch_associative", bch(g, a, bch(g, b, e)), bch(g, bch(g, a, b), e), in);
  tr.eq("bch_inverse", bch(g, a, bch_inverse(a)), MultiVector(c), in);
  tr.eq("two_cell_identity", two_cell_target(g, a, MultiVector(c), gamma), a, in);
}

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"schouten", suite_schouten}, {"phi-dgla", suite_phi_dgla}, {"phixy", suite_phixy},
      {"linfty", suite_linfty},     {"mc", suite_mc},             {"hochschild", suite_hochschild},
      {"symmetry", suite_symmetry}, {"hkr", suite_hkr},           {"deligne", suite_deligne}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"schouten", "phi-dgla", "phixy", "linfty", "mc", "hochschild", "symmetry", "hkr", "deligne"};
  return names;
}

void SuiteConfig::validate() const {
  if (!registry().count(suite)) throw UsageError("unknown suite \"" + suite + "\"");
  if (dim < 1 || dim > kMaxVars) throw UsageError("--dim must be in [1, " + std::to_string(kMaxVars) + "]");
  if (trials < 1) throw UsageError("--trials must be at least 1");
  if (order < 1) throw UsageError("--order must be at least 1");
  if (max_deg < 0 || mv_deg < 0) throw UsageError("degree bounds must be non-negative");
  if (tuples < 1) throw UsageError("--tuples must be at least 1");
  if (span_deg < -1) throw UsageError("--span-deg must be -1 (off) or non-negative");
  if (suite == "linfty" && dim < (negative_control ? 4 : 3))
    throw UsageError(negative_control ? "the negative control needs --dim >= 4" : "the linfty suite needs --dim >= 3");
  if (suite == "mc" && order < 2) throw UsageError("the mc suite needs --order >= 2");
  if (suite == "deligne" && dim < 2) throw UsageError("the deligne suite needs --dim >= 2");
  if (negative_control && suite != "linfty") throw UsageError("--negative-control applies to the linfty suite only");
}

Json SuiteConfig::to_json() const {
  return {{"suite", suite},   {"dim", dim},           {"max_deg", max_deg}, {"mv_deg", mv_deg},
          {"trials", trials}, {"seed", seed},         {"order", order},     {"span_deg", span_deg},
          {"tuples", tuples}, {"negative_control", negative_control}};
}

long Report::expected_negative_count() const {
  return std::count_if(failures.begin(), failures.end(), [](const Failure& f) { return f.expected_negative; });
}

long Report::unexpected_failures(const std::string& check) const {
  return std::count_if(failures.begin(), failures.end(),
                       [&](const Failure& f) { return !f.expected_negative && f.check == check; });
}

Json Report::to_json(bool with_timing) const {
  Json fs = Json::array();
  for (const auto& f : failures)
    fs.push_back({{"trial", f.trial}, {"check", f.check}, {"expected_negative", f.expected_negative}, {"inputs", f.inputs},
                  {"lhs", f.lhs}, {"rhs", f.rhs}});
  Json j{{"command", command}, {"config", config}, {"trials", trials}, {"checks", checks}, {"check_counts", check_counts}, {"nonzero_counts", nonzero_counts}, {"failures", fs},
         {"expected_negative", expected_negative_count()}, {"measurements", measurements}, {"version", kVersion},
         {"rng", Rng::kName}};
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::to_text(bool with_timing) const {
  std::ostringstream os;
  os << command << ": " << trials << " trials, " << checks << " checks, " << failures.size() << " failures";
  if (long neg = expected_negative_count()) os << " (" << neg << " expected-negative)";
  if (with_timing) os << ", " << static_cast<long>(elapsed_ms) << " ms";
  os << "\nconfig: " << config.dump() << "\n";
  if (!measurements.empty()) os << "measurements: " << measurements.dump() << "\n";
  for (const auto& f : failures) {
    os << (f.expected_negative ? "EXPECTED " : "FAIL ") << "trial " << f.trial << " " << f.check << "\n"
       << "  inputs: " << f.inputs.dump() << "\n  lhs: " << f.lhs.dump() << "\n  rhs: " << f.rhs.dump() << "\n";
  }
  os << (failures.empty() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Report run_suite(const SuiteConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = "suite " + config.suite;
  report.config = config.to_json();
  const SuiteFn& fn = registry().at(config.suite);
  for (int t = 0; t < config.trials; ++t) {
    Rng rng(trial_seed(config.seed, t));
    Trial trial{t, report};
    fn(config, rng, trial);
    ++report.trials;
  }
  std::stable_sort(report.failures.begin(), report.failures.end(), [](const Failure& a, const Failure& b) { return a.trial < b.trial; });
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

McJobResult mc_job(const Json& problem, McMode mode) {
  const auto start = std::chrono::steady_clock::now();
  MCProblem pr = mc_problem_from_json(problem);
  const int N = pr.max_order;
  if (N < 1 || N > pr.ring.order()) throw UsageError("maxOrder must lie in [1, ring order]");
  auto L = TwistedLInfty::make(pr.H);

  McJobResult out;
  Report& rep = out.report;
  rep.command = mode == McMode::Solve ? "mc solve" : "mc check";
  rep.config = problem;
  rep.trials = 1;
  Trial tr{0, rep};

  if (mode == McMode::Solve) {
    auto r = mc_solve(L, pr.pi1, N);
    out.output = to_json(r);
    if (r.solved) {
      // Independent recomputation of the residual of the returned element.
      tr.zero("solution_residual", h_truncated(mc_residual(L, r.pi), N), [&] { return to_json(pr); });
    } else {
      tr.count("mc_obstruction");
      rep.failures.push_back({0, "mc_obstruction", false, to_json(pr), to_json(r.residual), Json(r.order)});
      out.exit_code = 3;
    }
  } else {
    MultiVector pi = problem.contains("pi") ? multivector_from_json(problem["pi"], pr.ring)
                                            : pr.pi1.times(Poly::h_power(1, pr.pi1.num_vars(), pr.ring));
    MultiVector res = h_truncated(mc_residual(L, MCElement(pi)), N);
    const bool ok = res.is_zero();
    out.output = {{"status", ok ? "solved" : "obstructed"}, {"order", ok ? N : res.h_valuation()}, {"pi", to_json(pi)}, {"residual", to_json(res)}};
    tr.count("mc_residual");
    if (!ok) {
      rep.failures.push_back({0, "mc_residual", false, to_json(pr), to_json(res), to_json(MultiVector(res.chart()))});
      out.exit_code = 3;
    }
  }
  if (out.exit_code == 0 && !rep.failures.empty()) out.exit_code = 1;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace gerbeflow
