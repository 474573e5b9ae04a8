// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gerbeflow/permutation.hpp"
#include "gerbeflow/sampling.hpp"
#include "gerbeflow/suites.hpp"

using namespace gerbeflow;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

SuiteConfig cfg(const std::string& suite, int trials, int dim = 3, std::uint64_t seed = 20240601) {
  SuiteConfig c;
  c.suite = suite;
  c.trials = trials;
  c.dim = dim;
  c.seed = seed;
  return c;
}

long count(const Report& r, const std::string& check) {
  auto it = r.check_counts.find(check);
  return it == r.check_counts.end() ? 0 : it->second;
}

long nonzero(const Report& r, const std::string& check) {
  auto it = r.nonzero_counts.find(check);
  return it == r.nonzero_counts.end() ? 0 : it->second;
}

// All named checks ran at least `min` times with no unexpected failure.
Outcome require(const Report& r, const std::vector<std::string>& checks, long min, std::ostringstream& os) {
  Outcome o;
  for (const auto& c : checks) {
    long n = count(r, c), bad = r.unexpected_failures(c);
    os << c << "=" << n << (bad ? " (" + std::to_string(bad) + " failed)" : "") << " ";
    if (n < min || bad) o.pass = false;
  }
  return o;
}

Outcome finish(Outcome o, std::ostringstream& os) {
  o.detail = os.str();
  return o;
}

Report phi_dgla_report() {
  static const Report r = [] {
    auto c = cfg("phi-dgla", 100);
    c.max_deg = 2;
    c.mv_deg = 3;
    c.tuples = 5;
    return run_suite(c);
  }();
  return r;
}

Outcome criterion1() {
  std::ostringstream os;
  const Report r = phi_dgla_report();
  Outcome o = require(r, {"chain_map"}, 100, os);
  os << "trials=" << r.trials << " nonzero_sides=" << nonzero(r, "chain_map");
  return finish(o, os);
}

Outcome criterion2() {
  std::ostringstream os;
  const Report r = phi_dgla_report();
  Outcome o = require(r, {"abelian_image"}, 100, os);
  os << "pairs=" << r.trials << " nonzero_single_composites=" << nonzero(r, "abelian_image");
  return finish(o, os);
}

Outcome criterion3() {
  std::ostringstream os;
  const Report r = run_suite(cfg("phixy", 100));
  Outcome o = require(r, {"phixy"}, 100, os);
  os << "nonzero_sides=" << nonzero(r, "phixy");
  return finish(o, os);
}

Outcome criterion4() {
  std::ostringstream os;
  Outcome o;
  // Even trials draw constant H, odd trials exact H with linear coefficients.
  for (int n : {3, 4}) {
    auto c = cfg("linfty", 10, n);
    c.tuples = 50;
    const Report r = run_suite(c);
    os << "n=" << n << ": H=" << r.trials << " ";
    Outcome part = require(r, {"jacobi_defect_4", "jacobi_defect_5"}, 50L * r.trials, os);
    o.pass = o.pass && part.pass && r.trials == 10;
  }
  auto neg = cfg("linfty", 5, 4);
  neg.negative_control = true;
  const Report r = run_suite(neg);
  os << "negative control: ";
  Outcome part = require(r, {"defect_equals_phi_dH"}, 5, os);
  os << "nonzero_defects=" << r.expected_negative_count();
  o.pass = o.pass && part.pass && r.expected_negative_count() >= 1;
  return finish(o, os);
}

Outcome criterion5() {
  std::ostringstream os;
  Outcome o;
  Chart c{3, ArtinRing(4)};
  const MultiVector pi1 = MultiVector::basis(c, {0, 1});
  const DiffForm H = DiffForm::basis(c, {0, 1, 2});
  // Through the JSON job interface, then recomputed independently.
  auto job = mc_job(to_json(MCProblem{c.ring, H, pi1, 4}), McMode::Solve);
  auto L = TwistedLInfty::make(H);
  MultiVector pi = multivector_from_json(job.output["pi"], c.ring);
  bool solved = job.output["status"] == "solved" && job.exit_code == 0;
  bool zero_residual = h_truncated(mc_residual(L, MCElement(pi)), 4).is_zero();
  MultiVector naive = mc_residual(L, pi1.times(Poly::h_power(1, 3, c.ring)));
  MultiVector cubic = L.l3()({pi1, pi1, pi1});
  bool predicted = naive.h_coefficient(3) == -cubic;
  os << "status=" << job.output["status"].get<std::string>() << " residual_mod_h4_zero=" << zero_residual
     << " naive_h3_matches=" << predicted << " cubic_term_zero=" << cubic.is_zero();
  o.pass = solved && zero_residual && predicted;

  // In three dimensions a bivector has rank <= 2, so the cubic term vanishes
  // identically; a four-dimensional instance exercises it for real.
  Chart c4{4, ArtinRing(4)};
  const MultiVector q1 = MultiVector::basis(c4, {0, 1}) + MultiVector::basis(c4, {2, 3});
  auto L4 = TwistedLInfty::make(DiffForm::basis(c4, {0, 1, 2}));
  MultiVector cubic4 = L4.l3()({q1, q1, q1});
  MultiVector naive4 = mc_residual(L4, q1.times(Poly::h_power(1, 4, c4.ring)));
  auto r4 = mc_solve(L4, q1, 4);
  bool ok4 = !cubic4.is_zero() && naive4.h_coefficient(3) == -cubic4 && r4.solved &&
             h_truncated(mc_residual(L4, MCElement(r4.pi)), 4).is_zero() && !r4.pi.h_coefficient(2).is_zero();
  os << " | n=4 control (dx^dy^dz, dx^dy+dz^dw): cubic_nonzero=" << !cubic4.is_zero() << " solved_with_h2_correction=" << ok4;
  o.pass = o.pass && ok4;

  auto suite = cfg("mc", 50, 4);
  const Report rs = run_suite(suite);
  os << " | mc suite n=4: ";
  Outcome part = require(rs, {"naive_h3", "solution_residual"}, 1, os);
  os << "naive_h3_nonzero=" << nonzero(rs, "naive_h3");
  o.pass = o.pass && part.pass && rs.failures.empty();
  return finish(o, os);
}

Outcome criterion6() {
  std::ostringstream os;
  auto c = cfg("hochschild", 250);
  c.max_deg = 2;
  const Report r = run_suite(c);
  Outcome o = require(r,
                      {"delta_squared", "antisymmetry", "jacobi", "delta_derivation", "i_a_derivation",
                       "i_a_anticommutes_delta", "hkr_closed"},
                      100, os);
  os << "nonzero jacobi=" << nonzero(r, "jacobi") << " delta_derivation=" << nonzero(r, "delta_derivation");
  return finish(o, os);
}

Outcome criterion7() {
  std::ostringstream os;
  Outcome o;
  long gauge = 0;
  for (int N = 2; N <= 4; ++N) {
    auto c = cfg("deligne", 30);
    c.order = N;
    const Report r = run_suite(c);
    os << "N=" << N << ": ";
    Outcome part = require(r, {"gauge_preserves_mc", "action_law", "bch_associative"}, 30, os);
    o.pass = o.pass && part.pass && r.failures.empty();
    gauge += count(r, "gauge_preserves_mc");
  }
  os << "gauge_instances=" << gauge;
  o.pass = o.pass && gauge >= 50;
  return finish(o, os);
}

Outcome criterion8() {
  std::ostringstream os;
  Outcome o;
  // Every pair in S_5 x S_5, one sampled degree vector per pair.
  Rng rng(8);
  const auto perms = Permutation::all(5);
  long cases = 0, bad = 0;
  for (const auto& sigma : perms)
    for (const auto& tau : perms) {
      std::vector<int> d;
      for (int i = 0; i < 5; ++i) d.push_back(rng.uniform(0, 3));
      ++cases;
      if (koszul_sign(tau * sigma, d) != koszul_sign(sigma, permute_degrees(tau, d)) * koszul_sign(tau, d)) ++bad;
    }
  os << "koszul cases=" << cases << " failed=" << bad;
  o.pass = bad == 0 && cases >= 500;

  // Insertion in closed form against evaluation, on every tuple of monomials
  // in two variables whose degrees sum to at most 4.
  const ArtinRing R{};
  const auto monos = multi_indices_up_to(2, 4);
  long tuples = 0, mismatches = 0;
  for (int t = 0; t < 30; ++t) {
    int p = rng.uniform(1, 3), q = rng.uniform(0, 2);
    auto D = random_mdo(rng, 2, p, 2, 2, R), E = random_mdo(rng, 2, q, 2, 2, R);
    const int total = p + q - 1;
    for (int i = 1; i <= p; ++i) {
      auto c = gerst_compose_i(D, E, i);
      std::vector<std::size_t> idx(static_cast<std::size_t>(total), 0);
      while (true) {
        int deg = 0;
        for (auto k : idx) deg += monos[k].total();
        if (deg <= 4) {
          std::vector<Poly> args;
          for (auto k : idx) args.push_back(Poly::monomial(monos[k], 1, 2, R));
          std::vector<Poly> outer(args.begin(), args.begin() + (i - 1));
          outer.push_back(mdo_eval(E, std::vector<Poly>(args.begin() + (i - 1), args.begin() + (i - 1 + q))));
          outer.insert(outer.end(), args.begin() + (i - 1 + q), args.end());
          ++tuples;
          if (!(mdo_eval(c, args) == mdo_eval(D, outer))) ++mismatches;
        }
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
          if (++idx[j] < monos.size()) break;
          idx[j] = 0;
        }
        if (j == idx.size()) break;
      }
    }
  }
  os << " | leibniz tuples=" << tuples << " mismatches=" << mismatches;
  o.pass = o.pass && mismatches == 0 && tuples > 0;
  return finish(o, os);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "chain map d Phi(w) = Phi(dw)", 60, criterion1},
      {2, "abelian image [Phi(a), Phi(b)] = 0", 60, criterion2},
      {3, "one-form identity on two vector fields", 30, criterion3},
      {4, "twisted L-infinity Jacobi defects and negative control", 120, criterion4},
      {5, "twisted Poisson Maurer-Cartan at N = 4", 30, criterion5},
      {6, "Hochschild and Gerstenhaber identities", 120, criterion6},
      {7, "Deligne gauge and BCH laws", 60, criterion7},
      {8, "exhaustive Koszul and Leibniz oracles", 60, criterion8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s [%.2f s of %.0f s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, c.budget_s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
