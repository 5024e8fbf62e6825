// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mdim/billingsley.hpp"
#include "mdim/estimate.hpp"
#include "mdim/experiment.hpp"
#include "mdim/genseq.hpp"
#include "mdim/info.hpp"
#include "mdim/kakutani.hpp"
#include "mdim/measures.hpp"
#include "oracle.hpp"

using namespace mdim;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const char* what, bool ok, const std::string& note = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what,
              note.empty() ? "" : " -- ", note.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExperimentConfig make_config(const json& j) {
  return ExperimentConfig::from_json(j);
}

std::pair<Pmf, Pmf> sample_condition(int cond, const CounterRng& rng,
                                     std::uint64_t& ctr) {
  auto u = [&] { return rng.uniform(ctr++); };
  double b10, b20;
  switch (cond) {
    case 1:
      b10 = 0.5 + 0.499 * u() + 1e-4;
      b20 = (1.0 - b10) * (u() * 0.999 + 5e-4);
      break;
    case 2:
      b10 = 0.5 - 0.499 * u() - 1e-4;
      b20 = 1.0 - b10 * (u() * 0.999 + 5e-4);
      break;
    case 3:
      b10 = 0.5 - 0.499 * u() - 1e-4;
      b20 = b10 * (u() * 0.999 + 5e-4);
      break;
    case 4:
      b10 = 0.5 + 0.499 * u() + 1e-4;
      b20 = b10 + (1.0 - b10) * (u() * 0.999 + 5e-4);
      break;
    default:
      b10 = 0.5;
      do {
        b20 = 0.001 + 0.998 * u();
      } while (std::abs(b20 - 0.5) < 1e-6);
      break;
  }
  return {Pmf({b10, 1.0 - b10}), Pmf({b20, 1.0 - b20})};
}

std::vector<long double> ld(const Eigen::VectorXd& v) {
  return std::vector<long double>(v.data(), v.data() + v.size());
}

Pmf random_pmf(int k, const CounterRng& rng, std::uint64_t& ctr,
               double floor = 1e-3) {
  Eigen::VectorXd v(k);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    v(i) = floor + rng.uniform(ctr++);
    sum += v(i);
  }
  return Pmf(v / sum);
}

// criterion 1: calculators agree with the long-double oracle at 1e-9 over
// >= 1000 random inputs, and the equivalence solver verifies at 1e-9
void criterion_1() {
  auto t0 = Clock::now();
  CounterRng rng(1001);
  std::uint64_t ctr = 0;
  bool ok = true;
  for (int trial = 0; trial < 1200 && ok; ++trial) {
    int k = 2 + int(rng.uniform(ctr++) * 7.0);
    Pmf p = random_pmf(k, rng, ctr);
    Pmf q = random_pmf(k, rng, ctr);
    ok = ok && std::abs(entropy(p) - oracle::entropy(ld(p.probs()))) < 1e-9;
    ok = ok && std::abs(kl_divergence(p, q) -
                        oracle::kl(ld(p.probs()), ld(q.probs()))) < 1e-9;
    ok = ok && std::abs(cross_entropy(p, q) -
                        oracle::cross_entropy(ld(p.probs()), ld(q.probs()))) < 1e-9;
    ok = ok && std::abs(hellinger(p, q) -
                        oracle::hellinger(ld(p.probs()), ld(q.probs()))) < 1e-9;

    Pmf flat = random_pmf(k * k, rng, ctr);
    Eigen::MatrixXd m(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m(a, b) = flat(a * k + b);
    JointPmf joint(m);
    ok = ok && std::abs(mutual_information(joint) -
                        oracle::mutual_information(ld(flat.probs()), k)) < 1e-9;
  }
  // mutual divergence formula against the oracle on the coupled family
  for (int g = 0; g <= 200 && ok; ++g) {
    double rho = -0.99 + 1.98 * double(g) / 200.0;
    JointPmf joint = rho_joint(rho);
    double expect =
        oracle::mutual_information(ld(joint.flatten().probs()), 2) / 1.0;
    ok = ok && std::abs(billingsley_mdim(joint, Pmf::uniform(2),
                                         Pmf::uniform(2)) -
                        expect) < 1e-9;
  }
  // solver output really is equivalent at 1e-9
  for (int cond = 1; cond <= 5 && ok; ++cond)
    for (int trial = 0; trial < 200 && ok; ++trial) {
      auto [b1, b2] = sample_condition(cond, rng, ctr);
      double a10 = rng.uniform(ctr++);
      Pmf a1({a10, 1.0 - a10});
      Pmf a2 = equivalent_measure({a1, b1, b2});
      ok = ok && is_equivalent(a1, a2, b1, b2, 1e-9);
    }
  double dt = seconds_since(t0);
  report(1, "calculators match the high-precision oracle (tol 1e-9)",
         ok && dt < 10.0,
         "elapsed " + std::to_string(dt) + " s (budget 10 s)");
}

// criterion 2: constant-correlation pairs hit the closed-form mutual
// dimension 1 - H((1+rho)/2) within 0.01, with per-seed dimension spread
// at most 0.02, for rho in {0.25, 0.5, 0.8}
void criterion_2() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string note;
  for (double rho : {0.25, 0.5, 0.8}) {
    ExperimentConfig cfg = make_config(
        {{"experiment", "theorem-3.5"},
         {"measure",
          {{"kind", "rho"}, {"rho", {{"family", "const"}, {"rho", rho}}}}}});
    ExperimentReport rep = run_experiment(cfg);
    ok = ok && rep.pass;
    note += "rho=" + std::to_string(rho) + " mean=" +
            std::to_string(rep.mean) + " target=" +
            std::to_string(rep.target_value) + "; ";
  }
  double dt = seconds_since(t0);
  report(2, "constant-correlation mutual dimension (3 rho values, 10 seeds)",
         ok && dt < 60.0, note + "elapsed " + std::to_string(dt) + " s");
}

// criterion 3: a varying schedule converging to rho=0.3 lands within 0.015
// of the limit value 1 - H(0.65)
void criterion_3() {
  ExperimentConfig cfg = make_config(
      {{"experiment", "theorem-3.5"},
       {"tolerance", 0.015},
       {"measure",
        {{"kind", "rho"},
         {"rho",
          {{"family", "explicit"},
           {"head", {0.9, 0.7, 0.5, 0.45, 0.4, 0.38, 0.35, 0.33, 0.31}},
           {"tail", 0.3}}}}}});
  ExperimentReport rep = run_experiment(cfg);
  report(3, "varying schedule converging to rho=0.3", rep.pass,
         "mean=" + std::to_string(rep.mean) +
             " target=" + std::to_string(rep.target_value));
}

// criterion 4: independent uniform coordinates have mean density <= 0.01
void criterion_4() {
  ExperimentConfig cfg = make_config(
      {{"experiment", "corollary-3.9-independent"},
       {"measure",
        {{"kind", "joint"},
         {"k", 2},
         {"p", {{0.25, 0.25}, {0.25, 0.25}}}}}});
  ExperimentReport rep = run_experiment(cfg);
  report(4, "independent coordinates give zero mutual density", rep.pass,
         "mean=" + std::to_string(rep.mean));
}

// criterion 5: slowly vanishing correlation 1/sqrt(n+2): mutual density
// vanishes, yet the likelihood-ratio martingale wins money (positive log
// capital for >= 95/100 seeds, mean within 50% of the divergence sum)
void criterion_5() {
  auto t0 = Clock::now();
  ExperimentConfig cfg =
      make_config({{"experiment", "corollary-3.14-counterexample"}});
  ExperimentReport rep = run_experiment(cfg);
  double dt = seconds_since(t0);
  report(5, "vanishing-correlation counterexample (100 seeds)",
         rep.pass && dt < 300.0,
         "mi-mean=" + std::to_string(rep.mean) +
             " lr-target=" + std::to_string(rep.target_value) + " elapsed " +
             std::to_string(dt) + " s (budget 300 s)");
}

// criterion 6: plug-in entropy rate of an i.i.d. (0.75, 0.25) source at
// n = 10^6 is within 0.01 of H = 0.811278 bits
void criterion_6() {
  Pmf biased({0.75, 0.25});
  double target = entropy(biased);
  bool ok = true;
  std::string note;
  for (std::uint64_t seed : {1, 2, 3}) {
    Word w = sample_word(MeasureSeq::constant(biased), 1000000, seed);
    double rate = plugin_entropy_rate(w, 2, 4);
    ok = ok && std::abs(rate - target) <= 0.01;
    note += "seed " + std::to_string(seed) + ": " + std::to_string(rate) + "; ";
  }
  report(6, "plug-in entropy rate of a biased i.i.d. source", ok,
         note + "target " + std::to_string(target));
}

// criterion 7: frequency-divergence identity -- for low-discrepancy words,
// the per-symbol code length under beta matches H(alpha) + D(alpha||beta)
void criterion_7() {
  ExperimentConfig cfg = make_config({{"experiment", "freq-divergence"}});
  ExperimentReport rep = run_experiment(cfg);
  report(7, "code length of FREQ words matches the cross entropy", rep.pass,
         "max deviation " + std::to_string(rep.mean));
}

// criterion 8: equivalence solver feeds the normalizability ratio to 1
// within 1e-3, while a non-equivalent control stays >= 0.05 away
void criterion_8() {
  ExperimentConfig cfg = make_config({{"experiment", "normalizability"}});
  ExperimentReport rep = run_experiment(cfg);
  report(8, "normalizability ratio pipeline with non-equivalent control",
         rep.pass);
}

// criterion 9: for every sampled configuration satisfying one of the five
// conditions, the interpolation map stays strictly inside (0,1) on a grid
void criterion_9() {
  CounterRng rng(9009);
  std::uint64_t ctr = 0;
  std::size_t violations = 0;
  for (int cond = 1; cond <= 5; ++cond)
    for (int trial = 0; trial < 10000; ++trial) {
      auto [b1, b2] = sample_condition(cond, rng, ctr);
      if (check_conditions(b1, b2) == ConditionId::None) {
        ++violations;
        continue;
      }
      for (int g = 0; g <= 1000; ++g) {
        double f = f_map(double(g) / 1000.0, b1, b2);
        if (!(f > 0.0 && f < 1.0)) ++violations;
      }
    }
  report(9, "interpolation map bounded in (0,1) on 5 x 10^4 sampled setups",
         violations == 0, std::to_string(violations) + " violations");
}

// criterion 10: closed-form squared Hellinger distance of the coupled pair
// measure agrees with the direct 4-symbol computation to 1e-12
void criterion_10() {
  double worst = 0.0;
  for (int g = 0; g <= 1000; ++g) {
    double rho = -1.0 + 2.0 * double(g) / 1000.0;
    JointPmf joint = rho_joint(rho);
    auto [m1, m2] = marginals(joint);
    double h = hellinger(product(m1, m2).flatten(), joint.flatten());
    worst = std::max(worst, std::abs(hellinger_sq_coupled(rho) - h * h));
  }
  report(10, "closed-form Hellinger distance matches direct computation",
         worst < 1e-12, "max abs error " + std::to_string(worst));
}

// criterion 11: identical configs reproduce byte-identical reports
void criterion_11() {
  json j = {{"experiment", "theorem-3.5"},
            {"n_max", 20000},
            {"seeds", {5, 6, 7}},
            {"measure",
             {{"kind", "rho"}, {"rho", {{"family", "const"}, {"rho", 0.5}}}}}};
  ExperimentReport a = run_experiment(make_config(j));
  ExperimentReport b = run_experiment(make_config(j));
  report(11, "identical configs produce byte-identical reports",
         a.to_bytes() == b.to_bytes());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
