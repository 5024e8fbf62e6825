// Command-line front end: exact calculators, sequence generators, density
// estimators, the equivalence solver, dichotomy classification, and the named
// desk-scale experiments.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "mdim/billingsley.hpp"
#include "mdim/estimate.hpp"
#include "mdim/experiment.hpp"
#include "mdim/genseq.hpp"
#include "mdim/info.hpp"
#include "mdim/json_io.hpp"
#include "mdim/kakutani.hpp"
#include "mdim/measures.hpp"

using nlohmann::json;

namespace {

mdim::Pmf parse_pmf(const std::string& csv) {
  std::istringstream is(csv);
  std::string tok;
  std::vector<double> v;
  while (std::getline(is, tok, ',')) v.push_back(std::stod(tok));
  Eigen::VectorXd p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p(i) = v[i];
  return mdim::Pmf(std::move(p));
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

mdim::Word load_word(const std::string& path, int alphabet) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return mdim::from_text(ss.str(), alphabet);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Shared measure-selection flags for generate/estimate style commands.
struct MeasureFlags {
  std::string measure_file;
  std::optional<double> rho_const;
  std::string rho_family;
  double offset = 2.0;
  double rho0 = 0.5, ratio = 0.5;
  std::string pmf_csv;

  void attach(CLI::App* cmd) {
    cmd->add_option("--measure", measure_file,
                    "measure description JSON file");
    cmd->add_option("--rho-const", rho_const,
                    "constant-rho coupled pair measure");
    cmd->add_option("--rho-family", rho_family,
                    "rho family: inv_sqrt|harmonic|geometric");
    cmd->add_option("--offset", offset, "offset c for inv_sqrt/harmonic");
    cmd->add_option("--rho0", rho0, "rho0 for geometric");
    cmd->add_option("--ratio", ratio, "ratio for geometric");
    cmd->add_option("--pmf", pmf_csv, "plain per-position pmf, comma list");
  }

  mdim::MeasureSeq build() const {
    if (!measure_file.empty())
      return mdim::measure_seq_from_json(load_json(measure_file));
    if (rho_const)
      return mdim::MeasureSeq::rho_family(
          mdim::RhoSchedule::constant(*rho_const));
    if (!rho_family.empty()) {
      if (rho_family == "inv_sqrt")
        return mdim::MeasureSeq::rho_family(
            mdim::RhoSchedule::inverse_sqrt(offset));
      if (rho_family == "harmonic")
        return mdim::MeasureSeq::rho_family(
            mdim::RhoSchedule::harmonic(offset));
      if (rho_family == "geometric")
        return mdim::MeasureSeq::rho_family(
            mdim::RhoSchedule::geometric(rho0, ratio));
      throw std::invalid_argument("unknown rho family " + rho_family);
    }
    if (!pmf_csv.empty())
      return mdim::MeasureSeq::constant(parse_pmf(pmf_csv));
    throw std::invalid_argument(
        "no measure given (use --measure/--rho-const/--rho-family/--pmf)");
  }

  json describe() const {
    return mdim::measure_seq_to_json(build());
  }
};

mdim::RhoSchedule schedule_from_flags(const std::string& family, double rho,
                                      double offset, double rho0,
                                      double ratio) {
  if (family == "const") return mdim::RhoSchedule::constant(rho);
  if (family == "inv_sqrt") return mdim::RhoSchedule::inverse_sqrt(offset);
  if (family == "harmonic") return mdim::RhoSchedule::harmonic(offset);
  if (family == "geometric") return mdim::RhoSchedule::geometric(rho0, ratio);
  throw std::invalid_argument("unknown rho family " + family);
}

int run(int argc, char** argv) {
  CLI::App app{"coupled-randomness and mutual-dimension toolkit"};
  app.require_subcommand(1);

  // ---- calc -------------------------------------------------------------
  auto* calc = app.add_subcommand("calc", "exact information calculators");
  calc->require_subcommand(1);
  std::string p_csv, q_csv, word_text;
  double rho = 0.0;

  auto add_pq = [&](CLI::App* c, bool need_q) {
    c->add_option("--p,--pmf", p_csv, "pmf, comma list")->required();
    if (need_q) c->add_option("--q", q_csv, "second pmf")->required();
  };

  auto* c_entropy = calc->add_subcommand("entropy", "Shannon entropy");
  add_pq(c_entropy, false);
  c_entropy->callback([&] {
    mdim::Pmf p = parse_pmf(p_csv);
    emit({{"quantity", "entropy"},
          {"value_bits", mdim::entropy(p)},
          {"inputs", {{"p", p_csv}}}});
  });

  auto* c_mi = calc->add_subcommand("mi", "mutual information of a coupling");
  c_mi->add_option("--rho", rho, "rho of the coupled pair measure");
  std::string joint_csv;
  c_mi->add_option("--joint", joint_csv,
                   "flat k*k joint pmf, comma list, row-major");
  c_mi->callback([&] {
    mdim::JointPmf j = joint_csv.empty()
                           ? mdim::rho_joint(rho)
                           : [&] {
                               mdim::Pmf f = parse_pmf(joint_csv);
                               int k = int(std::lround(std::sqrt(f.size())));
                               Eigen::MatrixXd m(k, k);
                               for (int a = 0; a < k; ++a)
                                 for (int b = 0; b < k; ++b)
                                   m(a, b) = f(a * k + b);
                               return mdim::JointPmf(std::move(m));
                             }();
    emit({{"quantity", "mutual_information"},
          {"value_bits", mdim::mutual_information(j)},
          {"inputs", {{"rho", rho}, {"joint", joint_csv}}}});
  });

  auto* c_kl = calc->add_subcommand("kl", "Kullback-Leibler divergence");
  add_pq(c_kl, true);
  c_kl->callback([&] {
    emit({{"quantity", "kl_divergence"},
          {"value_bits", mdim::kl_divergence(parse_pmf(p_csv), parse_pmf(q_csv))},
          {"inputs", {{"p", p_csv}, {"q", q_csv}}}});
  });

  auto* c_ce = calc->add_subcommand("cross-entropy", "cross entropy");
  add_pq(c_ce, true);
  c_ce->callback([&] {
    emit({{"quantity", "cross_entropy"},
          {"value_bits", mdim::cross_entropy(parse_pmf(p_csv), parse_pmf(q_csv))},
          {"inputs", {{"p", p_csv}, {"q", q_csv}}}});
  });

  auto* c_hel = calc->add_subcommand("hellinger", "Hellinger distance");
  add_pq(c_hel, true);
  c_hel->callback([&] {
    emit({{"quantity", "hellinger"},
          {"value", mdim::hellinger(parse_pmf(p_csv), parse_pmf(q_csv))},
          {"inputs", {{"p", p_csv}, {"q", q_csv}}}});
  });

  auto* c_h2 = calc->add_subcommand("hellinger2-coupled",
                                    "squared Hellinger distance, coupled vs "
                                    "product measure");
  c_h2->add_option("--rho", rho)->required();
  c_h2->callback([&] {
    emit({{"quantity", "hellinger_sq_coupled"},
          {"value", mdim::hellinger_sq_coupled(rho)},
          {"inputs", {{"rho", rho}}}});
  });

  auto* c_si = calc->add_subcommand("self-info", "Shannon self-information");
  add_pq(c_si, false);
  c_si->add_option("--word", word_text, "word, digit text")->required();
  c_si->callback([&] {
    mdim::Pmf p = parse_pmf(p_csv);
    mdim::Word w = mdim::from_text(word_text, p.size());
    emit({{"quantity", "self_information"},
          {"value_bits", mdim::self_information(p, w)},
          {"inputs", {{"p", p_csv}, {"word", word_text}}}});
  });

  auto* c_bm = calc->add_subcommand("billingsley-mdim",
                                    "mutual divergence formula");
  std::string b1_csv, b2_csv;
  c_bm->add_option("--rho", rho, "coupled pair measure rho")->required();
  c_bm->add_option("--beta1", b1_csv)->required();
  c_bm->add_option("--beta2", b2_csv)->required();
  c_bm->callback([&] {
    emit({{"quantity", "billingsley_mdim"},
          {"value",
           mdim::billingsley_mdim(mdim::rho_joint(rho), parse_pmf(b1_csv),
                                  parse_pmf(b2_csv))},
          {"inputs", {{"rho", rho}, {"beta1", b1_csv}, {"beta2", b2_csv}}}});
  });

  // ---- generate ---------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "sample sequences");
  MeasureFlags gen_m;
  gen_m.attach(gen);
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  std::string out_path, fmt = "auto";
  std::string freq_csv;
  gen->add_option("-n,--length", n, "word length");
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("--freq", freq_csv,
                  "emit the FREQ sequence of this pmf instead of sampling");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");
  gen->add_option("--format", fmt, "digits|pair|auto");
  gen->callback([&] {
    std::string body;
    json prov{{"prng", mdim::CounterRng::kName},
              {"version", mdim::kVersion},
              {"n", n}};
    if (!freq_csv.empty()) {
      mdim::Pmf a = parse_pmf(freq_csv);
      mdim::Word w = mdim::freq_sequence(a, n);
      body = mdim::to_text(w, a.size()) + "\n";
      prov["kind"] = "freq_sequence";
      prov["pmf"] = freq_csv;
    } else {
      mdim::MeasureSeq m = gen_m.build();
      prov["seed"] = seed;
      prov["measure"] = mdim::measure_seq_to_json(m);
      if (m.pair_alphabet()) {
        mdim::CoupledWords cw = mdim::sample_coupled(m, n, seed);
        if (fmt == "pair" || fmt == "auto") {
          body = mdim::to_text(cw.u, m.base_alphabet()) + "\n" +
                 mdim::to_text(cw.w, m.base_alphabet()) + "\n";
        } else {
          body = mdim::to_text(mdim::pair_word(cw.u, cw.w, m.base_alphabet()),
                               m.symbols()) +
                 "\n";
        }
        prov["kind"] = "coupled";
      } else {
        mdim::Word w = mdim::sample_word(m, n, seed);
        body = mdim::to_text(w, m.base_alphabet()) + "\n";
        prov["kind"] = "word";
      }
    }
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream(out_path) << body;
      std::ofstream(out_path + ".provenance.json") << prov.dump(2) << "\n";
    }
  });

  // ---- estimate ---------------------------------------------------------
  auto* est = app.add_subcommand("estimate", "empirical density estimators");
  std::string u_path, w_path, in_path;
  int alphabet = 2, block_len = 4;
  std::string method = "plugin";
  bool trace = false, as_json = false;
  est->add_option("--u", u_path, "first word file (digit text)");
  est->add_option("--w", w_path, "second word file");
  est->add_option("--input", in_path, "single word file (entropy rate)");
  est->add_option("-k,--alphabet", alphabet, "alphabet size");
  est->add_option("--block-len", block_len, "plug-in block length");
  est->add_option("--method", method, "plugin|kt");
  est->add_flag("--trace", trace, "emit a density trace over the schedule");
  est->add_flag("--json", as_json, "JSON output instead of CSV");
  est->callback([&] {
    if (!in_path.empty()) {
      mdim::Word w = load_word(in_path, alphabet);
      double h = method == "kt"
                     ? mdim::kt_code_length(w, alphabet) / double(w.size())
                     : mdim::plugin_entropy_rate(w, alphabet, block_len);
      emit({{"quantity", "entropy_rate"},
            {"value_bits_per_symbol", h},
            {"method", method},
            {"block_len", block_len},
            {"n", w.size()}});
      return;
    }
    if (u_path.empty() || w_path.empty())
      throw std::invalid_argument("estimate needs --input or --u and --w");
    mdim::Word u = load_word(u_path, alphabet);
    mdim::Word w = load_word(w_path, alphabet);
    if (trace) {
      mdim::DensityTrace t = mdim::mi_density_trace(
          u, w, alphabet, block_len, mdim::default_schedule(u.size()));
      if (as_json) {
        mdim::DimensionEstimate de = mdim::dimension_estimate(t);
        json pts = json::array();
        for (std::size_t i = 0; i < t.schedule.size(); ++i)
          pts.push_back({{"prefix_len", t.schedule[i]},
                         {"density_raw", t.values[i]},
                         {"density_clamped",
                          std::clamp(t.values[i], 0.0, 1.0)}});
        emit({{"trace", pts},
              {"dimension_lower", de.lower},
              {"dimension_upper", de.upper},
              {"method", method},
              {"block_len", block_len}});
      } else {
        std::cout << "prefix_len,density_raw,density_clamped,method,block_len\n";
        for (std::size_t i = 0; i < t.schedule.size(); ++i)
          std::printf("%zu,%.17g,%.17g,%s,%d\n", t.schedule[i], t.values[i],
                      std::clamp(t.values[i], 0.0, 1.0), method.c_str(),
                      block_len);
      }
      return;
    }
    double d = method == "kt"
                   ? mdim::mi_density_compressor(u, w, alphabet,
                                                 mdim::kt_compressor())
                   : mdim::mi_density_plugin(u, w, alphabet, block_len);
    emit({{"quantity", "mi_density"},
          {"value_raw", d},
          {"value_clamped", std::clamp(d, 0.0, 1.0)},
          {"method", method},
          {"block_len", block_len},
          {"n", u.size()}});
  });

  // ---- solve-equivalence ------------------------------------------------
  auto* solve = app.add_subcommand("solve-equivalence",
                                   "unique (beta1,beta2)-equivalent measure");
  std::string a1_csv, sb1_csv, sb2_csv;
  solve->add_option("--alpha1", a1_csv)->required();
  solve->add_option("--beta1", sb1_csv)->required();
  solve->add_option("--beta2", sb2_csv)->required();
  solve->callback([&] {
    mdim::Pmf a1 = parse_pmf(a1_csv);
    mdim::Pmf b1 = parse_pmf(sb1_csv);
    mdim::Pmf b2 = parse_pmf(sb2_csv);
    mdim::ConditionId cond = mdim::check_conditions(b1, b2);
    mdim::Pmf a2 = mdim::equivalent_measure({a1, b1, b2});
    emit({{"alpha2", {a2(0), a2(1)}},
          {"condition", int(cond)},
          {"cross_entropy_bits", mdim::cross_entropy(a1, b1)},
          {"inputs",
           {{"alpha1", a1_csv}, {"beta1", sb1_csv}, {"beta2", sb2_csv}}}});
  });

  // ---- kakutani ---------------------------------------------------------
  auto* kak = app.add_subcommand("kakutani", "dichotomy classification");
  kak->require_subcommand(1);
  auto* kc = kak->add_subcommand("classify", "classify a rho schedule");
  std::string family = "const";
  double k_rho = 0.0, k_offset = 2.0, k_rho0 = 0.5, k_ratio = 0.5;
  std::size_t preview = 0;
  std::string csv_path;
  kc->add_option("--family", family, "const|inv_sqrt|harmonic|geometric")
      ->required();
  kc->add_option("--rho", k_rho);
  kc->add_option("--offset", k_offset);
  kc->add_option("--rho0", k_rho0);
  kc->add_option("--ratio", k_ratio);
  kc->add_option("--partial-sums", preview,
                 "also compute this many partial sums");
  kc->add_option("--csv", csv_path, "write partial sums to CSV");
  kc->callback([&] {
    mdim::RhoSchedule s =
        schedule_from_flags(family, k_rho, k_offset, k_rho0, k_ratio);
    mdim::DichotomyVerdict v = mdim::classify_schedule(
        s, csv_path.empty() ? preview : std::max<std::size_t>(preview, 1000));
    json j{{"verdict", v.tag == mdim::DichotomyVerdict::Tag::SumDiverges
                           ? "SumDiverges"
                           : "SumConverges"},
           {"basis", v.basis},
           {"interpretation", v.interpretation}};
    if (!v.partial_sums.empty() && csv_path.empty())
      j["final_partial_sum"] = v.partial_sums.back();
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      out << "n,partial_sum\n";
      for (std::size_t i = 0; i < v.partial_sums.size(); ++i)
        out << i + 1 << ',' << v.partial_sums[i] << '\n';
      j["csv"] = csv_path;
    }
    emit(j);
  });

  // ---- experiment -------------------------------------------------------
  auto* exp = app.add_subcommand("experiment", "named desk-scale experiments");
  std::string cfg_path, name, seeds_csv, out_dir;
  std::size_t e_n = 0;
  int e_block = 4;
  std::optional<double> e_tol;
  exp->add_option("--config", cfg_path, "experiment config JSON");
  exp->add_option("--name", name,
                  "theorem-3.5|corollary-3.9-independent|"
                  "corollary-3.14-counterexample|freq-divergence|"
                  "normalizability");
  exp->add_option("-n,--n-max", e_n);
  exp->add_option("--seeds", seeds_csv, "comma list of seeds");
  exp->add_option("--block-len", e_block);
  exp->add_option("--tolerance", e_tol);
  exp->add_option("--out-dir", out_dir, "directory for report and traces");
  MeasureFlags exp_m;
  exp_m.attach(exp);
  exp->callback([&] {
    mdim::ExperimentConfig cfg;
    if (!cfg_path.empty()) {
      cfg = mdim::ExperimentConfig::from_json(load_json(cfg_path));
    } else {
      if (name.empty())
        throw std::invalid_argument("experiment needs --config or --name");
      cfg.experiment = name;
      cfg.n_max = e_n;
      cfg.block_len = e_block;
      cfg.tolerance = e_tol;
      if (!seeds_csv.empty()) {
        std::istringstream is(seeds_csv);
        std::string tok;
        while (std::getline(is, tok, ','))
          cfg.seeds.push_back(std::stoull(tok));
      }
      try {
        cfg.measure = exp_m.describe();
      } catch (const std::invalid_argument&) {
        // no measure flags given; the experiment supplies its default
      }
    }
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    mdim::ExperimentReport rep = mdim::run_experiment(cfg);
    std::cout << rep.to_bytes() << "\n";
    if (!rep.pass) std::exit(1);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
