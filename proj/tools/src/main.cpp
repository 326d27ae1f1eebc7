// Copyright 2026 The qdp developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qdp command-line driver: private queries, paper-table reproduction, the
// homomorphic demo, and grid experiments. Default output shows only DP-safe
// quantities; raw (pre-noise) values appear under --debug and are marked
// non-private. All floating-point output uses %.17g so identical seed and
// config produce bit-identical text.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "qdp/accountant.hpp"
#include "qdp/circuit.hpp"
#include "qdp/dataset.hpp"
#include "qdp/direct.hpp"
#include "qdp/errors.hpp"
#include "qdp/noise.hpp"
#include "qdp/qae.hpp"
#include "qdp/qotp.hpp"
#include "qdp/query.hpp"
#include "qdp/rng.hpp"
#include "qdp/state.hpp"

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

constexpr const char* kCsvHeader =
    "mechanism,n,M,t,dp_mode,epsilon,alpha_true,alpha_hat,abs_error,"
    "eps_spent,delta_spent,seed";

struct CsvRow {
  std::string mechanism;
  std::uint64_t n = 0;
  std::string m;        // grid size, empty for direct
  std::string t;        // samples (direct) or median repetitions (qae)
  std::string dp_mode;  // empty for direct
  double epsilon = 0.0;
  std::string alpha_true;  // raw value; filled only when disclosure is okay
  double alpha_hat = 0.0;
  std::string abs_error;  // raw value; same gating as alpha_true
  double eps_spent = 0.0;
  double delta_spent = 0.0;
  std::uint64_t seed = 0;

  std::string line() const {
    std::string out;
    out += mechanism + ',' + std::to_string(n) + ',' + m + ',' + t + ',';
    out += dp_mode + ',' + g17(epsilon) + ',' + alpha_true + ',';
    out += g17(alpha_hat) + ',' + abs_error + ',' + g17(eps_spent) + ',';
    out += g17(delta_spent) + ',' + std::to_string(seed);
    return out;
  }
};

void write_csv(const std::string& path, const std::vector<CsvRow>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw qdp::Error("cannot open output file: " + path);
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << r.line() << '\n';
}

qdp::Dataset load(const std::string& schema_path, const std::string& data_path) {
  std::ifstream schema_in(schema_path);
  if (!schema_in) throw qdp::Error("cannot open schema file: " + schema_path);
  std::stringstream buf;
  buf << schema_in.rdbuf();
  return qdp::load_dataset(data_path, qdp::parse_schema(buf.str()));
}

qdp::DpMode parse_dp_mode(const std::string& s) {
  if (s == "none") return qdp::DpMode::none;
  if (s == "post_laplace") return qdp::DpMode::post_laplace;
  if (s == "phase_noise") return qdp::DpMode::phase_noise;
  throw qdp::Error("unknown dp mode: " + s);
}

const char* dp_mode_name(qdp::DpMode m) {
  switch (m) {
    case qdp::DpMode::none: return "none";
    case qdp::DpMode::post_laplace: return "post_laplace";
    case qdp::DpMode::phase_noise: return "phase_noise";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// query: one released answer plus its privacy ledger.

struct QueryArgs {
  std::string schema_path, data_path, query_text, mechanism = "direct";
  std::uint64_t t = 1000, k = 1, m = 64, median = 1, seed = 0;
  std::string dp_mode = "phase_noise";
  double epsilon = 1.0;
  std::vector<double> depol;
  int depol_dim = 2;
  std::string output;
  bool debug = false;
};

int cmd_query(const QueryArgs& a) {
  const auto d = load(a.schema_path, a.data_path);
  const auto q = qdp::parse_query(a.query_text, d.schema());
  qdp::BudgetLedger ledger;
  CsvRow row;
  row.mechanism = a.mechanism;
  row.n = d.size();
  row.epsilon = a.epsilon;
  row.seed = a.seed;

  double answer = 0.0;
  double raw = 0.0;
  if (a.mechanism == "direct") {
    qdp::DirectConfig cfg;
    cfg.t = a.t;
    cfg.k = a.k;
    cfg.epsilon = a.epsilon;
    cfg.seed = a.seed;
    const auto rep = qdp::run_direct(d, q, cfg);
    answer = rep.answer;
    raw = rep.raw_mean;
    ledger.record("direct query", rep.eps_prime, rep.delta,
                  qdp::SpendSource::direct);
    row.t = std::to_string(a.t);
  } else if (a.mechanism == "qae") {
    qdp::QaeConfig cfg;
    cfg.M = a.m;
    cfg.dp_mode = parse_dp_mode(a.dp_mode);
    cfg.epsilon = a.epsilon;
    cfg.seed = a.seed;
    const auto source = cfg.dp_mode == qdp::DpMode::post_laplace
                            ? qdp::SpendSource::qae_post
                            : qdp::SpendSource::qae_phase;
    if (a.median > 1) {
      const auto rep = qdp::median_amplify(d, q, cfg, a.median);
      answer = rep.alpha_hat;
      raw = rep.alpha_hat;
      if (cfg.dp_mode != qdp::DpMode::none) {
        for (std::uint64_t i = 0; i < a.median; ++i)
          ledger.record("qae run " + std::to_string(i), a.epsilon, 0.0, source);
      }
    } else {
      const auto rep = qdp::run_qae(d, q, cfg);
      answer = rep.alpha_hat;
      raw = rep.alpha_hat;
      if (cfg.dp_mode != qdp::DpMode::none)
        ledger.record("qae run", a.epsilon, 0.0, source);
    }
    if (cfg.dp_mode == qdp::DpMode::post_laplace)
      ledger.record_post_processing("sin^2 of noisy angle");
    row.m = std::to_string(a.m);
    row.t = std::to_string(a.median);
    row.dp_mode = a.dp_mode;
  } else {
    throw qdp::Error("unknown mechanism: " + a.mechanism +
                     " (expected direct or qae)");
  }

  if (!a.depol.empty()) {
    qdp::DepolarizingSpec spec;
    spec.probs = a.depol;
    spec.dim = a.depol_dim;
    qdp::total_with_depolarizing(ledger, spec, d.size());
  }

  const auto totals = ledger.totals();
  const bool no_privacy = a.mechanism == "qae" && a.dp_mode == "none";
  std::cout << "answer = " << g17(answer) << "\n";
  if (no_privacy) {
    std::cout << "privacy: NONE (dp_mode=none releases the raw estimate)\n";
  }
  ledger.write_report(std::cout);
  if (a.debug) {
    const double alpha =
        static_cast<double>(qdp::eval_dataset(q, d).num) /
        static_cast<double>(qdp::eval_dataset(q, d).den);
    std::cout << "[debug, non-private] raw estimate = " << g17(raw) << "\n";
    std::cout << "[debug, non-private] true alpha   = " << g17(alpha) << "\n";
    row.alpha_true = g17(alpha);
    row.abs_error = g17(std::abs(answer - alpha));
  }

  row.alpha_hat = answer;
  row.eps_spent = no_privacy ? INFINITY : totals.epsilon;
  row.delta_spent = totals.delta;
  if (!a.output.empty()) write_csv(a.output, {row});
  return 0;
}

// ---------------------------------------------------------------------------
// reproduce accounting | scaling | confidence.

int reproduce_accounting() {
  struct Ref {
    std::uint64_t k;
    double eps_ref, eps_tol, delta_ref, delta_tol;
  };
  // Reference ladder at n = 10^6, t = 10^3, epsilon = 1.
  const Ref refs[] = {
      {0, 0.0, 0.0, 0.0009995, 1e-7},
      {1, 0.0017146, 2e-6, 5.0e-7, 5e-9},
      {2, 0.0006487, 2e-6, 1.6604e-10, 1.6604e-12},
  };
  std::printf("accounting ladder: n=1000000 t=1000 epsilon=1\n");
  std::printf("%2s %-22s %-22s %s\n", "k", "eps_prime", "delta", "status");
  bool ok = true;
  for (const Ref& r : refs) {
    const auto p = qdp::account_direct(1000000, 1000, r.k, 1.0);
    const bool row_ok = std::abs(p.eps_prime - r.eps_ref) <= (r.k ? r.eps_tol : 1e-30) &&
                        std::abs(p.delta - r.delta_ref) <= r.delta_tol;
    ok = ok && row_ok;
    std::printf("%2llu %-22.15g %-22.15g %s\n",
                static_cast<unsigned long long>(r.k), p.eps_prime, p.delta,
                row_ok ? "ok" : "MISMATCH");
  }
  return ok ? 0 : 1;
}

qdp::Dataset panel_dataset() {
  qdp::Schema s = qdp::parse_schema(
      "index_prefix_bits = 0\n"
      "attribute = v:4\n");
  std::vector<std::vector<std::uint64_t>> codes;
  for (std::uint64_t i = 0; i < 10; ++i) codes.push_back({i});
  return qdp::dataset_from_codes(std::move(s), codes);
}

std::string leq_query(std::uint64_t marked) {
  std::string bits;
  for (int b = 3; b >= 0; --b) bits += (((marked - 1) >> b) & 1) ? '1' : '0';
  return "v <= " + bits;
}

double fit_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

int reproduce_scaling(std::uint64_t seed, const std::string& output) {
  const auto d = panel_dataset();
  std::vector<CsvRow> rows;

  // Direct arm: sampling error alone (k = 0) at alpha = 0.3.
  const auto q3 = qdp::parse_query(leq_query(3), d.schema());
  std::vector<double> lx, ly;
  for (std::uint64_t t : {16, 64, 256, 1024, 4096}) {
    double sum = 0.0;
    constexpr int kTrials = 300;
    for (int trial = 0; trial < kTrials; ++trial) {
      qdp::DirectConfig cfg;
      cfg.t = t;
      cfg.k = 0;
      cfg.epsilon = 1.0;
      cfg.seed = qdp::derive_seed(seed, "scale-direct",
                                  t * 10000 + static_cast<std::uint64_t>(trial));
      const auto rep = qdp::run_direct(d, q3, cfg);
      const double err = std::abs(rep.answer - 0.3);
      sum += err;
      CsvRow row;
      row.mechanism = "direct";
      row.n = d.size();
      row.t = std::to_string(t);
      row.epsilon = 1.0;
      row.alpha_true = g17(0.3);
      row.alpha_hat = rep.answer;
      row.abs_error = g17(err);
      row.eps_spent = rep.eps_prime;
      row.delta_spent = rep.delta;
      row.seed = cfg.seed;
      rows.push_back(row);
    }
    lx.push_back(std::log(static_cast<double>(t)));
    ly.push_back(std::log(sum / kTrials));
  }
  const double slope_direct = fit_slope(lx, ly);

  // QAE arm: median of 11 clean runs, averaged over an alpha panel.
  lx.clear();
  ly.clear();
  for (std::uint64_t M : {8, 16, 32, 64, 128, 256}) {
    double sum = 0.0;
    int count = 0;
    for (std::uint64_t k : {1, 2, 3, 4, 6, 7}) {
      const auto q = qdp::parse_query(leq_query(k), d.schema());
      const double alpha = static_cast<double>(k) / 10.0;
      constexpr int kTrials = 120;
      for (int trial = 0; trial < kTrials; ++trial) {
        qdp::QaeConfig cfg;
        cfg.M = M;
        cfg.seed = qdp::derive_seed(seed, "scale-qae",
                                    (M << 20) + k * 100000 +
                                        static_cast<std::uint64_t>(trial));
        const auto rep = qdp::median_amplify(d, q, cfg, 11);
        const double err = std::abs(rep.alpha_hat - alpha);
        sum += err;
        ++count;
        CsvRow row;
        row.mechanism = "qae";
        row.n = d.size();
        row.m = std::to_string(M);
        row.t = "11";
        row.dp_mode = "none";
        row.epsilon = 1.0;
        row.alpha_true = g17(alpha);
        row.alpha_hat = rep.alpha_hat;
        row.abs_error = g17(err);
        row.eps_spent = INFINITY;
        row.delta_spent = 0.0;
        row.seed = cfg.seed;
        rows.push_back(row);
      }
    }
    lx.push_back(std::log(static_cast<double>(M)));
    ly.push_back(std::log(sum / count));
  }
  const double slope_qae = fit_slope(lx, ly);

  if (!output.empty()) write_csv(output, rows);
  std::printf("direct arm: fitted slope of mean |error| vs t is %s"
              " (theory -0.5)\n", g17(slope_direct).c_str());
  std::printf("qae arm:    fitted slope of mean |error| vs M is %s"
              " (theory -1.0)\n", g17(slope_qae).c_str());
  if (!output.empty()) std::printf("per-run rows written to %s\n", output.c_str());
  return 0;
}

int reproduce_confidence(std::uint64_t seed) {
  const auto d = panel_dataset();
  const auto q = qdp::parse_query(leq_query(3), d.schema());
  const double bound = qdp::error_bound(0.3, 64);
  constexpr int kTrials = 10000;
  int hits = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    qdp::QaeConfig cfg;
    cfg.M = 64;
    cfg.seed = qdp::derive_seed(seed, "confidence",
                                static_cast<std::uint64_t>(trial));
    if (std::abs(qdp::median_amplify(d, q, cfg, 24).alpha_hat - 0.3) <= bound)
      ++hits;
  }
  const double rate = static_cast<double>(hits) / kTrials;
  std::printf("median of 24 runs at alpha=0.3, M=64: success rate %s over %d"
              " trials\n", g17(rate).c_str(), kTrials);
  std::printf("guaranteed floor 1 - exp(-2t(8/pi^2 - 1/2)^2) = %s\n",
              g17(1.0 - qdp::median_failure_bound(24)).c_str());
  std::printf("%s\n", rate >= 0.99 ? "ok (>= 0.99)" : "BELOW 0.99");
  return rate >= 0.99 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// qotp-demo: one query end to end over encrypted data.

int cmd_qotp_demo(const std::string& schema_path, const std::string& data_path,
                  const std::string& query_text, std::uint64_t seed,
                  bool debug) {
  const auto d = load(schema_path, data_path);
  if (d.schema().payload_width() > 6)
    throw qdp::Error("qotp-demo requires at most 6 payload qubits");
  const auto q = qdp::parse_query(query_text, d.schema());
  const auto circ =
      qdp::decompose_to_clifford_t(qdp::compile_circuit(q, d.schema()));

  // Plaintext path.
  auto plain = qdp::encoded_input(d, circ);
  qdp::apply_circuit(plain, circ.gates);
  const double alpha_plain = qdp::marginal_prob_one(plain, circ.output_qubit);

  // Encrypted path: encrypt, run the same gates homomorphically, decrypt.
  auto key_rng = qdp::substream(seed, "qotp-key", 0);
  const auto key = qdp::random_key(plain.num_qubits, key_rng);
  const auto cipher = qdp::qotp_encrypt(qdp::encoded_input(d, circ), key);
  auto exec_rng = qdp::substream(seed, "qotp-exec", 0);
  const auto res = qdp::homomorphic_exec(cipher, key, circ.gates, exec_rng);
  const auto decrypted = qdp::qotp_decrypt(res.state, res.key);
  const double alpha_cipher =
      qdp::marginal_prob_one(decrypted, circ.output_qubit);
  const double fid = qdp::fidelity(decrypted, plain);

  std::printf("rows                 %llu\n",
              static_cast<unsigned long long>(d.size()));
  std::printf("qubits               %u (%u data + %zu ancilla)\n",
              circ.qubit_count(), circ.data_qubits, circ.ancilla_init.size());
  std::printf("gates                %zu\n", circ.gates.size());
  std::printf("t count              %zu\n", qdp::t_count(circ));
  std::printf("magic states used    %llu\n",
              static_cast<unsigned long long>(res.magic_uses));
  std::printf("interaction rounds   %llu (one per T gadget)\n",
              static_cast<unsigned long long>(res.interactions));
  std::printf("corrections applied  %llu\n",
              static_cast<unsigned long long>(res.corrections));
  std::printf("query value (plain)  %s\n", g17(alpha_plain).c_str());
  std::printf("query value (cipher) %s\n", g17(alpha_cipher).c_str());
  std::printf("fidelity             %s\n", g17(fid).c_str());

  if (debug) {
    std::printf("transcript (gate target controls a_delta b_delta interaction"
                " corrected measured):\n");
    const char* names[] = {"x",   "z",   "s",       "sdg", "t",
                           "tdg", "h",   "cnot",    "toffoli", "mcx"};
    for (const auto& e : res.transcript) {
      std::string ctl;
      for (auto c : e.gate.controls) ctl += std::to_string(c) + " ";
      if (ctl.empty()) ctl = "-";
      std::printf("  %-4s t=%u c=%s a^=%llx b^=%llx %d %d %d\n",
                  names[static_cast<int>(e.gate.kind)], e.gate.target,
                  ctl.c_str(), static_cast<unsigned long long>(e.a_delta),
                  static_cast<unsigned long long>(e.b_delta),
                  e.interaction ? 1 : 0, e.corrected ? 1 : 0, e.measured);
    }
  }

  if (fid < 1.0 - 1e-10) {
    std::printf("FIDELITY FAILURE (below 1 - 1e-10)\n");
    return 1;
  }
  std::printf("plaintext and homomorphic paths agree\n");
  return 0;
}

// ---------------------------------------------------------------------------
// sweep: grid experiment over (M | t) x trial cells, deterministic CSV.

struct SweepArgs {
  std::string schema_path, data_path, query_text, mechanism = "qae";
  std::vector<std::uint64_t> m_list = {8, 16, 32, 64};
  std::vector<std::uint64_t> t_list = {16, 64, 256, 1024};
  std::uint64_t k = 1, median = 1, trials = 100, seed = 0, threads = 0;
  std::string dp_mode = "none";
  double epsilon = 1.0;
  std::string output = "sweep.csv";
  bool debug = false;
};

int cmd_sweep(const SweepArgs& a) {
  const auto d = load(a.schema_path, a.data_path);
  const auto q = qdp::parse_query(a.query_text, d.schema());
  const auto frac = qdp::eval_dataset(q, d);
  const double alpha =
      static_cast<double>(frac.num) / static_cast<double>(frac.den);

  const auto& grid = a.mechanism == "direct" ? a.t_list : a.m_list;
  const std::size_t cells = grid.size() * a.trials;
  std::vector<CsvRow> rows(cells);

  auto run_cell = [&](std::size_t idx) {
    const std::uint64_t g = grid[idx / a.trials];
    const std::uint64_t trial = idx % a.trials;
    CsvRow row;
    row.mechanism = a.mechanism;
    row.n = d.size();
    row.epsilon = a.epsilon;
    if (a.mechanism == "direct") {
      qdp::DirectConfig cfg;
      cfg.t = g;
      cfg.k = a.k;
      cfg.epsilon = a.epsilon;
      cfg.seed = qdp::derive_seed(a.seed, "sweep", idx);
      const auto rep = qdp::run_direct(d, q, cfg);
      row.t = std::to_string(g);
      row.alpha_hat = rep.answer;
      row.eps_spent = rep.eps_prime;
      row.delta_spent = rep.delta;
      row.seed = cfg.seed;
    } else {
      qdp::QaeConfig cfg;
      cfg.M = g;
      cfg.dp_mode = parse_dp_mode(a.dp_mode);
      cfg.epsilon = a.epsilon;
      cfg.seed = qdp::derive_seed(a.seed, "sweep", idx);
      const double est =
          a.median > 1 ? qdp::median_amplify(d, q, cfg, a.median).alpha_hat
                       : qdp::run_qae(d, q, cfg).alpha_hat;
      row.m = std::to_string(g);
      row.t = std::to_string(a.median);
      row.dp_mode = a.dp_mode;
      row.alpha_hat = est;
      if (cfg.dp_mode == qdp::DpMode::none) {
        row.eps_spent = INFINITY;
        row.delta_spent = 0.0;
      } else {
        row.eps_spent = a.epsilon * static_cast<double>(a.median);
        row.delta_spent = 0.0;
      }
      row.seed = cfg.seed;
    }
    if (a.debug) {
      row.alpha_true = g17(alpha);
      row.abs_error = g17(std::abs(row.alpha_hat - alpha));
    }
    rows[idx] = row;
  };

  // Cells own derived seeds, so any schedule gives identical rows; the
  // write below is ordered by index either way.
  const std::size_t workers =
      a.threads ? a.threads
                : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < cells;
           i = next.fetch_add(1)) {
        run_cell(i);
      }
    });
  }
  for (auto& th : pool) th.join();

  write_csv(a.output, rows);
  std::printf("%zu rows written to %s\n", cells, a.output.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differentially private counting queries over basis-encoded data"};
  app.require_subcommand(1);

  QueryArgs qa;
  auto* cq = app.add_subcommand("query", "run one query through a mechanism");
  cq->add_option("--schema", qa.schema_path, "schema file")->required();
  cq->add_option("--data", qa.data_path, "dataset csv")->required();
  cq->add_option("--query", qa.query_text, "predicate text")->required();
  cq->add_option("--mechanism", qa.mechanism, "direct | qae");
  cq->add_option("--t", qa.t, "direct: samples drawn");
  cq->add_option("--k", qa.k, "direct: privacy radius (0 = no laplace)");
  cq->add_option("--M", qa.m, "qae: phase grid size");
  cq->add_option("--dp-mode", qa.dp_mode, "qae: none | post_laplace | phase_noise");
  cq->add_option("--median", qa.median, "qae: median-of repetitions");
  cq->add_option("--epsilon", qa.epsilon, "privacy parameter");
  cq->add_option("--depol", qa.depol, "depolarizing layer strengths")
      ->delimiter(',');
  cq->add_option("--depol-dim", qa.depol_dim, "depolarizing Hilbert dimension");
  cq->add_option("--seed", qa.seed, "root seed");
  cq->add_option("--output", qa.output, "append a CSV row to this file");
  cq->add_flag("--debug", qa.debug, "print raw, non-private diagnostics");

  std::string table;
  std::uint64_t rep_seed = 0;
  std::string rep_output;
  auto* cr = app.add_subcommand("reproduce", "re-derive reference tables");
  cr->add_option("table", table, "accounting | scaling | confidence")
      ->required();
  cr->add_option("--seed", rep_seed, "root seed");
  cr->add_option("--output", rep_output, "CSV path for scaling rows");

  std::string dm_schema, dm_data, dm_query;
  std::uint64_t dm_seed = 0;
  bool dm_debug = false;
  auto* cd = app.add_subcommand("qotp-demo",
                                "run a query homomorphically over encrypted data");
  cd->add_option("--schema", dm_schema, "schema file")->required();
  cd->add_option("--data", dm_data, "dataset csv")->required();
  cd->add_option("--query", dm_query, "predicate text")->required();
  cd->add_option("--seed", dm_seed, "root seed");
  cd->add_flag("--debug", dm_debug, "dump the execution transcript");

  SweepArgs sa;
  auto* cs = app.add_subcommand("sweep", "grid experiment, one CSV row per run");
  cs->add_option("--schema", sa.schema_path, "schema file")->required();
  cs->add_option("--data", sa.data_path, "dataset csv")->required();
  cs->add_option("--query", sa.query_text, "predicate text")->required();
  cs->add_option("--mechanism", sa.mechanism, "direct | qae");
  cs->add_option("--m-list", sa.m_list, "qae grid sizes")->delimiter(',');
  cs->add_option("--t-list", sa.t_list, "direct sample counts")->delimiter(',');
  cs->add_option("--k", sa.k, "direct privacy radius");
  cs->add_option("--median", sa.median, "qae median-of repetitions");
  cs->add_option("--dp-mode", sa.dp_mode, "qae dp mode");
  cs->add_option("--epsilon", sa.epsilon, "privacy parameter");
  cs->add_option("--trials", sa.trials, "runs per grid point");
  cs->add_option("--seed", sa.seed, "root seed");
  cs->add_option("--threads", sa.threads, "worker threads (0 = hardware)");
  cs->add_option("--output", sa.output, "CSV output path");
  cs->add_flag("--debug", sa.debug, "record true alpha and abs error");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cq) return cmd_query(qa);
    if (*cr) {
      if (table == "accounting") return reproduce_accounting();
      if (table == "scaling") return reproduce_scaling(rep_seed, rep_output);
      if (table == "confidence") return reproduce_confidence(rep_seed);
      std::cerr << "unknown table: " << table
                << " (expected accounting, scaling, or confidence)\n";
      return 2;
    }
    if (*cd) return cmd_qotp_demo(dm_schema, dm_data, dm_query, dm_seed, dm_debug);
    if (*cs) return cmd_sweep(sa);
  } catch (const qdp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
