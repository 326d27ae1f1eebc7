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

#include "qdp/accountant.hpp"

#include <cstdio>
#include <ostream>

#include "qdp/errors.hpp"
#include "qdp/state.hpp"

namespace qdp {

const char* to_string(SpendSource source) {
  switch (source) {
    case SpendSource::direct:
      return "direct";
    case SpendSource::qae_post:
      return "qae_post";
    case SpendSource::qae_phase:
      return "qae_phase";
    case SpendSource::depolarizing:
      return "depolarizing";
    case SpendSource::post_process:
      return "post_process";
  }
  return "unknown";
}

void BudgetLedger::record(std::string label, double epsilon, double delta,
                          SpendSource source) {
  if (epsilon < 0.0)
    throw NegativeBudgetError("epsilon must be non-negative: " + label);
  if (delta < 0.0 || delta > 1.0)
    throw NegativeBudgetError("delta must lie in [0, 1]: " + label);
  entries_.push_back({std::move(label), epsilon, delta, source});
}

void BudgetLedger::record_post_processing(std::string label) {
  entries_.push_back({std::move(label), 0.0, 0.0, SpendSource::post_process});
}

BudgetLedger::Totals BudgetLedger::totals() const {
  Totals t;
  for (const BudgetEntry& e : entries_) {
    t.epsilon += e.epsilon;
    t.delta += e.delta;
  }
  if (t.delta > 1.0) {
    t.delta = 1.0;
    t.delta_capped = true;  // a vacuous guarantee; callers should warn
  }
  return t;
}

void BudgetLedger::write_csv(std::ostream& out) const {
  out << "label,epsilon,delta,source\n";
  char buf[64];
  for (const BudgetEntry& e : entries_) {
    out << e.label << ',';
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,", e.epsilon, e.delta);
    out << buf << to_string(e.source) << '\n';
  }
}

void BudgetLedger::write_report(std::ostream& out) const {
  char buf[128];
  out << "privacy ledger\n";
  for (const BudgetEntry& e : entries_) {
    std::snprintf(buf, sizeof(buf), "  %-24s eps=%-12.6g delta=%-12.6g %s\n",
                  e.label.c_str(), e.epsilon, e.delta, to_string(e.source));
    out << buf;
  }
  const Totals t = totals();
  std::snprintf(buf, sizeof(buf), "  total: eps=%.6g delta=%.6g%s\n", t.epsilon, t.delta,
                t.delta_capped ? " (delta capped at 1; guarantee is vacuous)" : "");
  out << buf;
}

BudgetLedger::Totals total_with_depolarizing(BudgetLedger& ledger,
                                             const DepolarizingSpec& spec,
                                             std::uint64_t n) {
  const double p = compose_depolarizing(spec.probs);
  const double tau = trace_distance_bound(n);
  const double eps = depolarizing_epsilon(p, spec.dim, tau);
  ledger.record("depolarizing stack", eps, 0.0, SpendSource::depolarizing);
  return ledger.totals();
}

}  // namespace qdp
