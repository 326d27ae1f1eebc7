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

#ifndef QDP_ACCOUNTANT_HPP_
#define QDP_ACCOUNTANT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdp/noise.hpp"

namespace qdp {

enum class SpendSource { direct, qae_post, qae_phase, depolarizing, post_process };

const char* to_string(SpendSource source);

struct BudgetEntry {
  std::string label;
  double epsilon = 0.0;
  double delta = 0.0;
  SpendSource source = SpendSource::direct;
};

// Sequential-composition ledger: totals are the sums of the recorded
// (epsilon, delta) pairs, recomputed from the entries on every call so they
// can never go stale.
class BudgetLedger {
 public:
  struct Totals {
    double epsilon = 0.0;
    double delta = 0.0;
    bool delta_capped = false;  // true when the raw sum exceeded 1
  };

  void record(std::string label, double epsilon, double delta, SpendSource source);

  // Post-processing (clamping, sin^2, unit rescaling, ...) is free; this
  // records an explicit zero-cost entry so audits show the transform ran.
  void record_post_processing(std::string label);

  Totals totals() const;
  const std::vector<BudgetEntry>& entries() const { return entries_; }

  void write_csv(std::ostream& out) const;
  void write_report(std::ostream& out) const;

 private:
  std::vector<BudgetEntry> entries_;
};

// Appends the depolarizing stack's epsilon for an n-row basis-encoded input
// (composed strength, trace-distance bound sqrt(2n-1)/n) and returns the new
// totals.
BudgetLedger::Totals total_with_depolarizing(BudgetLedger& ledger,
                                             const DepolarizingSpec& spec,
                                             std::uint64_t n);

}  // namespace qdp

#endif  // QDP_ACCOUNTANT_HPP_
