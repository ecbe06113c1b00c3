#pragma once

#include <string>
#include <utility>
#include <vector>

#include "optfprl/harness.hpp"

namespace optfprl {

// Writes one run as CSV. Comment rows (leading '#') carry the run config and
// the metrics summary; the data columns are
//   t,algo,strategy,loss,comparator_loss,regret_cum,regret_avg,epsilon,
//   sigma_cum,state_norm,pruned,delta
// with `strategy` empty for baselines and `delta` empty unless the recursive
// schedule ran. Output is byte-deterministic for fixed inputs.
void export_csv(const Trace& trace, const MetricsReport& report, const RunConfig& config,
                const std::string& path);

// Self-contained SVG of average regret (regret_cum / t) against t, one
// polyline per labeled trace plus a legend. Byte-deterministic.
void render_chart(const std::vector<std::pair<std::string, const Trace*>>& traces,
                  const std::string& path);

}  // namespace optfprl
