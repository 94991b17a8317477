#pragma once

#include <iosfwd>
#include <vector>

#include "sigsel/ranking.hpp"
#include "sigsel/sim/experiment.hpp"

namespace sigsel::io {

// method,order,kendall_tau_vs_expected  (order rendered "p1 < p4 < ...")
void write_ranking_table(std::ostream& out, const sim::ExperimentReport& report);

// provider,scheme,confidence,discarded,spd_nrmse,lpd_nrmse,error
void write_nrmse_table(std::ostream& out, const sim::ExperimentReport& report);

// rank,provider,score for a single ranking.
void write_ranking_csv(std::ostream& out, const RankingReport& report);

}  // namespace sigsel::io
