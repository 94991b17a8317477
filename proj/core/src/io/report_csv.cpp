#include "sigsel/io/report_csv.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace sigsel::io {

namespace {

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string joined_order(const std::vector<std::string>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i != 0) out += " < ";
    out += order[i];
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_ranking_table(std::ostream& out, const sim::ExperimentReport& report) {
  out << "method,order,kendall_tau_vs_expected\n";
  for (const RankMethod m : {RankMethod::EXPECTED, RankMethod::SHORT_TERM, RankMethod::LPD, RankMethod::SPD}) {
    const auto it = report.rankings.find(m);
    if (it == report.rankings.end()) continue;
    out << to_string(m) << "," << joined_order(it->second.order) << ",";
    if (m == RankMethod::EXPECTED) {
      out << 1;
    } else if (const auto tau = report.kendall_vs_expected.find(m);
               tau != report.kendall_vs_expected.end() && tau->second) {
      out << number(*tau->second);
    }
    out << "\n";
  }
}

void write_nrmse_table(std::ostream& out, const sim::ExperimentReport& report) {
  out << "provider,scheme,confidence,discarded,spd_nrmse,lpd_nrmse,error\n";
  for (const auto& c : report.cells) {
    out << c.provider_id << "," << to_string(c.scheme) << ",";
    if (c.confidence) out << number(c.confidence->total);
    out << "," << (c.discarded ? "true" : "false") << ",";
    if (c.spd_nrmse) out << number(*c.spd_nrmse);
    out << ",";
    if (c.lpd_nrmse) out << number(*c.lpd_nrmse);
    out << ",";
    if (c.error) out << quoted(*c.error);
    out << "\n";
  }
}

void write_ranking_csv(std::ostream& out, const RankingReport& report) {
  out << "rank,provider,score\n";
  for (std::size_t i = 0; i < report.order.size(); ++i) {
    out << i + 1 << "," << report.order[i] << "," << number(report.scores.at(report.order[i])) << "\n";
  }
}

}  // namespace sigsel::io
