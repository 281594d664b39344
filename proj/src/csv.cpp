#include "chainsim/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace chainsim {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("failed to format double");
  return std::string(buf, end);
}

void write_round_csv(std::ostream& out, std::span<const RoundMetrics> rows) {
  out << kRoundCsvHeader << '\n';
  for (const RoundMetrics& r : rows) {
    out << r.round << ',' << r.alive << ',' << r.dead_cumulative << ','
        << format_double(r.residual_total) << ',' << format_double(r.energy_spent) << ','
        << r.bits_to_sink << ',' << r.packets_to_sink;
    for (Bits b : r.bits_by_region) out << ',' << b;
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << kSummaryCsvHeader << '\n';
  for (const SummaryRow& row : rows) {
    const SummaryMetrics& s = row.summary;
    out << to_string(row.protocol) << ',' << row.seed << ',' << s.first_death_round.value_or(-1)
        << ',' << s.last_death_round.value_or(-1) << ',' << s.instability_period << ','
        << s.total_packets << '\n';
  }
}

}  // namespace chainsim
