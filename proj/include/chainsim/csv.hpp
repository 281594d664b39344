#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "chainsim/config.hpp"
#include "chainsim/metrics.hpp"

namespace chainsim {

inline constexpr std::string_view kRoundCsvHeader =
    "round,alive,dead,residual_j,spent_j,bits_to_sink,packets_to_sink,"
    "bits_r0,bits_r1,bits_r2,bits_r3";

inline constexpr std::string_view kSummaryCsvHeader =
    "protocol,seed,first_death_round,last_death_round,instability,total_packets";

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

void write_round_csv(std::ostream& out, std::span<const RoundMetrics> rows);

struct SummaryRow {
  Protocol protocol;
  std::uint64_t seed;
  SummaryMetrics summary;
};

/// Undefined death rounds are written as -1.
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace chainsim
