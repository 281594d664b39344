#include "chainsim/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chainsim {

namespace {

void require_non_negative_bits(Bits k) {
  if (k < 0) throw std::invalid_argument("bit count must be non-negative");
}

Bits compress(Bits k, double factor) {
  // Relative slack absorbs binary representation error, so 0.6 * 2000 is
  // 1200 rather than 1201.
  const double scaled = static_cast<double>(k) * factor;
  return static_cast<Bits>(std::ceil(scaled - 1e-9 * scaled));
}

}  // namespace

void EnergyParams::validate() const {
  if (!(e_elec > 0.0) || !(e_amp > 0.0) || !(e_da > 0.0))
    throw std::invalid_argument("radio constants must be strictly positive");
  if (packet_bits <= 0) throw std::invalid_argument("packet_bits must be positive");
  if (!(da_factor > 0.0) || da_factor > 1.0)
    throw std::invalid_argument("da_factor must lie in (0, 1]");
}

double tx_cost(Bits k, double d, const EnergyParams& p) {
  require_non_negative_bits(k);
  if (!(d >= 0.0)) throw std::invalid_argument("distance must be non-negative");
  const double bits = static_cast<double>(k);
  return p.e_elec * bits + p.e_amp * bits * d * d;
}

double rx_cost(Bits k, const EnergyParams& p) {
  require_non_negative_bits(k);
  return p.e_elec * static_cast<double>(k);
}

double agg_cost(Bits k, const EnergyParams& p) {
  require_non_negative_bits(k);
  return p.e_da * static_cast<double>(k);
}

Bits aggregate_bits(Bits own, Bits received, const EnergyParams& p) {
  require_non_negative_bits(own);
  require_non_negative_bits(received);
  switch (p.aggregation) {
    case Aggregation::kAppend:
      return own + compress(received, p.da_factor);
    case Aggregation::kFused:
      return own;
  }
  return own;
}

const char* to_string(Aggregation a) noexcept {
  switch (a) {
    case Aggregation::kAppend: return "append";
    case Aggregation::kFused: return "fused";
  }
  return "append";
}

Aggregation parse_aggregation(const char* text) {
  const std::string_view s{text};
  if (s == "append") return Aggregation::kAppend;
  if (s == "fused") return Aggregation::kFused;
  throw std::invalid_argument("unknown aggregation mode: " + std::string{s});
}

}  // namespace chainsim
