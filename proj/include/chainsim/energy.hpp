#pragma once

#include <cstdint>

namespace chainsim {

using Bits = std::int64_t;

/// How a node combines its own packet with the bits it received from its
/// children before forwarding.
enum class Aggregation {
  /// own + ceil(da_factor * received): only the received payload is compressed.
  kAppend,
  /// Received data is fused into the node's own packet; output is always
  /// `own` and da_factor is unused.
  kFused,
};

/// First-order radio model constants.
struct EnergyParams {
  double e_elec = 50e-9;   // J/bit, transmitter or receiver electronics
  double e_amp = 100e-12;  // J/bit/m^2, transmit amplifier
  double e_da = 50e-9;     // J/bit, data aggregation
  Bits packet_bits = 2000;
  double da_factor = 0.6;
  Aggregation aggregation = Aggregation::kFused;

  /// Throws std::invalid_argument unless every constant is positive and
  /// 0 < da_factor <= 1.
  void validate() const;
};

/// Energy to transmit `k` bits over `d` meters: e_elec*k + e_amp*k*d^2.
double tx_cost(Bits k, double d, const EnergyParams& p);

/// Energy to receive `k` bits.
double rx_cost(Bits k, const EnergyParams& p);

/// Energy to aggregate `k` received bits.
double agg_cost(Bits k, const EnergyParams& p);

/// Size of the packet a node forwards after merging `received` child bits
/// into its own `own` bits. Rounds up so energy is never undercounted.
Bits aggregate_bits(Bits own, Bits received, const EnergyParams& p);

const char* to_string(Aggregation a) noexcept;
Aggregation parse_aggregation(const char* text);

}  // namespace chainsim
