#pragma once

namespace nlolim {

inline constexpr const char* kSchema = "nlolim/1";
inline constexpr const char* kVersion = "0.1.0";

// Speed of light in atomic units (CODATA 2018 inverse fine-structure constant).
inline constexpr double kSpeedOfLight = 137.035999084;

// hbar in atomic units; kept symbolic so formulas read like their sources.
inline constexpr double kHbar = 1.0;

}  // namespace nlolim
