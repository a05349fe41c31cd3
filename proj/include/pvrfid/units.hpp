/*
 * Copyright (c) 2026, pvrfid contributors.
 * All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cmath>
#include <stdexcept>

namespace pvrfid {

inline constexpr double speed_of_light_m_per_s = 299792458.0;

inline double dbm_to_watts(double p_dbm) {
  return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double p_w) {
  if (!(p_w > 0.0))
    throw std::domain_error("watts_to_dbm: power must be > 0 W");
  return 10.0 * std::log10(p_w) + 30.0;
}

inline double wavelength_m(double frequency_hz) {
  if (!(frequency_hz > 0.0))
    throw std::domain_error("wavelength_m: frequency must be > 0 Hz");
  return speed_of_light_m_per_s / frequency_hz;
}

} // namespace pvrfid
