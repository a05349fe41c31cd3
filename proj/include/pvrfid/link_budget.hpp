/*
 * Copyright (c) 2026, pvrfid contributors.
 * All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pvrfid/csv.hpp"
#include "pvrfid/errors.hpp"
#include "pvrfid/units.hpp"

// Forward-link power and read-range model for a backscatter tag.
//
// The forward link delivers P_TX * G_tag * G_reader * tau * (lambda/(4*pi*d))^2
// to the IC; the tag responds while that power is at or above the IC
// sensitivity of the active mode. All internal arithmetic is in watts, dB only
// at the API boundary.

namespace pvrfid {

struct LinkParams {
  // Reader transmit power. When eirp_mode is set this is the radiated EIRP
  // and g_product covers only the tag-side (and any residual) gains.
  double p_tx_dbm = 30.0;
  double g_product = 0.8;   // combined antenna gain, linear
  double tau = 0.8;         // transmission coefficient, [0, 1]
  double frequency_hz = 915e6;
  bool eirp_mode = false;

  void validate(const std::string& prefix = "") const {
    if (!std::isfinite(p_tx_dbm))
      throw validation_error(prefix + "p_tx_dbm must be finite");
    if (!(g_product > 0.0))
      throw validation_error(prefix + "g_product must be > 0 (got " +
                             format_double(g_product) + ")");
    if (!(tau >= 0.0 && tau <= 1.0))
      throw validation_error(prefix + "tau must be within [0, 1] (got " +
                             format_double(tau) + ")");
    if (!(frequency_hz > 0.0))
      throw validation_error(prefix + "frequency_hz must be > 0 (got " +
                             format_double(frequency_hz) + ")");
  }
};

// Thresholds and load of a dual-mode (passive / externally powered) tag IC.
struct IcProfile {
  double sensitivity_passive_dbm = -21.0;
  double sensitivity_semipassive_dbm = -31.0;
  double v_readwrite = 1.5;  // minimum voltage for read/write operation, V
  double v_eeprom = 3.0;     // EEPROM write threshold, V
  double i_operating = 10e-6; // active draw, A
  double duty_cycle = 1.0;   // fraction of time the active draw applies

  double effective_load_a() const { return duty_cycle * i_operating; }

  void validate(const std::string& prefix = "") const {
    if (!std::isfinite(sensitivity_passive_dbm) ||
        !std::isfinite(sensitivity_semipassive_dbm))
      throw validation_error(prefix + "sensitivities must be finite");
    if (!(sensitivity_semipassive_dbm <= sensitivity_passive_dbm))
      throw validation_error(prefix +
                             "sensitivity_semipassive_dbm must be <= sensitivity_passive_dbm (got " +
                             format_double(sensitivity_semipassive_dbm) + " > " +
                             format_double(sensitivity_passive_dbm) + ")");
    if (!(v_readwrite > 0.0))
      throw validation_error(prefix + "v_readwrite must be > 0 (got " +
                             format_double(v_readwrite) + ")");
    if (!(v_readwrite <= v_eeprom))
      throw validation_error(prefix + "v_eeprom must be >= v_readwrite (got " +
                             format_double(v_eeprom) + " < " +
                             format_double(v_readwrite) + ")");
    if (!(i_operating >= 0.0))
      throw validation_error(prefix + "i_operating must be >= 0 (got " +
                             format_double(i_operating) + ")");
    if (!(duty_cycle >= 0.0 && duty_cycle <= 1.0))
      throw validation_error(prefix + "duty_cycle must be within [0, 1] (got " +
                             format_double(duty_cycle) + ")");
  }
};

// Frequency-dependent transmission coefficient as an ordered sample table.
// Evaluation interpolates linearly and clamps at the endpoints.
struct MatchingProfile {
  std::vector<std::pair<double, double>> points; // (frequency_hz, tau)

  double tau_at(double frequency_hz) const {
    if (points.empty())
      throw std::domain_error("MatchingProfile: empty table");
    if (frequency_hz <= points.front().first) return points.front().second;
    if (frequency_hz >= points.back().first) return points.back().second;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (frequency_hz <= points[i].first) {
        const auto& [f0, t0] = points[i - 1];
        const auto& [f1, t1] = points[i];
        const double w = (frequency_hz - f0) / (f1 - f0);
        return t0 + w * (t1 - t0);
      }
    }
    return points.back().second; // unreachable
  }

  void validate(const std::string& prefix = "") const {
    if (points.empty())
      throw validation_error(prefix + "matching table must have >= 1 point");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!(points[i].first > 0.0))
        throw validation_error(prefix + "matching frequencies must be > 0");
      if (i > 0 && !(points[i].first > points[i - 1].first))
        throw validation_error(prefix + "matching frequencies must be strictly increasing");
      if (!(points[i].second >= 0.0 && points[i].second <= 1.0))
        throw validation_error(prefix + "matching tau values must be within [0, 1]");
    }
  }
};

// Power delivered to the IC at the given separation, in dBm.
// Returns -infinity when tau or the delivered power is exactly zero.
inline double received_power_dbm(const LinkParams& link, double distance_m) {
  if (!(distance_m > 0.0))
    throw std::domain_error("received_power_dbm: distance must be > 0 m");
  const double lambda = wavelength_m(link.frequency_hz);
  const double spread = lambda / (4.0 * std::numbers::pi * distance_m);
  const double p_ic_w =
      dbm_to_watts(link.p_tx_dbm) * link.g_product * link.tau * spread * spread;
  if (p_ic_w == 0.0) return -std::numeric_limits<double>::infinity();
  return watts_to_dbm(p_ic_w);
}

// Maximum separation at which the IC still receives sensitivity_dbm:
// d = lambda/(4*pi) * sqrt(P_TX * g * tau / P_IC_min).
inline double read_range_m(const LinkParams& link, double sensitivity_dbm) {
  if (!std::isfinite(sensitivity_dbm))
    throw std::domain_error("read_range_m: sensitivity must be finite");
  const double p_ic_w = dbm_to_watts(sensitivity_dbm);
  const double p_fwd_w = dbm_to_watts(link.p_tx_dbm) * link.g_product * link.tau;
  return wavelength_m(link.frequency_hz) / (4.0 * std::numbers::pi) *
         std::sqrt(p_fwd_w / p_ic_w);
}

// Semi-passive over passive range ratio. Depends only on the two
// sensitivities: 10^((S_passive - S_semipassive) / 20).
inline double range_ratio(const IcProfile& ic) {
  return std::pow(10.0, (ic.sensitivity_passive_dbm -
                         ic.sensitivity_semipassive_dbm) / 20.0);
}

struct SweepPoint {
  double frequency_hz = 0.0;
  double d_passive_m = 0.0;
  double d_semipassive_m = 0.0;
};

// Read range for both modes over [f_lo, f_hi] with tau taken from the
// matching table at each frequency.
inline std::vector<SweepPoint> range_sweep(LinkParams link, const IcProfile& ic,
                                           const MatchingProfile& matching,
                                           double f_lo_hz, double f_hi_hz,
                                           int n_points) {
  if (!(f_lo_hz > 0.0) || !(f_lo_hz < f_hi_hz))
    throw std::domain_error("range_sweep: need 0 < f_lo < f_hi");
  if (n_points < 2)
    throw std::domain_error("range_sweep: need n_points >= 2");
  std::vector<SweepPoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double f = f_lo_hz + (f_hi_hz - f_lo_hz) *
                                   static_cast<double>(i) / (n_points - 1);
    link.frequency_hz = f;
    link.tau = matching.tau_at(f);
    out.push_back({f, read_range_m(link, ic.sensitivity_passive_dbm),
                   read_range_m(link, ic.sensitivity_semipassive_dbm)});
  }
  return out;
}

inline MatchingProfile matching_profile_from_csv(std::istream& in) {
  MatchingProfile mp;
  for (const CsvRow& row : read_csv_rows(in, "frequency_hz,tau")) {
    if (row.fields.size() != 2)
      throw validation_error("line " + std::to_string(row.line_no) +
                             ": expected 2 fields, got " +
                             std::to_string(row.fields.size()));
    const double f = parse_double_field(row.fields[0], row.line_no, "frequency_hz");
    const double t = parse_double_field(row.fields[1], row.line_no, "tau");
    if (!mp.points.empty() && !(f > mp.points.back().first))
      throw validation_error("line " + std::to_string(row.line_no) +
                             ": frequencies must be strictly increasing");
    if (!(t >= 0.0 && t <= 1.0))
      throw validation_error("line " + std::to_string(row.line_no) +
                             ": tau must be within [0, 1] (got " +
                             format_double(t) + ")");
    mp.points.emplace_back(f, t);
  }
  mp.validate();
  return mp;
}

inline MatchingProfile matching_profile_from_csv(const std::string& path) {
  auto in = open_input(path);
  try {
    return matching_profile_from_csv(in);
  } catch (const validation_error& e) {
    throw validation_error(path + ": " + e.what());
  }
}

inline void write_sweep_csv(std::ostream& out,
                            const std::vector<SweepPoint>& sweep) {
  out << "frequency_hz,d_passive_m,d_semipassive_m\n";
  for (const SweepPoint& p : sweep)
    out << format_double(p.frequency_hz) << ',' << format_double(p.d_passive_m)
        << ',' << format_double(p.d_semipassive_m) << '\n';
}

} // namespace pvrfid
