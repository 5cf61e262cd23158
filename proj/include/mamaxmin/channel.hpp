// ma-maxmin: movable-antenna base station simulation and max-min rate optimization
// Copyright (C) 2026 the ma-maxmin authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include "mamaxmin/rng.hpp"
#include "mamaxmin/types.hpp"

namespace mamaxmin {

/// Physical and solver parameters of one experiment.  Angles in radians,
/// distances in meters; gains/powers are stored in dB/dBm exactly as they
/// are configured and converted to linear units through the accessors below,
/// so all internal math runs in watts and meters.
struct ScenarioConfig {
  int antennas = 16;      ///< movable receive antennas at the BS
  int users = 12;         ///< single-antenna uplink users
  int paths = 10;         ///< propagation paths per user
  double lambda_m = 0.1;  ///< carrier wavelength
  double region_over_lambda = 3.0;    ///< side length of the square moving region, in wavelengths
  double min_dist_over_lambda = 0.5;  ///< minimum inter-antenna distance, in wavelengths
  double ref_gain_db = -40.0;         ///< channel gain at 1 m reference distance
  double pathloss_exp = 2.8;
  double noise_dbm = -80.0;
  double pmax_dbm = 10.0;  ///< per-user transmit power budget
  double dmin_m = 20.0;    ///< user distance lower bound
  double dmax_m = 100.0;   ///< user distance upper bound

  double bisection_tol = 1e-3;    ///< power-control search accuracy (linear SINR)
  double alternation_tol = 1e-3;  ///< combining/power alternation stop threshold (bps/Hz)
  int max_alternations = 200;

  double region_m() const { return region_over_lambda * lambda_m; }
  double min_dist_m() const { return min_dist_over_lambda * lambda_m; }
  double ref_gain() const { return db_to_linear(ref_gain_db); }
  double noise_w() const { return dbm_to_watts(noise_dbm); }
  double pmax_w() const { return dbm_to_watts(pmax_dbm); }

  /// Throws ConfigError on any violated constraint (users > antennas,
  /// non-positive region, ...).
  void validate() const;
};

/// Per-user stochastic channel state: distance, per-path angles of arrival,
/// and the complex path-response coefficients at the region center.
struct UserChannelParams {
  double distance_m = 0.0;
  RVector elevations;  ///< per-path elevation AoA
  RVector azimuths;    ///< per-path azimuth AoA
  CVector path_gains;  ///< per-path complex response coefficient
};

/// Antenna position vector: stacked (x, y) coordinates of all movable
/// antennas in meters, relative to the region center.  This is the decision
/// variable of the position optimizer.
struct Apv {
  RVector coords;  ///< [x_0, y_0, x_1, y_1, ...]

  Apv() = default;
  explicit Apv(RVector c) : coords(std::move(c)) {}

  int count() const { return static_cast<int>(coords.size()) / 2; }
  double x(int m) const { return coords[2 * m]; }
  double y(int m) const { return coords[2 * m + 1]; }

  bool inside_region(double side_m, double tol = 0.0) const;
};

/// Channel-knowledge error model: uniform angle error of support
/// [-max_aoa_error/2, max_aoa_error/2] and complex Gaussian path-gain error
/// of variance prv_error_var, normalized by the coefficient magnitude.
struct FriErrorModel {
  double max_aoa_error = 0.0;
  double prv_error_var = 0.0;
};

/// Draw one multiuser scenario: distances uniform in [dmin, dmax], per-path
/// AoAs uniform in [-pi/2, pi/2], and path gains i.i.d. complex Gaussian with
/// variance ref_gain * d^-alpha / paths so the expected channel gain does not
/// depend on the number of paths.
std::vector<UserChannelParams> generate_scenario(const ScenarioConfig& cfg, RngStream& rng);

/// Propagation phase difference (in meters of path length) between an antenna
/// at (x, y) and the region center, for a plane wave from the given AoAs.
double phase_difference(double x, double y, double elevation, double azimuth);

/// Per-path unit-modulus phase response of an antenna at (x, y).
CVector field_response_vector(double x, double y, const UserChannelParams& user, double lambda_m);

/// Receive channel vector for one user over all antenna positions:
/// entry m is the conjugate field response at position m applied to the
/// user's path gains.
CVector channel_vector(const Apv& apv, const UserChannelParams& user, double lambda_m);

/// Channel matrix with one column per user.
CMatrix channel_matrix(const Apv& apv, const std::vector<UserChannelParams>& users,
                       double lambda_m);

/// Produce the ESTIMATED channel knowledge from the actual one: estimated
/// AoAs differ by a uniform error in [-mu/2, mu/2], estimated path gains by a
/// magnitude-normalized complex Gaussian error of variance delta.  The input
/// (actual) parameters are not modified.
std::vector<UserChannelParams> perturb_fri(const std::vector<UserChannelParams>& users,
                                           const FriErrorModel& err, RngStream& rng);

} // namespace mamaxmin
