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

#include "mamaxmin/channel.hpp"

#include <cmath>
#include <string>

#include "mamaxmin/errors.hpp"

namespace mamaxmin {

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("scenario: " + msg); };
  if (antennas < 1) fail("M must be >= 1");
  if (users < 1) fail("K must be >= 1");
  if (users > antennas) fail("K must not exceed M (spatial-division access)");
  if (paths < 1) fail("L must be >= 1");
  if (!(lambda_m > 0.0)) fail("lambda_m must be > 0");
  if (!(region_over_lambda > 0.0)) fail("A_over_lambda must be > 0");
  if (!(min_dist_over_lambda > 0.0)) fail("D_over_lambda must be > 0");
  if (!(dmin_m > 0.0) || !(dmax_m >= dmin_m)) fail("user distance bounds must satisfy 0 < dmin <= dmax");
  if (!(pathloss_exp >= 0.0)) fail("alpha must be >= 0");
  if (!(bisection_tol > 0.0)) fail("epsilon must be > 0");
  if (!(alternation_tol > 0.0)) fail("xi must be > 0");
  if (max_alternations < 1) fail("bcd_max_iter must be >= 1");
}

bool Apv::inside_region(double side_m, double tol) const {
  const double half = side_m / 2.0 + tol;
  return (coords.array().abs() <= half).all();
}

std::vector<UserChannelParams> generate_scenario(const ScenarioConfig& cfg, RngStream& rng) {
  const int n_paths = cfg.paths;
  std::vector<UserChannelParams> users(cfg.users);
  for (auto& user : users) {
    user.distance_m = rng.uniform(cfg.dmin_m, cfg.dmax_m);
    user.elevations.resize(n_paths);
    user.azimuths.resize(n_paths);
    user.path_gains.resize(n_paths);
    for (int l = 0; l < n_paths; ++l) user.elevations[l] = rng.uniform(-M_PI / 2.0, M_PI / 2.0);
    for (int l = 0; l < n_paths; ++l) user.azimuths[l] = rng.uniform(-M_PI / 2.0, M_PI / 2.0);
    // Expected channel gain ref_gain * d^-alpha is split evenly over paths.
    const double path_var = cfg.ref_gain() * std::pow(user.distance_m, -cfg.pathloss_exp) / n_paths;
    for (int l = 0; l < n_paths; ++l) user.path_gains[l] = rng.cscg(path_var);
  }
  return users;
}

double phase_difference(double x, double y, double elevation, double azimuth) {
  return x * std::sin(elevation) * std::cos(azimuth) + y * std::cos(elevation);
}

CVector field_response_vector(double x, double y, const UserChannelParams& user,
                              double lambda_m) {
  const int n_paths = static_cast<int>(user.elevations.size());
  const double wavenumber = 2.0 * M_PI / lambda_m;
  CVector response(n_paths);
  for (int l = 0; l < n_paths; ++l) {
    const double phase = wavenumber * phase_difference(x, y, user.elevations[l], user.azimuths[l]);
    response[l] = Complex(std::cos(phase), std::sin(phase));
  }
  return response;
}

CVector channel_vector(const Apv& apv, const UserChannelParams& user, double lambda_m) {
  const int n_antennas = apv.count();
  CVector h(n_antennas);
  for (int m = 0; m < n_antennas; ++m) {
    // Eigen's dot() conjugates its first operand, giving f^H g.
    h[m] = field_response_vector(apv.x(m), apv.y(m), user, lambda_m).dot(user.path_gains);
  }
  return h;
}

CMatrix channel_matrix(const Apv& apv, const std::vector<UserChannelParams>& users,
                       double lambda_m) {
  CMatrix h(apv.count(), static_cast<Eigen::Index>(users.size()));
  for (Eigen::Index k = 0; k < h.cols(); ++k)
    h.col(k) = channel_vector(apv, users[static_cast<std::size_t>(k)], lambda_m);
  return h;
}

std::vector<UserChannelParams> perturb_fri(const std::vector<UserChannelParams>& users,
                                           const FriErrorModel& err, RngStream& rng) {
  if (err.max_aoa_error < 0.0 || err.prv_error_var < 0.0)
    throw std::invalid_argument("perturb_fri: error magnitudes must be >= 0");
  const double half_support = err.max_aoa_error / 2.0;
  std::vector<UserChannelParams> estimated = users;
  for (auto& user : estimated) {
    const int n_paths = static_cast<int>(user.elevations.size());
    for (int l = 0; l < n_paths; ++l)
      user.elevations[l] -= rng.uniform(-half_support, half_support);
    for (int l = 0; l < n_paths; ++l)
      user.azimuths[l] -= rng.uniform(-half_support, half_support);
    for (int l = 0; l < n_paths; ++l)
      user.path_gains[l] -= std::abs(user.path_gains[l]) * rng.cscg(err.prv_error_var);
  }
  return estimated;
}

} // namespace mamaxmin
