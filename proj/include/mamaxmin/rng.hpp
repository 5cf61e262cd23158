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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace mamaxmin {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_ids(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

} // namespace detail

/// Deterministic random stream identified by (seed, stream_id).
///
/// Streams are plain values: copying one forks an independent cursor, and
/// child streams derived with split() depend only on the identifiers, never
/// on how many draws were consumed.  Monte Carlo runs therefore reproduce
/// exactly regardless of how trials are scheduled across workers.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed),
        id_(stream_id),
        engine_(detail::mix_ids(detail::splitmix64(seed), stream_id)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return id_; }

  /// Child stream with identity (seed, mix(stream_id, tag)).  Independent of
  /// the parent's cursor position.
  RngStream split(std::uint64_t tag) const {
    return RngStream(seed_, detail::mix_ids(id_, tag));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw in [lo, hi].  Requires lo <= hi; lo == hi returns lo while
  /// still consuming one draw, so draw counts do not depend on the bounds.
  double uniform(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("RngStream::uniform: lo > hi");
    const double u = unit();
    return lo + u * (hi - lo);
  }

  /// Circularly symmetric complex Gaussian draw: real and imaginary parts
  /// are independent zero-mean normals of variance/2 each.  variance == 0
  /// returns exactly 0 while consuming the same number of draws.
  std::complex<double> cscg(double variance) {
    if (variance < 0.0) throw std::invalid_argument("RngStream::cscg: variance < 0");
    // Box-Muller on (0,1] x [0,1).
    const double u1 = 1.0 - unit();
    const double u2 = unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    const double scale = std::sqrt(variance / 2.0);
    return {scale * radius * std::cos(angle), scale * radius * std::sin(angle)};
  }

 private:
  // 53-bit mantissa draw in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t seed_;
  std::uint64_t id_;
  std::mt19937_64 engine_;
};

} // namespace mamaxmin
