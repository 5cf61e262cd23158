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

#include <stdexcept>

namespace mamaxmin {

/// A factorization pivot fell below the singularity threshold, or the
/// computed solution failed the residual bound.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Channel matrix does not have full column rank (zero-forcing is undefined).
class RankDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A combiner column is identically zero.
class DegenerateCombiner : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fixed antenna grid does not fit into the movement region.
class RegionTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value or file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File read/write failure; the message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

} // namespace mamaxmin
