// Copyright 2026 The sclego Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCLEGO_RNG_HPP
#define SCLEGO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace sclego {

// Deterministic standard-normal sampler.
//
// std::normal_distribution is not pinned by the standard, so identical seeds
// can produce different streams across standard libraries. To make simulated
// trajectories reproducible byte for byte we fix the whole pipeline:
//
//   engine    std::mt19937_64 seeded directly with the scenario seed
//   uniform   u = (x >> 11) * 2^-53 + 2^-54, with x one raw engine draw,
//             so u lies strictly inside (0, 1)
//   normal    Box-Muller on consecutive uniforms (u1, u2):
//               r = sqrt(-2 ln u1), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2)
//             z0 is returned first, z1 is cached for the next call.
//
// Any change to this sequence is a breaking change for stored trajectories.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    const std::uint64_t x = engine_();
    return static_cast<double>(x >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sclego

#endif  // SCLEGO_RNG_HPP
