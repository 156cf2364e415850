// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The surfseg Authors
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

#pragma once

#include <optional>
#include <span>

#include "surfseg/simd/kernels.hpp"
#include "surfseg/vec3.hpp"

namespace surfseg {

struct ElfOptions {
  /// Charges closer than this to the query are ignored (mm).
  double exclusion_radius = 0.75;
  /// Field falloff: E = sum (x - p) / |x - p|^power. 3 is the Coulomb field.
  int power = 3;
};

/// Unit-charge field of a fixed point set.
class ElfField {
 public:
  /// Unit charges.
  explicit ElfField(std::span<const Vec3> charges, const ElfOptions& options = {});
  /// Per-point charges; `weights` must match `charges` in length.
  ElfField(std::span<const Vec3> charges, std::span<const double> weights,
           const ElfOptions& options = {});

  /// Raw field vector at `query`.
  Vec3 field(const Vec3& query) const;

  /// Unit field direction, or nullopt where |E| < 1e-12.
  std::optional<Vec3> direction(const Vec3& query) const;

  const ElfOptions& options() const { return options_; }

 private:
  simd::ChargeSet charges_;
  ElfOptions options_;
  double exclusion_sq_;
};

/// One-shot form of ElfField::direction.
std::optional<Vec3> elf_field(std::span<const Vec3> charges, const Vec3& query,
                              const ElfOptions& options = {});

}  // namespace surfseg
