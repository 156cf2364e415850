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

#include "surfseg/elf.hpp"

#include <vector>

#include "surfseg/volume.hpp"

namespace surfseg {

ElfField::ElfField(std::span<const Vec3> charges, const ElfOptions& options)
    : ElfField(charges, std::vector<double>(charges.size(), 1.0), options) {}

ElfField::ElfField(std::span<const Vec3> charges, std::span<const double> weights,
                   const ElfOptions& options)
    : options_(options), exclusion_sq_(options.exclusion_radius * options.exclusion_radius) {
  if (charges.empty()) throw InputError("field needs at least one charge");
  if (weights.size() != charges.size()) throw InputError("one weight per charge required");
  if (options.power < 3 || options.power % 2 == 0) {
    throw InputError("field power must be an odd integer >= 3");
  }
  if (!(options.exclusion_radius >= 0.0)) throw InputError("exclusion radius must be >= 0");
  charges_.x.reserve(charges.size());
  charges_.y.reserve(charges.size());
  charges_.z.reserve(charges.size());
  charges_.q.reserve(charges.size());
  for (std::size_t i = 0; i < charges.size(); ++i) {
    charges_.push_back(charges[i].x, charges[i].y, charges[i].z, weights[i]);
  }
}

Vec3 ElfField::field(const Vec3& query) const {
  const simd::FieldSum s =
      simd::field_sum(charges_, query.x, query.y, query.z, exclusion_sq_, options_.power);
  return {s.x, s.y, s.z};
}

std::optional<Vec3> ElfField::direction(const Vec3& query) const {
  const Vec3 e = field(query);
  const double len = norm(e);
  if (!(len >= 1e-12)) return std::nullopt;
  return e * (1.0 / len);
}

std::optional<Vec3> elf_field(std::span<const Vec3> charges, const Vec3& query,
                              const ElfOptions& options) {
  return ElfField(charges, options).direction(query);
}

}  // namespace surfseg
