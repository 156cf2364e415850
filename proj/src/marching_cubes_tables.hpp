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

#include <array>
#include <cstdint>

namespace surfseg::detail {

extern const std::int8_t kTriTable[256][16];

/// Cube corner offsets (x, y, z).
inline constexpr std::array<std::array<int, 3>, 8> kCorner = {{{0, 0, 0},
                                                               {1, 0, 0},
                                                               {1, 1, 0},
                                                               {0, 1, 0},
                                                               {0, 0, 1},
                                                               {1, 0, 1},
                                                               {1, 1, 1},
                                                               {0, 1, 1}}};

/// Cube edges as corner pairs.
inline constexpr std::array<std::array<int, 2>, 12> kEdgeCorners = {{{0, 1},
                                                                     {1, 2},
                                                                     {2, 3},
                                                                     {3, 0},
                                                                     {4, 5},
                                                                     {5, 6},
                                                                     {6, 7},
                                                                     {7, 4},
                                                                     {0, 4},
                                                                     {1, 5},
                                                                     {2, 6},
                                                                     {3, 7}}};

}  // namespace surfseg::detail
