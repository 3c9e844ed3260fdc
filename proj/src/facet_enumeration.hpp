// Copyright 2026 The corrpoly Authors
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

#pragma once

#include <vector>

#include "corrpoly/polytope.hpp"

namespace corrpoly::detail {

// Facets of the convex hull of full-dimensional vertex sets, normalized so
// that the first nonzero coefficient is +1 or -1 and sorted by (support
// size, bound, coefficients).
std::vector<Inequality> enumerate_hull_facets(const std::vector<Vertex>& vertices,
                                              std::size_t dimension);

}  // namespace corrpoly::detail
