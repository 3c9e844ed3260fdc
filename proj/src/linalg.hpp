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

#include <optional>

#include "corrpoly/lp.hpp"

namespace corrpoly::linalg {

using lp::Matrix;
using lp::Vector;

// Row-reduces in place to reduced row echelon form and returns the pivot
// column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

// The unique (up to scale) nonzero kernel vector of m when its kernel is
// one-dimensional; nullopt otherwise. The free coordinate is set to one.
std::optional<Vector> kernel_line(Matrix m);

}  // namespace corrpoly::linalg
