/*
 * Copyright 2026 The nord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "nord/finite_field.hpp"

namespace nord {

using Row = std::vector<Elem>;
using Matrix = std::vector<Row>;

Elem dot(const Field& f, const Row& a, const Row& b);
int hamming_weight(const Row& v);

/// Reduced row echelon form with zero rows dropped.
Matrix rref(const Field& f, Matrix m);
int rank(const Field& f, const Matrix& m);

/// Basis (in reduced row echelon form) of {y : m * y^T = 0} in F^ncols.
Matrix nullspace(const Field& f, const Matrix& m, int ncols);

/// Whether v lies in the row space of a matrix already in reduced row
/// echelon form.
bool in_row_space(const Field& f, const Matrix& reduced, const Row& v);

}  // namespace nord
