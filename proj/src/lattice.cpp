/*
 * Copyright 2026 The modwit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "modwit/lattice.hpp"

namespace modwit {

LatticeOrdering LatticeOrdering::symmetric_shells(long bound) {
  if (bound < 0) throw std::invalid_argument("lattice bound must be non-negative");
  return {Kind::kSymmetricShells, bound, bound, bound, false};
}

LatticeOrdering LatticeOrdering::paper_z2plus(long bound) {
  if (bound < 0) throw std::invalid_argument("lattice bound must be non-negative");
  return {Kind::kPaperZ2Plus, bound, bound, bound, false};
}

LatticeOrdering LatticeOrdering::row_major(long rows, long cols, bool complete_rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("row-major ranges must be non-negative");
  if (complete_rows && cols < 1) throw std::invalid_argument("completed rows need at least one column");
  return {Kind::kRowMajor, std::max(rows, cols), rows, cols, complete_rows};
}

LatticeOrdering LatticeOrdering::parse(const std::string& name, long bound) {
  if (name == "shells" || name == "symmetric-shells") return symmetric_shells(bound);
  if (name == "z2plus" || name == "paper-z2plus") return paper_z2plus(bound);
  if (name == "row-major") return row_major(bound, bound, true);
  if (name == "row-major-raw") return row_major(bound, bound, false);
  throw std::invalid_argument("unknown ordering '" + name + "'");
}

std::string LatticeOrdering::name() const {
  switch (kind_) {
    case Kind::kSymmetricShells:
      return "shells";
    case Kind::kPaperZ2Plus:
      return "z2plus";
    case Kind::kRowMajor:
      return complete_ ? "row-major" : "row-major-raw";
  }
  return "?";
}

std::string LatticeOrdering::describe() const {
  if (kind_ == Kind::kRowMajor) {
    return name() + "(rows=" + std::to_string(rows_) + ",cols=" + std::to_string(cols_) + ")";
  }
  return name() + "(" + std::to_string(bound_) + ")";
}

std::size_t LatticeOrdering::z2plus_count() const {
  if (kind_ == Kind::kRowMajor) {
    return static_cast<std::size_t>((2 * rows_ + 1) * cols_ + rows_);
  }
  return static_cast<std::size_t>(2 * bound_ * (bound_ + 1));
}

}  // namespace modwit
