// Copyright 2026 The liouvrec authors
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

#include <iosfwd>
#include <string>

#include "liouvrec/tomography.hpp"

namespace liouvrec {

// JSON tomogram document (see docs/file_formats.md):
// {
//   "n": 2,
//   "times": [...],
//   "snapshots": { "k1,k2": [ per-time n x n matrix of [re, im] ], ... }
// }
// Ingested states are validated at the relaxed 1e-6 tolerances; failures
// throw std::runtime_error naming the snapshot, time, and constraint.
TomogramSeries read_tomogram_json(std::istream& in, const std::string& origin);
TomogramSeries read_tomogram_file(const std::string& path);

void write_tomogram_json(std::ostream& out, const TomogramSeries& series);
void write_tomogram_file(const std::string& path, const TomogramSeries& series);

}  // namespace liouvrec
