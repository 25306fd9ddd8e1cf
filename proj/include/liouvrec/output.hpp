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
#include <vector>

#include "liouvrec/pipeline.hpp"

namespace liouvrec {

// Flat result table: one row per time sample. Numeric cells may be NaN
// (written as "nan" in CSV, null in JSON); `quality` holds one flag per row.
struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> quality;
};

// Columns: t, cond_d, re/im generator entries g_re_<r>_<c> in row-major
// flattened-pair order, then the per-model scalars.
OutputTable table_from_samples(const std::vector<RatesSample>& samples,
                               const ScalarSeries* survival = nullptr);

void write_csv(std::ostream& out, const OutputTable& table);
void write_json(std::ostream& out, const OutputTable& table);

// format is "csv" or "json"; path "-" writes to stdout.
void write_table(const std::string& path, const std::string& format,
                 const OutputTable& table);

}  // namespace liouvrec
