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

#include "liouvrec/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace liouvrec {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

OutputTable table_from_samples(const std::vector<RatesSample>& samples,
                               const ScalarSeries* survival) {
  if (samples.empty()) throw std::invalid_argument("table_from_samples: no samples");
  if (survival && survival->values.size() != samples.size()) {
    throw std::invalid_argument("table_from_samples: survival series misaligned");
  }
  const int n = samples.front().g.n;
  const Index nn = static_cast<Index>(n) * n;
  const bool with_rates = samples.front().rates.has_value();

  OutputTable table;
  table.columns = {"t", "cond_d"};
  for (Index r = 0; r < nn; ++r)
    for (Index c = 0; c < nn; ++c) {
      table.columns.push_back("g_re_" + std::to_string(r) + "_" + std::to_string(c));
      table.columns.push_back("g_im_" + std::to_string(r) + "_" + std::to_string(c));
    }
  if (survival) table.columns.push_back("P");
  if (with_rates) {
    for (const char* name :
         {"gamma1", "gamma2", "gamma3", "eta", "structure_residual"}) {
      table.columns.emplace_back(name);
    }
  }

  table.rows.reserve(samples.size());
  table.quality.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const RatesSample& s = samples[i];
    if (s.g.n != n || s.rates.has_value() != with_rates) {
      throw std::invalid_argument("table_from_samples: inconsistent samples");
    }
    std::vector<double> row;
    row.reserve(table.columns.size());
    row.push_back(s.t);
    row.push_back(s.g.condition_of_d);
    for (Index r = 0; r < nn; ++r)
      for (Index c = 0; c < nn; ++c) {
        row.push_back(s.g.g(r, c).real());
        row.push_back(s.g.g(r, c).imag());
      }
    if (survival) row.push_back(survival->values[i]);
    if (with_rates) {
      row.push_back(s.rates->gamma1);
      row.push_back(s.rates->gamma2);
      row.push_back(s.rates->gamma3);
      row.push_back(s.rates->eta);
      row.push_back(s.rates->structure_residual);
    }
    table.rows.push_back(std::move(row));
    table.quality.emplace_back(to_string(s.g.quality));
  }
  return table;
}

void write_csv(std::ostream& out, const OutputTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << table.columns[c] << ",";
  }
  out << "quality\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (double v : table.rows[r]) out << format_double(v) << ",";
    out << table.quality[r] << "\n";
  }
}

void write_json(std::ostream& out, const OutputTable& table) {
  nlohmann::json doc;
  doc["columns"] = table.columns;
  doc["columns"].push_back("quality");
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (double v : table.rows[r]) {
      if (std::isnan(v)) {
        row.push_back(nullptr);
      } else {
        row.push_back(v);
      }
    }
    row.push_back(table.quality[r]);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(1) << "\n";
}

void write_table(const std::string& path, const std::string& format,
                 const OutputTable& table) {
  const bool csv = format == "csv";
  if (!csv && format != "json") {
    throw std::invalid_argument("write_table: format must be csv or json");
  }
  if (path == "-") {
    csv ? write_csv(std::cout, table) : write_json(std::cout, table);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  csv ? write_csv(out, table) : write_json(out, table);
}

}  // namespace liouvrec
