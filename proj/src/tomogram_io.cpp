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

#include "liouvrec/tomogram_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace liouvrec {

namespace {

using nlohmann::json;

std::string pair_key(int k1, int k2) {
  return std::to_string(k1) + "," + std::to_string(k2);
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error(origin + ": " + what);
}

}  // namespace

TomogramSeries read_tomogram_json(std::istream& in, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(origin, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(origin, "top level is not an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(origin, "missing integer field 'n'");
  }
  const int n = doc["n"].get<int>();
  if (n < 2) fail(origin, "'n' must be >= 2");
  if (!doc.contains("times") || !doc["times"].is_array() || doc["times"].empty()) {
    fail(origin, "missing non-empty array 'times'");
  }
  if (!doc.contains("snapshots") || !doc["snapshots"].is_object()) {
    fail(origin, "missing object 'snapshots'");
  }

  TomogramSeries series;
  series.n = n;
  for (const auto& t : doc["times"]) {
    if (!t.is_number()) fail(origin, "'times' entries must be numbers");
    series.times.push_back(t.get<double>());
  }

  const auto& snaps = doc["snapshots"];
  series.snapshots.resize(static_cast<std::size_t>(n) * n);
  const auto tolerances = DensityMatrix::ingestion_tolerances();
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 < n; ++k2) {
      const std::string key = pair_key(k1, k2);
      if (!snaps.contains(key)) fail(origin, "missing snapshot series '" + key + "'");
      const auto& entry = snaps[key];
      if (!entry.is_array() || entry.size() != series.times.size()) {
        fail(origin, "snapshot series '" + key + "' must list one matrix per time");
      }
      auto& slot = series.snapshots[static_cast<std::size_t>(pair_index(k1, k2, n))];
      slot.reserve(series.times.size());
      for (std::size_t i = 0; i < entry.size(); ++i) {
        const auto& mat = entry[i];
        if (!mat.is_array() || mat.size() != static_cast<std::size_t>(n)) {
          fail(origin, "snapshot '" + key + "' at index " + std::to_string(i) +
                           " is not an " + std::to_string(n) + "x" + std::to_string(n) +
                           " matrix");
        }
        ComplexMatrix rho(n, n);
        for (int r = 0; r < n; ++r) {
          const auto& row = mat[static_cast<std::size_t>(r)];
          if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            fail(origin, "snapshot '" + key + "' at index " + std::to_string(i) +
                             " has a malformed row");
          }
          for (int c = 0; c < n; ++c) {
            const auto& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
              fail(origin, "snapshot '" + key + "' at index " + std::to_string(i) +
                               " has a cell that is not [re, im]");
            }
            rho(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
          }
        }
        try {
          slot.emplace_back(std::move(rho), tolerances);
        } catch (const std::invalid_argument& e) {
          std::ostringstream os;
          os << "snapshot '" << key << "' at t = " << series.times[i]
             << " is not a valid state: " << e.what();
          fail(origin, os.str());
        }
      }
    }
  }

  try {
    check_tomogram_series(series);
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  return series;
}

TomogramSeries read_tomogram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return read_tomogram_json(in, path);
}

void write_tomogram_json(std::ostream& out, const TomogramSeries& series) {
  check_tomogram_series(series);
  json doc;
  doc["n"] = series.n;
  doc["times"] = series.times;
  json snaps = json::object();
  for (int k1 = 0; k1 < series.n; ++k1) {
    for (int k2 = 0; k2 < series.n; ++k2) {
      json per_time = json::array();
      const auto& slot = series.snapshots[static_cast<std::size_t>(
          pair_index(k1, k2, series.n))];
      for (const DensityMatrix& rho : slot) {
        json mat = json::array();
        for (int r = 0; r < series.n; ++r) {
          json row = json::array();
          for (int c = 0; c < series.n; ++c) {
            const Complex v = rho.matrix()(r, c);
            row.push_back(json::array({v.real(), v.imag()}));
          }
          mat.push_back(std::move(row));
        }
        per_time.push_back(std::move(mat));
      }
      snaps[pair_key(k1, k2)] = std::move(per_time);
    }
  }
  doc["snapshots"] = std::move(snaps);
  out << doc.dump(1) << "\n";
}

void write_tomogram_file(const std::string& path, const TomogramSeries& series) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_tomogram_json(out, series);
}

}  // namespace liouvrec
