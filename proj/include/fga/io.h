// Copyright 2026 The FGA Robustness Authors
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

// Rating edge lists in the SNAP layout (SOURCE,TARGET,RATING[,TIME]) and the
// per-dataset summary statistics.

#ifndef FGA_IO_H_
#define FGA_IO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fga/engine.h"
#include "fga/wsn.h"
#include "json.hpp"

namespace fga {

class DataError : public std::runtime_error {
 public:
  enum class Kind { kIo, kMalformedRow, kOutOfScale, kSelfLoop };

  DataError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) +
                                           ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based; 0 when not tied to a row.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// Reads a rating list. A non-numeric first row is treated as a header.
// Ratings are divided by the scale half-width. Repeated (source, target)
// pairs keep the rating with the latest timestamp (the later row on ties or
// when there is no timestamp column). Node ids follow first appearance.
Wsn ReadRatingCsv(std::istream& is, const RatingScale& scale);
Wsn LoadRatingCsv(const std::filesystem::path& path, const RatingScale& scale);

// `source,target,rating` with labels and 12 significant digits.
void WriteRatingCsv(std::ostream& os, const Wsn& g);

struct StatsThresholds {
  std::size_t small_indegree = 10;
  double fair_high = 0.95;
  double fair_low = 0.7;
  double good_nonnegative = 0.0;
  double good_high = 0.5;
  double good_low = -0.3;
};

struct DatasetStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double positive_edge_fraction = 0.0;
  // Fraction of nodes with indeg < thresholds.small_indegree.
  double small_indegree_fraction = 0.0;
  double fair_fraction_high = 0.0;  // f >= fair_high
  double fair_fraction_low = 0.0;   // f >= fair_low
  double mean_fairness = 0.0;
  double goodness_fraction_nonnegative = 0.0;  // g >= good_nonnegative
  double goodness_fraction_high = 0.0;         // g >= good_high
  double goodness_fraction_low = 0.0;          // g <= good_low
  StatsThresholds thresholds;
};

// Fractions are 0 on an empty graph.
DatasetStats ComputeStats(const Wsn& g, const FgaScores& scores,
                          const StatsThresholds& thresholds = {});

nlohmann::json StatsToJson(const DatasetStats& stats);

// Known public datasets and their expected file names under a data dir.
struct DatasetInfo {
  std::string_view name;
  std::string_view file;
  double r_max;
};
std::optional<DatasetInfo> LookupDataset(std::string_view name);

// Resolves `name` under `data_dir`, falling back to $FGA_DATA_DIR. Returns
// nullopt when the dataset is unknown or its file is missing.
std::optional<std::filesystem::path> FindDataset(
    std::string_view name, const std::optional<std::filesystem::path>&
                               data_dir = std::nullopt);

}  // namespace fga

#endif  // FGA_IO_H_
