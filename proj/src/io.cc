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

#include "fga/io.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <vector>

namespace fga {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> ParseDouble(std::string_view s) {
  if (s.empty()) return std::nullopt;
  // std::from_chars for double is available in libstdc++ 11.
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

struct PendingRating {
  double weight;
  double time;
  std::size_t row;
};

}  // namespace

Wsn ReadRatingCsv(std::istream& is, const RatingScale& scale) {
  Wsn g;
  std::map<std::pair<NodeId, NodeId>, PendingRating> latest;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto fields = SplitFields(trimmed);
    if (fields.size() < 3 || fields.size() > 4) {
      if (!seen_data && fields.size() >= 3) continue;
      throw DataError(DataError::Kind::kMalformedRow, line_no,
                      "expected source,target,rating[,time]");
    }
    const auto raw = ParseDouble(fields[2]);
    if (!raw) {
      if (!seen_data) {
        seen_data = true;  // header row
        continue;
      }
      throw DataError(DataError::Kind::kMalformedRow, line_no,
                      "unparsable rating '" + std::string(fields[2]) + "'");
    }
    seen_data = true;
    double time = 0.0;
    if (fields.size() == 4) {
      const auto t = ParseDouble(fields[3]);
      if (!t) {
        throw DataError(DataError::Kind::kMalformedRow, line_no,
                        "unparsable timestamp '" + std::string(fields[3]) +
                            "'");
      }
      time = *t;
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw DataError(DataError::Kind::kMalformedRow, line_no,
                      "empty node label");
    }
    if (fields[0] == fields[1]) {
      throw DataError(DataError::Kind::kSelfLoop, line_no,
                      "self-loop on '" + std::string(fields[0]) + "'");
    }
    double weight = 0.0;
    try {
      weight = NormalizeRating(*raw, scale);
    } catch (const GraphError& e) {
      throw DataError(DataError::Kind::kOutOfScale, line_no, e.what());
    }
    const NodeId u = g.InternLabel(fields[0]);
    const NodeId v = g.InternLabel(fields[1]);
    auto [it, inserted] = latest.try_emplace({u, v}, weight, time, line_no);
    if (!inserted && time >= it->second.time) {
      it->second = {weight, time, line_no};
    }
  }
  if (is.bad()) throw DataError(DataError::Kind::kIo, 0, "read failure");
  for (const auto& [pair, r] : latest) g.AddEdge(pair.first, pair.second, r.weight);
  return g;
}

Wsn LoadRatingCsv(const std::filesystem::path& path, const RatingScale& scale) {
  std::ifstream in(path);
  if (!in) {
    throw DataError(DataError::Kind::kIo, 0,
                    "cannot open '" + path.string() + "'");
  }
  return ReadRatingCsv(in, scale);
}

void WriteRatingCsv(std::ostream& os, const Wsn& g) {
  os << "source,target,rating\n";
  char buf[64];
  for (const Edge& e : g.Edges()) {
    std::snprintf(buf, sizeof(buf), ",%.12g\n", e.weight);
    os << g.Label(e.source) << ',' << g.Label(e.target) << buf;
  }
}

DatasetStats ComputeStats(const Wsn& g, const FgaScores& scores,
                          const StatsThresholds& th) {
  DatasetStats s;
  s.thresholds = th;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  if (s.edge_count > 0) {
    std::size_t positive = 0;
    for (const Edge& e : g.Edges()) positive += e.weight > 0.0;
    s.positive_edge_fraction =
        static_cast<double>(positive) / static_cast<double>(s.edge_count);
  }
  if (s.node_count == 0) return s;

  std::size_t small = 0, fair_hi = 0, fair_lo = 0, good_nn = 0, good_hi = 0,
              good_lo = 0;
  double fair_sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double f = scores.fairness[v];
    const double gd = scores.goodness[v];
    small += g.InDegree(v) < th.small_indegree;
    fair_hi += f >= th.fair_high;
    fair_lo += f >= th.fair_low;
    fair_sum += f;
    good_nn += gd >= th.good_nonnegative;
    good_hi += gd >= th.good_high;
    good_lo += gd <= th.good_low;
  }
  const auto n = static_cast<double>(s.node_count);
  s.small_indegree_fraction = small / n;
  s.fair_fraction_high = fair_hi / n;
  s.fair_fraction_low = fair_lo / n;
  s.mean_fairness = fair_sum / n;
  s.goodness_fraction_nonnegative = good_nn / n;
  s.goodness_fraction_high = good_hi / n;
  s.goodness_fraction_low = good_lo / n;
  return s;
}

nlohmann::json StatsToJson(const DatasetStats& s) {
  const StatsThresholds& th = s.thresholds;
  return nlohmann::json{
      {"size", s.node_count},
      {"edges", s.edge_count},
      {"positive_edges", s.positive_edge_fraction},
      {"small_indegree", {{"below", th.small_indegree},
                          {"fraction", s.small_indegree_fraction}}},
      {"fair_nodes_high", {{"at_least", th.fair_high},
                           {"fraction", s.fair_fraction_high}}},
      {"fair_nodes_low", {{"at_least", th.fair_low},
                          {"fraction", s.fair_fraction_low}}},
      {"mean_fairness", s.mean_fairness},
      {"goodness_nonnegative", {{"at_least", th.good_nonnegative},
                                {"fraction", s.goodness_fraction_nonnegative}}},
      {"goodness_high", {{"at_least", th.good_high},
                         {"fraction", s.goodness_fraction_high}}},
      {"goodness_low", {{"at_most", th.good_low},
                        {"fraction", s.goodness_fraction_low}}},
  };
}

std::optional<DatasetInfo> LookupDataset(std::string_view name) {
  static constexpr std::array<DatasetInfo, 3> kKnown{{
      {"bitcoin-otc", "soc-sign-bitcoinotc.csv", 10.0},
      {"bitcoin-alpha", "soc-sign-bitcoinalpha.csv", 10.0},
      // Converted from the RfA vote dump: one row per vote, rating +1/-1.
      {"rfa", "rfa-net.csv", 1.0},
  }};
  for (const DatasetInfo& d : kKnown) {
    if (d.name == name) return d;
  }
  return std::nullopt;
}

std::optional<std::filesystem::path> FindDataset(
    std::string_view name,
    const std::optional<std::filesystem::path>& data_dir) {
  const auto info = LookupDataset(name);
  if (!info) return std::nullopt;
  std::filesystem::path dir;
  if (data_dir) {
    dir = *data_dir;
  } else if (const char* env = std::getenv("FGA_DATA_DIR")) {
    dir = env;
  } else {
    return std::nullopt;
  }
  std::filesystem::path p = dir / std::string(info->file);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec)) return std::nullopt;
  return p;
}

}  // namespace fga
