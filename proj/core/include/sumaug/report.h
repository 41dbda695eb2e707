// Copyright 2026 The sumaug Authors.
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

#ifndef SUMAUG_REPORT_H_
#define SUMAUG_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumaug/bootstrap.h"

namespace sumaug {

// Comma-separated fields with RFC 4180 quoting.
std::string csv_escape(std::string_view field);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// One per-example metric value.
struct ScoreRow {
  std::string dataset;
  std::string lang;
  std::string system;
  std::string id;
  std::string metric;
  double value = 0.0;
};

inline constexpr std::string_view kScoreHeader = "dataset,lang,system,id,metric,value";

std::string scores_csv(const std::vector<ScoreRow>& rows);
// Throws DataError on a bad header, field count or number.
std::vector<ScoreRow> parse_scores(std::string_view text, std::string_view source = "<scores>");

struct BootstrapRow {
  std::string dataset;
  std::string system;
  std::string lang;
  std::string metric;
  BootstrapResult result;
};

inline constexpr std::string_view kBootstrapHeader =
    "dataset,system,lang,metric,mean,se,sample_mean,n,B,seed";

// One row per (dataset, system, lang, metric), in order of first appearance.
// Values inside a group are ordered by example id so row order in the score
// file does not matter.
std::vector<BootstrapRow> bootstrap_scores(const std::vector<ScoreRow>& scores,
                                           const BootstrapConfig& config);
std::string bootstrap_csv(const std::vector<BootstrapRow>& rows);

struct DeltaSpec {
  std::string baseline;
  std::string system;
};

struct ReportOptions {
  int precision = 2;
  double scale = 1.0;  // e.g. 100 for ROUGE percentages
  std::optional<DeltaSpec> delta;
  BootstrapConfig bootstrap;
};

inline constexpr std::string_view kMissingCell = "—";

// Rows are (dataset, lang); columns are (system, metric) with `mean±se`
// cells, plus one `Δ` column per metric when a delta is requested.
struct ReportTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t resamples = 0;
  std::uint64_t seed = 0;

  std::string to_csv() const;
  std::string to_text() const;
};

ReportTable report_tables(const std::vector<ScoreRow>& scores, const ReportOptions& options = {});

}  // namespace sumaug

#endif  // SUMAUG_REPORT_H_
