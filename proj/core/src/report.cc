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

#include "sumaug/report.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "sumaug/error.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

// Keys in first-appearance order.
class OrderedKeys {
 public:
  std::size_t add(const std::string& key) {
    auto [it, inserted] = index_.try_emplace(key, keys_.size());
    if (inserted) keys_.push_back(key);
    return it->second;
  }
  const std::vector<std::string>& keys() const { return keys_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> keys_;
};

std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += '\n';
  return out;
}

std::string group_key(std::initializer_list<std::string_view> parts) {
  std::string key;
  for (auto p : parts) {
    key.append(p);
    key.push_back('\x1f');
  }
  return key;
}

}  // namespace

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw DataError("unterminated quoted CSV field");
  if (any || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scores_csv(const std::vector<ScoreRow>& rows) {
  std::string out(kScoreHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += join_row({r.dataset, r.lang, r.system, r.id, r.metric, fmt::format("{:.6f}", r.value)});
  }
  return out;
}

std::vector<ScoreRow> parse_scores(std::string_view text, std::string_view source) {
  const auto table = parse_csv(text);
  if (table.empty() || join_row(table.front()) != std::string(kScoreHeader) + "\n") {
    throw DataError(fmt::format("{}: expected header `{}`", source, kScoreHeader));
  }
  std::vector<ScoreRow> out;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& f = table[i];
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != 6) {
      throw DataError(fmt::format("{}:{}: expected 6 fields, got {}", source, i + 1, f.size()));
    }
    ScoreRow r{f[0], f[1], f[2], f[3], f[4], 0.0};
    const auto [ptr, ec] = std::from_chars(f[5].data(), f[5].data() + f[5].size(), r.value);
    if (ec != std::errc() || ptr != f[5].data() + f[5].size()) {
      throw DataError(fmt::format("{}:{}: `{}` is not a number", source, i + 1, f[5]));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BootstrapRow> bootstrap_scores(const std::vector<ScoreRow>& scores,
                                           const BootstrapConfig& config) {
  OrderedKeys order;
  std::vector<BootstrapRow> rows;
  std::vector<std::map<std::string, double>> values;
  for (const auto& s : scores) {
    const std::size_t g = order.add(group_key({s.dataset, s.system, s.lang, s.metric}));
    if (g == rows.size()) {
      rows.push_back({s.dataset, s.system, s.lang, s.metric, {}});
      values.emplace_back();
    }
    if (!values[g].emplace(s.id, s.value).second) {
      throw DataError(fmt::format("duplicate score for id `{}` ({}, {}, {}, {})", s.id, s.dataset,
                                  s.system, s.lang, s.metric));
    }
  }
  for (std::size_t g = 0; g < rows.size(); ++g) {
    std::vector<double> v;
    v.reserve(values[g].size());
    for (const auto& [id, x] : values[g]) v.push_back(x);
    rows[g].result = bootstrap_mean_se(v, config);
  }
  return rows;
}

std::string bootstrap_csv(const std::vector<BootstrapRow>& rows) {
  std::string out(kBootstrapHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += join_row({r.dataset, r.system, r.lang, r.metric, fmt::format("{:.6f}", r.result.mean),
                     fmt::format("{:.6f}", r.result.se), fmt::format("{:.6f}", r.result.sample_mean),
                     fmt::format("{}", r.result.n), fmt::format("{}", r.result.resamples),
                     fmt::format("{}", r.result.seed)});
  }
  return out;
}

ReportTable report_tables(const std::vector<ScoreRow>& scores, const ReportOptions& options) {
  OrderedKeys row_keys, systems, metrics;
  std::vector<std::pair<std::string, std::string>> row_labels;
  // (row, system, metric) -> id -> value
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::map<std::string, double>> cells;
  std::vector<std::set<std::string>> row_ids;
  for (const auto& s : scores) {
    const std::size_t r = row_keys.add(group_key({s.dataset, s.lang}));
    if (r == row_labels.size()) {
      row_labels.emplace_back(s.dataset, s.lang);
      row_ids.emplace_back();
    }
    row_ids[r].insert(s.id);
    const std::size_t sys = systems.add(s.system);
    const std::size_t m = metrics.add(s.metric);
    if (!cells[{r, sys, m}].emplace(s.id, s.value).second) {
      throw DataError(fmt::format("duplicate score for id `{}` ({}, {}, {}, {})", s.id, s.dataset,
                                  s.system, s.lang, s.metric));
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> delta;
  if (options.delta) {
    const auto find = [&](const std::string& name) {
      const auto& keys = systems.keys();
      auto it = std::find(keys.begin(), keys.end(), name);
      if (it == keys.end()) throw ConfigError(fmt::format("no scores for system `{}`", name));
      return static_cast<std::size_t>(it - keys.begin());
    };
    delta = {find(options.delta->baseline), find(options.delta->system)};
  }

  ReportTable table;
  table.resamples = options.bootstrap.resamples;
  table.seed = options.bootstrap.seed;
  table.header = {"dataset", "lang", "n"};
  for (const auto& sys : systems.keys()) {
    for (const auto& m : metrics.keys()) table.header.push_back(sys + " " + m);
  }
  if (delta) {
    for (const auto& m : metrics.keys()) {
      table.header.push_back(
          fmt::format("Δ {}−{} {}", options.delta->system, options.delta->baseline, m));
    }
  }

  const auto cell = [&](double mean, double se) {
    return fmt::format("{:.{}f}±{:.{}f}", mean * options.scale, options.precision,
                       se * options.scale, options.precision);
  };
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    std::vector<std::string> line = {row_labels[r].first, row_labels[r].second,
                                     fmt::format("{}", row_ids[r].size())};
    for (std::size_t sys = 0; sys < systems.keys().size(); ++sys) {
      for (std::size_t m = 0; m < metrics.keys().size(); ++m) {
        auto it = cells.find({r, sys, m});
        if (it == cells.end()) {
          line.emplace_back(kMissingCell);
          continue;
        }
        std::vector<double> v;
        for (const auto& [id, x] : it->second) v.push_back(x);
        const BootstrapResult b = bootstrap_mean_se(v, options.bootstrap);
        line.push_back(cell(b.mean, b.se));
      }
    }
    if (delta) {
      for (std::size_t m = 0; m < metrics.keys().size(); ++m) {
        auto a = cells.find({r, delta->first, m});
        auto b = cells.find({r, delta->second, m});
        if (a == cells.end() || b == cells.end()) {
          line.emplace_back(kMissingCell);
          continue;
        }
        try {
          const PairedDelta d = paired_delta(a->second, b->second, options.bootstrap);
          line.push_back(cell(d.delta_mean, d.se));
        } catch (const DataError&) {
          line.emplace_back(kMissingCell);
        }
      }
    }
    table.rows.push_back(std::move(line));
  }
  return table;
}

std::string ReportTable::to_csv() const {
  std::string out = join_row(header);
  for (const auto& r : rows) out += join_row(r);
  return out;
}

std::string ReportTable::to_text() const {
  std::vector<std::size_t> width(header.size(), 0);
  const auto measure = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      width[i] = std::max(width[i], unicode::display_width(r[i]));
    }
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  const auto render = [&](const std::vector<std::string>& r) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += r[i];
      if (i + 1 < r.size()) line.append(width[i] - unicode::display_width(r[i]), ' ');
    }
    return line + "\n";
  };
  std::string out = render(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  total += width.empty() ? 0 : 2 * (width.size() - 1);
  out += std::string(total, '-') + "\n";
  for (const auto& r : rows) out += render(r);
  out += fmt::format("mean±se over B={} bootstrap resamples, seed={}\n", resamples, seed);
  return out;
}

}  // namespace sumaug
