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

#include "sumaug/augment.h"

#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "sumaug/error.h"
#include "sumaug/random.h"
#include "sumaug/segment.h"
#include "sumaug/unicode.h"

namespace sumaug {

std::string synthetic_id(const std::string& base_id, Provenance provenance) {
  return base_id + "#" + std::string(to_string(provenance));
}

TrainPair make_extractive_pair(const ArticleRecord& article, const LexRankConfig& config,
                               const IdfTable* idf) {
  TrainPair p;
  p.id = synthetic_id(article.id, Provenance::kExtractive);
  p.lang = article.lang;
  p.document = article;
  p.summary = extract_summary(article, config, idf);
  p.provenance = Provenance::kExtractive;
  return p;
}

std::vector<TrainPair> build_extractive_pairs(const std::vector<ArticleRecord>& articles,
                                              const LexRankConfig& config) {
  std::vector<TrainPair> out;
  out.reserve(articles.size());
  for (const auto& a : articles) out.push_back(make_extractive_pair(a, config));
  return out;
}

BuildResult build_selftrain_pairs(const std::vector<ArticleRecord>& articles,
                                  const std::map<std::string, std::string>& generated) {
  BuildResult out;
  for (const auto& a : articles) {
    auto it = generated.find(a.id);
    if (it == generated.end()) {
      out.skipped.push_back({a.id, "no generated summary"});
      continue;
    }
    if (unicode::trim(it->second).empty()) {
      spdlog::warn("selftrain: empty generated summary for `{}`", a.id);
      out.skipped.push_back({a.id, "empty generated summary"});
      continue;
    }
    TrainPair p;
    p.id = synthetic_id(a.id, Provenance::kSelftrain);
    p.lang = a.lang;
    p.document = a;
    p.summary = segment_sentences(it->second, a.lang);
    p.provenance = Provenance::kSelftrain;
    out.pairs.push_back(std::move(p));
  }
  std::set<std::string> article_ids;
  for (const auto& a : articles) article_ids.insert(a.id);
  for (const auto& [id, text] : generated) {
    if (!article_ids.contains(id)) out.skipped.push_back({id, "generated summary has no article"});
  }
  return out;
}

BuildResult build_backsum_pairs(const std::vector<TrainPair>& extracted,
                                const std::map<std::string, std::string>& generated_docs) {
  BuildResult out;
  for (const auto& e : extracted) {
    auto it = generated_docs.find(e.id);
    if (it == generated_docs.end()) {
      out.skipped.push_back({e.id, "no generated document"});
      continue;
    }
    if (unicode::trim(it->second).empty()) {
      spdlog::warn("backsum: empty generated document for `{}`", e.id);
      out.skipped.push_back({e.id, "empty generated document"});
      continue;
    }
    TrainPair p;
    p.id = synthetic_id(e.document.id, Provenance::kBacksum);
    p.lang = e.lang;
    p.document = make_article(e.document.id, e.lang, it->second, e.document.title);
    p.summary = e.summary;
    p.provenance = Provenance::kBacksum;
    out.pairs.push_back(std::move(p));
  }
  std::set<std::string> ids;
  for (const auto& e : extracted) ids.insert(e.id);
  for (const auto& [id, text] : generated_docs) {
    if (!ids.contains(id)) out.skipped.push_back({id, "generated document has no summary"});
  }
  return out;
}

std::map<std::string, std::string> load_generated_texts(const std::filesystem::path& path,
                                                        const std::vector<std::string>& fields,
                                                        std::vector<LineError>* errors) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (unicode::trim(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (!j.contains("id") || !j["id"].is_string()) throw DataError("missing `id`");
      std::optional<std::string> text;
      for (const auto& f : fields) {
        auto it = j.find(f);
        if (it == j.end()) continue;
        if (it->is_string()) {
          text = it->get<std::string>();
        } else if (it->is_array()) {
          // Sentence lists are joined the way TrainPair::summary_text does.
          std::string joined;
          for (const auto& s : *it) {
            if (!s.is_string()) throw DataError("`" + f + "` must hold strings");
            if (!joined.empty()) joined += ' ';
            joined += s.get<std::string>();
          }
          text = std::move(joined);
        } else {
          continue;
        }
        break;
      }
      if (!text) throw DataError("no text field");
      out[j["id"].get<std::string>()] = std::move(*text);
    } catch (const std::exception& e) {
      if (errors) errors->push_back({line_no, e.what()});
    }
  }
  return out;
}

MixResult mix_datasets(std::vector<TrainPair> real, std::vector<TrainPair> synthetic,
                       const AugmentPlan& plan) {
  std::set<std::string> langs;
  for (const auto& p : real) langs.insert(p.lang);
  for (const auto& p : synthetic) langs.insert(p.lang);
  if (langs.size() > 1) {
    throw ConfigError("mix_datasets: pairs span more than one language (" +
                      fmt::format("{}", fmt::join(langs, ", ")) + ")");
  }

  MixResult out;
  out.n_real = real.size();
  out.n_synthetic_available = synthetic.size();
  Xoshiro256 rng(plan.seed);
  // Partial Fisher-Yates: the first `keep` slots become a uniform sample.
  const std::size_t keep = std::min(plan.cap, synthetic.size());
  for (std::size_t i = 0; i < keep; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(synthetic.size() - i));
    std::swap(synthetic[i], synthetic[j]);
  }
  synthetic.resize(keep);
  out.n_synthetic_kept = keep;

  out.pairs = std::move(real);
  out.pairs.insert(out.pairs.end(), std::make_move_iterator(synthetic.begin()),
                   std::make_move_iterator(synthetic.end()));
  shuffle(out.pairs, rng);
  spdlog::info("mix: {} real + {} of {} synthetic -> {} pairs (cap {}, seed {})", out.n_real,
               out.n_synthetic_kept, out.n_synthetic_available, out.pairs.size(), plan.cap,
               plan.seed);
  return out;
}

std::vector<double> upsample_probabilities(const std::vector<std::size_t>& counts, double alpha) {
  if (counts.empty()) throw ConfigError("upsampling needs at least one language");
  std::vector<double> w;
  w.reserve(counts.size());
  for (std::size_t c : counts) {
    if (c == 0) throw ConfigError("upsampling counts must be positive");
    w.push_back(std::pow(static_cast<double>(c), alpha));
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

std::vector<UpsampleRow> upsample_schedule(const std::map<std::string, std::size_t>& counts,
                                           double alpha, std::size_t total_draws,
                                           std::uint64_t seed) {
  if (total_draws == 0) throw ConfigError("total_draws must be positive");
  std::vector<std::size_t> n;
  for (const auto& [lang, c] : counts) n.push_back(c);
  const std::vector<double> p = upsample_probabilities(n, alpha);

  std::vector<UpsampleRow> rows;
  std::size_t i = 0;
  for (const auto& [lang, c] : counts) {
    rows.push_back({lang, c, p[i], p[i] * static_cast<double>(total_draws), 0});
    ++i;
  }
  std::vector<double> cumulative(p.size());
  std::partial_sum(p.begin(), p.end(), cumulative.begin());
  Xoshiro256 rng(seed);
  for (std::size_t d = 0; d < total_draws; ++d) {
    const double u = rng.uniform();
    std::size_t k = 0;
    while (k + 1 < cumulative.size() && u >= cumulative[k]) ++k;
    ++rows[k].realized;
  }
  return rows;
}

std::string upsample_csv(const std::vector<UpsampleRow>& rows) {
  std::string out = "lang,count,probability,expected,realized\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{:.12f},{:.6f},{}\n", r.lang, r.count, r.probability, r.expected,
                       r.realized);
  }
  return out;
}

TrainManifest TrainManifest::training_defaults() {
  TrainManifest m;
  m.kind_ = "train";
  m.entries_ = {
      {"epochs", "3"},
      {"warmup_steps", "100"},
      {"label_smoothing", "0.1"},
      {"beam_size", "4"},
      {"weight_decay", "0.01"},
      {"max_target_len", "512"},
      {"max_source_len", "1024"},
      {"effective_batch", "32"},
      {"learning_rate", "5e-4"},
  };
  return m;
}

TrainManifest TrainManifest::inference_defaults() {
  TrainManifest m;
  m.kind_ = "inference";
  m.entries_ = {
      {"no_repeat_ngram", "3"},
      {"max_length", "256"},
      {"truncation", "true"},
  };
  return m;
}

std::string TrainManifest::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k != key) continue;
    if (v == "true" || v == "false") {
      if (value != "true" && value != "false") {
        throw ConfigError("manifest key `" + key + "` takes true or false");
      }
    } else {
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || !(x > 0.0)) {
        throw ConfigError("manifest key `" + key + "` needs a positive number, got `" + value + "`");
      }
    }
    return std::exchange(v, value);
  }
  throw ConfigError("unknown manifest key `" + key + "`");
}

const std::string& TrainManifest::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw ConfigError("unknown manifest key `" + key + "`");
}

std::string TrainManifest::render() const {
  std::string out = "# sumaug " + kind_ + " manifest\n";
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

TrainManifest emit_train_manifest(const std::filesystem::path& out,
                                  const std::vector<ManifestOverride>& overrides, bool inference) {
  TrainManifest m = inference ? TrainManifest::inference_defaults() : TrainManifest::training_defaults();
  for (const auto& o : overrides) {
    const std::string previous = m.set(o.key, o.value);
    if (previous != o.value) {
      spdlog::warn("manifest: {} = {} (default {})", o.key, o.value, previous);
    }
  }
  write_file_atomic(out, m.render());
  return m;
}

}  // namespace sumaug
