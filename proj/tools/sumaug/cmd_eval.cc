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

#include <fstream>
#include <map>
#include <memory>
#include <set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "common.h"
#include "sumaug/bootstrap.h"
#include "sumaug/error.h"
#include "sumaug/langid.h"
#include "sumaug/metrics.h"
#include "sumaug/report.h"

namespace sumaug::cli {
namespace {

const std::set<std::string> kTextMetrics = {"rouge1",   "rouge2",   "rougeL", "novelty1",
                                            "novelty2", "length"};

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t pos = 0;
    while (pos <= item.size()) {
      std::size_t comma = item.find(',', pos);
      if (comma == std::string::npos) comma = item.size();
      if (comma > pos) out.push_back(item.substr(pos, comma - pos));
      pos = comma + 1;
    }
  }
  return out;
}

// Embedding records: {"id", "side": "candidate"|"reference", "vectors": [[...], ...], "lang"?}.
struct EmbeddingPair {
  std::string lang = "und";
  std::vector<Embedding> candidate;
  std::vector<Embedding> reference;
  bool has_candidate = false;
  bool has_reference = false;
};

std::map<std::string, EmbeddingPair> read_embeddings(const std::filesystem::path& path,
                                                     ItemErrors& errors) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::map<std::string, EmbeddingPair> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      EmbeddingPair& pair = out[j.at("id").get<std::string>()];
      if (auto it = j.find("lang"); it != j.end()) pair.lang = it->get<std::string>();
      const std::string side = j.at("side").get<std::string>();
      auto vectors = j.at("vectors").get<std::vector<Embedding>>();
      if (side == "candidate") {
        pair.candidate = std::move(vectors);
        pair.has_candidate = true;
      } else if (side == "reference") {
        pair.reference = std::move(vectors);
        pair.has_reference = true;
      } else {
        throw DataError("`side` must be candidate or reference");
      }
    } catch (const std::exception& e) {
      errors.add(fmt::format("{}:{}", path.string(), line_no), e.what());
    }
  }
  return out;
}

void score_texts(const std::vector<TextRecord>& candidates, const std::vector<TrainPair>& references,
                 const std::vector<std::string>& metrics, const TokenizerSpec& spec,
                 const std::string& dataset, const std::string& system, std::vector<ScoreRow>& rows,
                 ItemErrors& errors) {
  const Tokenizer tokenizer(spec);
  std::map<std::string, const TextRecord*> by_id;
  for (const auto& c : candidates) {
    if (!by_id.emplace(c.id, &c).second) errors.add(c.id, "duplicate candidate id");
  }
  std::set<std::string> used;
  for (const auto& ref : references) {
    auto it = by_id.find(ref.id);
    if (it == by_id.end()) {
      errors.add(ref.id, "no candidate summary for this reference");
      continue;
    }
    used.insert(ref.id);
    const TokenSeq cand = tokenizer(it->second->text);
    const TokenSeq gold = tokenizer(ref.summary_text());
    const auto emit = [&](const std::string& metric, double value) {
      rows.push_back({dataset, ref.lang, system, ref.id, metric, value});
    };
    for (const auto& m : metrics) {
      try {
        if (m == "rouge1") {
          emit(m, rouge_n(cand, gold, 1).f1);
        } else if (m == "rouge2") {
          emit(m, rouge_n(cand, gold, 2).f1);
        } else if (m == "rougeL") {
          emit(m, rouge_l(cand, gold).f1);
        } else if (m == "novelty1" || m == "novelty2") {
          const std::size_t n = m == "novelty1" ? 1 : 2;
          emit(m, novelty(cand, tokenizer(ref.document.text), n).value);
        } else if (m == "length") {
          emit(m, static_cast<double>(cand.size()));
        }
      } catch (const DataError& e) {
        errors.add(fmt::format("{} ({})", ref.id, m), e.what());
      }
    }
  }
  for (const auto& c : candidates) {
    if (!used.count(c.id)) spdlog::warn("score: candidate {} has no reference; ignored", c.id);
  }
}

void register_score_impl(CLI::App& app, Context& ctx) {
  struct Opts {
    std::optional<std::filesystem::path> candidates;
    std::optional<std::filesystem::path> references;
    std::optional<std::filesystem::path> embeddings;
    std::vector<std::string> fields{"output", "summary", "text"};
    std::vector<std::string> metrics{"rouge1,rouge2,rougeL"};
    std::string dataset = "default";
    std::string system;
    TokenizerFlags tokenizer;
    OutputFlags output;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("score", "Per-example metric values");
  auto* cand = cmd->add_option("--candidates", opts->candidates, "Candidate summary records")
                   ->check(CLI::ExistingFile);
  auto* refs = cmd->add_option("--references", opts->references, "Reference pair records")
                   ->check(CLI::ExistingFile);
  auto* emb = cmd->add_option("--embeddings", opts->embeddings,
                              "Token vectors for greedy matching (id, side, vectors)")
                  ->check(CLI::ExistingFile);
  cand->needs(refs);
  refs->needs(cand);
  emb->excludes(cand);
  cmd->add_option("--field", opts->fields, "Candidate text field(s), in priority order")
      ->capture_default_str();
  cmd->add_option("--metrics", opts->metrics,
                  "Comma-separated: rouge1, rouge2, rougeL, novelty1, novelty2, length")
      ->capture_default_str();
  cmd->add_option("--dataset", opts->dataset, "Dataset label")->capture_default_str();
  cmd->add_option("--system", opts->system, "System label")->required();
  opts->tokenizer.add_to(*cmd);
  opts->output.add_to(*cmd, "Score file (CSV)");
  cmd->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      opts->output.require();
      if (!opts->candidates && !opts->embeddings) {
        throw ConfigError("score needs --candidates/--references or --embeddings");
      }
      const TokenizerSpec spec = opts->tokenizer.resolve(ctx.config);
      const auto metrics = split_list(opts->metrics);
      for (const auto& m : metrics) {
        if (!kTextMetrics.count(m)) throw ConfigError("unknown metric `" + m + "`");
      }
      ctx.log_start("score", std::nullopt);
      ItemErrors errors;
      std::vector<ScoreRow> rows;
      if (opts->candidates) {
        const auto candidates = read_text_records(*opts->candidates, opts->fields, errors);
        const auto references = read_pairs(*opts->references, errors);
        score_texts(candidates, references, metrics, spec, opts->dataset, opts->system, rows, errors);
      } else {
        for (const auto& [id, pair] : read_embeddings(*opts->embeddings, errors)) {
          if (!pair.has_candidate || !pair.has_reference) {
            errors.add(id, "needs both a candidate and a reference record");
            continue;
          }
          try {
            const GreedyMatchScore s = greedy_match_score(pair.candidate, pair.reference);
            rows.push_back({opts->dataset, pair.lang, opts->system, id, "greedy_p", s.precision});
            rows.push_back({opts->dataset, pair.lang, opts->system, id, "greedy_r", s.recall});
            rows.push_back({opts->dataset, pair.lang, opts->system, id, "greedy_f1", s.f1});
          } catch (const DataError& e) {
            errors.add(id, e.what());
          }
        }
      }
      spdlog::info("score: {} values for system {}", rows.size(), opts->system);
      opts->output.emit(scores_csv(rows));
      return errors.exit_code();
    };
  });
}

std::vector<ScoreRow> read_score_files(const std::vector<std::filesystem::path>& paths) {
  std::vector<ScoreRow> rows;
  for (const auto& p : paths) {
    auto part = parse_scores(read_file(p), p.string());
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return rows;
}

struct BootstrapFlags {
  std::optional<std::size_t> resamples;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;

  void add_to(CLI::App& app) {
    app.add_option("--resamples", resamples, "Bootstrap resamples B (default 500)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100'000'000}));
    app.add_option("--seed", seed, "Bootstrap seed (default 1)");
    app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
  }
  BootstrapConfig resolve(const RunConfig& config) const {
    BootstrapConfig b = config.bootstrap;
    if (resamples) b.resamples = *resamples;
    if (seed) b.seed = *seed;
    if (threads) b.threads = *threads;
    return b;
  }
};

}  // namespace

void register_score(CLI::App& app, Context& ctx) { register_score_impl(app, ctx); }

void register_bootstrap(CLI::App& app, Context& ctx) {
  struct Opts {
    std::vector<std::filesystem::path> scores;
    BootstrapFlags bootstrap;
    OutputFlags output;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("bootstrap", "Bootstrap mean and standard error per cell");
  cmd->add_option("--scores", opts->scores, "Score files (repeatable)")->required()->check(CLI::ExistingFile);
  opts->bootstrap.add_to(*cmd);
  opts->output.add_to(*cmd, "Bootstrap report (CSV)");
  cmd->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      opts->output.require();
      const BootstrapConfig config = opts->bootstrap.resolve(ctx.config);
      ctx.log_start("bootstrap", config.seed);
      const auto rows = bootstrap_scores(read_score_files(opts->scores), config);
      spdlog::info("bootstrap: {} cells, B={}", rows.size(), config.resamples);
      opts->output.emit(bootstrap_csv(rows));
      return kExitOk;
    };
  });
}

void register_report(CLI::App& app, Context& ctx) {
  struct Opts {
    std::vector<std::filesystem::path> scores;
    std::string format = "text";
    std::optional<std::string> delta;
    int precision = 2;
    double scale = 1.0;
    BootstrapFlags bootstrap;
    OutputFlags output;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("report", "Result tables with mean±se cells");
  cmd->add_option("--scores", opts->scores, "Score files (repeatable)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", opts->format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  cmd->add_option("--delta", opts->delta, "Paired difference column BASELINE:SYSTEM");
  cmd->add_option("--precision", opts->precision, "Decimals per cell")
      ->check(CLI::Range(0, 10))
      ->capture_default_str();
  cmd->add_option("--scale", opts->scale, "Multiply values before printing (100 for percentages)")
      ->capture_default_str();
  opts->bootstrap.add_to(*cmd);
  opts->output.add_to(*cmd, "Report file");
  cmd->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      opts->output.require();
      ReportOptions ro;
      ro.precision = opts->precision;
      ro.scale = opts->scale;
      ro.bootstrap = opts->bootstrap.resolve(ctx.config);
      if (opts->delta) {
        const std::size_t colon = opts->delta->find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == opts->delta->size()) {
          throw ConfigError("--delta expects BASELINE:SYSTEM");
        }
        ro.delta = DeltaSpec{opts->delta->substr(0, colon), opts->delta->substr(colon + 1)};
      }
      ctx.log_start("report", ro.bootstrap.seed);
      const ReportTable table = report_tables(read_score_files(opts->scores), ro);
      opts->output.emit(opts->format == "csv" ? table.to_csv() : table.to_text());
      return kExitOk;
    };
  });
}

void register_langid(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("langid", "Character n-gram language identification");
  cmd->require_subcommand(1);

  {
    struct Opts {
      std::string lang;
      std::filesystem::path seed;
      std::optional<std::filesystem::path> out;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("train", "Build a profile from seed text");
    sub->add_option("--lang", opts->lang, "ISO 639-3 code")->required();
    sub->add_option("--seed", opts->seed, "Seed text file (UTF-8)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opts->out, "Profile file (default: <profiles>/<lang>.lpro)");
    sub->callback([&ctx, opts] {
      ctx.action = [&ctx, opts] {
        ctx.log_start("langid train", std::nullopt);
        std::filesystem::path out;
        if (opts->out) {
          out = *opts->out;
        } else if (ctx.config.paths.profiles) {
          out = *ctx.config.paths.profiles / (opts->lang + ".lpro");
        } else {
          throw ConfigError("langid train needs --out or [paths] profiles");
        }
        const LangProfile profile = train_profile(opts->lang, read_file(opts->seed));
        profile.save(out);
        spdlog::info("langid train: {} from {} characters -> {}", opts->lang,
                     profile.training_chars(), out.string());
        return kExitOk;
      };
    });
  }

  const auto profiles_dir = [&ctx](const std::optional<std::filesystem::path>& flag) {
    if (flag) return *flag;
    if (ctx.config.paths.profiles) return *ctx.config.paths.profiles;
    throw ConfigError("needs --profiles or [paths] profiles");
  };

  {
    struct Opts {
      std::optional<std::filesystem::path> profiles;
      std::vector<std::string> texts;
      OutputFlags output;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("classify", "Classify short texts");
    sub->add_option("--profiles", opts->profiles, "Directory of .lpro files")->check(CLI::ExistingDirectory);
    sub->add_option("--text", opts->texts, "Text to classify (repeatable)")->required();
    opts->output.add_to(*sub, "Tab-separated lang, runner-up, margin, coverage, text");
    sub->callback([&ctx, opts, profiles_dir] {
      ctx.action = [&ctx, opts, profiles_dir] {
        opts->output.require();
        ctx.log_start("langid classify", std::nullopt);
        const auto id = LanguageIdentifier::from_directory(profiles_dir(opts->profiles));
        std::string out;
        for (const auto& t : opts->texts) {
          const Classification c = id.classify(t);
          out += fmt::format("{}\t{}\t{:.4f}\t{:.4f}\t{}\n", c.lang, c.runner_up, c.margin,
                             c.coverage, t);
        }
        opts->output.emit(out);
        return kExitOk;
      };
    });
  }

  {
    struct Opts {
      std::optional<std::filesystem::path> profiles;
      std::filesystem::path in;
      std::optional<std::string> target;
      std::vector<std::string> fields{"output", "summary", "text"};
      OutputFlags output;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("report", "English share of each summary");
    sub->add_option("--profiles", opts->profiles, "Directory of .lpro files")->check(CLI::ExistingDirectory);
    sub->add_option("--in", opts->in, "Summary records")->required()->check(CLI::ExistingFile);
    sub->add_option("--target", opts->target, "Target language (default: each record's lang)");
    sub->add_option("--field", opts->fields, "Text field(s), in priority order")->capture_default_str();
    opts->output.add_to(*sub, "Per-summary report (CSV)");
    sub->callback([&ctx, opts, profiles_dir] {
      ctx.action = [&ctx, opts, profiles_dir] {
        opts->output.require();
        ctx.log_start("langid report", std::nullopt);
        const auto id = LanguageIdentifier::from_directory(profiles_dir(opts->profiles));
        ItemErrors errors;
        const auto records = read_text_records(opts->in, opts->fields, errors);
        std::string out = "id,lang,pct_english,fully_english,sentences\n";
        double sum = 0.0;
        std::size_t fully = 0;
        for (const auto& r : records) {
          const std::string lang = opts->target.value_or(r.lang.empty() ? "und" : r.lang);
          const EnglishProportion ep = english_proportion(r.text, id, lang);
          sum += ep.percent;
          fully += ep.fully_english ? 1 : 0;
          out += fmt::format("{},{},{:.2f},{},{}\n", csv_escape(r.id), lang, ep.percent,
                             ep.fully_english ? 1 : 0, ep.sentences);
        }
        if (!records.empty()) {
          spdlog::info("langid report: {} summaries, mean English {:.2f}%, fully English {}",
                       records.size(), sum / static_cast<double>(records.size()), fully);
        }
        opts->output.emit(out);
        return errors.exit_code();
      };
    });
  }
}

}  // namespace sumaug::cli
