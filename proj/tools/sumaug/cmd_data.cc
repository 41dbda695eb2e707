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

#include <map>
#include <memory>

#include <spdlog/spdlog.h>

#include "common.h"
#include "sumaug/augment.h"
#include "sumaug/corpus.h"
#include "sumaug/error.h"
#include "sumaug/extractive.h"

namespace sumaug::cli {
namespace {

struct LexRankFlags {
  std::optional<std::size_t> k;
  std::optional<std::string> mode;
  std::optional<double> threshold;
  bool corpus_idf = false;
  TokenizerFlags tokenizer;

  void add_to(CLI::App& app) {
    app.add_option("--k", k, "Sentences per summary (default 2)")->check(CLI::PositiveNumber);
    app.add_option("--mode", mode, "threshold|continuous")
        ->check(CLI::IsMember({"threshold", "continuous"}));
    app.add_option("--t", threshold, "Edge threshold in [0, 1) (default 0.1)")
        ->check(CLI::Range(0.0, 1.0));
    app.add_flag("--corpus-idf", corpus_idf,
                 "Weight terms by document frequency over the input, per language");
    tokenizer.add_to(app);
  }

  LexRankConfig resolve(const RunConfig& config) const {
    LexRankConfig c = config.extract;
    if (k) c.k = *k;
    if (mode) c.mode = parse_graph_mode(*mode);
    if (threshold) {
      if (*threshold >= 1.0) throw ConfigError("--t must be below 1");
      c.threshold = *threshold;
    }
    c.tokenizer = tokenizer.resolve(config);
    return c;
  }
};

std::vector<TrainPair> extract_all(const std::vector<ArticleRecord>& articles,
                                   const LexRankConfig& config, bool use_corpus_idf,
                                   bool keep_ids, ItemErrors& errors) {
  std::map<std::string, IdfTable> idf;
  if (use_corpus_idf) {
    const Tokenizer tokenizer(config.tokenizer);
    std::map<std::string, std::vector<ArticleRecord>> by_lang;
    for (const auto& a : articles) by_lang[a.lang].push_back(a);
    for (const auto& [lang, docs] : by_lang) idf.emplace(lang, corpus_idf(docs, tokenizer));
  }
  std::vector<TrainPair> out;
  out.reserve(articles.size());
  for (const auto& a : articles) {
    try {
      const IdfTable* table = use_corpus_idf ? &idf.at(a.lang) : nullptr;
      out.push_back(make_extractive_pair(a, config, table));
      if (keep_ids) out.back().id = a.id;
    } catch (const DataError& e) {
      errors.add(a.id, e.what());
    }
  }
  return out;
}

void register_filter(CLI::App& parent, Context& ctx) {
  struct Opts {
    std::filesystem::path in;
    OutputFlags output;
    std::optional<std::filesystem::path> stats;
    std::optional<std::size_t> min_sentences;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = parent.add_subcommand("filter", "Keep articles with at least N sentences");
  cmd->add_option("--in", opts->in, "Article records")->required()->check(CLI::ExistingFile);
  opts->output.add_to(*cmd, "Filtered article records");
  cmd->add_option("--stats", opts->stats, "Per-language sentence statistics (CSV)");
  cmd->add_option("--min-sentences", opts->min_sentences, "Minimum sentence count (default 5)");
  cmd->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      opts->output.require();
      ctx.log_start("corpus filter", std::nullopt);
      const std::size_t min = opts->min_sentences.value_or(ctx.config.min_sentences);
      RecordReader reader(opts->in, Schema::kArticles);
      MinSentenceFilter filter(min);
      std::string out;
      ArticleRecord record;
      while (reader.next(record)) {
        if (filter.accept(record)) {
          out += to_json_line(record);
          out += '\n';
        }
      }
      ItemErrors errors;
      errors.add(opts->in.string(), reader.errors());
      for (const auto& w : reader.warnings()) spdlog::warn("{}", w);
      const CorpusStats t = filter.totals();
      spdlog::info("corpus filter: kept {} of {} documents (min {} sentences)", t.n_kept, t.n_docs, min);
      opts->output.emit(out);
      if (opts->stats) write_file_atomic(*opts->stats, stats_csv(filter.stats(), min));
      return errors.exit_code();
    };
  });
}

}  // namespace

void register_corpus(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("corpus", "Corpus preparation");
  cmd->require_subcommand(1);
  register_filter(*cmd, ctx);
}

void register_extract(CLI::App& app, Context& ctx) {
  struct Opts {
    std::filesystem::path in;
    OutputFlags output;
    LexRankFlags lexrank;
    bool keep_ids = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("extract", "LexRank extractive summaries as training pairs");
  cmd->add_option("--in", opts->in, "Article records")->required()->check(CLI::ExistingFile);
  opts->output.add_to(*cmd, "Pair records (provenance extractive)");
  opts->lexrank.add_to(*cmd);
  cmd->add_flag("--keep-ids", opts->keep_ids,
                "Keep article ids instead of id#extractive (for scoring against references)");
  cmd->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      opts->output.require();
      const LexRankConfig config = opts->lexrank.resolve(ctx.config);
      ctx.log_start("extract", std::nullopt);
      ItemErrors errors;
      const auto articles = read_articles(opts->in, errors);
      const auto pairs = extract_all(articles, config, opts->lexrank.corpus_idf, opts->keep_ids, errors);
      spdlog::info("extract: {} pairs (k={}, mode={}, t={})", pairs.size(), config.k,
                   to_string(config.mode), config.threshold);
      opts->output.emit(render_records(pairs));
      return errors.exit_code();
    };
  });
}

void register_augment(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("augment", "Synthetic training pairs");
  cmd->require_subcommand(1);

  {
    struct Opts {
      std::filesystem::path in;
      OutputFlags output;
      LexRankFlags lexrank;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("extractive", "Pairs whose summaries are LexRank extracts");
    sub->add_option("--in", opts->in, "Unlabeled article records")->required()->check(CLI::ExistingFile);
    opts->output.add_to(*sub, "Pair records");
    opts->lexrank.add_to(*sub);
    sub->callback([&ctx, opts] {
      ctx.action = [&ctx, opts] {
        opts->output.require();
        const LexRankConfig config = opts->lexrank.resolve(ctx.config);
        ctx.log_start("augment extractive", std::nullopt);
        ItemErrors errors;
        const auto articles = read_articles(opts->in, errors);
        opts->output.emit(render_records(extract_all(articles, config, opts->lexrank.corpus_idf, false, errors)));
        return errors.exit_code();
      };
    });
  }

  {
    struct Opts {
      std::filesystem::path articles;
      std::filesystem::path generated;
      std::vector<std::string> fields{"output", "summary", "text"};
      OutputFlags output;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("selftrain", "Pair articles with model-generated summaries");
    sub->add_option("--articles", opts->articles, "Unlabeled article records")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--generated", opts->generated, "Generated summaries, one record per article id")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--field", opts->fields, "Text field(s) of the generated records, in priority order")
        ->capture_default_str();
    opts->output.add_to(*sub, "Pair records (provenance selftrain)");
    sub->callback([&ctx, opts] {
      ctx.action = [&ctx, opts] {
        opts->output.require();
        ctx.log_start("augment selftrain", std::nullopt);
        ItemErrors errors;
        const auto articles = read_articles(opts->articles, errors);
        std::vector<LineError> line_errors;
        const auto generated = load_generated_texts(opts->generated, opts->fields, &line_errors);
        errors.add(opts->generated.string(), line_errors);
        const BuildResult r = build_selftrain_pairs(articles, generated);
        for (const auto& s : r.skipped) spdlog::warn("selftrain: skipped {}: {}", s.id, s.reason);
        spdlog::info("selftrain: {} pairs, {} skipped", r.pairs.size(), r.skipped.size());
        opts->output.emit(render_records(r.pairs));
        return errors.exit_code();
      };
    });
  }

  {
    struct Opts {
      std::filesystem::path extracted;
      std::filesystem::path generated;
      std::vector<std::string> fields{"output", "text"};
      OutputFlags output;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("backsum", "Pair extracted summaries with generated documents");
    sub->add_option("--extracted", opts->extracted, "Extractive pair records")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--generated", opts->generated,
                    "Generated documents, keyed by the extractive pair id")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--field", opts->fields, "Text field(s) of the generated records, in priority order")
        ->capture_default_str();
    opts->output.add_to(*sub, "Pair records (provenance backsum)");
    sub->callback([&ctx, opts] {
      ctx.action = [&ctx, opts] {
        opts->output.require();
        ctx.log_start("augment backsum", std::nullopt);
        ItemErrors errors;
        const auto extracted = read_pairs(opts->extracted, errors);
        std::vector<LineError> line_errors;
        const auto generated = load_generated_texts(opts->generated, opts->fields, &line_errors);
        errors.add(opts->generated.string(), line_errors);
        const BuildResult r = build_backsum_pairs(extracted, generated);
        for (const auto& s : r.skipped) spdlog::warn("backsum: skipped {}: {}", s.id, s.reason);
        spdlog::info("backsum: {} pairs, {} skipped", r.pairs.size(), r.skipped.size());
        opts->output.emit(render_records(r.pairs));
        return errors.exit_code();
      };
    });
  }

  {
    struct Opts {
      std::filesystem::path real;
      std::vector<std::filesystem::path> synthetic;
      std::optional<std::size_t> cap;
      std::optional<std::uint64_t> seed;
      OutputFlags output;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("mix", "Real pairs plus a capped, seeded sample of synthetic pairs");
    sub->add_option("--real", opts->real, "Real pair records")->required()->check(CLI::ExistingFile);
    sub->add_option("--synthetic", opts->synthetic, "Synthetic pair records (repeatable)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--cap", opts->cap, "Synthetic pairs kept per language (default 6000)");
    sub->add_option("--seed", opts->seed, "Sampling and shuffle seed (default [seeds] mix)");
    opts->output.add_to(*sub, "Mixed pair records");
    sub->callback([&ctx, opts] {
      ctx.action = [&ctx, opts] {
        opts->output.require();
        AugmentPlan plan;
        plan.cap = opts->cap.value_or(ctx.config.augment_cap);
        plan.seed = opts->seed.value_or(ctx.config.seeds.mix);
        ctx.log_start("augment mix", plan.seed);
        ItemErrors errors;
        // Mixing is per language; languages are emitted in code order.
        std::map<std::string, std::pair<std::vector<TrainPair>, std::vector<TrainPair>>> by_lang;
        for (auto& p : read_pairs(opts->real, errors)) by_lang[p.lang].first.push_back(std::move(p));
        for (const auto& path : opts->synthetic) {
          for (auto& p : read_pairs(path, errors)) by_lang[p.lang].second.push_back(std::move(p));
        }
        std::string out;
        for (auto& [lang, parts] : by_lang) {
          spdlog::info("mix: language {}", lang);
          const MixResult r = mix_datasets(std::move(parts.first), std::move(parts.second), plan);
          out += render_records(r.pairs);
        }
        opts->output.emit(out);
        return errors.exit_code();
      };
    });
  }

  {
    struct Opts {
      std::vector<std::filesystem::path> in;
      std::optional<double> alpha;
      std::optional<std::size_t> draws;
      std::optional<std::uint64_t> seed;
      OutputFlags output;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("upsample", "Language sampling probabilities p ∝ n^alpha");
    sub->add_option("--in", opts->in, "Pair records, any number of languages (repeatable)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--alpha", opts->alpha, "Exponent in [0, 1] (default 0.5)")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--draws", opts->draws, "Draws for the realized schedule (default: total pairs)");
    sub->add_option("--seed", opts->seed, "Schedule seed (default [seeds] upsample)");
    opts->output.add_to(*sub, "Schedule (CSV)");
    sub->callback([&ctx, opts] {
      ctx.action = [&ctx, opts] {
        opts->output.require();
        const double alpha = opts->alpha.value_or(ctx.config.upsample_alpha);
        const std::uint64_t seed = opts->seed.value_or(ctx.config.seeds.upsample);
        ctx.log_start("augment upsample", seed);
        ItemErrors errors;
        std::map<std::string, std::size_t> counts;
        std::size_t total = 0;
        for (const auto& path : opts->in) {
          for (const auto& p : read_pairs(path, errors)) {
            ++counts[p.lang];
            ++total;
          }
        }
        if (counts.empty()) throw DataError("no pairs to count");
        const auto rows = upsample_schedule(counts, alpha, opts->draws.value_or(total), seed);
        opts->output.emit(upsample_csv(rows));
        return errors.exit_code();
      };
    });
  }
}

void register_manifest(CLI::App& app, Context& ctx) {
  struct Opts {
    std::filesystem::path out;
    bool inference = false;
    std::vector<std::string> params;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("manifest", "Fine-tuning or inference hyperparameter manifest");
  cmd->add_option("--out", opts->out, "Manifest file")->required();
  cmd->add_flag("--inference", opts->inference, "Decoding settings instead of training settings");
  cmd->add_option("--param", opts->params, "Override as key=value (repeatable)");
  cmd->callback([&ctx, opts] {
    ctx.action = [&ctx, opts] {
      ctx.log_start("manifest", std::nullopt);
      std::vector<ManifestOverride> overrides;
      for (const auto& p : opts->params) {
        const std::size_t eq = p.find('=');
        if (eq == std::string::npos) throw ConfigError("--param expects key=value, got `" + p + "`");
        overrides.push_back({p.substr(0, eq), p.substr(eq + 1)});
      }
      emit_train_manifest(opts->out, overrides, opts->inference);
      spdlog::info("wrote {}", opts->out.string());
      return kExitOk;
    };
  });
}

}  // namespace sumaug::cli
