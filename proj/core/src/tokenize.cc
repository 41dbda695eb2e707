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

#include "sumaug/tokenize.h"

#include <fstream>

#include "sumaug/error.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

bool has_unspaced_script(std::string_view word) {
  for (std::size_t pos = 0; pos < word.size();) {
    if (unicode::is_unspaced_script(unicode::next_code_point(word, pos))) return true;
  }
  return false;
}

std::vector<std::string_view> whitespace_chunks(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = std::string_view::npos;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t here = pos;
    const bool space = unicode::is_space(unicode::next_code_point(text, pos));
    if (space && start != std::string_view::npos) {
      out.push_back(text.substr(start, here - start));
      start = std::string_view::npos;
    } else if (!space && start == std::string_view::npos) {
      start = here;
    }
  }
  if (start != std::string_view::npos) out.push_back(text.substr(start));
  return out;
}

}  // namespace

std::string_view to_string(TokenizerKind kind) {
  switch (kind) {
    case TokenizerKind::kUnicodeWord: return "unicode_word";
    case TokenizerKind::kWhitespace: return "whitespace";
    case TokenizerKind::kCharacter: return "character";
    case TokenizerKind::kExternalVocab: return "external_vocab";
  }
  return "unicode_word";
}

TokenizerKind parse_tokenizer_kind(std::string_view name) {
  if (name == "unicode_word") return TokenizerKind::kUnicodeWord;
  if (name == "whitespace") return TokenizerKind::kWhitespace;
  if (name == "character") return TokenizerKind::kCharacter;
  if (name == "external_vocab") return TokenizerKind::kExternalVocab;
  throw ConfigError("unknown tokenizer `" + std::string(name) + "`");
}

void Vocabulary::insert(std::string_view unit) {
  std::size_t node = 0;
  for (unsigned char c : unit) {
    auto it = nodes_[node].next.find(c);
    if (it == nodes_[node].next.end()) {
      nodes_.emplace_back();
      it = nodes_[node].next.emplace(c, nodes_.size() - 1).first;
    }
    node = it->second;
  }
  if (!nodes_[node].terminal) ++size_;
  nodes_[node].terminal = true;
}

Vocabulary Vocabulary::from_units(const std::vector<std::string>& units) {
  Vocabulary v;
  for (const auto& u : units) {
    if (u.empty()) continue;
    v.insert(u);
  }
  return v;
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open vocabulary file " + path.string());
  Vocabulary v;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!unicode::is_valid_utf8(line)) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": invalid UTF-8");
    }
    for (std::size_t pos = 0; pos < line.size();) {
      if (unicode::is_space(unicode::next_code_point(line, pos))) {
        throw DataError(path.string() + ":" + std::to_string(line_no) +
                        ": vocabulary units may not contain whitespace");
      }
    }
    v.insert(line);
  }
  if (v.size() == 0) throw DataError("vocabulary file " + path.string() + " has no units");
  return v;
}

TokenSeq Vocabulary::segment(std::string_view chunk) const {
  TokenSeq out;
  std::size_t pos = 0;
  while (pos < chunk.size()) {
    std::size_t node = 0;
    std::size_t best = 0;
    for (std::size_t i = pos; i < chunk.size(); ++i) {
      auto it = nodes_[node].next.find(static_cast<unsigned char>(chunk[i]));
      if (it == nodes_[node].next.end()) break;
      node = it->second;
      if (nodes_[node].terminal) best = i + 1 - pos;
    }
    if (best == 0) {
      std::size_t next = pos;
      unicode::next_code_point(chunk, next);
      best = next - pos;
    }
    out.emplace_back(chunk.substr(pos, best));
    pos += best;
  }
  return out;
}

Tokenizer::Tokenizer(TokenizerSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == TokenizerKind::kExternalVocab) {
    if (!spec_.vocab_path) throw ConfigError("external_vocab tokenizer requires a vocabulary path");
    vocab_ = std::make_shared<const Vocabulary>(Vocabulary::load(*spec_.vocab_path));
  }
}

TokenSeq Tokenizer::split(std::string_view text) const {
  TokenSeq out;
  switch (spec_.kind) {
    case TokenizerKind::kWhitespace:
      for (auto chunk : whitespace_chunks(text)) out.emplace_back(chunk);
      break;
    case TokenizerKind::kCharacter:
      for (auto g : unicode::graphemes(text)) {
        if (!unicode::trim(g).empty()) out.emplace_back(g);
      }
      break;
    case TokenizerKind::kUnicodeWord:
      for (auto w : unicode::words(text)) {
        if (spec_.unspaced_fallback && has_unspaced_script(w)) {
          for (auto g : unicode::graphemes(w)) out.emplace_back(g);
        } else {
          out.emplace_back(w);
        }
      }
      break;
    case TokenizerKind::kExternalVocab:
      for (auto chunk : whitespace_chunks(text)) {
        for (auto& piece : vocab_->segment(chunk)) out.push_back(std::move(piece));
      }
      break;
  }
  return out;
}

TokenSeq Tokenizer::operator()(std::string_view text) const {
  if (!spec_.lowercase) return split(text);
  return split(unicode::fold_case(text));
}

TokenSeq tokenize(std::string_view text, const TokenizerSpec& spec) { return Tokenizer(spec)(text); }

std::string ngram_key(const TokenSeq& tokens, std::size_t begin, std::size_t n) {
  std::string key;
  for (std::size_t i = begin; i < begin + n; ++i) {
    if (i != begin) key.push_back(kNgramSeparator);
    key += tokens[i];
  }
  return key;
}

NgramCounts ngrams(const TokenSeq& tokens, std::size_t n) {
  if (n == 0) throw ConfigError("n-gram order must be at least 1");
  NgramCounts out;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out.counts[ngram_key(tokens, i, n)];
    ++out.total;
  }
  return out;
}

}  // namespace sumaug
