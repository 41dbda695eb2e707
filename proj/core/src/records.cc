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

#include "sumaug/records.h"

#include <atomic>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "sumaug/error.h"
#include "sumaug/languages.h"
#include "sumaug/segment.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

using json = nlohmann::ordered_json;

std::string require_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DataError(std::string("missing required field `") + key + "`");
  if (!it->is_string()) throw DataError(std::string("field `") + key + "` must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw DataError(std::string("field `") + key + "` must be a string");
  return it->get<std::string>();
}

json article_fields(const ArticleRecord& r) {
  json j;
  j["id"] = r.id;
  j["lang"] = r.lang;
  if (r.title) j["title"] = *r.title;
  j["text"] = r.text;
  return j;
}

std::string dump(const json& j) {
  try {
    return j.dump();
  } catch (const json::exception& e) {
    throw DataError(std::string("cannot encode record: ") + e.what());
  }
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kReal: return "real";
    case Provenance::kExtractive: return "extractive";
    case Provenance::kSelftrain: return "selftrain";
    case Provenance::kBacksum: return "backsum";
  }
  return "real";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "real") return Provenance::kReal;
  if (name == "extractive") return Provenance::kExtractive;
  if (name == "selftrain") return Provenance::kSelftrain;
  if (name == "backsum") return Provenance::kBacksum;
  throw DataError("unknown provenance `" + std::string(name) + "`");
}

std::string TrainPair::summary_text() const {
  std::string out;
  for (const auto& s : summary) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

ArticleRecord make_article(std::string id, std::string lang, std::string text,
                           std::optional<std::string> title) {
  ArticleRecord r;
  r.id = std::move(id);
  r.lang = std::move(lang);
  r.title = std::move(title);
  r.text = std::move(text);
  r.sentences = segment_sentences(r.text, r.lang);
  return r;
}

RecordReader::RecordReader(const std::filesystem::path& path, Schema schema)
    : file_(std::make_unique<std::ifstream>(path, std::ios::binary)),
      in_(file_.get()),
      schema_(schema),
      stem_(path.stem().string()) {
  if (!*file_) throw Error("cannot open record file " + path.string());
}

RecordReader::RecordReader(std::istream& in, Schema schema, std::string source_name)
    : in_(&in), schema_(schema), stem_(std::move(source_name)) {}

bool RecordReader::next_line(std::string& line) {
  while (std::getline(*in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!unicode::trim(line).empty()) return true;
  }
  return false;
}

bool RecordReader::next(ArticleRecord& out) {
  std::string line;
  while (next_line(line)) {
    try {
      const json j = json::parse(line);
      if (!j.is_object()) throw DataError("record is not a JSON object");
      ArticleRecord r;
      r.id = optional_string(j, "id").value_or(stem_ + ":" + std::to_string(line_));
      r.lang = require_string(j, "lang");
      r.title = optional_string(j, "title");
      r.text = require_string(j, "text");
      if (!unicode::is_valid_utf8(r.text)) throw DataError("`text` is not valid UTF-8");
      if (!find_language(r.lang)) {
        warnings_.push_back("line " + std::to_string(line_) + ": unknown language code `" + r.lang +
                            "`");
      }
      r.sentences = segment_sentences(r.text, r.lang);
      out = std::move(r);
      return true;
    } catch (const std::exception& e) {
      errors_.push_back({line_, e.what()});
    }
  }
  return false;
}

bool RecordReader::next(TrainPair& out) {
  std::string line;
  while (next_line(line)) {
    try {
      const json j = json::parse(line);
      if (!j.is_object()) throw DataError("record is not a JSON object");
      TrainPair p;
      p.id = optional_string(j, "id").value_or(stem_ + ":" + std::to_string(line_));
      p.lang = require_string(j, "lang");
      p.document = make_article(p.id, p.lang, require_string(j, "text"), optional_string(j, "title"));
      if (!find_language(p.lang)) {
        warnings_.push_back("line " + std::to_string(line_) + ": unknown language code `" + p.lang +
                            "`");
      }
      auto it = j.find("summary");
      if (it == j.end()) throw DataError("missing required field `summary`");
      if (it->is_string()) {
        p.summary = segment_sentences(it->get<std::string>(), p.lang);
      } else if (it->is_array()) {
        for (const auto& s : *it) {
          if (!s.is_string()) throw DataError("`summary` entries must be strings");
          p.summary.push_back(s.get<std::string>());
        }
      } else {
        throw DataError("field `summary` must be a string or an array of strings");
      }
      if (p.summary.empty()) throw DataError("empty `summary`");
      const auto prov = optional_string(j, "provenance");
      p.provenance = prov ? parse_provenance(*prov) : Provenance::kReal;
      out = std::move(p);
      return true;
    } catch (const std::exception& e) {
      errors_.push_back({line_, e.what()});
    }
  }
  return false;
}

std::vector<ArticleRecord> load_articles(const std::filesystem::path& path,
                                         std::vector<LineError>* errors) {
  RecordReader reader(path, Schema::kArticles);
  std::vector<ArticleRecord> out;
  for (ArticleRecord r; reader.next(r);) out.push_back(std::move(r));
  if (errors) *errors = reader.errors();
  return out;
}

std::vector<TrainPair> load_pairs(const std::filesystem::path& path,
                                  std::vector<LineError>* errors) {
  RecordReader reader(path, Schema::kPairs);
  std::vector<TrainPair> out;
  for (TrainPair p; reader.next(p);) out.push_back(std::move(p));
  if (errors) *errors = reader.errors();
  return out;
}

std::string to_json_line(const ArticleRecord& record) { return dump(article_fields(record)); }

std::string to_json_line(const TrainPair& pair) {
  json j;
  j["id"] = pair.id;
  j["lang"] = pair.lang;
  if (pair.document.title) j["title"] = *pair.document.title;
  j["text"] = pair.document.text;
  j["summary"] = pair.summary;
  j["provenance"] = to_string(pair.provenance);
  return dump(j);
}

RecordWriter::RecordWriter(const std::filesystem::path& path)
    : file_(std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc)),
      out_(file_.get()) {
  if (!*file_) throw Error("cannot write " + path.string());
}

RecordWriter::RecordWriter(std::ostream& out) : out_(&out) {}

void RecordWriter::write(const ArticleRecord& record) {
  *out_ << to_json_line(record) << '\n';
  ++count_;
}

void RecordWriter::write(const TrainPair& pair) {
  *out_ << to_json_line(pair) << '\n';
  ++count_;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  static std::atomic<unsigned> counter{0};
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace sumaug
