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

#ifndef SUMAUG_RECORDS_H_
#define SUMAUG_RECORDS_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sumaug {

enum class Provenance { kReal, kExtractive, kSelftrain, kBacksum };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view name);

// One source document. `sentences` is derived from `text` by the sentence
// segmenter of `lang` and is never serialized.
struct ArticleRecord {
  std::string id;
  std::string lang;
  std::optional<std::string> title;
  std::string text;
  std::vector<std::string> sentences;

  bool operator==(const ArticleRecord&) const = default;
};

// A <document, summary> training example.
struct TrainPair {
  std::string id;
  std::string lang;
  ArticleRecord document;
  std::vector<std::string> summary;
  Provenance provenance = Provenance::kReal;

  std::string summary_text() const;  // sentences joined by single spaces
  bool operator==(const TrainPair&) const = default;
};

// Builds an article and segments its text.
ArticleRecord make_article(std::string id, std::string lang, std::string text,
                           std::optional<std::string> title = std::nullopt);

enum class Schema { kPairs, kArticles };

struct LineError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

// Streaming reader for line-delimited JSON record files.
//
// Articles carry `id`, `lang`, optional `title` and `text`; pairs add
// `summary` (array of sentences, or a string that gets segmented) and
// `provenance`. Malformed lines are skipped and reported in errors(); the
// remaining lines are still yielded in file order. A missing `id` is
// synthesized as `<file stem>:<line>`.
class RecordReader {
 public:
  RecordReader(const std::filesystem::path& path, Schema schema);
  // Reads from an already open stream; `source_name` stands in for the stem.
  RecordReader(std::istream& in, Schema schema, std::string source_name);

  bool next(ArticleRecord& out);
  bool next(TrainPair& out);

  const std::vector<LineError>& errors() const { return errors_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t lines_read() const { return line_; }

 private:
  bool next_line(std::string& line);

  std::unique_ptr<std::ifstream> file_;
  std::istream* in_;
  Schema schema_;
  std::string stem_;
  std::size_t line_ = 0;
  std::vector<LineError> errors_;
  std::vector<std::string> warnings_;
};

std::vector<ArticleRecord> load_articles(const std::filesystem::path& path,
                                         std::vector<LineError>* errors = nullptr);
std::vector<TrainPair> load_pairs(const std::filesystem::path& path,
                                  std::vector<LineError>* errors = nullptr);

// Canonical one-line encodings (no trailing newline). Reading a canonical
// line and writing it again reproduces the same bytes.
std::string to_json_line(const ArticleRecord& record);
std::string to_json_line(const TrainPair& pair);

class RecordWriter {
 public:
  explicit RecordWriter(const std::filesystem::path& path);
  explicit RecordWriter(std::ostream& out);

  void write(const ArticleRecord& record);
  void write(const TrainPair& pair);
  void flush() { out_->flush(); }
  std::size_t count() const { return count_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
  std::size_t count_ = 0;
};

// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
// Writes via a temporary file and rename so readers never see partial data.
// Missing parent directories are created.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace sumaug

#endif  // SUMAUG_RECORDS_H_
