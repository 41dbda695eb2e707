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

// Deterministic stand-in for a text-generation server, driven through the
// command backend: prompt on stdin, completion on stdout.
//
//   sumaug_stub_backend echo             completion = prompt
//   sumaug_stub_backend lead [N]         first N (default 2) sentences of the
//                                        text that follows the prompt's
//                                        instruction
//   sumaug_stub_backend reply TEXT       completion = TEXT
//   sumaug_stub_backend fail [CODE]      exit CODE (default 3)
//   sumaug_stub_backend fail-if SUBSTR   fail when the prompt contains SUBSTR,
//                                        echo otherwise
//
// When SUMAUG_STUB_LOG names a file, the first line of every prompt is
// appended to it, one call per line.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <string_view>

#include "sumaug/segment.h"
#include "sumaug/unicode.h"

namespace {

constexpr std::string_view kArticleMarkers[] = {
    "Summarize this article:\n",
    "using only 2 sentences: ",
    ":  ",
    ". \n ",
};

std::string_view article_part(std::string_view prompt) {
  for (std::string_view marker : kArticleMarkers) {
    const std::size_t at = prompt.find(marker);
    if (at != std::string_view::npos) return prompt.substr(at + marker.size());
  }
  return prompt;
}

void log_call(std::string_view prompt) {
  const char* path = std::getenv("SUMAUG_STUB_LOG");
  if (path == nullptr || *path == '\0') return;
  std::ofstream log(path, std::ios::app | std::ios::binary);
  log << prompt.substr(0, prompt.find('\n')) << '\n';
}

int usage() {
  std::cerr << "usage: sumaug_stub_backend echo | lead [N] | reply TEXT | fail [CODE] | fail-if SUBSTR\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage();
  const std::string_view mode = argv[1];
  const std::string prompt{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  log_call(prompt);

  if (mode == "echo") {
    std::cout << prompt;
  } else if (mode == "lead") {
    const std::size_t n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 2;
    const sumaug::SentenceSegmenter segmenter("eng");
    const auto sentences = segmenter.split(sumaug::unicode::trim(article_part(prompt)));
    for (std::size_t i = 0; i < sentences.size() && i < n; ++i) {
      if (i) std::cout << ' ';
      std::cout << sentences[i];
    }
    std::cout << '\n';
  } else if (mode == "reply") {
    if (argc < 3) return usage();
    std::cout << argv[2];
  } else if (mode == "fail") {
    std::cerr << "stub backend: failing on request\n";
    return argc > 2 ? std::atoi(argv[2]) : 3;
  } else if (mode == "fail-if") {
    if (argc < 3) return usage();
    if (prompt.find(argv[2]) != std::string::npos) {
      std::cerr << "stub backend: prompt contains `" << argv[2] << "`\n";
      return 3;
    }
    std::cout << prompt;
  } else {
    return usage();
  }
  return 0;
}
