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

#include "sumaug/backend.h"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <thread>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

extern char** environ;

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "httplib.h"
#include "sumaug/unicode.h"

namespace sumaug {
namespace {

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

class CommandBackend final : public Backend {
 public:
  explicit CommandBackend(BackendSpec spec)
      : spec_(std::move(spec)), command_(replace_all(spec_.command, "{MODEL}", spec_.model)) {
    if (spec_.command.empty()) throw ConfigError("backend `" + spec_.name + "`: empty command");
    // A command that exits without reading its stdin must not kill us.
    std::signal(SIGPIPE, SIG_IGN);
  }

  const std::string& identity() const override { return spec_.model; }

  std::string complete(const std::string& prompt, const GenerationParams& params) override {
    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (pipe2(in_pipe, O_CLOEXEC) != 0 || pipe2(out_pipe, O_CLOEXEC) != 0 ||
        pipe2(err_pipe, O_CLOEXEC) != 0) {
      throw BackendError(std::string("pipe: ") + std::strerror(errno));
    }
    const std::string max_tokens = std::to_string(params.max_tokens);
    const std::string temperature = fmt::format("{}", params.temperature);
    std::string stop;
    for (const auto& s : params.stop) stop += s + "\n";

    // Environment and argv are prepared before fork: only async-signal-safe
    // calls are allowed in the child of a threaded process.
    std::vector<std::string> env_strings;
    for (char** e = environ; *e; ++e) {
      const std::string_view kv(*e);
      if (kv.starts_with("SUMAUG_MAX_TOKENS=") || kv.starts_with("SUMAUG_TEMPERATURE=") ||
          kv.starts_with("SUMAUG_STOP=")) {
        continue;
      }
      env_strings.emplace_back(kv);
    }
    env_strings.push_back("SUMAUG_MAX_TOKENS=" + max_tokens);
    env_strings.push_back("SUMAUG_TEMPERATURE=" + temperature);
    env_strings.push_back("SUMAUG_STOP=" + stop);
    std::vector<char*> envp;
    for (auto& kv : env_strings) envp.push_back(kv.data());
    envp.push_back(nullptr);
    char sh[] = "/bin/sh", dash_c[] = "-c";
    std::vector<char> cmd(command_.begin(), command_.end());
    cmd.push_back('\0');
    char* argv[] = {sh, dash_c, cmd.data(), nullptr};

    const pid_t pid = fork();
    if (pid < 0) throw BackendError(std::string("fork: ") + std::strerror(errno));
    if (pid == 0) {
      setpgid(0, 0);
      // Ignored dispositions and blocked signals survive execve.
      sigset_t none;
      sigemptyset(&none);
      sigprocmask(SIG_SETMASK, &none, nullptr);
      signal(SIGPIPE, SIG_DFL);
      dup2(in_pipe[0], STDIN_FILENO);
      dup2(out_pipe[1], STDOUT_FILENO);
      dup2(err_pipe[1], STDERR_FILENO);
      execve(sh, argv, envp.data());
      _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[1]);
    fcntl(in_pipe[1], F_SETFL, O_NONBLOCK);

    std::string out, err;
    std::size_t written = 0;
    int in_fd = in_pipe[1];
    if (prompt.empty()) {
      close(in_fd);
      in_fd = -1;
    }
    const auto deadline = std::chrono::steady_clock::now() + spec_.timeout;
    bool out_open = true, err_open = true, timed_out = false;
    char buf[8192];
    while (out_open || err_open) {
      pollfd fds[3];
      nfds_t nfds = 0;
      int out_i = -1, err_i = -1, in_i = -1;
      if (out_open) out_i = nfds, fds[nfds++] = {out_pipe[0], POLLIN, 0};
      if (err_open) err_i = nfds, fds[nfds++] = {err_pipe[0], POLLIN, 0};
      if (in_fd >= 0) in_i = nfds, fds[nfds++] = {in_fd, POLLOUT, 0};
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) {
        timed_out = true;
        break;
      }
      const int rc = poll(fds, nfds, static_cast<int>(std::min<long long>(left.count(), 1000)));
      if (rc < 0 && errno != EINTR) break;
      if (rc <= 0) continue;
      if (in_i >= 0 && (fds[in_i].revents & (POLLOUT | POLLERR | POLLHUP))) {
        const ssize_t n = write(in_fd, prompt.data() + written, prompt.size() - written);
        if (n > 0) written += static_cast<std::size_t>(n);
        if (n < 0 && errno != EAGAIN) written = prompt.size();  // reader went away
        if (written == prompt.size()) {
          close(in_fd);
          in_fd = -1;
        }
      }
      auto drain = [&](int idx, int fd, std::string& sink, bool& open) {
        if (idx < 0 || !(fds[idx].revents & (POLLIN | POLLHUP | POLLERR))) return;
        const ssize_t n = read(fd, buf, sizeof buf);
        if (n > 0) {
          sink.append(buf, static_cast<std::size_t>(n));
        } else if (n == 0 || errno != EINTR) {
          open = false;
        }
      };
      drain(out_i, out_pipe[0], out, out_open);
      drain(err_i, err_pipe[0], err, err_open);
    }
    if (in_fd >= 0) close(in_fd);
    close(out_pipe[0]);
    close(err_pipe[0]);
    if (timed_out) kill(-pid, SIGKILL);
    int status = 0;
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    if (timed_out) {
      throw BackendError(fmt::format("command timed out after {} ms", spec_.timeout.count()));
    }
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      const int code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
      std::string_view detail = unicode::trim(err);
      if (detail.size() > 200) {
        std::size_t cut = 200;
        while (cut > 0 && (static_cast<unsigned char>(detail[cut]) & 0xC0) == 0x80) --cut;
        detail = detail.substr(0, cut);
      }
      throw BackendError(fmt::format("command exited with status {}: {}", code, detail));
    }
    return out;
  }

 private:
  BackendSpec spec_;
  std::string command_;
};

class HttpBackend final : public Backend {
 public:
  explicit HttpBackend(BackendSpec spec) : spec_(std::move(spec)) {
    const std::string& url = spec_.endpoint;
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
      throw ConfigError("backend `" + spec_.name + "`: endpoint must start with http:// or https://");
    }
    const auto path_start = url.find('/', scheme_end + 3);
    base_ = url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  }

  const std::string& identity() const override { return spec_.model; }

  std::string complete(const std::string& prompt, const GenerationParams& params) override {
    httplib::Client client(base_);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(spec_.timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(spec_.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());

    nlohmann::json body = {{"model", spec_.model},
                           {"prompt", prompt},
                           {"max_tokens", params.max_tokens},
                           {"temperature", params.temperature},
                           {"stop", params.stop}};
    auto res = client.Post(path_, body.dump(), "application/json");
    if (!res) throw BackendError("http: " + httplib::to_string(res.error()));
    if (res->status != 200) throw BackendError(fmt::format("http: status {}", res->status));
    try {
      const auto reply = nlohmann::json::parse(res->body);
      if (!reply.contains("text") || !reply["text"].is_string()) {
        throw BackendError("http: response has no string `text` field");
      }
      return reply["text"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw BackendError(std::string("http: malformed response: ") + e.what());
    }
  }

 private:
  BackendSpec spec_;
  std::string base_;
  std::string path_;
};

}  // namespace

std::unique_ptr<Backend> make_backend(const BackendSpec& spec) {
  if (spec.model.empty()) throw ConfigError("backend `" + spec.name + "`: model identity is empty");
  if (spec.kind == BackendKind::kCommand) return std::make_unique<CommandBackend>(spec);
  return std::make_unique<HttpBackend>(spec);
}

std::string apply_stop_sequences(std::string text, const std::vector<std::string>& stop) {
  std::size_t cut = text.size();
  for (const auto& s : stop) {
    if (s.empty()) continue;
    cut = std::min(cut, text.find(s));
  }
  text.resize(cut);
  return text;
}

Generation generate(Backend& backend, const std::string& prompt, const GenerationParams& params,
                    const RetryPolicy& retry) {
  Generation g;
  auto delay = retry.backoff;
  for (int attempt = 0; attempt <= retry.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    ++g.attempts;
    try {
      g.text = apply_stop_sequences(backend.complete(prompt, params), params.stop);
      g.ok = true;
      g.error.clear();
      return g;
    } catch (const std::exception& e) {
      g.error = e.what();
    }
  }
  return g;
}

}  // namespace sumaug
