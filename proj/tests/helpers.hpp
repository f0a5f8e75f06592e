// Copyright 2026 The sclego Authors
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
//
// Shared test plumbing: fixture paths, scratch directories, and a helper
// that runs the real CLI binary and captures its exit code and streams.

#ifndef SCLEGO_TESTS_HELPERS_HPP
#define SCLEGO_TESTS_HELPERS_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "sclego/io.hpp"

namespace testutil {

namespace fs = std::filesystem;

inline fs::path data_dir() { return fs::path(SCLEGO_DATA_DIR); }

inline std::string cli_path() { return SCLEGO_CLI_PATH; }

// Fresh scratch directory, wiped on reuse so reruns stay deterministic.
inline fs::path fresh_dir(const std::string& name) {
  const fs::path dir =
      fs::temp_directory_path() /
      ("sclego_test_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI through the shell; `env_prefix` may carry VAR=value
// assignments. Output streams are captured via scratch files.
inline CliResult run_cli(const std::string& args,
                         const std::string& env_prefix = "") {
  static std::atomic<int> counter{0};
  const int id = ++counter;
  const fs::path base =
      fs::temp_directory_path() /
      ("sclego_cli_" + std::to_string(::getpid()) + "_" + std::to_string(id));
  const fs::path out_file = base.string() + ".out";
  const fs::path err_file = base.string() + ".err";
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += std::string(cli_path()) + " " + args + " > " + out_file.string() +
         " 2> " + err_file.string();
  const int rc = std::system(cmd.c_str());
  CliResult result;
  if (rc != -1 && WIFEXITED(rc)) result.code = WEXITSTATUS(rc);
  result.out = sclego::read_file(out_file);
  result.err = sclego::read_file(err_file);
  fs::remove(out_file);
  fs::remove(err_file);
  return result;
}

// Relative path -> bytes for every regular file under `dir`.
inline std::map<std::string, std::string> dir_contents(const fs::path& dir) {
  std::map<std::string, std::string> contents;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) {
      contents[fs::relative(entry.path(), dir).string()] =
          sclego::read_file(entry.path());
    }
  }
  return contents;
}

}  // namespace testutil

#endif  // SCLEGO_TESTS_HELPERS_HPP
