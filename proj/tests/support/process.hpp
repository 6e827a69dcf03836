#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hodgewitt::testing {

struct RunResult {
  int exit_code = -1;  // -1 when the process did not exit normally
  std::string out;
  std::string err;
};

// Runs an executable with arguments, capturing stdout/stderr and the exit
// code. Arguments are shell-quoted.
RunResult run_command(const std::vector<std::string>& argv);

// Self-deleting unique temporary directory.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::filesystem::path& path);
void spit(const std::filesystem::path& path, const std::string& content);

}  // namespace hodgewitt::testing
