#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace hmtest {

namespace fs = std::filesystem;

fs::path fixture(std::string_view name);

std::string read_file(const fs::path& path);
void write_file(const fs::path& path, std::string_view contents);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(std::string_view name) const { return path_ / name; }

 private:
  fs::path path_;
};

/// Copies every regular file of `from` into `to` (created if needed).
void copy_dir(const fs::path& from, const fs::path& to);

/// Minimal article document around a body snippet.
std::string article_xml(std::string_view id, std::string_view body);

}  // namespace hmtest
