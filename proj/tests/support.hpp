#ifndef LRLTAG_TESTS_SUPPORT_HPP
#define LRLTAG_TESTS_SUPPORT_HPP

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace lrltag::test {

/// Scratch directory removed on destruction.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    path = std::filesystem::temp_directory_path() /
           ("lrltag-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

inline std::string random_word(std::mt19937_64& rng, int min_len = 1, int max_len = 8) {
  static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string word;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) word.push_back(alphabet[pick(rng)]);
  return word;
}

inline std::vector<std::string> tag_pool(std::size_t k) {
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < k; ++i) tags.push_back("T" + std::to_string(i));
  return tags;
}

}  // namespace lrltag::test

#endif
