#ifndef LRLTAG_LABELS_HPP
#define LRLTAG_LABELS_HPP

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace lrltag {

inline constexpr int kDefaultIgnoreId = -100;

/// Deterministic bijection between tag strings and contiguous ids
/// 0..n-1 assigned in lexicographic tag order, plus a reserved ignore
/// sentinel outside [0, n) for non-scoring positions. Immutable once built.
class TagCodec {
public:
  TagCodec() = default;

  /// Builds a codec over the distinct tags of `tagset` (duplicates are
  /// collapsed). Throws EmptyTagset when the set is empty or contains the
  /// empty string, SchemaMismatch when ignore_id falls inside [0, n).
  static TagCodec fit(const std::vector<std::string>& tagset, int ignore_id = kDefaultIgnoreId);

  int encode(const std::string& tag) const;   // UnknownTag
  const std::string& decode(int id) const;    // UnknownId, including the sentinel

  bool contains(const std::string& tag) const { return index_.count(tag) > 0; }
  std::size_t size() const { return tags_.size(); }
  int ignore_id() const { return ignore_id_; }

  /// Tags in id order.
  const std::vector<std::string>& tags() const { return tags_; }

  bool operator==(const TagCodec& other) const {
    return tags_ == other.tags_ && ignore_id_ == other.ignore_id_;
  }

  /// Canonical byte form: {"version":1,"ignore_id":...,"tags":[...]} plus a
  /// trailing newline. load(save(c)) is byte-identical to save(c).
  std::string to_json() const;
  static TagCodec from_json(const std::string& text);  // SchemaMismatch

  void save(const std::filesystem::path& path) const;      // IoFailure
  static TagCodec load(const std::filesystem::path& path); // IoFailure, SchemaMismatch

private:
  std::vector<std::string> tags_;
  std::unordered_map<std::string, int> index_;
  int ignore_id_ = kDefaultIgnoreId;
};

}  // namespace lrltag

#endif
