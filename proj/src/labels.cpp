#include "lrltag/labels.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"

namespace lrltag {

namespace {

constexpr int kCodecFileVersion = 1;

}  // namespace

TagCodec TagCodec::fit(const std::vector<std::string>& tagset, int ignore_id) {
  if (tagset.empty()) {
    throw EmptyTagset();
  }
  std::set<std::string> distinct(tagset.begin(), tagset.end());
  if (distinct.count(std::string{}) > 0) {
    throw EmptyTagset("tagset contains the empty string");
  }
  TagCodec codec;
  codec.tags_.assign(distinct.begin(), distinct.end());
  codec.ignore_id_ = ignore_id;
  if (ignore_id >= 0 && static_cast<std::size_t>(ignore_id) < codec.tags_.size()) {
    throw SchemaMismatch("ignore_id " + std::to_string(ignore_id) + " collides with class ids 0.." +
                         std::to_string(codec.tags_.size() - 1));
  }
  for (std::size_t i = 0; i < codec.tags_.size(); ++i) {
    codec.index_.emplace(codec.tags_[i], static_cast<int>(i));
  }
  return codec;
}

int TagCodec::encode(const std::string& tag) const {
  auto it = index_.find(tag);
  if (it == index_.end()) {
    throw UnknownTag(tag);
  }
  return it->second;
}

const std::string& TagCodec::decode(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tags_.size()) {
    throw UnknownId(id);
  }
  return tags_[static_cast<std::size_t>(id)];
}

std::string TagCodec::to_json() const {
  nlohmann::ordered_json doc;
  doc["version"] = kCodecFileVersion;
  doc["ignore_id"] = ignore_id_;
  doc["tags"] = tags_;
  return doc.dump() + "\n";
}

TagCodec TagCodec::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaMismatch(std::string("codec file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc.contains("ignore_id") ||
      !doc.contains("tags")) {
    throw SchemaMismatch("codec file must be an object with version, ignore_id and tags");
  }
  if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kCodecFileVersion) {
    throw SchemaMismatch("unsupported codec file version: " + doc["version"].dump());
  }
  if (!doc["ignore_id"].is_number_integer()) {
    throw SchemaMismatch("ignore_id must be an integer");
  }
  if (!doc["tags"].is_array() || doc["tags"].empty()) {
    throw SchemaMismatch("tags must be a non-empty array");
  }
  std::vector<std::string> tags;
  tags.reserve(doc["tags"].size());
  for (const auto& item : doc["tags"]) {
    if (!item.is_string() || item.get<std::string>().empty()) {
      throw SchemaMismatch("tags must be non-empty strings");
    }
    tags.push_back(item.get<std::string>());
  }
  if (!std::is_sorted(tags.begin(), tags.end())) {
    throw SchemaMismatch("tags must be in lexicographic id order");
  }
  if (std::adjacent_find(tags.begin(), tags.end()) != tags.end()) {
    throw SchemaMismatch("duplicate tag in codec file");
  }
  TagCodec codec = fit(tags, doc["ignore_id"].get<int>());
  return codec;
}

void TagCodec::save(const std::filesystem::path& path) const {
  write_text_file(path, to_json());
}

TagCodec TagCodec::load(const std::filesystem::path& path) {
  return from_json(read_text_file(path));
}

}  // namespace lrltag
