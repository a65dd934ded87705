#include "lrltag/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "lrltag/errors.hpp"

namespace lrltag {

namespace {

void validate_sentence(const TaggedSentence& sentence) {
  if (sentence.words.empty()) {
    throw EmptyInput("sentence has no words");
  }
  if (sentence.words.size() != sentence.tags.size()) {
    throw LengthMismatch(sentence.words.size(), sentence.tags.size());
  }
  for (const auto& word : sentence.words) {
    if (word.empty()) {
      throw Error("word must be non-empty");
    }
    if (word.find('\n') != std::string::npos || word.find('\r') != std::string::npos) {
      throw Error("word contains a line break: \"" + word + "\"");
    }
  }
  for (const auto& tag : sentence.tags) {
    if (tag.empty()) {
      throw Error("tag must be non-empty");
    }
    if (tag.find('\n') != std::string::npos || tag.find('\r') != std::string::npos) {
      throw Error("tag contains a line break: \"" + tag + "\"");
    }
  }
}

// Calls fn(line, line_no) for every line; line numbers are 1-based and a
// trailing '\r' is stripped so CRLF input behaves like LF.
template <typename Fn>
void for_each_line(const std::string& text, Fn fn) {
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    if (start == text.size()) {
      break;  // no final newline-less fragment left
    }
    std::size_t end = text.find('\n', start);
    std::string line;
    if (end == std::string::npos) {
      line = text.substr(start);
      start = text.size();
    } else {
      line = text.substr(start, end - start);
      start = end + 1;
    }
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    fn(line, ++line_no);
  }
}

void check_delimiter(const std::string& delimiter) {
  if (delimiter.empty()) {
    throw UnsupportedFormat("delimiter must be non-empty");
  }
  if (delimiter.find('\n') != std::string::npos || delimiter.find('\r') != std::string::npos) {
    throw UnsupportedFormat("delimiter must not contain a line break");
  }
}

}  // namespace

std::size_t Corpus::token_count() const {
  std::size_t total = 0;
  for (const auto& sentence : sentences) {
    total += sentence.words.size();
  }
  return total;
}

Corpus make_corpus(std::vector<TaggedSentence> sentences) {
  std::set<std::string> tags;
  for (const auto& sentence : sentences) {
    validate_sentence(sentence);
    tags.insert(sentence.tags.begin(), sentence.tags.end());
  }
  Corpus corpus;
  corpus.sentences = std::move(sentences);
  corpus.tagset.assign(tags.begin(), tags.end());
  return corpus;
}

Corpus parse_two_column(const std::string& text, const std::string& delimiter) {
  check_delimiter(delimiter);
  std::vector<TaggedSentence> sentences;
  TaggedSentence current;
  auto flush = [&] {
    if (!current.words.empty()) {
      sentences.push_back(std::move(current));
      current = TaggedSentence{};
    }
  };
  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    if (line.empty()) {
      flush();
      return;
    }
    std::size_t pos = line.find(delimiter);
    if (pos == std::string::npos) {
      throw MalformedLine(line_no, "expected `word" + delimiter + "tag`, delimiter not found");
    }
    if (line.find(delimiter, pos + delimiter.size()) != std::string::npos) {
      throw MalformedLine(line_no, "more than one delimiter");
    }
    std::string word = line.substr(0, pos);
    std::string tag = line.substr(pos + delimiter.size());
    if (word.empty()) {
      throw MalformedLine(line_no, "empty word");
    }
    if (tag.empty()) {
      throw MalformedLine(line_no, "empty tag");
    }
    current.words.push_back(std::move(word));
    current.tags.push_back(std::move(tag));
  });
  flush();
  return make_corpus(std::move(sentences));
}

std::string serialize_two_column(const Corpus& corpus, const std::string& delimiter) {
  check_delimiter(delimiter);
  std::string out;
  for (std::size_t s = 0; s < corpus.sentences.size(); ++s) {
    const auto& sentence = corpus.sentences[s];
    if (s > 0) {
      out += '\n';
    }
    for (std::size_t i = 0; i < sentence.words.size(); ++i) {
      const auto& word = sentence.words[i];
      const auto& tag = sentence.tags[i];
      if (word.find(delimiter) != std::string::npos || tag.find(delimiter) != std::string::npos) {
        throw Error("token contains the column delimiter: \"" + word + delimiter + tag + "\"");
      }
      out += word;
      out += delimiter;
      out += tag;
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string> split_whitespace(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(static_cast<char>(c));
    }
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  return tokens;
}

TaggedSentence normalize_parallel(const std::string& sentence_text, const std::string& tag_text) {
  TaggedSentence sentence;
  sentence.words = split_whitespace(sentence_text);
  sentence.tags = split_whitespace(tag_text);
  if (sentence.words.empty() && sentence.tags.empty()) {
    throw EmptyInput("both sentence and tag sequence are empty");
  }
  if (sentence.words.size() != sentence.tags.size()) {
    throw LengthMismatch(sentence.words.size(), sentence.tags.size());
  }
  return sentence;
}

Corpus parse_parallel(const std::string& text, const std::string& delimiter) {
  check_delimiter(delimiter);
  std::vector<TaggedSentence> sentences;
  for_each_line(text, [&](const std::string& line, std::size_t line_no) {
    if (line.empty()) {
      return;
    }
    std::size_t pos = line.find(delimiter);
    if (pos == std::string::npos) {
      throw MalformedLine(line_no, "expected `sentence" + delimiter + "tag sequence`, delimiter not found");
    }
    if (line.find(delimiter, pos + delimiter.size()) != std::string::npos) {
      throw MalformedLine(line_no, "more than one delimiter");
    }
    try {
      sentences.push_back(normalize_parallel(line.substr(0, pos), line.substr(pos + delimiter.size())));
    } catch (const LengthMismatch& e) {
      throw LengthMismatch(e.n_words, e.n_tags, line_no);
    } catch (const EmptyInput&) {
      throw MalformedLine(line_no, "row has no tokens");
    }
  });
  return make_corpus(std::move(sentences));
}

std::pair<Corpus, Corpus> split_train_test(const Corpus& corpus, double train_fraction,
                                           std::uint64_t seed) {
  if (corpus.empty()) {
    throw EmptyCorpus();
  }
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
    throw DegenerateSplit("train_fraction must lie strictly between 0 and 1, got " +
                          std::to_string(train_fraction));
  }
  const std::size_t n = corpus.sentences.size();
  const auto train_size =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_fraction));
  if (train_size == 0 || train_size == n) {
    throw DegenerateSplit("split of " + std::to_string(n) + " sentences at fraction " +
                          std::to_string(train_fraction) + " leaves one side empty");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Explicit Fisher-Yates over mt19937_64 so the partition is identical
  // across platforms for a fixed seed.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  std::vector<TaggedSentence> train_sents;
  std::vector<TaggedSentence> test_sents;
  train_sents.reserve(train_size);
  test_sents.reserve(n - train_size);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < train_size) {
      train_sents.push_back(corpus.sentences[order[i]]);
    } else {
      test_sents.push_back(corpus.sentences[order[i]]);
    }
  }
  return {make_corpus(std::move(train_sents)), make_corpus(std::move(test_sents))};
}

TagDistribution tag_distribution(const Corpus& corpus) {
  if (corpus.empty()) {
    throw EmptyCorpus();
  }
  TagDistribution dist;
  for (const auto& sentence : corpus.sentences) {
    for (const auto& tag : sentence.tags) {
      ++dist.counts[tag];
      ++dist.total;
    }
  }
  for (const auto& [tag, count] : dist.counts) {
    dist.fractions[tag] = static_cast<double>(count) / static_cast<double>(dist.total);
  }
  return dist;
}

namespace {

std::vector<std::pair<std::string, std::size_t>> by_descending_count(const TagDistribution& dist) {
  std::vector<std::pair<std::string, std::size_t>> rows(dist.counts.begin(), dist.counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) {
      return a.second > b.second;
    }
    return a.first < b.first;
  });
  return rows;
}

}  // namespace

std::string distribution_csv(const TagDistribution& dist) {
  std::string out = "tag,count,fraction\n";
  for (const auto& [tag, count] : by_descending_count(dist)) {
    out += tag;
    out += ',';
    out += std::to_string(count);
    out += ',';
    out += format_fixed(dist.fractions.at(tag), 6);
    out += '\n';
  }
  return out;
}

double top2_share(const TagDistribution& dist) {
  auto rows = by_descending_count(dist);
  double share = 0.0;
  for (std::size_t i = 0; i < rows.size() && i < 2; ++i) {
    share += dist.fractions.at(rows[i].first);
  }
  return share;
}

std::string format_fixed(double value, int places) {
  bool negative = value < 0;
  long double magnitude = negative ? -static_cast<long double>(value) : value;
  long double scale = 1.0L;
  for (int i = 0; i < places; ++i) {
    scale *= 10.0L;
  }
  auto scaled = static_cast<unsigned long long>(std::floor(magnitude * scale + 0.5L));
  unsigned long long whole = places > 0 ? scaled / static_cast<unsigned long long>(scale) : scaled;
  unsigned long long frac = places > 0 ? scaled % static_cast<unsigned long long>(scale) : 0;
  std::string out = negative && scaled > 0 ? "-" : "";
  out += std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

}  // namespace lrltag
