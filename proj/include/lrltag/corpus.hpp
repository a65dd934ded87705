#ifndef LRLTAG_CORPUS_HPP
#define LRLTAG_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lrltag {

/// One annotated sentence: parallel surface words and gold POS tags.
struct TaggedSentence {
  std::vector<std::string> words;
  std::vector<std::string> tags;

  std::size_t size() const { return words.size(); }
  bool operator==(const TaggedSentence&) const = default;
};

/// A collection of tagged sentences. tagset is the lexicographically sorted
/// set of distinct tags occurring in the sentences.
struct Corpus {
  std::vector<TaggedSentence> sentences;
  std::vector<std::string> tagset;

  bool empty() const { return sentences.empty(); }
  std::size_t token_count() const;
  bool operator==(const Corpus&) const = default;
};

/// Token counts and fractions per tag. Fractions sum to 1 when total > 0.
struct TagDistribution {
  std::map<std::string, std::size_t> counts;
  std::map<std::string, double> fractions;
  std::size_t total = 0;
};

inline const std::string kTabDelimiter = "\t";

/// Validates sentences and derives the tagset. Every sentence must have
/// words and tags of equal, nonzero length; tokens must be non-empty and
/// free of line breaks.
Corpus make_corpus(std::vector<TaggedSentence> sentences);

/// Parses the canonical two-column format: one `word<delim>tag` pair per
/// line, blank line between sentences, trailing blanks permitted. Empty
/// input yields an empty corpus.
Corpus parse_two_column(const std::string& text, const std::string& delimiter = kTabDelimiter);

/// Emits canonical two-column text: single blank line between sentences,
/// trailing newline, no trailing blank line. parse(serialize(c)) == c.
std::string serialize_two_column(const Corpus& corpus, const std::string& delimiter = kTabDelimiter);

/// Zips a whitespace-tokenized sentence with a whitespace-separated tag
/// sequence. Runs of whitespace count as one separator.
TaggedSentence normalize_parallel(const std::string& sentence_text, const std::string& tag_text);

/// Parses the parallel row format: one `sentence<delim>tag sequence` record
/// per non-blank line, both sides whitespace-tokenized.
Corpus parse_parallel(const std::string& text, const std::string& delimiter = kTabDelimiter);

/// Seeded sentence-level split. The first floor(n * train_fraction)
/// sentences of a deterministic shuffle become the train side. Throws
/// DegenerateSplit when either side would be empty.
std::pair<Corpus, Corpus> split_train_test(const Corpus& corpus, double train_fraction = 0.8,
                                           std::uint64_t seed = 0);

/// Exact per-tag token counts and fractions. Throws EmptyCorpus.
TagDistribution tag_distribution(const Corpus& corpus);

/// CSV with header `tag,count,fraction`, rows by descending count (ties by
/// tag), fraction with 6 decimals.
std::string distribution_csv(const TagDistribution& dist);

/// Fraction of tokens covered by the two most frequent tags.
double top2_share(const TagDistribution& dist);

/// Splits on runs of whitespace; never returns empty tokens.
std::vector<std::string> split_whitespace(const std::string& text);

/// Rounds half-up to `places` decimals and formats with trailing zeros.
std::string format_fixed(double value, int places);

}  // namespace lrltag

#endif
