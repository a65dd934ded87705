#ifndef LRLTAG_ALIGNMENT_HPP
#define LRLTAG_ALIGNMENT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lrltag/corpus.hpp"
#include "lrltag/labels.hpp"

namespace lrltag {

/// word_index entry for special tokens that belong to no source word.
inline constexpr int kNoWord = -1;

/// A subword view of one sentence. word_index[i] is the source word
/// position of token i, or kNoWord for special boundary tokens. Non-special
/// entries are non-decreasing and cover a prefix 0..k of the word positions;
/// truncation may drop a suffix of words.
struct SubwordTokenization {
  std::vector<std::string> tokens;
  std::vector<int> word_index;

  std::size_t size() const { return tokens.size(); }
  bool operator==(const SubwordTokenization&) const = default;
};

/// A tokenization with per-token label ids: the class id at each word's
/// first subword, the codec's ignore sentinel everywhere else.
struct AlignedExample {
  SubwordTokenization tokenization;
  std::vector<int> label_ids;
};

/// Checks the structural invariants of a tokenization against a word count.
/// Throws InconsistentTokenization.
void validate_tokenization(const SubwordTokenization& tokenization, std::size_t word_count);

/// True at positions that carry a label under the first-subword scheme.
std::vector<bool> first_subword_mask(const SubwordTokenization& tokenization);

/// First-subword labeling: the first subword of word w receives
/// encode(tags[w]); continuation subwords and special tokens receive the
/// ignore sentinel. Throws UnknownTag, InconsistentTokenization.
AlignedExample align_labels(const TaggedSentence& sentence, const SubwordTokenization& tokenization,
                            const TagCodec& codec);

/// Collapses per-subword predictions back to one tag per surviving word by
/// decoding the prediction at each word's first subword. Throws
/// LengthMismatch, UnknownId.
std::vector<std::string> collapse_predictions(const std::vector<int>& predicted_ids,
                                              const SubwordTokenization& tokenization,
                                              const TagCodec& codec);

/// Cuts a tokenization to at most max_tokens, backing up so no word is
/// split mid-way. Second element reports whether anything was dropped.
std::pair<SubwordTokenization, bool> truncate_at_word_boundary(
    const SubwordTokenization& tokenization, std::size_t max_tokens);

}  // namespace lrltag

#endif
