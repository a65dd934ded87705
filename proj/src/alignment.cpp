#include "lrltag/alignment.hpp"

#include "lrltag/errors.hpp"

namespace lrltag {

void validate_tokenization(const SubwordTokenization& tokenization, std::size_t word_count) {
  if (tokenization.tokens.size() != tokenization.word_index.size()) {
    throw InconsistentTokenization("tokens and word_index differ in length (" +
                                   std::to_string(tokenization.tokens.size()) + " vs " +
                                   std::to_string(tokenization.word_index.size()) + ")");
  }
  int last_word = kNoWord;
  for (std::size_t i = 0; i < tokenization.word_index.size(); ++i) {
    int w = tokenization.word_index[i];
    if (w == kNoWord) {
      continue;
    }
    if (w < 0 || static_cast<std::size_t>(w) >= word_count) {
      throw InconsistentTokenization("word_index " + std::to_string(w) + " at token " +
                                     std::to_string(i) + " is outside 0.." +
                                     std::to_string(word_count) + "-1");
    }
    if (w == last_word) {
      // Continuation subwords must be contiguous; a special token inside a
      // word would produce a second first-subword position.
      if (i == 0 || tokenization.word_index[i - 1] != w) {
        throw InconsistentTokenization("word " + std::to_string(w) +
                                       " is interrupted by a special token");
      }
    } else if (last_word == kNoWord ? w != 0 : w != last_word + 1) {
      throw InconsistentTokenization("word coverage must be a gapless prefix, found word " +
                                     std::to_string(w) + " after " + std::to_string(last_word));
    }
    last_word = w;
  }
}

std::vector<bool> first_subword_mask(const SubwordTokenization& tokenization) {
  std::vector<bool> mask(tokenization.word_index.size(), false);
  int previous = kNoWord;
  for (std::size_t i = 0; i < tokenization.word_index.size(); ++i) {
    int w = tokenization.word_index[i];
    if (w != kNoWord && w != previous) {
      mask[i] = true;
    }
    previous = w;
  }
  return mask;
}

AlignedExample align_labels(const TaggedSentence& sentence, const SubwordTokenization& tokenization,
                            const TagCodec& codec) {
  validate_tokenization(tokenization, sentence.words.size());
  AlignedExample example;
  example.tokenization = tokenization;
  example.label_ids.assign(tokenization.size(), codec.ignore_id());
  const auto mask = first_subword_mask(tokenization);
  for (std::size_t i = 0; i < tokenization.size(); ++i) {
    if (mask[i]) {
      const auto w = static_cast<std::size_t>(tokenization.word_index[i]);
      example.label_ids[i] = codec.encode(sentence.tags[w]);
    }
  }
  return example;
}

std::vector<std::string> collapse_predictions(const std::vector<int>& predicted_ids,
                                              const SubwordTokenization& tokenization,
                                              const TagCodec& codec) {
  if (predicted_ids.size() != tokenization.size()) {
    throw LengthMismatch(predicted_ids.size(), tokenization.size());
  }
  const auto mask = first_subword_mask(tokenization);
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < predicted_ids.size(); ++i) {
    if (mask[i]) {
      tags.push_back(codec.decode(predicted_ids[i]));
    }
  }
  return tags;
}

std::pair<SubwordTokenization, bool> truncate_at_word_boundary(
    const SubwordTokenization& tokenization, std::size_t max_tokens) {
  if (tokenization.tokens.size() != tokenization.word_index.size()) {
    throw InconsistentTokenization("tokens and word_index differ in length");
  }
  if (tokenization.size() <= max_tokens) {
    return {tokenization, false};
  }
  std::size_t keep = max_tokens;
  // Back up while the cut would leave a word partially inside.
  while (keep > 0 && keep < tokenization.size() && tokenization.word_index[keep] != kNoWord &&
         tokenization.word_index[keep] == tokenization.word_index[keep - 1]) {
    --keep;
  }
  SubwordTokenization truncated;
  truncated.tokens.assign(tokenization.tokens.begin(),
                          tokenization.tokens.begin() + static_cast<std::ptrdiff_t>(keep));
  truncated.word_index.assign(tokenization.word_index.begin(),
                              tokenization.word_index.begin() + static_cast<std::ptrdiff_t>(keep));
  return {std::move(truncated), true};
}

}  // namespace lrltag
