#ifndef LRLTAG_ERRORS_HPP
#define LRLTAG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrltag {

/// Root of all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A non-blank corpus line that does not split into `word<delim>tag`.
class MalformedLine : public Error {
public:
  MalformedLine(std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail), line_no(line) {}
  std::size_t line_no;
};

class EmptyCorpus : public Error {
public:
  explicit EmptyCorpus(const std::string& msg = "corpus has no sentences") : Error(msg) {}
};

/// Parallel word/tag sequences of different lengths. line_no is 0 when the
/// mismatch was not tied to a file row.
class LengthMismatch : public Error {
public:
  LengthMismatch(std::size_t words, std::size_t tags, std::size_t line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + describe(words, tags)
                       : describe(words, tags)),
        n_words(words),
        n_tags(tags),
        line_no(line) {}
  std::size_t n_words;
  std::size_t n_tags;
  std::size_t line_no;

private:
  static std::string describe(std::size_t w, std::size_t t) {
    return "length mismatch (" + std::to_string(w) + " words vs " + std::to_string(t) + " tags)";
  }
};

class DegenerateSplit : public Error {
public:
  explicit DegenerateSplit(const std::string& msg) : Error(msg) {}
};

class EmptyTagset : public Error {
public:
  explicit EmptyTagset(const std::string& msg = "tagset must be non-empty") : Error(msg) {}
};

class UnknownTag : public Error {
public:
  explicit UnknownTag(const std::string& t) : Error("unknown tag: \"" + t + "\""), tag(t) {}
  std::string tag;
};

class UnknownId : public Error {
public:
  explicit UnknownId(int i) : Error("unknown label id: " + std::to_string(i)), id(i) {}
  int id;
};

class IoFailure : public Error {
public:
  explicit IoFailure(const std::string& msg) : Error(msg) {}
};

/// A persisted file that parses but violates its schema.
class SchemaMismatch : public Error {
public:
  explicit SchemaMismatch(const std::string& msg) : Error(msg) {}
};

class InconsistentTokenization : public Error {
public:
  explicit InconsistentTokenization(const std::string& msg) : Error(msg) {}
};

/// Training corpus contains a tag the codec cannot encode.
class CodecCoverageError : public Error {
public:
  explicit CodecCoverageError(const std::string& msg) : Error(msg) {}
};

class BackendUnavailable : public Error {
public:
  explicit BackendUnavailable(const std::string& msg) : Error(msg) {}
};

class ModelNotTrained : public Error {
public:
  explicit ModelNotTrained(const std::string& msg = "model has not been trained") : Error(msg) {}
};

class EmptyInput : public Error {
public:
  explicit EmptyInput(const std::string& msg = "input is empty") : Error(msg) {}
};

/// Bundle content does not match its manifest checksum.
class BundleCorrupt : public Error {
public:
  explicit BundleCorrupt(const std::string& msg) : Error(msg) {}
};

class VersionMismatch : public Error {
public:
  explicit VersionMismatch(const std::string& msg) : Error(msg) {}
};

class UnsupportedFormat : public Error {
public:
  explicit UnsupportedFormat(const std::string& msg) : Error(msg) {}
};

/// Run configuration that cannot be used as given.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace lrltag

#endif
