#ifndef LRLTAG_DIGEST_HPP
#define LRLTAG_DIGEST_HPP

#include <string>

namespace lrltag {

/// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace lrltag

#endif
