#ifndef LRLTAG_IO_HPP
#define LRLTAG_IO_HPP

#include <filesystem>
#include <string>

namespace lrltag {

/// Reads a whole file as bytes. Throws IoFailure.
std::string read_text_file(const std::filesystem::path& path);

/// Writes bytes to a file, creating parent directories. Throws IoFailure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace lrltag

#endif
