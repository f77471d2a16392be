#ifndef GRS_IO_HPP
#define GRS_IO_HPP

#include <string>
#include <vector>

namespace grs {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double x);

/// Writes content to path atomically (temp file in the same directory,
/// then rename). Throws on I/O failure; no partial file is left behind.
void atomic_write(const std::string& path, const std::string& content);

/// Minimal CSV assembly: comma separation, LF line endings, header first.
std::string csv_join(const std::vector<std::string>& fields);

}  // namespace grs

#endif
