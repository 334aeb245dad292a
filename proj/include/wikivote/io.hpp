#pragma once

#include <functional>
#include <iosfwd>
#include <string>

namespace wikivote {

// Writes through a temp file in the same directory and renames it into
// place, so readers never observe partial output and failed runs leave the
// previous file untouched.
void write_file_atomic(const std::string& path, const std::function<void(std::ostream&)>& fill);

std::string read_file(const std::string& path);

}  // namespace wikivote
