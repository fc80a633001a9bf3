#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vsdo/oracle.hpp"

namespace vsdo {

// Raised on bad magic, version mismatch, or truncated/garbled streams.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Oracle file format "VSDO1", version 1, little-endian throughout.
// Byte layout documented in docs/format.md. A deserialized oracle answers
// every query identically to the one serialized.
std::string serialize_oracle(const Oracle& o);
Oracle deserialize_oracle(const std::string& bytes);

void save_oracle_file(const Oracle& o, const std::string& path);
Oracle load_oracle_file(const std::string& path);

}  // namespace vsdo
