#pragma once

#include <string>
#include <string_view>

namespace faultlines {

// Hex digest of SHA-256(data).
std::string sha256_hex(std::string_view data);

// First 16 hex chars; used for compact record ids.
std::string short_hash(std::string_view data);

}  // namespace faultlines
