#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cattab {

// Enumeration cache for the CLI: payloads are the exact record streams the
// commands emit, keyed by structure kind, size and format version. A sidecar
// hash file guards against stale or corrupted payloads; on mismatch the
// entry is treated as a miss.
std::uint64_t fnv1a64(std::string_view bytes);

std::string cache_key(std::string_view kind, int k);

std::optional<std::string> cache_load(const std::filesystem::path& dir, std::string_view kind,
                                      int k);

void cache_store(const std::filesystem::path& dir, std::string_view kind, int k,
                 std::string_view payload);

}  // namespace cattab
