#include "cattab/cache.hpp"

#include "cattab/records.hpp"

#include <fstream>
#include <sstream>

namespace cattab {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string cache_key(std::string_view kind, int k) {
    return std::string(kind) + "-k" + std::to_string(k) + "-v" +
           std::to_string(records::kFormatVersion);
}

namespace {

std::filesystem::path payload_path(const std::filesystem::path& dir, std::string_view kind,
                                   int k) {
    return dir / (cache_key(kind, k) + ".jsonl");
}

std::filesystem::path hash_path(const std::filesystem::path& dir, std::string_view kind, int k) {
    return dir / (cache_key(kind, k) + ".fnv");
}

}  // namespace

std::optional<std::string> cache_load(const std::filesystem::path& dir, std::string_view kind,
                                      int k) {
    std::ifstream payload_in(payload_path(dir, kind, k), std::ios::binary);
    std::ifstream hash_in(hash_path(dir, kind, k));
    if (!payload_in || !hash_in) return std::nullopt;
    std::ostringstream payload;
    payload << payload_in.rdbuf();
    std::string stored_hash;
    hash_in >> stored_hash;
    std::ostringstream expected;
    expected << std::hex << fnv1a64(payload.str());
    if (stored_hash != expected.str()) return std::nullopt;
    return payload.str();
}

void cache_store(const std::filesystem::path& dir, std::string_view kind, int k,
                 std::string_view payload) {
    std::filesystem::create_directories(dir);
    std::ofstream payload_out(payload_path(dir, kind, k), std::ios::binary);
    payload_out << payload;
    std::ofstream hash_out(hash_path(dir, kind, k));
    hash_out << std::hex << fnv1a64(payload);
}

}  // namespace cattab
