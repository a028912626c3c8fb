#include "fwcodes/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fwcodes/error.hpp"

namespace fwc::cache {

namespace fs = std::filesystem;

std::uint64_t Cache::fnv1a(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string Cache::path_for(const std::string& key) const {
    std::ostringstream os;
    os << std::hex << fnv1a(key);
    return (fs::path(dir_) / (os.str() + ".json")).string();
}

std::optional<nlohmann::ordered_json> Cache::get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    const auto path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::ordered_json doc;
    try {
        in >> doc;
        if (doc.at("format_version").get<int>() != kFormatVersion) return std::nullopt;
        if (doc.at("key").get<std::string>() != key) return std::nullopt;
        auto payload = doc.at("payload");
        std::ostringstream chk;
        chk << std::hex << fnv1a(payload.dump());
        if (doc.at("checksum").get<std::string>() != chk.str()) {
            std::cerr << "warning: cache entry " << path << " failed its checksum, recomputing\n";
            return std::nullopt;
        }
        return payload;
    } catch (const std::exception&) {
        std::cerr << "warning: cache entry " << path << " is unreadable, recomputing\n";
        return std::nullopt;
    }
}

void Cache::put(const std::string& key, const nlohmann::ordered_json& payload) const {
    if (!enabled_) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) fail(Err::CacheError, "cannot create cache directory " + dir_ + ": " + ec.message());
    const auto path = path_for(key);
    nlohmann::ordered_json doc;
    doc["format_version"] = kFormatVersion;
    doc["key"] = key;
    std::ostringstream chk;
    chk << std::hex << fnv1a(payload.dump());
    doc["checksum"] = chk.str();
    doc["payload"] = payload;
    std::ofstream out(path);
    if (!out) fail(Err::CacheError, "cannot write cache file " + path);
    out << doc.dump(1) << "\n";
}

}  // namespace fwc::cache
