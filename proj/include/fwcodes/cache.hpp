#ifndef FWCODES_CACHE_HPP
#define FWCODES_CACHE_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace fwc::cache {

// content-addressed on-disk cache: one JSON file per key, with a format
// version and a payload checksum; stale or corrupt entries are ignored
class Cache {
public:
    static constexpr int kFormatVersion = 1;

    Cache(std::string dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

    bool enabled() const { return enabled_; }
    std::string path_for(const std::string& key) const;

    std::optional<nlohmann::ordered_json> get(const std::string& key) const;
    void put(const std::string& key, const nlohmann::ordered_json& payload) const;

    static std::uint64_t fnv1a(std::string_view data);

private:
    std::string dir_;
    bool enabled_;
};

}  // namespace fwc::cache

#endif
