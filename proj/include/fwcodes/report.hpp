#ifndef FWCODES_REPORT_HPP
#define FWCODES_REPORT_HPP

#include <string>

#include <json.hpp>

#include "fwcodes/catalog.hpp"
#include "fwcodes/codes.hpp"

namespace fwc::report {

using Json = nlohmann::ordered_json;  // stable member order, byte-identical output

struct RunConfig {
    walsh::Caps caps;
    std::string output_format = "text";  // text | json | csv
    std::string cache_dir = ".fwcodes-cache";
    bool cache_enabled = true;
    int parallelism = 0;  // 0 = hardware concurrency

    void validate() const;
};

Json to_json(const codes::CodeReport& rep);
Json to_json(const catalog::ExperimentReport& rep);
std::string to_csv(const codes::CodeReport& rep);
std::string to_text(const codes::CodeReport& rep);

Json spectrum_to_json(const walsh::WalshSpectrum& s);
walsh::WalshSpectrum spectrum_from_json(const Json& j);

}  // namespace fwc::report

#endif
