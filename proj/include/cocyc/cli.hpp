#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cocyc/image.hpp"
#include "cocyc/types.hpp"
#include "json.hpp"

namespace cocyc::cli {

struct RunConfig {
    std::string input;
    Mode mode = Mode::Fast;
    std::uint64_t seed = 0;  // ignored in invariant mode
    std::optional<int> level;
    std::vector<Pixel> anchors;
    std::string output;  // JSON path; "-" or empty writes to stdout
    std::string svg;     // optional
    bool verify = false;
};

enum ExitStatus : int { kOk = 0, kVerifyFailed = 1, kInputError = 2 };

struct RunResult {
    int status = kOk;
    nlohmann::ordered_json document;
    std::string message;  // set for input errors
};

/// The whole pipeline on an image already in memory. No files are touched.
RunResult compute(const BinaryImage& img, const RunConfig& cfg);

/// Reads cfg.input, runs compute and writes the JSON (and SVG) outputs.
RunResult run(const RunConfig& cfg);

/// Cracks as [[x1,y1],[x2,y2]], sorted.
nlohmann::ordered_json cracks_json(std::vector<Crack> cracks);

void write_svg(std::ostream& out, const BinaryImage& img, const nlohmann::ordered_json& doc);

/// "X,Y" -> pixel. Throws std::invalid_argument.
Pixel parse_pixel(const std::string& s);

}  // namespace cocyc::cli
