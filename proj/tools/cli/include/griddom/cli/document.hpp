#pragma once

// JSON documents exchanged by the command-line tool. Every document carries
// "schema_version" and "kind"; a document without "kind" is read as a
// coloring. See docs/schema.md.

#include <optional>
#include <string>

#include <json.hpp>

#include "griddom/bounds.hpp"
#include "griddom/construct.hpp"
#include "griddom/grid.hpp"
#include "griddom/infinite.hpp"

namespace griddom::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char * schema_version = "1.0";

struct ColoringDocument
{
    Coloring coloring;
    /// Plan recipe or figure label.
    std::optional<std::string> provenance;

    friend bool operator==(const ColoringDocument &, const ColoringDocument &) = default;
};

Json to_json(const ColoringDocument & doc);
Json to_json(const Certificate & cert);
Json to_json(const StampPlan & plan);
Json to_json(const VerificationReport & report);
Json to_json(const InfiniteWindow & window, const WindowBallCheck & check);

/// The whole gallery as one document.
Json gallery_bundle();

/// All parsers throw ValidationError on malformed input.
Json parse_json(const std::string & text);
std::string document_kind(const Json & doc);
ColoringDocument coloring_from_json(const Json & doc);
Certificate certificate_from_json(const Json & doc);

/// Indented JSON with arrays of scalars kept on one line, so grids read as
/// one row per line.
std::string pretty(const Json & j);

/// One line per row, colors separated by spaces and right-aligned.
std::string plain_grid(const Coloring & c);

/// "id@(1,1) h1@(1,5) h1.v2@(3,5) ...", prefixed with "T " for transposed plans.
std::string describe(const StampPlan & plan);

} // namespace griddom::cli
