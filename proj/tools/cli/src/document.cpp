#include "griddom/cli/document.hpp"

#include <algorithm>
#include <sstream>

#include "griddom/gallery.hpp"

namespace griddom::cli {

namespace {

Json vertex_json(Vertex v) { return Json::array({v.row, v.col}); }

Json header(const char * kind)
{
    Json j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    return j;
}

template <class T>
T field(const Json & j, const char * key)
{
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("document is missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
    }
}

Vertex vertex_field(const Json & j, const char * key)
{
    const auto pair = field<std::vector<int>>(j, key);
    if (pair.size() != 2)
        throw ValidationError(std::string("field \"") + key + "\" must be a [row, col] pair");
    return {pair[0], pair[1]};
}

GridDims dims_field(const Json & j)
{
    try {
        return GridDims(field<int>(j, "rows"), field<int>(j, "cols"));
    } catch (const ParameterError & e) {
        throw ValidationError(e.what());
    }
}

void check_version(const Json & j)
{
    const auto v = field<std::string>(j, "schema_version");
    if (v.empty() || v.front() != '1')
        throw ValidationError("unsupported schema_version " + v);
}

} // namespace

Json to_json(const ColoringDocument & doc)
{
    const Coloring & c = doc.coloring;
    Json j = header("coloring");
    j["k"] = c.k();
    j["rows"] = c.dims().rows();
    j["cols"] = c.dims().cols();
    j["palette"] = c.palette();
    Json cells = Json::array();
    for (int row = 1; row <= c.dims().rows(); ++row) {
        Json line = Json::array();
        for (int col = 1; col <= c.dims().cols(); ++col)
            line.push_back(c.at({row, col}));
        cells.push_back(std::move(line));
    }
    j["cells"] = std::move(cells);
    if (doc.provenance)
        j["provenance"] = *doc.provenance;
    return j;
}

Json to_json(const Certificate & cert)
{
    Json j = header("certificate");
    j["rows"] = cert.dims.rows();
    j["cols"] = cert.dims.cols();
    j["k"] = cert.k;
    j["t"] = cert.t;
    if (const auto * s = std::get_if<SingletonEvidence>(&cert.evidence)) {
        j["argument"] = "singleton_count";
        j["cells"] = s->cells;
        j["required_singletons"] = s->required_singletons;
        Json dom = Json::array();
        for (Vertex v : s->dominating)
            dom.push_back(vertex_json(v));
        j["dominating"] = std::move(dom);
    } else {
        const auto & tb = std::get<TwoBallEvidence>(cert.evidence);
        j["argument"] = "two_ball";
        j["corner_a"] = vertex_json(tb.corner_a);
        j["corner_b"] = vertex_json(tb.corner_b);
        Json positions = Json::array();
        for (const auto & q : tb.positions) {
            Json p;
            p["position"] = vertex_json(q.position);
            p["witness"] = Json::array({vertex_json(q.witness.first), vertex_json(q.witness.second)});
            p["distance"] = q.witness.distance;
            positions.push_back(std::move(p));
        }
        j["positions"] = std::move(positions);
    }
    return j;
}

Json to_json(const StampPlan & plan)
{
    Json j;
    j["block_height"] = plan.block.height();
    j["block_width"] = plan.block.width();
    j["transposed"] = plan.transposed;
    Json placements = Json::array();
    for (const auto & p : plan.placements) {
        Json e;
        e["origin"] = vertex_json(p.origin);
        e["recipe"] = to_string(p.recipe);
        placements.push_back(std::move(e));
    }
    j["placements"] = std::move(placements);
    return j;
}

Json to_json(const VerificationReport & report)
{
    Json j = header("verification");
    j["proper"] = report.proper;
    j["violation_count"] = report.violations.size();
    Json list = Json::array();
    for (const auto & v : report.violations) {
        Json e;
        e["vertex"] = vertex_json(v.vertex);
        e["missing"] = v.missing;
        list.push_back(std::move(e));
    }
    j["violations"] = std::move(list);
    return j;
}

Json to_json(const InfiniteWindow & window, const WindowBallCheck & check)
{
    Json j = header("infinite_window");
    j["k"] = window.spec.k;
    j["modulus"] = window.spec.modulus;
    j["row_coefficient"] = window.spec.row_coefficient;
    j["row_range"] = Json::array({window.rows.first, window.rows.last});
    j["col_range"] = Json::array({window.cols.first, window.cols.last});
    Json residues = Json::array();
    for (auto a = window.rows.first; a <= window.rows.last; ++a) {
        Json line = Json::array();
        for (auto b = window.cols.first; b <= window.cols.last; ++b)
            line.push_back(window.at(a, b));
        residues.push_back(std::move(line));
    }
    j["residues"] = std::move(residues);
    j["window_balls_checked"] = check.balls_checked;
    j["window_balls_rainbow"] = check.balls_rainbow;
    return j;
}

Json gallery_bundle()
{
    Json j = header("gallery");
    Json entries = Json::array();
    for (const auto & e : gallery_entries())
        entries.push_back(to_json(ColoringDocument{e.coloring, e.source}));
    j["entries"] = std::move(entries);
    return j;
}

Json parse_json(const std::string & text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error & e) {
        throw ValidationError(std::string("not valid JSON: ") + e.what());
    }
}

std::string document_kind(const Json & doc)
{
    if (!doc.is_object())
        throw ValidationError("document must be a JSON object");
    return doc.contains("kind") ? field<std::string>(doc, "kind") : "coloring";
}

ColoringDocument coloring_from_json(const Json & doc)
{
    check_version(doc);
    if (document_kind(doc) != "coloring")
        throw ValidationError("expected a coloring document");
    const GridDims dims = dims_field(doc);
    const auto rows = field<std::vector<std::vector<int>>>(doc, "cells");
    if (static_cast<int>(rows.size()) != dims.rows())
        throw ValidationError("cells has " + std::to_string(rows.size()) + " rows, expected " +
                              std::to_string(dims.rows()));
    std::vector<Color> cells;
    cells.reserve(static_cast<std::size_t>(dims.cells()));
    for (const auto & row : rows) {
        if (static_cast<int>(row.size()) != dims.cols())
            throw ValidationError("a row of cells has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(dims.cols()));
        cells.insert(cells.end(), row.begin(), row.end());
    }
    std::optional<std::string> provenance;
    if (doc.contains("provenance"))
        provenance = field<std::string>(doc, "provenance");
    return {Coloring(dims, field<int>(doc, "k"), field<int>(doc, "palette"), std::move(cells)),
            std::move(provenance)};
}

Certificate certificate_from_json(const Json & doc)
{
    check_version(doc);
    if (document_kind(doc) != "certificate")
        throw ValidationError("expected a certificate document");
    const GridDims dims = dims_field(doc);
    const int k = field<int>(doc, "k");
    const int t = field<int>(doc, "t");
    const auto argument = field<std::string>(doc, "argument");

    if (argument == "singleton_count") {
        SingletonEvidence ev{field<int>(doc, "cells"), field<int>(doc, "required_singletons"), {}};
        for (const auto & pair : field<std::vector<std::vector<int>>>(doc, "dominating")) {
            if (pair.size() != 2)
                throw ValidationError("dominating vertices must be [row, col] pairs");
            ev.dominating.push_back({pair[0], pair[1]});
        }
        return {dims, k, t, std::move(ev)};
    }
    if (argument == "two_ball") {
        TwoBallEvidence ev{vertex_field(doc, "corner_a"), vertex_field(doc, "corner_b"), {}};
        for (const auto & p : field<Json>(doc, "positions")) {
            const auto witness = field<std::vector<std::vector<int>>>(p, "witness");
            if (witness.size() != 2 || witness[0].size() != 2 || witness[1].size() != 2)
                throw ValidationError("witness must be two [row, col] pairs");
            ev.positions.push_back({vertex_field(p, "position"),
                                    {{witness[0][0], witness[0][1]},
                                     {witness[1][0], witness[1][1]},
                                     field<int>(p, "distance")}});
        }
        return {dims, k, t, std::move(ev)};
    }
    throw ValidationError("unknown certificate argument \"" + argument + "\"");
}

namespace {

bool is_flat(const Json & j)
{
    return std::ranges::none_of(j, [](const Json & e) { return e.is_structured(); });
}

void pretty_into(std::string & out, const Json & j, int depth)
{
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto & [key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            pretty_into(out, value, depth + 1);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            pretty_into(out, j[i], depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else {
        std::string flat = j.dump();
        if (j.is_array()) {
            flat.clear();
            for (std::size_t i = 0; i < j.size(); ++i)
                flat += (i ? ", " : "") + j[i].dump();
            flat = "[" + flat + "]";
        }
        out += flat;
    }
}

} // namespace

std::string pretty(const Json & j)
{
    std::string out;
    pretty_into(out, j, 0);
    return out + "\n";
}

std::string plain_grid(const Coloring & c)
{
    const int width = static_cast<int>(std::to_string(c.palette()).size());
    std::ostringstream out;
    for (int row = 1; row <= c.dims().rows(); ++row) {
        for (int col = 1; col <= c.dims().cols(); ++col) {
            const std::string s = std::to_string(c.at({row, col}));
            if (col > 1)
                out << ' ';
            out << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

std::string describe(const StampPlan & plan)
{
    std::string out = plan.transposed ? "T" : "";
    for (const auto & p : plan.placements) {
        if (!out.empty())
            out += ' ';
        std::string recipe = to_string(p.recipe);
        std::ranges::replace(recipe, ' ', '.');
        out += recipe + "@(" + std::to_string(p.origin.row) + "," + std::to_string(p.origin.col) + ")";
    }
    return out;
}

} // namespace griddom::cli
