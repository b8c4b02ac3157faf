#include "griddom/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "griddom/bounds.hpp"
#include "griddom/cli/document.hpp"
#include "griddom/cli/svg.hpp"
#include "griddom/construct.hpp"
#include "griddom/gallery.hpp"
#include "griddom/infinite.hpp"
#include "griddom/solver.hpp"

namespace griddom::cli {

namespace {

namespace fs = std::filesystem;

struct Options
{
    std::string format = "json";
    std::string out;
    int rows = 0;
    int cols = 0;
    std::optional<int> k;
    std::optional<int> t;
    long long timeout_ms = 60000;
    unsigned workers = 1;
    bool symmetry = false;
    std::string file;
};

class Session
{
public:
    Session(const Options & o, std::ostream & out) :
        o_(o), out_(out)
    {
    }

    bool plain() const { return o_.format == "plain"; }

    void emit(const Json & j, const std::string & text) const { write(plain() ? text : pretty(j)); }

    void write(const std::string & text) const
    {
        if (o_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(o_.out, std::ios::binary);
        if (!file || !(file << text))
            throw ValidationError("cannot write " + o_.out);
    }

private:
    const Options & o_;
    std::ostream & out_;
};

int radius(const Options & o)
{
    if (!o.k)
        throw ParameterError("the radius k is required");
    if (*o.k < 0)
        throw ParameterError("k must be nonnegative");
    return *o.k;
}

Json read_document(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (std::ranges::all_of(text, [](unsigned char ch) { return std::isspace(ch); }))
        throw ValidationError("empty input " + path);
    return parse_json(text);
}

std::string vertex_text(Vertex v) { return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")"; }

std::string certificate_text(const Certificate & c)
{
    std::ostringstream out;
    if (const auto * s = std::get_if<SingletonEvidence>(&c.evidence)) {
        out << "singleton count: " << s->required_singletons << " singleton classes needed, "
            << s->dominating.size() << " dominating vertices\n";
    } else {
        const auto & tb = std::get<TwoBallEvidence>(c.evidence);
        out << "two ball " << vertex_text(tb.corner_a) << " " << vertex_text(tb.corner_b) << ": "
            << tb.positions.size() << " positions need a third cell, " << c.dims.cells() - 2 * c.t << " spare\n";
        for (const auto & q : tb.positions)
            out << "  " << vertex_text(q.position) << " via " << vertex_text(q.witness.first) << " "
                << vertex_text(q.witness.second) << " distance " << q.witness.distance << '\n';
    }
    return out.str();
}

int cmd_bound(const Options & o, const Session & io)
{
    const GridDims dims(o.rows, o.cols);
    const int k = radius(o);
    const auto terms = min_k_degree_terms(dims, k);
    const int total = min_k_degree(dims, k);

    Json j;
    j["schema_version"] = schema_version;
    j["kind"] = "bound";
    j["rows"] = o.rows;
    j["cols"] = o.cols;
    j["k"] = k;
    j["min_k_degree"] = total;
    j["terms"] = terms;

    std::string text = std::to_string(total) + " =";
    for (std::size_t i = 0; i < terms.size(); ++i)
        text += (i ? " + " : " ") + std::to_string(terms[i]);
    io.emit(j, text + "\n");
    return ok;
}

int cmd_construct(const Options & o, const Session & io)
{
    const StampPlan plan = plan_grid(radius(o), o.rows, o.cols);
    const ColoringDocument doc{apply_plan(plan), describe(plan)};
    Json j = to_json(doc);
    j["plan"] = to_json(plan);
    io.emit(j, plain_grid(doc.coloring));
    return ok;
}

int verify_coloring_doc(const Options & o, const Session & io, const Json & doc)
{
    ColoringDocument cd = coloring_from_json(doc);
    if (o.k)
        cd.coloring = cd.coloring.with_radius(radius(o));
    const auto report = verify_coloring(cd.coloring, o.workers);
    std::string text;
    if (report.proper) {
        text = "proper\n";
    } else {
        const auto & first = report.violations.front();
        text = "improper: " + std::to_string(report.violations.size()) + " violations, first " +
               vertex_text(first.vertex) + " misses color " + std::to_string(first.missing) + "\n";
    }
    io.emit(to_json(report), text);
    return report.proper ? ok : improper;
}

int cmd_verify(const Options & o, const Session & io)
{
    const Json doc = read_document(o.file);
    const std::string kind = document_kind(doc);

    if (kind == "certificate") {
        const Certificate cert = certificate_from_json(doc);
        const bool valid = check_certificate(cert);
        Json j;
        j["schema_version"] = schema_version;
        j["kind"] = "certificate_check";
        j["valid"] = valid;
        io.emit(j, valid ? "valid certificate\n" : "invalid certificate\n");
        return valid ? ok : improper;
    }

    if (kind == "gallery") {
        Json j;
        j["schema_version"] = schema_version;
        j["kind"] = "gallery_check";
        Json results = Json::array();
        std::string text;
        bool all = true;
        for (const auto & entry : doc.at("entries")) {
            const ColoringDocument cd = coloring_from_json(entry);
            const bool proper = verify_coloring(cd.coloring, o.workers).proper;
            all = all && proper;
            results.push_back({{"provenance", cd.provenance.value_or("")}, {"proper", proper}});
            text += cd.provenance.value_or("-") + (proper ? " proper\n" : " improper\n");
        }
        j["entries"] = std::move(results);
        j["proper"] = all;
        io.emit(j, text);
        return all ? ok : improper;
    }

    return verify_coloring_doc(o, io, doc);
}

SolveConfig solve_config(const Options & o)
{
    if (o.timeout_ms < 0)
        throw ParameterError("timeout must be nonnegative");
    SolveConfig cfg;
    cfg.timeout = std::chrono::milliseconds{o.timeout_ms};
    cfg.workers = o.workers;
    cfg.symmetry_breaking = o.symmetry;
    return cfg;
}

int cmd_solve_t(const Options & o, const Session & io, const GridDims & dims, int k, int t)
{
    Json j;
    j["schema_version"] = schema_version;
    j["kind"] = "feasibility";
    j["rows"] = dims.rows();
    j["cols"] = dims.cols();
    j["k"] = k;
    j["t"] = t;

    if (auto cert = find_certificate(dims, k, t)) {
        j["status"] = "infeasible";
        j["nodes"] = 0;
        j["certificate"] = to_json(*cert);
        io.emit(j, "infeasible\n" + certificate_text(*cert));
        return ok;
    }

    const SolveResult r = feasible(dims, k, t, solve_config(o));
    j["status"] = std::string(to_string(r.status));
    j["nodes"] = r.nodes;
    std::string text = std::string(to_string(r.status)) + "\n";
    if (r.coloring) {
        j["witness"] = to_json(ColoringDocument{*r.coloring, "search"});
        text += plain_grid(*r.coloring);
    } else if (r.status == SolveStatus::Infeasible) {
        j["exhausted_search"] = {{"nodes", r.nodes}};
        text += "search exhausted after " + std::to_string(r.nodes) + " nodes\n";
    }
    io.emit(j, text);
    return r.status == SolveStatus::Timeout ? timeout : ok;
}

int cmd_solve(const Options & o, const Session & io)
{
    const GridDims dims(o.rows, o.cols);
    const int k = radius(o);
    if (o.t)
        return cmd_solve_t(o, io, dims, k, *o.t);

    const DomaticResult r = exact_domatic_number(dims, k, solve_config(o));
    const bool exact = r.status == SolveStatus::Feasible;
    Json j;
    j["schema_version"] = schema_version;
    j["kind"] = "domatic_number";
    j["rows"] = dims.rows();
    j["cols"] = dims.cols();
    j["k"] = k;
    j["status"] = exact ? "exact" : "timeout";
    j["value"] = r.value;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["min_k_degree"] = r.min_degree;
    j["nodes"] = r.nodes;
    if (r.witness)
        j["witness"] = to_json(ColoringDocument{*r.witness, "search"});

    std::ostringstream text;
    if (exact)
        text << "d_" << k << " = " << r.value << " (min k-degree " << r.min_degree << ")\n";
    else
        text << "timeout: " << r.lower << " <= d_" << k << " <= " << r.upper << "\n";
    if (r.witness)
        text << plain_grid(*r.witness);

    if (r.next) {
        if (const auto * cert = std::get_if<Certificate>(&*r.next)) {
            j["next"] = to_json(*cert);
            text << r.value + 1 << " colors: " << certificate_text(*cert);
        } else {
            const auto nodes = std::get<ExhaustedSearch>(*r.next).nodes;
            j["next"] = {{"kind", "exhausted_search"}, {"t", r.value + 1}, {"nodes", nodes}};
            text << r.value + 1 << " colors: search exhausted after " << nodes << " nodes\n";
        }
    }
    io.emit(j, text.str());
    return exact ? ok : timeout;
}

int cmd_infinite(const Options & o, const Session & io)
{
    const int k = radius(o);
    if (o.rows < 1 || o.cols < 1)
        throw ParameterError("window dimensions must be positive");
    const auto window = infinite_window(k, {0, o.rows - 1}, {0, o.cols - 1});
    const auto check = check_window_balls(window);
    const auto distinct = origin_ball_distinct_colors(k);
    const bool separated = separation_holds(k);
    const bool rainbow = distinct == window.spec.modulus && separated && check.balls_rainbow == check.balls_checked;

    Json j = to_json(window, check);
    j["origin_ball_colors"] = distinct;
    j["separation"] = separated;
    j["rainbow"] = rainbow;

    std::ostringstream text;
    const int width = static_cast<int>(std::to_string(window.spec.modulus - 1).size());
    for (auto a = window.rows.first; a <= window.rows.last; ++a) {
        for (auto b = window.cols.first; b <= window.cols.last; ++b)
            text << (b == window.cols.first ? "" : " ") << std::setw(width) << window.at(a, b);
        text << '\n';
    }
    text << "modulus " << window.spec.modulus << ", rainbow " << (rainbow ? "yes" : "no") << '\n';
    io.emit(j, text.str());
    return ok;
}

int cmd_gallery(const Session & io)
{
    std::string text;
    for (const auto & e : gallery_entries())
        text += e.source + " " + std::to_string(e.dims.rows()) + "x" + std::to_string(e.dims.cols()) +
                " t=" + std::to_string(e.t) + "\n" + plain_grid(e.coloring) + "\n";
    io.emit(gallery_bundle(), text);
    return ok;
}

std::string title_for(const ColoringDocument & d)
{
    std::string title = "G(" + std::to_string(d.coloring.dims().rows()) + "," +
                        std::to_string(d.coloring.dims().cols()) + ") k=" + std::to_string(d.coloring.k()) +
                        " t=" + std::to_string(d.coloring.palette());
    if (d.provenance)
        title += " " + *d.provenance;
    return title;
}

int cmd_render(const Options & o, const Session & io, std::ostream & out)
{
    const Json doc = read_document(o.file);
    if (document_kind(doc) != "gallery") {
        const ColoringDocument cd = coloring_from_json(doc);
        io.write(render_svg(cd.coloring, title_for(cd)));
        return ok;
    }

    if (o.out.empty())
        throw ParameterError("rendering a gallery needs --out DIR");
    fs::create_directories(o.out);
    int index = 0;
    for (const auto & entry : doc.at("entries")) {
        const ColoringDocument cd = coloring_from_json(entry);
        std::ostringstream name;
        name << std::setw(2) << std::setfill('0') << ++index << "_" << cd.coloring.dims().rows() << "x"
             << cd.coloring.dims().cols() << ".svg";
        const fs::path path = fs::path(o.out) / name.str();
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << render_svg(cd.coloring, title_for(cd))))
            throw ValidationError("cannot write " + path.string());
        out << path.string() << '\n';
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"k-distance domatic colorings of grid graphs", "griddom"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--out", o.out, "write output here instead of stdout");

    auto dims_args = [&](CLI::App * sub) {
        sub->add_option("rows", o.rows, "grid rows")->required();
        sub->add_option("cols", o.cols, "grid columns")->required();
    };

    auto * bound = app.add_subcommand("bound", "minimum k-degree and its row terms");
    dims_args(bound);
    bound->add_option("k,--k", o.k, "radius");

    auto * construct = app.add_subcommand("construct", "stamped block construction");
    dims_args(construct);
    construct->add_option("k,--k", o.k, "radius");

    auto * verify = app.add_subcommand("verify", "check a coloring, certificate or gallery document");
    verify->add_option("file", o.file, "document")->required();
    verify->add_option("--k", o.k, "override the document's radius");
    verify->add_option("--workers", o.workers, "threads")->check(CLI::PositiveNumber);

    auto * solve = app.add_subcommand("solve", "exact domatic number, or feasibility with --t");
    dims_args(solve);
    solve->add_option("k,--k", o.k, "radius");
    solve->add_option("--t", o.t, "palette size");
    solve->add_option("--timeout", o.timeout_ms, "milliseconds");
    solve->add_option("--workers", o.workers, "threads")->check(CLI::PositiveNumber);
    solve->add_flag("--symmetry", o.symmetry, "dihedral symmetry breaking");

    auto * infinite = app.add_subcommand("infinite", "window of the modular coloring of Z^2");
    infinite->add_option("k,--k", o.k, "radius")->required();
    infinite->add_option("rows", o.rows, "window rows")->required();
    infinite->add_option("cols", o.cols, "window columns")->required();

    auto * gallery = app.add_subcommand("gallery", "all hand-built k=3 colorings");

    auto * render = app.add_subcommand("render", "SVG of a coloring, or one SVG per gallery entry");
    render->add_option("file", o.file, "document")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << '\n';
        return usage;
    }

    const Session io(o, out);
    try {
        if (bound->parsed())
            return cmd_bound(o, io);
        if (construct->parsed())
            return cmd_construct(o, io);
        if (verify->parsed())
            return cmd_verify(o, io);
        if (solve->parsed())
            return cmd_solve(o, io);
        if (infinite->parsed())
            return cmd_infinite(o, io);
        if (gallery->parsed())
            return cmd_gallery(io);
        if (render->parsed())
            return cmd_render(o, io, out);
    } catch (const UnsupportedShape & e) {
        err << "error: " << e.what() << '\n';
        return unsupported_shape;
    } catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const nlohmann::json::exception & e) {
        err << "error: malformed document: " << e.what() << '\n';
        return usage;
    } catch (const fs::filesystem_error & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace griddom::cli
