#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "figures.hpp"
#include "griddom/cli/commands.hpp"
#include "griddom/cli/document.hpp"
#include "griddom/construct.hpp"
#include "griddom/gallery.hpp"
#include "oracle.hpp"

using namespace griddom;
using namespace griddom::cli;
namespace fs = std::filesystem;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir
{
public:
    TempDir() :
        path_(fs::temp_directory_path() / ("griddom_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                           "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name()))
    {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string file(const std::string & name, const std::string & content = "") const
    {
        const auto p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    const fs::path & path() const { return path_; }

private:
    fs::path path_;
};

} // namespace

TEST(Cli, Bound)
{
    EXPECT_EQ(Json::parse(invoke({"bound", "4", "5", "3"}).out)["min_k_degree"], 10);
    EXPECT_EQ(Json::parse(invoke({"bound", "1", "1", "1"}).out)["min_k_degree"], 1);
    EXPECT_EQ(Json::parse(invoke({"bound", "2", "4", "--k", "3"}).out)["min_k_degree"], 7);
    EXPECT_EQ(invoke({"bound", "4", "5", "3", "--format", "plain"}).out, "10 = 4 + 3 + 2 + 1\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, usage);
    EXPECT_EQ(invoke({"frobnicate"}).code, usage);
    EXPECT_EQ(invoke({"bound", "4"}).code, usage);
    EXPECT_EQ(invoke({"bound", "4", "5"}).code, usage);
    EXPECT_EQ(invoke({"bound", "0", "5", "3"}).code, usage);
    EXPECT_EQ(invoke({"bound", "4", "5", "3", "--format", "xml"}).code, usage);
    EXPECT_EQ(invoke({"--help"}).code, ok);
}

TEST(Cli, ConstructMatchesFigures)
{
    const auto doc = coloring_from_json(Json::parse(invoke({"construct", "4", "5", "3"}).out));
    EXPECT_EQ(std::vector<int>(doc.coloring.cells().begin(), doc.coloring.cells().end()),
              oracle::flatten(figures::block_4x5));
    const auto r = invoke({"construct", "4", "8", "3"});
    EXPECT_EQ(r.code, ok);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["plan"]["placements"].size(), 2u);
    const auto wide = coloring_from_json(j);
    EXPECT_EQ(std::vector<int>(wide.coloring.cells().begin(), wide.coloring.cells().end()),
              oracle::flatten(figures::hs_4x8));
    EXPECT_EQ(wide.provenance, "id@(1,1) h2@(1,4)");
}

TEST(Cli, ConstructUnsupported)
{
    const auto r = invoke({"construct", "7", "50", "4"});
    EXPECT_EQ(r.code, unsupported_shape);
    EXPECT_NE(r.err.find("unsupported shape"), std::string::npos);
}

TEST(Cli, ColoringRoundTrip)
{
    for (const auto & e : gallery_entries()) {
        const ColoringDocument doc{e.coloring, e.source};
        EXPECT_EQ(coloring_from_json(parse_json(to_json(doc).dump())), doc);
    }
    for (auto [r, l] : {std::pair{4, 5}, {6, 9}, {9, 5}, {2, 7}}) {
        const ColoringDocument doc{apply_plan(plan_grid(3, r, l)), std::nullopt};
        EXPECT_EQ(coloring_from_json(parse_json(to_json(doc).dump())), doc);
    }
}

TEST(Cli, MalformedDocuments)
{
    EXPECT_THROW(parse_json("{"), ValidationError);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"schema_version":"1.0","k":1})")), ValidationError);
    EXPECT_THROW(coloring_from_json(Json::parse(
                     R"({"schema_version":"1.0","k":1,"rows":1,"cols":2,"palette":2,"cells":[[1]]})")),
                 ValidationError);
    EXPECT_THROW(coloring_from_json(Json::parse(
                     R"({"schema_version":"1.0","k":1,"rows":1,"cols":2,"palette":2,"cells":[[1,3]]})")),
                 ValidationError);
    EXPECT_THROW(coloring_from_json(Json::parse(
                     R"({"schema_version":"2.0","k":1,"rows":1,"cols":1,"palette":1,"cells":[[1]]})")),
                 ValidationError);
    EXPECT_THROW(certificate_from_json(Json::parse(
                     R"({"schema_version":"1.0","kind":"certificate","rows":2,"cols":2,"k":1,"t":3,"argument":"lp"})")),
                 ValidationError);
}

TEST(Cli, VerifyDocuments)
{
    TempDir tmp;
    const ColoringDocument fig1{standard_block(3, 4), "block"};
    const auto good = tmp.file("fig1.json", to_json(fig1).dump());
    EXPECT_EQ(invoke({"verify", good}).code, ok);
    EXPECT_EQ(invoke({"verify", good, "--format", "plain"}).out, "proper\n");

    Json bad = to_json(fig1);
    bad["cells"][0][0] = 2;
    const auto corrupted = tmp.file("bad.json", bad.dump());
    const auto r = invoke({"verify", corrupted, "--format", "plain"});
    EXPECT_EQ(r.code, improper);
    EXPECT_EQ(r.out.rfind("improper: ", 0), 0u);
    EXPECT_NE(r.out.find("first (1,1) misses color 1"), std::string::npos);

    const auto single = tmp.file(
        "one.json", R"({"schema_version":"1.0","kind":"coloring","k":1,"rows":1,"cols":1,"palette":1,"cells":[[1]]})");
    EXPECT_EQ(invoke({"verify", single}).code, ok);

    EXPECT_EQ(invoke({"verify", good, "--k", "1"}).code, improper);
    EXPECT_EQ(invoke({"verify", tmp.file("empty.json")}).code, usage);
    EXPECT_EQ(invoke({"verify", (tmp.path() / "missing.json").string()}).code, usage);
    EXPECT_EQ(invoke({"verify", tmp.file("junk.json", "not json")}).code, usage);
}

TEST(Cli, SolveFeasibilityWithCertificate)
{
    const auto r = invoke({"solve", "2", "4", "3", "--t", "7"});
    EXPECT_EQ(r.code, ok);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["status"], "infeasible");
    EXPECT_EQ(j["certificate"]["argument"], "singleton_count");
    EXPECT_TRUE(check_certificate(certificate_from_json(j["certificate"])));

    const auto f = Json::parse(invoke({"solve", "2", "4", "3", "--t", "6"}).out);
    EXPECT_EQ(f["status"], "feasible");
    EXPECT_TRUE(verify_coloring(coloring_from_json(f["witness"]).coloring).proper);
}

TEST(Cli, SolveExact)
{
    const auto j = Json::parse(invoke({"solve", "3", "3", "3"}).out);
    EXPECT_EQ(j["status"], "exact");
    EXPECT_EQ(j["value"], 7);
    EXPECT_TRUE(verify_coloring(coloring_from_json(j["witness"]).coloring).proper);
    EXPECT_EQ(j["next"]["kind"], "certificate");
    EXPECT_EQ(j["next"]["t"], 8);

    EXPECT_EQ(Json::parse(invoke({"solve", "1", "1", "1"}).out)["value"], 1);
}

TEST(Cli, SolveIsDeterministic)
{
    EXPECT_EQ(invoke({"solve", "4", "4", "3"}).out, invoke({"solve", "4", "4", "3"}).out);
}

TEST(Cli, SolveTimeout)
{
    const auto r = invoke({"solve", "4", "4", "3", "--t", "8", "--timeout", "0"});
    EXPECT_EQ(r.code, timeout);
    EXPECT_EQ(Json::parse(r.out)["status"], "timeout");
    EXPECT_EQ(invoke({"solve", "4", "4", "3", "--timeout", "0"}).code, timeout);
}

TEST(Cli, CertificateRoundTripAndVerify)
{
    TempDir tmp;
    const auto cert = *find_certificate(GridDims(4, 6), 3, 10);
    EXPECT_TRUE(check_certificate(certificate_from_json(parse_json(to_json(cert).dump()))));
    const auto path = tmp.file("cert.json", to_json(cert).dump());
    EXPECT_EQ(invoke({"verify", path}).code, ok);

    Json bad = to_json(cert);
    bad["t"] = 9;
    EXPECT_EQ(invoke({"verify", tmp.file("bad.json", bad.dump())}).code, improper);
}

TEST(Cli, Infinite)
{
    const auto small = Json::parse(invoke({"infinite", "1", "5", "5"}).out);
    EXPECT_EQ(small["modulus"], 5);
    EXPECT_EQ(small["residues"].size(), 5u);
    EXPECT_EQ(small["residues"][1][0], 3);

    const auto three = Json::parse(invoke({"infinite", "3", "10", "10"}).out);
    EXPECT_EQ(three["origin_ball_colors"], 25);
    EXPECT_TRUE(three["rainbow"].get<bool>());

    const auto single = Json::parse(invoke({"infinite", "50", "1", "1"}).out);
    EXPECT_EQ(single["modulus"], 5101);
    EXPECT_EQ(single["residues"], Json::parse("[[0]]"));
    EXPECT_EQ(invoke({"infinite", "0", "1", "1"}).code, usage);
}

TEST(Cli, GalleryAndRender)
{
    TempDir tmp;
    const auto bundle = invoke({"gallery"});
    EXPECT_EQ(bundle.code, ok);
    const auto j = Json::parse(bundle.out);
    EXPECT_EQ(j["entries"].size(), gallery_entries().size());
    const auto path = tmp.file("gallery.json", bundle.out);
    EXPECT_EQ(invoke({"verify", path}).code, ok);

    const auto dir = (tmp.path() / "svg").string();
    EXPECT_EQ(invoke({"render", path, "--out", dir}).code, ok);
    std::size_t count = 0;
    for (const auto & entry : fs::directory_iterator(dir))
        count += entry.path().extension() == ".svg";
    EXPECT_EQ(count, gallery_entries().size());
    EXPECT_EQ(invoke({"render", path}).code, usage);
}

TEST(Cli, RenderSingle)
{
    TempDir tmp;
    const auto path = tmp.file("fig1.json", to_json(ColoringDocument{standard_block(3, 4), std::nullopt}).dump());
    const auto r = invoke({"render", path});
    EXPECT_EQ(r.code, ok);
    EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
    std::size_t rects = 0;
    for (std::size_t at = r.out.find("<rect"); at != std::string::npos; at = r.out.find("<rect", at + 1))
        ++rects;
    EXPECT_EQ(rects, 20u);

    EXPECT_EQ(invoke({"render", tmp.file("empty.json")}).code, usage);
}

TEST(Cli, OutFile)
{
    TempDir tmp;
    const auto path = (tmp.path() / "c.json").string();
    EXPECT_EQ(invoke({"construct", "4", "5", "3", "--out", path}).code, ok);
    EXPECT_EQ(invoke({"verify", path}).code, ok);
}
