#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "httplib.h"

#include "hclkit/hclkit.hpp"
#include "server.hpp"

using namespace hclkit;
namespace fs = std::filesystem;

namespace {

api::Response post(api::Service& s, const std::string& path, const json& body)
{
    return s.handle("POST", path, body.dump());
}

fs::path temp_path(const std::string& stem)
{
    return fs::temp_directory_path() /
           (stem + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) + ".json");
}

} // namespace

TEST(Service, GenerateByName)
{
    api::Service s(builtin_registry());
    auto r = post(s, "/generate", {{"type", "qualitative"}, {"palette", "Dark 3"}, {"n", 4}});
    ASSERT_EQ(r.status, 200) << r.body.dump();
    EXPECT_EQ(r.body["colors"], json({"#E16A86", "#909800", "#00AD9A", "#9183E6"}));
    EXPECT_EQ(r.body["fixup_fired"].size(), 4u);
    EXPECT_EQ(r.body["trace"]["n"], 4);
    EXPECT_EQ(r.body["params"]["type"], "qualitative");
}

TEST(Service, GenerateOverridesAndDefaults)
{
    api::Service s(builtin_registry());
    auto r = post(s, "/generate", {{"type", "qualitative"}, {"palette", "set2"}, {"n", 4}, {"l1", 80}});
    EXPECT_EQ(r.body["colors"], json({"#FFACBF", "#C6CD70", "#32DDCD", "#C7BEFF"}));
    auto d = post(s, "/generate", {{"type", "sequential"}, {"n", 3}});
    ASSERT_EQ(d.status, 200);
    EXPECT_EQ(d.body["colors"].size(), 3u);
    auto rev = post(s, "/generate", {{"type", "qualitative"}, {"palette", "Dark 3"}, {"n", 4}, {"rev", true},
                                     {"alpha", 0.5}});
    EXPECT_EQ(rev.body["colors"][0], "#9183E680");
}

TEST(Service, GenerateMissingColorsAreNull)
{
    api::Service s(builtin_registry());
    auto r = post(s, "/generate",
                  {{"type", "qualitative"}, {"h1", 120}, {"c1", 150}, {"l1", 50}, {"n", 3}, {"fixup", false}});
    ASSERT_EQ(r.status, 200);
    bool any_null = false;
    for (const auto& c : r.body["colors"])
        any_null = any_null || c.is_null();
    EXPECT_TRUE(any_null);
    EXPECT_TRUE(r.body["trace"].is_null());
}

TEST(Service, ValidationErrorsNameTheField)
{
    api::Service s(builtin_registry());
    auto r = post(s, "/generate", {{"type", "diverging"}, {"l1", 200}});
    EXPECT_EQ(r.status, 400);
    EXPECT_EQ(r.body["error"], "validation");
    EXPECT_EQ(r.body["fields"][0]["field"], "l1");
    EXPECT_EQ(post(s, "/generate", {{"type", "wavy"}}).status, 400);
    EXPECT_EQ(post(s, "/generate", {{"type", "qualitative"}, {"n", -2}}).status, 400);
    EXPECT_EQ(post(s, "/generate", {{"type", "sequential"}, {"palette", "Dark 3"}}).status, 400);
    EXPECT_EQ(s.handle("POST", "/generate", "{nope").status, 400);
    EXPECT_EQ(s.handle("POST", "/generate", "[1,2]").status, 400);
    auto c = post(s, "/cvd", {{"kind", "deutan"}, {"colors", {"#12"}}});
    EXPECT_EQ(c.status, 400);
    EXPECT_EQ(c.body["fields"][0]["field"], "colors");
}

TEST(Service, NotFoundAndRouting)
{
    api::Service s(builtin_registry());
    auto r = post(s, "/generate", {{"type", "qualitative"}, {"palette", "Dakr3"}});
    EXPECT_EQ(r.status, 404);
    EXPECT_EQ(r.body["suggestions"][0], "Dark 3");
    EXPECT_EQ(s.handle("GET", "/palettes/Dakr3", "").status, 404);
    EXPECT_EQ(s.handle("GET", "/nowhere", "").status, 404);
    EXPECT_EQ(s.handle("GET", "/generate", "").status, 405);
    auto one = s.handle("GET", "/palettes/set2", "");
    EXPECT_EQ(one.status, 200);
    EXPECT_EQ(one.body["name"], "Set 2");
}

TEST(Service, ListFilters)
{
    api::Service s(builtin_registry());
    EXPECT_EQ(s.handle("GET", "/palettes", "").body["palettes"].size(), 110u);
    EXPECT_EQ(s.handle("GET", "/palettes", "", "diverging").body["palettes"].size(), 18u);
    EXPECT_EQ(s.handle("GET", "/palettes", "", "sequential").body["palettes"].size(), 66u);
    EXPECT_EQ(s.handle("GET", "/palettes", "", "wavy").status, 400);
}

TEST(Service, CvdAnalyzePick)
{
    api::Service s(builtin_registry());
    auto c = post(s, "/cvd", {{"kind", "deutan"}, {"severity", 1}, {"colors", {"#FF0000"}}});
    EXPECT_EQ(c.body["colors"][0], "#5D4700");
    EXPECT_EQ(c.body["matrix"].size(), 9u);

    auto a = post(s, "/analyze", {{"colors", {"#023FA5", "#7D87B9", "#BEC1D4", "#E2E2E2", "#D6BCC0", "#BB7784",
                                              "#8E063B"}}});
    ASSERT_EQ(a.status, 200) << a.body.dump();
    EXPECT_EQ(a.body["type"], "diverging");
    EXPECT_EQ(a.body["inferred"]["type"], "diverging");
    EXPECT_EQ(post(s, "/analyze", {{"colors", {"#000000", "#FFFFFF"}}}).status, 400);
    EXPECT_EQ(post(s, "/analyze", {{"colors", {"#000000", "#FFFFFF"}}, {"type", "sequential"}}).status, 200);

    auto p = post(s, "/pick", {{"plane", "hue-chroma"}, {"l", 70}, {"hex", "#E495A5"}});
    ASSERT_EQ(p.status, 200);
    EXPECT_NEAR(p.body["selected"]["l"].get<double>(), 70, 1);
    EXPECT_NEAR(p.body["selected"]["c"].get<double>(), 50, 1);
    double h = p.body["selected"]["h"].get<double>();
    EXPECT_LT(std::min(h, 360 - h), 1);
    auto q = post(s, "/pick", {{"plane", "chroma-luminance"}, {"h", 120}, {"query", {{"h", 120}, {"c", 150}, {"l", 50}}}});
    EXPECT_TRUE(q.body["selected"]["snapped"].get<bool>());
    EXPECT_NEAR(q.body["selected"]["c"].get<double>(), max_chroma(120, 50), 1e-9);
    EXPECT_EQ(post(s, "/pick", {{"plane", "sideways"}}).status, 400);
}

TEST(Service, RegisterPersistsAndReloads)
{
    fs::path file = temp_path("hclkit_registry");
    {
        api::Service s(builtin_registry(), file.string());
        auto r = post(s, "/register", {{"name", "myset"}, {"params", {{"type", "qualitative"}, {"h1", 0}, {"h2", 270},
                                                                       {"c1", 60}, {"l1", 80}}}});
        ASSERT_EQ(r.status, 200) << r.body.dump();
        EXPECT_EQ(post(s, "/register", {{"name", "bad"}, {"params", {{"type", "qualitative"}, {"l1", 500}}}}).status,
                  400);
    }
    Registry reg = builtin_registry();
    api::load_registry_file(reg, file.string());
    api::Service s2(reg);
    auto g = post(s2, "/generate", {{"type", "qualitative"}, {"palette", "myset"}, {"n", 4}});
    EXPECT_EQ(g.body["colors"], json({"#FFACBF", "#C6CD70", "#32DDCD", "#C7BEFF"}));
    std::ifstream f(file);
    json doc = json::parse(f);
    ASSERT_EQ(doc.size(), 1u);
    EXPECT_EQ(doc[0]["name"], "myset");
    EXPECT_FALSE(doc[0].contains("h3"));
    fs::remove(file);
}

TEST(Service, DeterministicBodies)
{
    api::Service s(builtin_registry());
    json req{{"type", "diverging"}, {"palette", "Green-Brown"}, {"n", 9}};
    EXPECT_EQ(post(s, "/generate", req).body.dump(), post(s, "/generate", req).body.dump());
}

TEST(Http, RoundTripOverSocket)
{
    api::Service service(builtin_registry());
    httplib::Server svr;
    tools::mount(svr, service);
    int port = svr.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread th([&] { svr.listen_after_bind(); });
    svr.wait_until_ready();

    httplib::Client cli("127.0.0.1", port);
    auto r = cli.Post("/generate", R"({"type":"qualitative","palette":"Dark 3","n":4})", "application/json");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 200);
    EXPECT_EQ(r->get_header_value("Content-Type"), "application/json");
    EXPECT_EQ(json::parse(r->body)["colors"][0], "#E16A86");
    auto r2 = cli.Post("/generate", R"({"type":"qualitative","palette":"Dark 3","n":4})", "application/json");
    EXPECT_EQ(r->body, r2->body);

    auto l = cli.Get("/palettes?type=divergingx");
    ASSERT_TRUE(l);
    EXPECT_EQ(json::parse(l->body)["palettes"].size(), 17u);
    auto one = cli.Get("/palettes/Blue%20Red");
    ASSERT_TRUE(one);
    EXPECT_EQ(json::parse(one->body)["name"], "Blue-Red");
    auto bad = cli.Post("/generate", R"({"type":"diverging","l1":200})", "application/json");
    EXPECT_EQ(bad->status, 400);
    auto nf = cli.Get("/palettes/nothing-like-it");
    EXPECT_EQ(nf->status, 404);
    auto wrong = cli.Get("/cvd");
    EXPECT_EQ(wrong->status, 405);

    svr.stop();
    th.join();
}
