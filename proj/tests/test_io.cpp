#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shapelab/closed_form.hpp"
#include "shapelab/errors.hpp"
#include "shapelab/io.hpp"
#include "shapelab/raster.hpp"
#include "shapelab/thin_convex.hpp"

using namespace shapelab;
using nlohmann::json;

TEST_CASE("closed-form domains round-trip through JSON") {
    CylinderSpec c;
    c.cross_measure = 2.0;
    c.cross_perimeter = 3.0;
    c.height = 0.5;
    const std::vector<DomainSpec> specs{BallSpec{3, 0.5}, RectSpec{{1.0, 2.0}}, IntervalUnionSpec{{1.0, 0.0, 0.3}},
                                        BallUnionSpec{2, {1.0, 0.2}}, c};
    for (const auto& s : specs) {
        const json j = domain_to_json(s);
        const DomainSpec back = domain_from_json(j);
        CHECK(back.index() == s.index());
        CHECK(domain_to_json(back) == j);
    }
}

TEST_CASE("grid masks round-trip through run-length JSON and PBM") {
    const GridSpec g = raster_lshape(1.0, 24);
    const json j = domain_to_json(g);
    CHECK(j.at("rle").size() == static_cast<std::size_t>(g.mask.rows()));
    const auto back = std::get<GridSpec>(domain_from_json(j));
    CHECK(back.mask == g.mask);
    CHECK(back.spacing == g.spacing);

    std::stringstream pbm;
    write_pbm(pbm, g.mask);
    const GridSpec read = read_pbm(pbm, g.spacing);
    CHECK(read.mask == g.mask);

    const json bad = json::parse(R"({"kind":"grid","rows":3,"cols":3,"spacing":0.1,"rle":[[3],[1,2],[3]]})");
    CHECK_THROWS_AS(domain_from_json(bad), ValidationError);  // touches the border ring
    const json overflow = json::parse(R"({"kind":"grid","rows":1,"cols":2,"spacing":0.1,"rle":[[1,5]]})");
    CHECK_THROWS_AS(domain_from_json(overflow), ValidationError);
}

TEST_CASE("named shapes and thin domains") {
    const auto sq = std::get<GridSpec>(domain_from_json(json::parse(R"({"kind":"grid","shape":"square","side":1})"), 64));
    CHECK(measure(sq) == doctest::Approx(1.0));
    const auto disk = std::get<GridSpec>(
        domain_from_json(json::parse(R"({"kind":"grid","shape":"disk","radius":0.5,"per_unit":100})")));
    CHECK(disk.spacing == doctest::Approx(0.01));
    const auto thin = std::get<ThinSpec>(domain_from_json(
        json::parse(R"({"kind":"thin","base":{"interval":[0,1]},"profile":{"cone":[0.5,0]},"n":101,"eps":0.05})")));
    CHECK(thin.eps == 0.05);
    CHECK(thin.profile.sup_norm() == doctest::Approx(1.0));
    const auto back = std::get<ThinSpec>(domain_from_json(domain_to_json(thin)));
    CHECK(back.profile.values() == thin.profile.values());
    CHECK_THROWS_AS(domain_from_json(json::parse(R"({"kind":"thin","base":{"interval":[0,1]},"profile":"wavy","eps":1})")),
                    ValidationError);
    CHECK_THROWS_AS(domain_from_json(json::parse(R"({"kind":"ball","radius":"big"})")), ValidationError);
    CHECK_THROWS_AS(domain_from_json(json::parse(R"({"kind":"rect"})")), ValidationError);
}

TEST_CASE("load_domain accepts inline JSON, JSON files and PBM files") {
    CHECK(std::holds_alternative<BallSpec>(load_domain(R"( {"kind":"ball"})")));
    const std::string jpath = "io_test_domain.json", ppath = "io_test_domain.pbm";
    {
        std::ofstream(jpath) << R"({"kind":"intervals","lengths":[1,1]})";
        std::ofstream(ppath) << "P1\n3 2\n1 1 1\n0 1 0\n";
    }
    CHECK(measure(load_domain(jpath)) == doctest::Approx(2.0));
    const DomainSpec p = load_domain(ppath, 10);
    CHECK(measure(p) == doctest::Approx(4 * 0.01));
    CHECK(std::get<GridSpec>(p).mask.rows() == 4);
    std::remove(jpath.c_str());
    std::remove(ppath.c_str());
    CHECK_THROWS_AS(load_domain("no_such_file.json"), ValidationError);
    CHECK_THROWS_AS(load_domain("{not json"), ValidationError);
}

TEST_CASE("result JSON and CSV schema") {
    const json r = result_to_json(ball_spectrum(BallSpec{2, 1.0}));
    CHECK(r.at("schema") == 1);
    CHECK(r.at("provenance") == "closed_form");
    CHECK(r.at("err_estimate").is_null());
    CHECK(fmt(0.1) == "0.1");
    CHECK(fmt(1.0 / 3.0) == "0.333333333333");

    std::stringstream ss;
    {
        CsvWriter w(ss, {"a", "b"});
        w.row({"1", "2"});
        CHECK_THROWS_AS(w.row({"1"}), ValidationError);
    }
    CHECK(ss.str().rfind("# schema=1\na,b\n1,2\n", 0) == 0);
    std::vector<std::string> header;
    const auto rows = read_csv(ss, &header);
    CHECK(header == std::vector<std::string>{"a", "b"});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == std::vector<std::string>{"1", "2"});
    std::stringstream bad("a,b\n1,2\n");
    CHECK_THROWS_AS(read_csv(bad), ValidationError);
}

TEST_CASE("profiles and fields round-trip through CSV") {
    const ConvexBase tri = ConvexBase::polygon({{0, 0}, {1, 0}, {0, 1}});
    const ConcaveProfile p = cone_function(tri, {0.3, 0.3}, 40);
    std::stringstream ss;
    write_profile_csv(ss, p);
    const ConcaveProfile back = read_profile_csv(ss, tri, 40);
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(back.value(k) == doctest::Approx(p.value(k)).epsilon(1e-11));

    GridField f{3, 3, 0.5, std::vector<double>(9, 0.0)};
    f.values[4] = 0.25;
    std::stringstream fs;
    write_field_csv(fs, f);
    const auto rows = read_csv(fs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == std::vector<std::string>{"1", "1", "0.25"});
}
