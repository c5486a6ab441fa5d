#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gwzeta/format.hpp"
#include "gwzeta/json_io.hpp"
#include "gwzeta/spec_parser.hpp"

using namespace gwzeta;

TEST_CASE("variety spec grammar") {
    FqTag f3 = FqTag::make(3);
    CHECK(parse_variety("Pn(2)", f3).label() == "Pn(2)");
    CHECK(parse_variety(" prod( Pn(1) , Pn(1) ) ", f3).counts(1) == 16);
    CHECK(parse_variety("P1xP1", f3).counts(1) == 16);
    CHECK(parse_variety("disj(Pn(0),A(1))", f3).counts(1) == 4);
    CHECK(parse_variety("resP1", f3).is_res_p1());
    CHECK(parse_variety("Gr(1,3)", f3).counts(1) == 130);
    CHECK(parse_variety("ell(2,3)", FqTag::make(7)).counts(1) == 6);
    CHECK(parse_variety("prod(disj(Pn(0),A(1)),Pn(1))", f3).counts(1) == 16);

    CHECK_THROWS_WITH_AS(parse_variety("Pn(-1)", f3), doctest::Contains("dimension"), ParseError);
    CHECK_THROWS_WITH_AS(parse_variety("Pn(2", f3), doctest::Contains("position"), ParseError);
    CHECK_THROWS_WITH_AS(parse_variety("frobnicate(2)", f3), doctest::Contains("expected"),
                         ParseError);
    CHECK_THROWS_AS(parse_variety("Pn(2)x", f3), ParseError);
    CHECK_THROWS_AS(parse_variety("prod(Pn(1))", f3), ParseError);
    CHECK_THROWS_AS(parse_variety("", f3), ParseError);
}

TEST_CASE("integer JSON encoding is exact") {
    CHECK(encode_integer(Integer(60)).is_number_integer());
    CHECK(encode_integer(Integer(-7)).get<long>() == -7);
    Integer big = ipow(Integer(9), 40);
    Json j = encode_integer(big);
    CHECK(j.is_string());
    CHECK(decode_integer(j) == big);
    CHECK(decode_integer(encode_integer(Integer(0))) == 0);
    CHECK_THROWS_AS(decode_integer(Json(1.5)), InconsistentData);
    CHECK_THROWS_AS(decode_integer(Json("12x")), InconsistentData);
}

TEST_CASE("zeta report JSON round-trips byte-identically") {
    FqTag f7 = FqTag::make(7);
    ZetaReport r = dlog_zeta(parse_variety("ell(2,3)", f7), 6);
    Json j = report_to_json("ell(2,3)", f7, 6, r, {{"demo", true}});
    CHECK(j["schema"] == "enriched-zeta/1");
    CHECK(j["coefficients"][1]["rank"] == 60);
    CHECK(j["coefficients"][1]["disc"] == 1);
    std::string once = j.dump(2);
    std::string twice = Json::parse(once).dump(2);
    CHECK(once == twice);

    // closed-form entry appears for cellular sources
    FqTag f3 = FqTag::make(3);
    ZetaReport rc = dlog_zeta(parse_variety("Pn(1)", f3), 4);
    Json jc = report_to_json("Pn(1)", f3, 4, rc, {});
    REQUIRE(jc.contains("closed_form"));
    CHECK(jc["closed_form"].size() == 2);
    CHECK(Json::parse(jc.dump(2)).dump(2) == jc.dump(2));
}

TEST_CASE("count tables and Weil data load from JSON documents") {
    Json doc;
    doc["q"] = 7;
    doc["counts"] = Json::array({6, 60});
    Variety v = variety_from_json(doc, "curve");
    CHECK(v.counts(2) == 60);
    CHECK(v.proper());

    Json weil;
    weil["q"] = 7;
    weil["weil"] = Json::array({Json::array({1, -1}), Json::array({1, -2, 7}), Json::array({1, -7})});
    Variety w = variety_from_json(weil, "curve");
    CHECK(w.counts(1) == 6);
    CHECK(w.counts(2) == 60);
    CHECK(w.counts(3) == 378);

    CHECK_THROWS_AS(variety_from_json(Json::object(), "x"), InconsistentData);
    Json floats;
    floats["q"] = 7;
    floats["counts"] = Json::array({6.5});
    CHECK_THROWS_AS(variety_from_json(floats, "x"), InconsistentData);
}

TEST_CASE("table files respect the q flag") {
    std::string path = "gwzeta_test_table.json";
    {
        std::ofstream out(path);
        out << "{\"q\": 7, \"counts\": [6, 60, 378]}";
    }
    FqTag f7 = FqTag::make(7);
    Variety v = parse_variety("table(" + path + ")", f7);
    CHECK(v.counts(3) == 378);
    CHECK_THROWS_AS(parse_variety("table(" + path + ")", FqTag::make(5)), InconsistentData);
    CHECK_THROWS_AS(parse_variety("table(no_such_file.json)", f7), ParseError);
    CHECK_THROWS_AS(parse_variety("weil(" + path + ")", f7), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("display conventions") {
    FqTag f7 = FqTag::make(7);
    CHECK(show_gw(GwFq(f7, 60, 1)) == "59⟨1⟩ + 1⟨u⟩");
    CHECK(show_gw(GwFq(f7, 6, 0)) == "6⟨1⟩");
    CHECK(show_gw(GwFq::zero(f7)) == "0");
    CHECK(show_gw(GwFq(f7, 1, 1)) == "1⟨u⟩");
    CHECK(show_gw_int(GwInt(2, 2)) == "2⟨1⟩ + 2⟨-1⟩");

    CHECK(show_pole(q_eps_pow(f7, 2)) == "q_ε^2");
    CHECK(show_pole(-q_eps(f7)) == "-q_ε");
    CHECK(show_pole(gw_u(f7) * q_eps(f7)) == "⟨u⟩q_ε");

    auto [factors, series] = cellular_closed_form(FqTag::make(3), CellData{{1, 2, 1}}, 4);
    std::string rendered = show_factor_list(factors);
    CHECK(rendered.find("(1 - q_ε t)^2") != std::string::npos);
    CHECK(rendered.find("⟨-1⟩") != std::string::npos);
}
