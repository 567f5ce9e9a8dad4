#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ozeta/json_io.hpp"
#include "ozeta/local.hpp"

using namespace ozeta;

TEST_CASE("result tables round-trip through JSON") {
    auto s = local::slice_zeta({2, 1, 1}, 4);
    auto t = io::table_of_series("local", s, "slice");
    t.params["q"] = "2";
    auto j = io::to_json(t);
    auto back = io::table_from_json(j);
    CHECK(back.command == t.command);
    CHECK(back.params == t.params);
    CHECK(back.columns == t.columns);
    CHECK(back.rows == t.rows);
    CHECK_FALSE(io::compare_tables(t, back).differs);
}

TEST_CASE("coefficients are decimal strings, rationals as a/b") {
    CHECK(io::rat_str(Rat(pow_int(10, 25) + 1)) == "10000000000000000000000001");
    CHECK(io::rat_str(Rat(7, 4)) == "7/4");
}

TEST_CASE("table diff finds the first mismatch") {
    auto s = local::slice_zeta({2, 1, 1}, 4);
    auto a = io::table_of_series("local", s);
    auto b = a;
    b.rows[3].second[0] = "999";
    auto d = io::compare_tables(a, b);
    CHECK(d.differs);
    CHECK(d.degree == 3);
    CHECK(d.got == "7");
    CHECK(d.want == "999");
}

TEST_CASE("rendering is deterministic across calls") {
    auto s = local::hey_zeta({3, 2, 1}, 6);
    auto t = io::table_of_series("local", s, "hey");
    t.params["q"] = "3";
    for (const char* fmt : {"text", "json", "csv"}) {
        std::ostringstream a, b;
        io::render(t, fmt, a);
        io::render(t, fmt, b);
        INFO(fmt);
        CHECK(a.str() == b.str());
        CHECK_FALSE(a.str().empty());
    }
    CHECK_THROWS_AS(io::render(t, "xml", std::cout), std::invalid_argument);
}

TEST_CASE("z-polynomial tables pad columns densely") {
    ZPolySeries p(2);
    p.set_coeff(0, Polynomial::constant(1));
    p.set_coeff(1, Polynomial::from_ints({1, 0, 1}));
    p.set_coeff(2, Polynomial::from_ints({1, 0, 2, 0, 1}));
    auto t = io::table_of_zseries("poincare", p);
    REQUIRE(t.columns.size() == 5);
    for (const auto& [deg, vals] : t.rows) CHECK(vals.size() == 5);
    CHECK(t.rows[1].second == std::vector<std::string>{"1", "0", "1", "0", "0"});
}
