#include <triquad/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace triquad;

TEST_CASE("rank report json round trip") {
    for (i64 d : {i64(35), i64(41), i64(791), i64(2), i64(-70)}) {
        RankReport r = rank2(d);
        nlohmann::json j = r;
        RankReport back = j.get<RankReport>();
        INFO("d=" << d);
        REQUIRE(back == r);
    }
}

TEST_CASE("rank report json fields") {
    nlohmann::json j = rank2(35);
    REQUIRE(j["d"] == 35);
    REQUIRE(j["t"] == 4);
    REQUIRE(j["rank"] == 2);
    REQUIRE(j["classification"]["kind"] == "Rank2Type22");
    REQUIRE(j["primes"].size() == 2);
    REQUIRE(j["primes"][0]["p"] == 5);
    REQUIRE(j["primes"][0]["chi_zeta"] == -1);
    REQUIRE(j["primes"][0]["chi_eps"] == 1);
}

TEST_CASE("class number result round trip") {
    ClassNumberResult c = class_number(-70);
    nlohmann::json j = c;
    REQUIRE(j["h"] == 4);
    REQUIRE(j["D"] == -280);
    auto back = j.get<ClassNumberResult>();
    REQUIRE(back.h == c.h);
    REQUIRE(back.unit_norm == c.unit_norm);
}

TEST_CASE("crosscheck report round trip, with and without h2") {
    for (i64 d : {i64(35), i64(41)}) {
        CrosscheckReport r = crosscheck(d);
        nlohmann::json j = r;
        CrosscheckReport back = j.get<CrosscheckReport>();
        INFO("d=" << d);
        REQUIRE(back.rank_report == r.rank_report);
        REQUIRE(back.family == r.family);
        REQUIRE(back.h2 == r.h2);
        REQUIRE(back.assumes_odd_plus_part == r.assumes_odd_plus_part);
        REQUIRE(back.h2_divisible_by == r.h2_divisible_by);
        REQUIRE(back.checks == r.checks);
        REQUIRE(back.all_pass == r.all_pass);
    }
    REQUIRE(nlohmann::json(crosscheck(41))["h2"].is_null());
}

TEST_CASE("csv output") {
    REQUIRE(csv_header() == "input_d,d,t,e_matrix,e_cases,rule,rank,kind,agreement");
    REQUIRE(csv_row(rank2(35)) ==
            "35,35,4,1,1,mixed-5-no-3/quartic-pairs-equal,2,Rank2Type22,true");
}

TEST_CASE("csv rows keep nine fields for every rule string") {
    for (i64 d = 3; d < 1200; d += 2) {
        std::string row;
        try {
            row = csv_row(rank2(d));
        } catch (const not_squarefree_error&) {
            continue;
        }
        auto commas = std::count(row.begin(), row.end(), ',');
        INFO("d=" << d << " row=" << row);
        REQUIRE(commas == 8);
    }
}
