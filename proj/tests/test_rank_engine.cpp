#include <triquad/rank.hpp>
#include <triquad/fixtures.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace triquad;

namespace {

std::vector<i64> prime_values(const RankReport& r) {
    std::vector<i64> ps;
    for (const auto& pr : r.primes)
        ps.push_back(pr.p);
    return ps;
}

} // namespace

TEST_CASE("rank and kind match the reference table") {
    for (const auto& fx : reference_fixtures()) {
        INFO("d=" << fx.d << " (" << fx.source << ")");
        RankReport r = rank2(fx.d);
        REQUIRE(r.rank == fx.expected_rank);
        REQUIRE(r.classification.kind == fx.expected_kind);
        REQUIRE(r.agreement);
    }
}

TEST_CASE("group invariant factors imply the computed rank") {
    // rank = number of even invariant factors of the 2-class group
    for (const auto& fx : reference_fixtures()) {
        if (fx.group_type.empty())
            continue;
        int even = 0;
        for (i64 f : fx.group_type)
            if (f % 2 == 0)
                ++even;
        INFO("d=" << fx.d);
        REQUIRE(even == rank2(fx.d).rank);
    }
}

TEST_CASE("report fields for a three prime radicand") {
    RankReport r = rank2(105);
    REQUIRE(r.input_d == 105);
    REQUIRE(r.d == 105);
    REQUIRE(prime_values(r) == std::vector<i64>{3, 5, 7});
    REQUIRE(r.t == 6);
    REQUIRE(r.e_matrix == 2);
    REQUIRE(r.e_cases == 2);
    REQUIRE(r.rank == 3);
    REQUIRE(r.classification.kind == Kind::RankAtLeast3);
    REQUIRE(r.agreement);
}

TEST_CASE("sign and factor 2 are stripped from the input") {
    RankReport r = rank2(-70);
    REQUIRE(r.input_d == -70);
    REQUIRE(r.d == 35);
    REQUIRE(prime_values(r) == std::vector<i64>{5, 7});
    REQUIRE(r.rank == 2);
    REQUIRE(r.classification.kind == Kind::Rank2Type22);

    REQUIRE(rank2(70).d == 35);
    REQUIRE(rank2(-35).d == 35);
}

TEST_CASE("unit radicands fall outside the covered range") {
    for (i64 d : {i64(1), i64(-1), i64(2), i64(-2)}) {
        RankReport r = rank2(d);
        REQUIRE(r.classification.kind == Kind::OutsidePaper);
        REQUIRE(r.rank == 0);
        REQUIRE(r.rule == "outside-scope");
    }
}

TEST_CASE("invalid radicands throw") {
    REQUIRE_THROWS_AS(rank2(0), input_error);
    REQUIRE_THROWS_AS(rank2(45), not_squarefree_error);
    REQUIRE_THROWS_AS(rank2(-12), not_squarefree_error);
}

TEST_CASE("classification witnesses") {
    REQUIRE(classify(3).kind == Kind::Trivial);
    REQUIRE(classify(7).kind == Kind::CyclicNontrivial);
    REQUIRE(classify(15).kind == Kind::CyclicNontrivial);
    REQUIRE(classify(17).kind == Kind::Rank2Type22);
    REQUIRE(classify(21).kind == Kind::Rank2Type22);
    REQUIRE(classify(35).kind == Kind::Rank2Type22);
    REQUIRE(classify(i64(19) * 23).kind == Kind::Rank2Type22);   // jacobi(19,23) = -1
    REQUIRE(classify(i64(19) * 31).kind == Kind::Rank2NotElementary); // jacobi(19,31) = +1
    REQUIRE(classify(41).kind == Kind::Rank2NotElementary);
    REQUIRE(classify(589).kind == Kind::Rank2NotElementary); // 19 * 31
    REQUIRE(classify(33).kind == Kind::Rank2NotElementary);  // 3 * 11, both 3 mod 8
    REQUIRE(classify(65).kind == Kind::Rank2NotElementary);  // 5 * 13, both 5 mod 8
    REQUIRE(classify(105).kind == Kind::RankAtLeast3);
}

TEST_CASE("even class number exactly outside the two trivial prime classes") {
    for (i64 d = 3; d < 2000; d += 2) {
        try {
            RankReport r = rank2(d);
            bool even = class_number_even(d);
            REQUIRE(even == (r.rank >= 1));
            bool trivial_prime =
                r.primes.size() == 1 && (r.d % 8 == 3 || r.d % 8 == 5);
            INFO("d=" << d);
            REQUIRE(even == !trivial_prime);
        } catch (const not_squarefree_error&) {
            continue;
        }
    }
}

TEST_CASE("radicands with prime factors beyond the trial-division bound") {
    // 1000003 = 3 (mod 8); 1000033 = 1 (mod 16) with (2|p)_4 = +1
    RankReport r = rank2(i64(1000003) * 1000033);
    REQUIRE(prime_values(r) == std::vector<i64>{1000003, 1000033});
    REQUIRE(r.t == 6);
    REQUIRE(r.e_matrix == 1);
    REQUIRE(r.rule == "mixed-3-no-5/no-quartic-minus-one");
    REQUIRE(r.rank == 4);
    REQUIRE(r.agreement);

    // 1000393 = 9 (mod 16) with (2|p)_4 = -1
    r = rank2(i64(1000003) * 1000393);
    REQUIRE(r.e_matrix == 2);
    REQUIRE(r.rule == "mixed-3-no-5/quartic-minus-one-present");
    REQUIRE(r.rank == 3);
    REQUIRE(r.agreement);
}

TEST_CASE("kind string round trip") {
    for (Kind k : {Kind::Trivial, Kind::CyclicNontrivial, Kind::Rank2Type22,
                   Kind::Rank2NotElementary, Kind::RankAtLeast3, Kind::OutsidePaper})
        REQUIRE(kind_from_string(to_string(k)) == k);
    REQUIRE_THROWS_AS(kind_from_string("bogus"), input_error);
}
