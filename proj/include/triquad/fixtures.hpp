#pragma once

#include "rank.hpp"

namespace triquad {

/* Frozen reference values.  group_type lists the invariant factors of the
 * full class group of Q(zeta_8, sqrt(d)) where those were computed externally
 * (PARI/GP); this library only checks the count of even factors against the
 * computed 2-rank, it does not recompute full class groups. */
struct FixtureRecord {
    i64 d;
    int expected_rank;
    Kind expected_kind;
    std::vector<i64> group_type; // empty when no external computation is recorded
    const char* source;
};

inline const std::vector<FixtureRecord>& reference_fixtures() {
    static const std::vector<FixtureRecord> table = {
        {3, 0, Kind::Trivial, {}, "prime 3 mod 8"},
        {5, 0, Kind::Trivial, {}, "prime 5 mod 8"},
        {13, 0, Kind::Trivial, {}, "prime 5 mod 8"},
        {7, 1, Kind::CyclicNontrivial, {}, "prime 7 mod 8"},
        {15, 1, Kind::CyclicNontrivial, {}, "3 * 5"},
        {17, 2, Kind::Rank2Type22, {}, "prime 1 mod 16, (2|17)_4 = -1"},
        {21, 2, Kind::Rank2Type22, {}, "3 * 7, (3|7) = -1"},
        {35, 2, Kind::Rank2Type22, {}, "5 * 7, (5|7) = -1"},
        {41, 2, Kind::Rank2NotElementary, {},
         "least prime 9 mod 16 with (2|p)_4 = (p|2)_4 = -1 (searched)"},
        {437, 2, Kind::Rank2Type22, {}, "19 * 23, (19|23) = -1"},
        {589, 2, Kind::Rank2NotElementary, {}, "19 * 31, (19|31) = +1"},
        {119, 4, Kind::RankAtLeast3, {20, 2, 2, 2}, "7 * 17, pari class group"},
        {357, 5, Kind::RankAtLeast3, {12, 2, 2, 2, 2}, "3 * 7 * 17, pari class group"},
        {595, 5, Kind::RankAtLeast3, {20, 2, 2, 2, 2}, "5 * 7 * 17, pari class group"},
        {791, 5, Kind::RankAtLeast3, {64, 2, 2, 2, 2}, "7 * 113, pari class group"},
        {2373, 6, Kind::RankAtLeast3, {42, 2, 2, 2, 2, 2}, "3 * 7 * 113, pari class group"},
        {3955, 6, Kind::RankAtLeast3, {42, 6, 2, 2, 2, 2}, "5 * 7 * 113, pari class group"},
        {8249, 6, Kind::RankAtLeast3, {912, 2, 2, 2, 2, 2}, "73 * 113, pari class group"},
        {29041, 7, Kind::RankAtLeast3, {4368, 8, 2, 2, 2, 2, 2},
         "113 * 257, pari class group"},
        {630209, 9, Kind::RankAtLeast3, {1224, 8, 4, 4, 4, 2, 2, 2, 2},
         "73 * 89 * 97, pari class group"},
        {734161, 10, Kind::RankAtLeast3, {384, 32, 2, 2, 2, 2, 2, 2, 2, 2},
         "73 * 89 * 113, pari class group"},
        {10251473, 11, Kind::RankAtLeast3, {408, 204, 2, 2, 2, 2, 2, 2, 2, 2, 2},
         "113 * 257 * 353, pari class group"},
    };
    return table;
}

/* Frozen quartic residue characters for the primes in the fixture table:
 * columns (p, (2|p)_4, (p|2)_4). */
struct QuarticFixture {
    i64 p;
    int two_over_p;
    int p_over_two;
};

inline const std::vector<QuarticFixture>& quartic_fixtures() {
    static const std::vector<QuarticFixture> table = {
        {17, -1, +1}, {73, +1, -1}, {89, +1, -1},   {97, -1, +1},
        {113, +1, +1}, {257, +1, +1}, {353, +1, +1},
    };
    return table;
}

/* Frozen 2-parts of quadratic class numbers appearing in the two-prime
 * product formula at d = 35. */
struct H2Fixture {
    i64 m;
    i64 h2;
};

inline const std::vector<H2Fixture>& h2_fixtures() {
    static const std::vector<H2Fixture> table = {
        {35, 2}, {-35, 2}, {70, 2}, {-70, 4},
    };
    return table;
}

} // namespace triquad
