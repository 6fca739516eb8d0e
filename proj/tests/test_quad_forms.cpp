#include <triquad/quad_forms.hpp>
#include <triquad/fixtures.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace triquad;

TEST_CASE("fundamental discriminants") {
    REQUIRE(fundamental_discriminant(-1) == -4);
    REQUIRE(fundamental_discriminant(-2) == -8);
    REQUIRE(fundamental_discriminant(2) == 8);
    REQUIRE(fundamental_discriminant(17) == 17);
    REQUIRE(fundamental_discriminant(-35) == -35);
    REQUIRE(fundamental_discriminant(35) == 140);
    REQUIRE(fundamental_discriminant(70) == 280);
    REQUIRE(fundamental_discriminant(-70) == -280);
    REQUIRE_THROWS_AS(fundamental_discriminant(0), input_error);
    REQUIRE_THROWS_AS(fundamental_discriminant(1), input_error);
    REQUIRE_THROWS_AS(fundamental_discriminant(12), not_squarefree_error);
    REQUIRE_THROWS_AS(fundamental_discriminant(45), not_squarefree_error);
}

TEST_CASE("imaginary class numbers against the character sum") {
    for (i64 m = -2; m >= -150; --m) {
        i64 D;
        try {
            D = fundamental_discriminant(m);
        } catch (const not_squarefree_error&) {
            continue;
        }
        INFO("m=" << m << " D=" << D);
        ClassNumberResult r = class_number(m);
        REQUIRE(r.h == oracle::dirichlet_h_imaginary(D));
        REQUIRE(r.h == oracle::slow_reduced_imaginary_count(D));
        REQUIRE(r.h_narrow == r.h);
    }
}

TEST_CASE("fixed imaginary values") {
    REQUIRE(class_number(-1).h == 1);
    REQUIRE(class_number(-35).h == 2);
    REQUIRE(class_number(-70).h == 4);
    REQUIRE(class_number(-70).h2 == 4);
    REQUIRE(class_number(-105).h == 8);
    REQUIRE(class_number(-34).h == 4);
}

TEST_CASE("real class numbers against the analytic formula") {
    for (i64 m = 2; m <= 120; ++m) {
        i64 D;
        try {
            D = fundamental_discriminant(m);
        } catch (const not_squarefree_error&) {
            continue;
        }
        ClassNumberResult r = class_number(m);
        oracle::PellUnit u = oracle::slow_fundamental_unit(m);
        double log_eps =
            std::log((u.u + u.v * std::sqrt(double(m))) / u.denom);
        INFO("m=" << m << " D=" << D);
        REQUIRE(r.h == oracle::dirichlet_h_real(D, log_eps));
        REQUIRE(r.unit_norm == u.norm);
        REQUIRE(r.h_narrow == (u.norm == 1 ? 2 * r.h : r.h));
    }
}

TEST_CASE("fundamental unit norms from the continued fraction") {
    REQUIRE(fundamental_unit_norm(2) == -1);
    REQUIRE(fundamental_unit_norm(5) == -1);
    REQUIRE(fundamental_unit_norm(10) == -1);
    REQUIRE(fundamental_unit_norm(3) == 1);
    REQUIRE(fundamental_unit_norm(7) == 1);
    REQUIRE(fundamental_unit_norm(34) == 1);
    // norm is +1 whenever a prime 3 mod 4 divides m
    for (i64 m = 3; m < 300; m += 4) {
        try {
            fundamental_discriminant(m);
        } catch (const not_squarefree_error&) {
            continue;
        }
        INFO("m=" << m);
        REQUIRE(fundamental_unit_norm(m) == 1);
    }
    REQUIRE_THROWS_AS(fundamental_unit_norm(1), input_error);
    REQUIRE_THROWS_AS(fundamental_unit_norm(-5), input_error);
}

TEST_CASE("two part extraction") {
    for (const auto& fx : h2_fixtures()) {
        INFO("m=" << fx.m);
        REQUIRE(class_number_2part(fx.m) == fx.h2);
    }
}

TEST_CASE("genus bound divides the narrow class number") {
    for (i64 m : {i64(-35), i64(-70), i64(-105), i64(35), i64(70), i64(105),
                  i64(-330), i64(330)}) {
        ClassNumberResult r = class_number(m);
        int mu = genus_mu(r.D);
        i64 bound = i64(1) << (mu - 1);
        INFO("m=" << m << " mu=" << mu);
        REQUIRE(r.h_narrow % bound == 0);
    }
}

TEST_CASE("large discriminants near the default capacity") {
    ClassNumberResult r = class_number(-999983);
    REQUIRE(r.D == -999983);
    REQUIRE(r.h == 1171);
    r = class_number(999983);
    REQUIRE(r.h == 5);
    REQUIRE(r.h_narrow == 10);
    REQUIRE(r.unit_norm == 1);
}

TEST_CASE("capacity limit") {
    REQUIRE_THROWS_AS(class_number(101, 50), capacity_error);
    REQUIRE_THROWS_AS(class_number(-101, 50), capacity_error);
    REQUIRE(class_number(101, 1000).h == 1);
}
