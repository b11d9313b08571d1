#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spinmap/werner_map.hpp"

using namespace spinmap;

TEST_CASE("critical constants") {
    const auto cc = critical_constants({1.0, 0.0, 1.0});
    CHECK(cc.t_c == Catch::Approx(8.0 / std::log(3.0)).epsilon(1e-15));
    CHECK(cc.b_c == 4.0);

    const auto cc2 = critical_constants({2.0, 0.0, 1.0});
    CHECK(cc2.t_c == Catch::Approx(2.0 * cc.t_c).epsilon(1e-15));
    CHECK(cc2.b_c == 8.0);

    // T_c is field independent
    for (double b : {0.0, 1.0, 2.0, 4.0, 6.0})
        CHECK(concurrence_thermal({1.0, b, 1.0}, cc.t_c + 1e-9) == 0.0);
}

TEST_CASE("classify_werner thresholds") {
    CHECK(classify_werner(0.3) == WernerRegime::Separable);
    CHECK(classify_werner(1.0 / 3.0) == WernerRegime::Separable);
    CHECK(classify_werner(1.0 / 3.0 + 1e-12) == WernerRegime::EntangledLocal);
    CHECK(classify_werner(0.5) == WernerRegime::EntangledLocal);
    CHECK(classify_werner(1.0 / std::sqrt(2.0)) == WernerRegime::EntangledLocal);
    CHECK(classify_werner(1.0 / std::sqrt(2.0) + 1e-12) == WernerRegime::ChshViolating);
    CHECK(classify_werner(0.8) == WernerRegime::ChshViolating);
    CHECK_THROWS_AS(classify_werner(-0.1), validation_error);
    CHECK_THROWS_AS(classify_werner(1.5), validation_error);
}

TEST_CASE("forward map landmarks") {
    const ModelParams p0{1.0, 0.0, 1.0};
    const double t_c = critical_constants(p0).t_c;

    for (double b : {0.0, 1.0, 2.0, 4.0})
        CHECK(x_of_temperature({1.0, b, 1.0}, t_c).x == Catch::Approx(1.0 / 3.0).margin(1e-9));

    CHECK(x_of_temperature(p0, 1e-4).x > 1.0 - 1e-6);
    CHECK(x_of_temperature({1.0, 4.0, 1.0}, 1e-4).x == Catch::Approx(2.0 / 3.0).margin(1e-6));
    // large-T expansion: x ~ 2 J_H/(k_B T)
    CHECK(x_of_temperature(p0, 1e6).x == Catch::Approx(2e-6).epsilon(1e-4));
    CHECK(x_of_temperature(p0, 1e8).x < 1e-7);
    CHECK_THROWS_AS(x_of_temperature(p0, -1.0), validation_error);
}

TEST_CASE("forward map flags fields above the bijection domain") {
    CHECK(x_of_temperature({1.0, 2.0, 1.0}, 1.0).in_bijection_domain);
    CHECK(x_of_temperature({1.0, 4.0, 1.0}, 1.0).in_bijection_domain);
    const MapPoint above = x_of_temperature({1.0, 5.0, 1.0}, 1.0);
    CHECK_FALSE(above.in_bijection_domain);
    // the T->0 limit above B_c is x -> 1/3
    CHECK(x_of_temperature({1.0, 5.0, 1.0}, 1e-4).x == Catch::Approx(1.0 / 3.0).margin(1e-6));
}

TEST_CASE("forward map is strictly decreasing for B <= B_c") {
    for (double b : {0.0, 1.0, 2.0, 3.0, 4.0}) {
        const ModelParams p{1.0, b, 1.0};
        double prev = x_of_temperature(p, 1e-3).x;
        for (int i = 1; i < 2000; ++i) {
            const double t = std::exp(std::log(1e-3) + i * (std::log(1e3) - std::log(1e-3)) / 1999);
            const double x = x_of_temperature(p, t).x;
            CHECK(x < prev + 1e-15);
            prev = x;
        }
    }
}

TEST_CASE("concurrence transport identity") {
    for (double b : {0.0, 1.0, 2.0, 3.0, 4.0}) {
        const ModelParams p{1.0, b, 1.0};
        for (int i = 0; i < 100; ++i) {
            const double t = std::exp(std::log(1e-2) + i * (std::log(50.0) - std::log(1e-2)) / 99);
            const double x = x_of_temperature(p, t).x;
            const double transported = std::max(0.0, (3.0 * x - 1.0) / 2.0);
            CHECK(std::abs(transported - concurrence_thermal(p, t)) < 1e-10);
        }
    }
}

TEST_CASE("inverse map round trips and landmark values") {
    const ModelParams p0{1.0, 0.0, 1.0};
    const double t_c = critical_constants(p0).t_c;

    CHECK(temperature_of_x(p0, 1.0 / 3.0) == Catch::Approx(t_c).margin(1e-9));
    CHECK(x_of_temperature(p0, temperature_of_x(p0, 0.8)).x == Catch::Approx(0.8).margin(1e-10));

    std::mt19937 rng(777);
    for (double b : {0.0, 2.0}) {
        const ModelParams p{1.0, b, 1.0};
        std::uniform_real_distribution<double> u(1e-3, 1.0 - 1e-3);
        for (int i = 0; i < 30; ++i) {
            const double x = u(rng);
            CHECK(std::abs(x_of_temperature(p, temperature_of_x(p, x)).x - x) < 1e-10);
        }
    }
}

TEST_CASE("inverse map domain handling at the critical field") {
    const ModelParams pc{1.0, 4.0, 1.0};
    CHECK(temperature_of_x(pc, 0.66) > 0.0);
    CHECK_THROWS_AS(temperature_of_x(pc, 0.67), domain_error);
    CHECK_THROWS_AS(temperature_of_x({1.0, 0.0, 1.0}, 0.0), domain_error);
    CHECK_THROWS_AS(temperature_of_x({1.0, 0.0, 1.0}, 1.0), domain_error);
    CHECK_THROWS_AS(temperature_of_x({1.0, 5.0, 1.0}, 0.5), domain_error);
}

TEST_CASE("effective_temperature aliases the inverse map") {
    const ModelParams p{1.0, 1.0, 1.0};
    CHECK(effective_temperature(0.5, p) == temperature_of_x(p, 0.5));
}
