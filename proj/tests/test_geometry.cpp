#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ellinv/geometry.hpp"

using namespace ellinv;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("point arithmetic and products") {
    Point p{2, 3}, q{-1, 4};
    CHECK((p + q).x == 1.0);
    CHECK((p + q).y == 7.0);
    CHECK((p - q).x == 3.0);
    CHECK((2.0 * p).y == 6.0);
    CHECK(dot(p, q) == 10.0);
    CHECK(cross(p, q) == 11.0);
    CHECK(norm(Point{3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("distance worked values") {
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(distance({1, 1}, {1, 1}) == 0.0);
    CHECK(distance({2, 2}, {-1, 3}) == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-100, 100);
    for (int i = 0; i < 10000; ++i) {
        Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST_CASE("direction normalizes and rejects degenerate input") {
    Direction d(3, 4);
    CHECK(d.dx() == doctest::Approx(0.6));
    CHECK(d.dy() == doctest::Approx(0.8));
    CHECK(d.dx() * d.dx() + d.dy() * d.dy() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(Direction(0, 0), InvalidSpecError);
    CHECK_THROWS_AS(Direction(std::nan(""), 1), InvalidSpecError);
    Direction of = Direction::of({1, 1}, {1, 5});
    CHECK(of.dx() == doctest::Approx(0.0));
    CHECK(of.dy() == doctest::Approx(1.0));
    CHECK_THROWS_AS(Direction::of({2, 2}, {2, 2}), InvalidSpecError);
}

TEST_CASE("rigid motion worked values") {
    CHECK(apply_motion({0.0, {0, 0}}, {1, 2}).x == doctest::Approx(1.0));
    Point q = apply_motion({kPi / 2, {0, 0}}, {1, 0});
    CHECK(q.x == doctest::Approx(0.0));
    CHECK(q.y == doctest::Approx(1.0));
    Point r = apply_motion({kPi / 2, {1, 1}}, {1, 0});
    CHECK(r.x == doctest::Approx(1.0));
    CHECK(r.y == doctest::Approx(2.0));
}

TEST_CASE("rigid motion inverse round trip") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-10, 10), ang(0, 2 * kPi);
    for (int i = 0; i < 10000; ++i) {
        RigidMotion m{ang(rng), {u(rng), u(rng)}};
        Point p{u(rng), u(rng)};
        Point back = apply_motion(m.inverse(), apply_motion(m, p));
        CHECK(distance(back, p) <= 1e-12 * (1.0 + norm(p)));
    }
}

TEST_CASE("collinearity test with scale-invariant threshold") {
    CHECK(are_collinear({0, 0}, {1, 1}, {2, 2}));
    CHECK_FALSE(are_collinear({0, 0}, {1, 0}, {0, 1}));
    CHECK(are_collinear({0, 0}, {1, 1}, {2, 2 + 1e-15}));
    // coincident points span no area
    CHECK(are_collinear({5, 5}, {5, 5}, {9, -2}));
    // same shape at a huge scale must classify the same way
    CHECK_FALSE(are_collinear({0, 0}, {1e8, 0}, {0, 1e8}));
    CHECK(are_collinear({0, 0}, {1e8, 1e8}, {2e8, 2e8}));
}

TEST_CASE("signed distance along a line") {
    Direction ex(1, 0), ey(0, 1);
    CHECK(signed_distance_along({0, 0}, ex, {3, 0}) == doctest::Approx(3.0));
    CHECK(signed_distance_along({0, 0}, ex, {-2, 0}) == doctest::Approx(-2.0));
    CHECK(signed_distance_along({1, 1}, ey, {1, 4}) == doctest::Approx(3.0));
    CHECK_THROWS_AS(signed_distance_along({0, 0}, ex, {3, 1}), OffLineError);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> t(-1000, 1000), ang(0, 2 * kPi);
    for (int i = 0; i < 10000; ++i) {
        double a = ang(rng), tv = t(rng);
        Direction d(std::cos(a), std::sin(a));
        Point o{t(rng) / 100, t(rng) / 100};
        double got = signed_distance_along(o, d, o + tv * d.vec());
        CHECK(std::abs(got - tv) <= 1e-12 * (1.0 + std::abs(tv)));
    }
}
