#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "plastiplate/sym2.hpp"

using namespace plp;

namespace {

Sym2 random_sym2(std::mt19937& rng, double scale = 3.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("hand values of the reduced and dual norms") {
    const Sym2 id = Sym2::identity();
    CHECK(trace(id) == doctest::Approx(2.0));
    CHECK(ddot(id, id) == doctest::Approx(2.0));
    CHECK(norm_r(id) == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(norm_dual(id) == doctest::Approx(std::sqrt(6.0)));

    const Sym2 shear{0.0, 0.0, 1.0};
    CHECK(norm_r(shear) == doctest::Approx(std::sqrt(2.0)));
    CHECK(norm_dual(shear) == doctest::Approx(std::sqrt(2.0)));

    const Sym2 dev{1.0, -1.0, 0.0};
    CHECK(trace(dev) == doctest::Approx(0.0));
    CHECK(norm_r(dev) == doctest::Approx(std::sqrt(2.0)));
    CHECK(norm_dual(dev) == doctest::Approx(std::sqrt(2.0)));

    CHECK(norm_r(Sym2::zero()) == 0.0);
    CHECK(norm_dual(Sym2::zero()) == 0.0);
}

TEST_CASE("dev_r and lift_dual are mutual inverses and swap the norms") {
    std::mt19937 rng(91);
    for (int it = 0; it < 10000; ++it) {
        const Sym2 x = random_sym2(rng);
        const Sym2 back = lift_dual(dev_r(x));
        const Sym2 forth = dev_r(lift_dual(x));
        CHECK(norm_frobenius(back - x) <= 1e-12 * (1.0 + norm_frobenius(x)));
        CHECK(norm_frobenius(forth - x) <= 1e-12 * (1.0 + norm_frobenius(x)));
        CHECK(norm_dual(dev_r(x)) == doctest::Approx(norm_r(x)).epsilon(1e-12));
        CHECK(norm_r(lift_dual(x)) == doctest::Approx(norm_dual(x)).epsilon(1e-12));
    }
}

TEST_CASE("norm equivalence |xi|_r <= |xi| <= sqrt(3)|xi|_r") {
    std::mt19937 rng(92);
    for (int it = 0; it < 10000; ++it) {
        const Sym2 x = random_sym2(rng);
        const double r = norm_r(x);
        const double fr = norm_frobenius(x);
        CHECK(r <= fr * (1.0 + 1e-12));
        CHECK(fr <= std::sqrt(3.0) * r * (1.0 + 1e-12));
    }
    // Both bounds are attained: trace-free on the left, identity on the right.
    CHECK(norm_frobenius(Sym2{1.0, -1.0, 0.0}) ==
          doctest::Approx(norm_r(Sym2{1.0, -1.0, 0.0})));
    CHECK(norm_frobenius(Sym2::identity()) ==
          doctest::Approx(std::sqrt(3.0) * norm_r(Sym2::identity())));
}

TEST_CASE("duality pairing bound x : y <= |x|_r |y|_*") {
    std::mt19937 rng(93);
    for (int it = 0; it < 10000; ++it) {
        const Sym2 x = random_sym2(rng);
        const Sym2 y = random_sym2(rng);
        CHECK(ddot(x, y) <= norm_r(x) * norm_dual(y) + 1e-12);
        // inner_r has the same Cauchy-Schwarz structure in the r-norm.
        CHECK(std::abs(inner_r(x, y)) <= norm_r(x) * norm_r(y) + 1e-12);
    }
}

TEST_CASE("support function: positive homogeneity, triangle inequality, yield set") {
    const YieldSurface K{2.5};
    std::mt19937 rng(94);
    std::uniform_real_distribution<double> pos(0.0, 4.0);
    for (int it = 0; it < 10000; ++it) {
        const Sym2 x = random_sym2(rng);
        const Sym2 y = random_sym2(rng);
        const double t = pos(rng);
        CHECK(support_Hr(t * x, K) == doctest::Approx(t * support_Hr(x, K)).epsilon(1e-12));
        CHECK(support_Hr(x + y, K) <= support_Hr(x, K) + support_Hr(y, K) + 1e-12);
        // H_r dominates the pairing against any admissible stress.
        const Sym2 sig = random_sym2(rng);
        if (norm_r(sig) <= K.alpha0) CHECK(ddot(sig, x) <= support_Hr(x, K) + 1e-12);
    }

    CHECK(in_yield_set(Sym2{1.0, -1.0, 0.0}, K));          // |.|_r = sqrt(2) < 2.5
    CHECK(!in_yield_set(Sym2{3.0, -3.0, 0.0}, K));         // |.|_r = 3 sqrt(2) > 2.5
    CHECK(in_yield_set(Sym2{2.5 / std::sqrt(2.0), -2.5 / std::sqrt(2.0), 0.0}, K));
}
