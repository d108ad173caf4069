#include "lielac/energy.hpp"

#include "lielac/optim.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace lielac;
using namespace lielac::testing;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

ProblemInstance standard_heat_instance(double amplitude = 1.0) {
    SineICParams p;
    p.amps = {amplitude};
    ProblemInstance inst;
    inst.ic = gen_sine_ic(p, 256);
    inst.query = {0.0, kTwoPi, 0.0, 16.0};
    inst.group = GroupId::heat;
    return inst;
}

ProblemInstance standard_burgers_instance(double mean_shift = 0.0, std::uint64_t seed = 1) {
    GrfParams p;
    p.mean_offset = mean_shift;
    ProblemInstance inst;
    inst.ic = gen_grf_ic(p, 256, seed);
    inst.query = {0.0, 1.0, 0.0, 1.0};
    inst.group = GroupId::burgers;
    return inst;
}
} // namespace

TEST_CASE("dist_interval named values and properties") {
    CHECK(dist_interval(0.5, 0.0, 1.0) == 0.0);
    CHECK(dist_interval(2.0, 0.0, 1.0) == 1.0);
    CHECK(dist_interval(-3.0, -1.0, 4.0) == 2.0);
    CHECK_THROWS(dist_interval(0.0, 1.0, -1.0));

    Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        const double lo = rng.uniform(-2.0, 0.0), hi = rng.uniform(0.0, 2.0);
        const double a = rng.uniform(-5.0, 5.0), b = rng.uniform(-5.0, 5.0);
        CHECK(dist_interval(a, lo, hi) >= 0.0);
        // 1-Lipschitz
        CHECK(std::abs(dist_interval(a, lo, hi) - dist_interval(b, lo, hi)) <=
              std::abs(a - b) + 1e-15);
    }
}

TEST_CASE("kde_nll closed form and oracle") {
    SUBCASE("one sample at the origin, h=1, d=2: log(2 pi)") {
        const std::vector<std::vector<double>> samples{{0.0, 0.0}};
        const std::vector<double> point{0.0, 0.0};
        CHECK(kde_nll(samples, 1.0, point) ==
              doctest::Approx(std::log(kTwoPi)).epsilon(1e-12)); // ~1.83788
    }
    SUBCASE("far point stays finite and monotone in distance") {
        const std::vector<std::vector<double>> samples{{0.0, 0.0}};
        double prev = 0.0;
        for (int k = 1; k <= 6; ++k) {
            const std::vector<double> point{std::pow(10.0, k), 0.0};
            const double v = kde_nll(samples, 1.0, point);
            CHECK(std::isfinite(v));
            if (k > 1) CHECK(v > prev);
            prev = v;
        }
    }
    SUBCASE("matches the naive direct sum within 1e-12") {
        Rng rng(42);
        std::vector<std::vector<double>> samples;
        for (int i = 0; i < 100; ++i) {
            samples.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        }
        const double h = 0.35;
        for (int q = 0; q < 20; ++q) {
            const std::vector<double> point{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
            double direct = 0.0;
            for (const auto& s : samples) {
                const double dx = point[0] - s[0], dy = point[1] - s[1];
                direct += std::exp(-(dx * dx + dy * dy) / (2.0 * h * h)) / (kTwoPi * h * h);
            }
            direct /= samples.size();
            CHECK(kde_nll(samples, h, point) == doctest::Approx(-std::log(direct)).epsilon(1e-12));
        }
    }
    SUBCASE("invariant under sample permutation and simultaneous rotation") {
        Rng rng(43);
        std::vector<std::array<double, 2>> samples;
        for (int i = 0; i < 50; ++i) {
            samples.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        }
        const double h = 0.5, px = 0.3, py = -0.7;
        const double base = kde_nll_2d(samples, h, px, py);
        auto shuffled = samples;
        std::reverse(shuffled.begin(), shuffled.end());
        CHECK(kde_nll_2d(shuffled, h, px, py) == doctest::Approx(base).epsilon(1e-13));
        const double th = 0.9, c = std::cos(th), s = std::sin(th);
        auto rotated = samples;
        for (auto& p : rotated) p = {c * p[0] - s * p[1], s * p[0] + c * p[1]};
        CHECK(kde_nll_2d(rotated, h, c * px - s * py, s * px + c * py) ==
              doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("e_heat named values") {
    SUBCASE("in-distribution instance has zero energy") {
        CHECK(e_heat(standard_heat_instance()) == 0.0);
    }
    SUBCASE("amplitude 5 contributes |5-1| + |-5-(-1)| = 8") {
        CHECK(e_heat(standard_heat_instance(5.0)) == doctest::Approx(8.0).epsilon(1e-3));
    }
    SUBCASE("time shift t0 = 2 contributes twice") {
        auto inst = standard_heat_instance();
        inst.ic.time = 2.0;
        CHECK(e_heat(inst) == doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("sub-unit amplitudes are pulled up: |0.5-1| + |-0.5+1| = 1") {
        CHECK(e_heat(standard_heat_instance(0.5)) == doctest::Approx(1.0).epsilon(1e-3));
    }
    SUBCASE("queries strictly inside the window contribute nothing") {
        auto inst = standard_heat_instance();
        inst.query = {1.0, 5.0, 2.0, 15.0};
        CHECK(e_heat(inst) == 0.0);
    }
    SUBCASE("point reading of the t_f term") {
        HeatEnergyParams p;
        p.tf_point = true;
        auto inst = standard_heat_instance();
        CHECK(e_heat(inst, p) == doctest::Approx(16.0)); // tf_lo = 0 is 16 away from {16}
    }
}

TEST_CASE("e_burgers named values") {
    SUBCASE("canonical GRF instance has zero energy") {
        CHECK(e_burgers(standard_burgers_instance()) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("mean shift 0.2") {
        CHECK(e_burgers(standard_burgers_instance(0.2)) == doctest::Approx(0.2).epsilon(1e-12));
    }
    SUBCASE("domain stretched to length 2") {
        auto inst = standard_burgers_instance();
        std::vector<double> c(5, 0.0);
        c[2] = std::log(2.0); // v3: x-scale by 2, u-scale by 1/2
        inst.ic = transform_ic_burgers(burgers_exp_train(c), inst.ic);
        const double e = e_burgers(inst);
        CHECK(e == doctest::Approx(1.0).epsilon(1e-2)); // |2 - 1|, mean halves to ~0
    }
}

TEST_CASE("e_ace constraints") {
    ProblemInstance2D inst;
    inst.ic = gen_ace_ic(AceIcParams::random(4), 64);
    inst.tf_lo = 0.0;
    inst.tf_hi = 1.0;

    SUBCASE("satisfying instance with zero inner") {
        CHECK(e_ace(inst, nullptr) == 0.0);
    }
    SUBCASE("17-degree rotation violates the domain constraint") {
        const Se2TimeElement g{{17.0 * kTwoPi / 360.0, 0.0, 0.0}, 0.0};
        CHECK(e_ace(transform_instance_ace(g, inst),
                    [](const Field2D&) { return 0.0; }) == kConstraintSentinel);
    }
    SUBCASE("time-shifted instance violates t0 = 0") {
        const Se2TimeElement g{Se2Element::identity(), 0.5};
        auto shifted = transform_instance_ace(g, inst);
        shifted.tf_lo = 0.0;
        shifted.tf_hi = 1.0;
        CHECK(e_ace(shifted, nullptr) == kConstraintSentinel);
    }
    SUBCASE("C4 element + grid translation keeps constraints, evaluates inner") {
        const AceDiscreteElement e{1, 5, 12};
        const auto g = ace_to_se2(e, 64);
        const auto moved = transform_instance_ace({g, 0.0}, inst);
        const double direct = ace_boundary_energy(moved.ic);
        CHECK(e_ace(moved, ace_boundary_energy) == doctest::Approx(direct));
        CHECK(e_ace(moved, ace_boundary_energy) < kConstraintSentinel);
    }
}

TEST_CASE("energies are nonnegative and 1-Lipschitz in the jet statistics") {
    Rng rng(44);
    for (int i = 0; i < 50; ++i) {
        auto inst = standard_heat_instance(rng.uniform(0.2, 6.0));
        inst.ic.time = rng.uniform(-1.0, 1.0);
        CHECK(e_heat(inst) >= 0.0);
        // shifting t0 by d changes the energy by at most 2|d| (two t-terms)
        const double e0 = e_heat(inst);
        const double d = rng.uniform(-0.5, 0.5);
        auto moved = inst;
        moved.ic.time += d;
        CHECK(std::abs(e_heat(moved) - e0) <= 2.0 * std::abs(d) + 1e-12);
    }
}
