#include "lielac/fields.hpp"

#include "lielac/errors.hpp"
#include "lielac/jet.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace lielac;
using namespace lielac::testing;

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

Field1D standard_sine(double amplitude = 1.0, int n = 256) {
    SineICParams p;
    p.amps = {amplitude};
    return gen_sine_ic(p, n);
}
} // namespace

TEST_CASE("gen_sine_ic instantiates the formula") {
    const auto f = standard_sine();
    CHECK(f.periodic);
    CHECK(f.n() == 256);
    CHECK(f.x_hi() == doctest::Approx(kTwoPi));
    // u0(pi/4) = sin(pi/2) = 1 at node 256/8
    CHECK(f.values[32] == doctest::Approx(1.0).epsilon(1e-14));

    SUBCASE("zero amplitude gives the zero field") {
        const auto z = standard_sine(0.0);
        for (double v : z.values) CHECK(v == 0.0);
    }
    SUBCASE("two-term sum matches a direct summation oracle") {
        SineICParams p;
        p.K = 2;
        p.amps = {0.7, -0.4};
        p.freqs = {1.0, 3.0};
        p.phases = {0.3, 1.1};
        const auto f2 = gen_sine_ic(p, 128);
        for (int i = 0; i < f2.n(); ++i) {
            const double x = f2.x(i);
            const double direct = 0.7 * std::sin(kTwoPi * 1.0 * x / p.L + 0.3) +
                                  -0.4 * std::sin(kTwoPi * 3.0 * x / p.L + 1.1);
            CHECK(f2.values[i] == doctest::Approx(direct).epsilon(1e-14));
        }
    }
}

TEST_CASE("jet_bounds named examples") {
    SUBCASE("sin(2x) on [0, 2pi)") {
        const auto f = standard_sine();
        const auto b = jet_bounds(f);
        CHECK(b.u_min == doctest::Approx(-1.0).epsilon(1e-3));
        CHECK(b.u_max == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(b.x_min == doctest::Approx(0.0));
        CHECK(b.x_max == doctest::Approx(kTwoPi));
        CHECK(b.t_min == 0.0);
        CHECK(b.t_max == 0.0);
    }
    SUBCASE("constant field") {
        auto f = Field1D::uniform(0.0, 1.0, 32, true);
        for (double& v : f.values) v = 5.0;
        const auto b = jet_bounds(f);
        CHECK(b.u_min == 5.0);
        CHECK(b.u_max == 5.0);
    }
    SUBCASE("amplitude 5: dense-grid max oracle") {
        const auto f = standard_sine(5.0, 4096);
        double dense_max = 0.0;
        for (int i = 0; i < 100000; ++i) {
            dense_max = std::max(dense_max, 5.0 * std::sin(2.0 * (kTwoPi * i / 100000.0)));
        }
        CHECK(jet_bounds(f).u_max == doctest::Approx(dense_max).epsilon(1e-3));
    }
    SUBCASE("invariant under sample-order permutation of values") {
        auto f = standard_sine();
        auto g = f;
        std::reverse(g.values.begin(), g.values.end());
        const auto bf = jet_bounds(f), bg = jet_bounds(g);
        CHECK(bf.u_min == bg.u_min);
        CHECK(bf.u_max == bg.u_max);
        CHECK(bf.x_min == bg.x_min);
        CHECK(bf.x_max == bg.x_max);
    }
}

TEST_CASE("transform_ic_heat: identity is bit-exact") {
    const auto f = standard_sine(3.0);
    const auto g = transform_ic_heat(HeatGroupElement::identity(), 0.1, f);
    CHECK(g.x_lo == f.x_lo);
    CHECK(g.dx == f.dx);
    CHECK(g.time == f.time);
    CHECK(g.periodic == f.periodic);
    for (int i = 0; i < f.n(); ++i) CHECK(g.values[i] == f.values[i]);
}

TEST_CASE("transform_ic_heat: v3 scaling multiplies values, grid unchanged") {
    const double nu = 0.1, eps = 0.05;
    const auto f = standard_sine();
    std::vector<double> c(6, 0.0);
    c[2] = eps;
    const auto g = transform_ic_heat(heat_exp_train(c), nu, f);
    CHECK(g.x_lo == doctest::Approx(f.x_lo));
    CHECK(g.dx == doctest::Approx(f.dx));
    CHECK(g.periodic); // u-scaling preserves periodicity
    for (int i = 0; i < f.n(); ++i) {
        CHECK(g.values[i] == doctest::Approx(f.values[i] * std::exp(10.0 * eps)).epsilon(1e-13));
    }
}

TEST_CASE("transform_ic_heat: general element matches the pointwise action oracle") {
    Rng rng(31);
    const double nu = 0.1;
    auto f = standard_sine();
    f.time = 0.4;
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = small_heat_element(rng, 0.3);
        try {
            const auto tf = transform_ic_heat(g, nu, f);
            CHECK_FALSE(tf.periodic);
            const double tol = 10.0 * f.dx * f.dx;
            for (int i = 0; i < f.n(); ++i) {
                const auto q = heat_act_point(g, nu, {f.time, f.x(i), f.values[i]});
                CHECK(std::abs(tf.value_at(q.x) - q.u) <=
                      tol * std::max(1.0, std::abs(q.u)));
                CHECK(tf.time == doctest::Approx(q.t));
            }
        } catch (const SingularTransform&) {
        }
    }
}

TEST_CASE("transform_ic_heat round trip g then g^{-1}") {
    Rng rng(32);
    const double nu = 0.1;
    const auto f = standard_sine();
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = small_heat_element(rng, 0.3);
        try {
            const auto back = transform_ic_heat(heat_inverse(g), nu, transform_ic_heat(g, nu, f));
            REQUIRE(back.n() == f.n());
            double num = 0.0, den = 0.0;
            for (int i = 0; i < f.n(); ++i) {
                num += (back.values[i] - f.values[i]) * (back.values[i] - f.values[i]);
                den += f.values[i] * f.values[i];
            }
            CHECK(std::sqrt(num / den) < 1e-10);
            CHECK(back.x_lo == doctest::Approx(f.x_lo).epsilon(1e-12));
            CHECK(back.dx == doctest::Approx(f.dx).epsilon(1e-12));
        } catch (const SingularTransform&) {
        }
    }
}

TEST_CASE("transform_ic_burgers basics") {
    SUBCASE("Galilean boost at t = 0 shifts values only") {
        GrfParams gp;
        const auto f = gen_grf_ic(gp, 128, 7);
        std::vector<double> c(5, 0.0);
        c[3] = 0.3; // v4
        const auto g = transform_ic_burgers(burgers_exp_train(c), f);
        CHECK(g.x_lo == doctest::Approx(f.x_lo));
        CHECK(g.periodic);
        for (int i = 0; i < f.n(); ++i) {
            CHECK(g.values[i] == doctest::Approx(f.values[i] + 0.3).epsilon(1e-14));
        }
    }
    SUBCASE("identity unchanged") {
        GrfParams gp;
        const auto f = gen_grf_ic(gp, 64, 9);
        const auto g = transform_ic_burgers(BurgersGroupElement::identity(), f);
        for (int i = 0; i < f.n(); ++i) CHECK(g.values[i] == f.values[i]);
    }
    SUBCASE("node-wise oracle on random elements") {
        Rng rng(33);
        GrfParams gp;
        auto f = gen_grf_ic(gp, 128, 11);
        f.time = 0.2;
        for (int trial = 0; trial < 25; ++trial) {
            const auto g = random_burgers_element(rng, 0.3);
            try {
                const auto tf = transform_ic_burgers(g, f);
                const double tol = 10.0 * f.dx * f.dx;
                for (int i = 0; i < f.n(); ++i) {
                    const auto q = burgers_act_point(g, {f.time, f.x(i), f.values[i]});
                    CHECK(std::abs(tf.value_at(q.x) - q.u) <= tol * std::max(1.0, std::abs(q.u)));
                }
            } catch (const SingularTransform&) {
            }
        }
    }
}

TEST_CASE("transform_ic_ace exact and resampled paths") {
    const auto f = gen_ace_ic(AceIcParams::random(3), 64);
    constexpr double kHalfPi = 1.5707963267948966192313216916398;
    SUBCASE("rotate90 four times is the identity, bitwise") {
        // quarter turn about the center: theta = pi/2 with t = c - R c
        const Se2Element rot{kHalfPi, 1.0, 0.0}; // R(pi/2) about (0.5, 0.5)
        auto cur = f;
        for (int k = 0; k < 4; ++k) cur = transform_ic_ace(rot, 0.0, cur);
        for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(cur.values[i] == f.values[i]);
    }
    SUBCASE("one-cell translation is a cyclic shift") {
        const Se2Element tr{0.0, 1.0 / 64.0, 0.0};
        const auto g = transform_ic_ace(tr, 0.0, f);
        for (int ix = 0; ix < 64; ++ix) {
            for (int iy = 0; iy < 64; ++iy) {
                CHECK(g.at(ix, iy) == f.at((ix + 63) % 64, iy));
            }
        }
    }
    SUBCASE("small-rotation round trip loses at most interpolation error") {
        // centered bump, so the only loss is the two bilinear resamples
        // (rotation about the center; mass that wraps at corners is ~0)
        auto s = Field2D::zeros(256, 256);
        for (int ix = 0; ix < s.nx; ++ix) {
            for (int iy = 0; iy < s.ny; ++iy) {
                const double dx = s.x(ix) - 0.5, dy = s.y(iy) - 0.5;
                s.at(ix, iy) = std::exp(-(dx * dx + dy * dy) / (2.0 * 0.1 * 0.1));
            }
        }
        const double th = 0.17, c0 = 0.5;
        const Se2Element rot{th, c0 - (std::cos(th) * c0 - std::sin(th) * c0),
                             c0 - (std::sin(th) * c0 + std::cos(th) * c0)};
        const auto back = transform_ic_ace(se2_inverse(rot), 0.0, transform_ic_ace(rot, 0.0, s));
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            num += (back.values[i] - s.values[i]) * (back.values[i] - s.values[i]);
            den += s.values[i] * s.values[i];
        }
        CHECK(std::sqrt(num / den) < 1e-3);
    }
}

TEST_CASE("gen_grf_ic statistics and determinism") {
    GrfParams p;
    SUBCASE("mean is exactly the offset") {
        auto f = gen_grf_ic(p, 128, 42);
        CHECK(std::abs(f.mean()) < 1e-12);
        p.mean_offset = 0.2;
        auto g = gen_grf_ic(p, 128, 42);
        CHECK(g.mean() == doctest::Approx(0.2).epsilon(1e-12));
    }
    SUBCASE("same seed twice gives identical fields") {
        const auto a = gen_grf_ic(p, 128, 5);
        const auto b = gen_grf_ic(p, 128, 5);
        for (int i = 0; i < a.n(); ++i) CHECK(a.values[i] == b.values[i]);
    }
    SUBCASE("per-mode variance matches the spectral formula within 5%") {
        const int n = 64, trials = 10000;
        std::vector<double> var(4, 0.0); // modes k = 1..4 via projection
        for (int s = 0; s < trials; ++s) {
            const auto f = gen_grf_ic(p, n, 1000 + s);
            for (int k = 1; k <= 4; ++k) {
                double a = 0.0;
                for (int i = 0; i < n; ++i) {
                    a += f.values[i] * std::cos(kTwoPi * k * f.x(i));
                }
                a *= 2.0 / n;
                var[k - 1] += a * a;
            }
        }
        for (int k = 1; k <= 4; ++k) {
            const double w = kTwoPi * k;
            const double sd = p.scale * std::pow(w * w + p.shift * p.shift, -0.5 * p.power);
            CHECK(var[k - 1] / trials == doctest::Approx(sd * sd).epsilon(0.05));
        }
    }
}

TEST_CASE("gen_ace_ic named values") {
    SUBCASE("boundary is zero for zero shifts") {
        const auto f = gen_ace_ic(AceIcParams::random(8), 64);
        for (int iy = 0; iy < 64; ++iy) CHECK(f.at(0, iy) == doctest::Approx(0.0).epsilon(1e-12));
        for (int ix = 0; ix < 64; ++ix) CHECK(f.at(ix, 0) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("K=1, a11=1, r=1: u(0.5, 0.5) = 0.5") {
        AceIcParams p;
        p.K = 1;
        p.r = 1.0;
        p.a_coeffs = {1.0};
        const auto f = gen_ace_ic(p, 64);
        CHECK(f.at(32, 32) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("sawtooth shift equals reindexing for grid-aligned shifts") {
        AceIcParams p = AceIcParams::random(9);
        const auto base = gen_ace_ic(p, 64);
        p.x0_shift = 0.25; // 16 cells
        const auto shifted = gen_ace_ic(p, 64);
        for (int ix = 0; ix < 64; ++ix) {
            for (int iy = 0; iy < 64; ++iy) {
                CHECK(shifted.at(ix, iy) == doctest::Approx(base.at((ix + 48) % 64, iy)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("transform_window maps corners") {
    const QueryWindow w{0.0, kTwoPi, 0.0, 16.0};
    SUBCASE("identity") {
        const auto q = transform_window(Sl2Matrix(), 0.0, 0.0, w);
        CHECK(q.xf_lo() == doctest::Approx(0.0));
        CHECK(q.xf_hi() == doctest::Approx(kTwoPi));
        CHECK(q.tf_lo() == doctest::Approx(0.0));
        CHECK(q.tf_hi() == doctest::Approx(16.0));
    }
    SUBCASE("singular window rejected") {
        CHECK_THROWS_AS(transform_window(Sl2Matrix(1.0, 0.0, -0.5, 1.0), 0.0, 0.0, w),
                        SingularTransform);
    }
    SUBCASE("time reversal of the Moebius map still yields a sorted window") {
        const auto q = transform_window(Sl2Matrix(1.0, 0.0, 0.1, 1.0), 0.0, 0.0, w);
        CHECK(q.tf_lo() <= q.tf_hi());
        CHECK(q.xf_lo() <= q.xf_hi());
    }
}

TEST_CASE("field errors") {
    CHECK_THROWS(Field1D::uniform(0.0, 1.0, 1, true));
    GrfParams p;
    CHECK_THROWS(gen_grf_ic(p, 4, 0));
    // degenerate transformed interval
    auto f = Field1D::uniform(0.0, 1e-12, 4, false);
    f.values = {1.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(transform_ic_heat(HeatGroupElement::identity(), 0.1, f), DegenerateDomain);
}
