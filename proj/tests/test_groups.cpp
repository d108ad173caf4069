#include "lielac/groups.hpp"

#include "lielac/errors.hpp"
#include "lielac/jet.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace lielac;
using namespace lielac::testing;

TEST_CASE("sl2 construction normalizes the determinant") {
    const Sl2Matrix a(2.0, 0.0, 0.0, 2.0); // det 4 -> scaled by 1/2
    CHECK(a.alpha == doctest::Approx(1.0));
    CHECK(a.det() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS(Sl2Matrix(1.0, 2.0, 1.0, 1.0)); // det < 0
}

TEST_CASE("heat composition of pure translations is additive") {
    HeatGroupElement g1, g2;
    g1.h.lambda0 = 1.0;
    g2.h.lambda0 = 2.0;
    const auto g = heat_compose(g1, g2);
    CHECK(g.h.lambda0 == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(g.h.lambda1 == 0.0);
    CHECK(g.h.ln_sigma == 0.0);
    CHECK(g.a.alpha == doctest::Approx(1.0));
}

TEST_CASE("heat identity laws") {
    Rng rng(11);
    const auto id = HeatGroupElement::identity();
    for (int i = 0; i < 20; ++i) {
        const auto g = random_heat_element(rng);
        CHECK(heat_param_distance(heat_compose(id, g), g) < 1e-14);
        CHECK(heat_param_distance(heat_compose(g, id), g) < 1e-14);
    }
}

TEST_CASE("heat associativity on random elements") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto g1 = random_heat_element(rng);
        const auto g2 = random_heat_element(rng);
        const auto g3 = random_heat_element(rng);
        const auto lhs = heat_compose(heat_compose(g1, g2), g3);
        const auto rhs = heat_compose(g1, heat_compose(g2, g3));
        CHECK(heat_param_distance(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("heat inverse: named examples") {
    SUBCASE("pure translation") {
        HeatGroupElement g;
        g.h.lambda0 = 1.0;
        const auto gi = heat_inverse(g);
        CHECK(gi.h.lambda0 == doctest::Approx(-1.0));
        CHECK(gi.h.lambda1 == 0.0);
        CHECK(gi.h.ln_sigma == 0.0);
    }
    SUBCASE("diagonal SL(2)") {
        HeatGroupElement g;
        g.a = Sl2Matrix(2.0, 0.0, 0.0, 0.5);
        const auto gi = heat_inverse(g);
        CHECK(gi.a.alpha == doctest::Approx(0.5));
        CHECK(gi.a.delta == doctest::Approx(2.0));
        CHECK(gi.h.lambda0 == 0.0);
    }
}

TEST_CASE("heat inverse round-trip on 100 random elements") {
    Rng rng(13);
    const auto id = HeatGroupElement::identity();
    for (int i = 0; i < 100; ++i) {
        const auto g = random_heat_element(rng);
        CHECK(heat_param_distance(heat_compose(g, heat_inverse(g)), id) < 1e-10);
        CHECK(heat_param_distance(heat_compose(heat_inverse(g), g), id) < 1e-10);
    }
}

TEST_CASE("heat_phi identities and antihomomorphism") {
    Rng rng(14);
    SUBCASE("identity matrix fixes h") {
        const HeisenbergPol h{0.3, -0.2, 0.7};
        const auto r = heat_phi(Sl2Matrix(), h);
        CHECK(r.lambda1 == doctest::Approx(h.lambda1));
        CHECK(r.lambda0 == doctest::Approx(h.lambda0));
        CHECK(r.ln_sigma == doctest::Approx(h.ln_sigma));
    }
    SUBCASE("zero element is fixed") {
        const auto r = heat_phi(random_sl2(rng), HeisenbergPol{});
        CHECK(r.lambda1 == 0.0);
        CHECK(r.lambda0 == 0.0);
        CHECK(r.ln_sigma == 0.0);
    }
    SUBCASE("phi(AB) = phi(B) o phi(A) on random triples") {
        for (int i = 0; i < 1000; ++i) {
            const auto a = random_sl2(rng);
            const auto b = random_sl2(rng);
            HeisenbergPol h{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5),
                            rng.uniform(-0.5, 0.5)};
            const auto lhs = heat_phi(sl2_mul(a, b), h);
            const auto rhs = heat_phi(b, heat_phi(a, h));
            CHECK(std::abs(lhs.lambda1 - rhs.lambda1) < 1e-10);
            CHECK(std::abs(lhs.lambda0 - rhs.lambda0) < 1e-10);
            CHECK(std::abs(lhs.ln_sigma - rhs.ln_sigma) < 1e-10);
        }
    }
}

TEST_CASE("burgers compose/inverse basics") {
    SUBCASE("pure translations add") {
        BurgersGroupElement g1, g2;
        g1.lambda0 = 1.0;
        g2.lambda0 = 2.0;
        CHECK(burgers_compose(g1, g2).lambda0 == doctest::Approx(3.0));
    }
    SUBCASE("inverse law on random elements") {
        Rng rng(15);
        const auto id = BurgersGroupElement::identity();
        for (int i = 0; i < 100; ++i) {
            const auto g = random_burgers_element(rng);
            CHECK(burgers_param_distance(burgers_compose(g, burgers_inverse(g)), id) < 1e-10);
        }
    }
    SUBCASE("associativity") {
        Rng rng(16);
        for (int i = 0; i < 200; ++i) {
            const auto g1 = random_burgers_element(rng);
            const auto g2 = random_burgers_element(rng);
            const auto g3 = random_burgers_element(rng);
            CHECK(burgers_param_distance(burgers_compose(burgers_compose(g1, g2), g3),
                                         burgers_compose(g1, burgers_compose(g2, g3))) < 1e-10);
        }
    }
}

TEST_CASE("burgers action homomorphism on random jets") {
    Rng rng(17);
    int done = 0;
    while (done < 100) {
        const auto g1 = random_burgers_element(rng);
        const auto g2 = random_burgers_element(rng);
        const auto p = random_jet(rng);
        try {
            const auto via_product = burgers_act_point(burgers_compose(g1, g2), p);
            const auto via_double = burgers_act_point(g1, burgers_act_point(g2, p));
            CHECK(std::abs(via_product.t - via_double.t) < 1e-9);
            CHECK(std::abs(via_product.x - via_double.x) < 1e-9);
            CHECK(std::abs(via_product.u - via_double.u) < 1e-9);
            ++done;
        } catch (const SingularTransform&) {
            // resample away from the projective singularity
        }
    }
}

TEST_CASE("exp_train: zero coefficients give the identity") {
    const std::vector<double> z6(6, 0.0), z5(5, 0.0);
    CHECK(heat_param_distance(heat_exp_train(z6), HeatGroupElement::identity()) == 0.0);
    CHECK(burgers_param_distance(burgers_exp_train(z5), BurgersGroupElement::identity()) == 0.0);
}

TEST_CASE("exp_train: named single-coefficient elements") {
    SUBCASE("a1 = c sets lambda0") {
        std::vector<double> c(6, 0.0);
        c[0] = 0.37;
        const auto g = heat_exp_train(c);
        CHECK(g.h.lambda0 == doctest::Approx(0.37));
        CHECK(g.h.lambda1 == 0.0);
        CHECK(g.a.beta == 0.0);
    }
    SUBCASE("a4 = ln 2 gives A = diag(2, 1/2)") {
        std::vector<double> c(6, 0.0);
        c[3] = std::log(2.0);
        const auto g = heat_exp_train(c);
        CHECK(g.a.alpha == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(g.a.delta == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(g.a.beta == 0.0);
        CHECK(g.a.gamma == 0.0);
    }
}

TEST_CASE("exp_train single-generator elements reproduce the flow rows through the action") {
    Rng rng(18);
    const double nu = 0.1;
    for (int gen = 1; gen <= 6; ++gen) {
        for (int trial = 0; trial < 100; ++trial) {
            const double eps = rng.uniform(-0.5, 0.5);
            std::vector<double> c(6, 0.0);
            c[gen - 1] = eps;
            const auto g = heat_exp_train(c);
            const auto p = random_jet(rng);
            try {
                const auto via_elem = heat_act_point(g, nu, p);
                const auto via_flow = heat_flow(gen, {eps}, nu, p);
                CHECK(std::abs(via_elem.t - via_flow.t) < 1e-10);
                CHECK(std::abs(via_elem.x - via_flow.x) < 1e-10);
                CHECK(std::abs(via_elem.u - via_flow.u) < 1e-10);
            } catch (const SingularTransform&) {
            }
        }
    }
    for (int gen = 1; gen <= 5; ++gen) {
        for (int trial = 0; trial < 100; ++trial) {
            const double eps = rng.uniform(-0.5, 0.5);
            std::vector<double> c(5, 0.0);
            c[gen - 1] = eps;
            const auto g = burgers_exp_train(c);
            const auto p = random_jet(rng);
            try {
                const auto via_elem = burgers_act_point(g, p);
                const auto via_flow = burgers_flow(gen, {eps}, p);
                CHECK(std::abs(via_elem.t - via_flow.t) < 1e-10);
                CHECK(std::abs(via_elem.x - via_flow.x) < 1e-10);
                CHECK(std::abs(via_elem.u - via_flow.u) < 1e-10);
            } catch (const SingularTransform&) {
            }
        }
    }
}

TEST_CASE("exp_train acts as the ordered composition of generator flows") {
    Rng rng(19);
    const double nu = 0.1;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> c(6);
        for (double& v : c) v = rng.uniform(-0.3, 0.3);
        const auto g = heat_exp_train(c);
        const auto p = random_jet(rng);
        try {
            // v1 factor first, v6 last.
            JetPoint q = p;
            for (int gen = 1; gen <= 6; ++gen) q = heat_flow(gen, {c[gen - 1]}, nu, q);
            const auto r = heat_act_point(g, nu, p);
            CHECK(std::abs(r.t - q.t) < 1e-9);
            CHECK(std::abs(r.x - q.x) < 1e-9);
            CHECK(std::abs(r.u - q.u) < 1e-9);
        } catch (const SingularTransform&) {
        }
    }
}

TEST_CASE("se2 composition matches the homogeneous matrix oracle") {
    Rng rng(20);
    for (int i = 0; i < 100; ++i) {
        const Se2Element g1{rng.uniform(0.0, 6.28), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const Se2Element g2{rng.uniform(0.0, 6.28), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const auto g = se2_compose(g1, g2);
        // 3x3 homogeneous-matrix product as the independent route
        const double c1 = std::cos(g1.theta), s1 = std::sin(g1.theta);
        const double c2 = std::cos(g2.theta), s2 = std::sin(g2.theta);
        const double m00 = c1 * c2 - s1 * s2;
        const double m10 = s1 * c2 + c1 * s2;
        const double tx = c1 * g2.tx - s1 * g2.ty + g1.tx;
        const double ty = s1 * g2.tx + c1 * g2.ty + g1.ty;
        CHECK(std::cos(g.theta) == doctest::Approx(m00).epsilon(1e-12));
        CHECK(std::sin(g.theta) == doctest::Approx(m10).epsilon(1e-12));
        CHECK(g.tx == doctest::Approx(tx).epsilon(1e-12));
        CHECK(g.ty == doctest::Approx(ty).epsilon(1e-12));

        const auto gi = se2_inverse(g);
        const auto e = se2_compose(g, gi);
        CHECK(std::abs(std::remainder(e.theta, 6.283185307179586)) < 1e-12);
        CHECK(std::abs(e.tx) < 1e-12);
        CHECK(std::abs(e.ty) < 1e-12);
    }
}
