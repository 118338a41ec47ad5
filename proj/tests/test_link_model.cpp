#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "aggsim/link_model.hpp"
#include "aggsim/units.hpp"

using namespace aggsim;

namespace {
ChannelParams channel() { return {}; }          // 38 dB, 3.5, 2.2
PowerControlParams power() { return {}; }       // -46 dBm, 20 dBm, eps 0.4
LinkBudgetParams budget() { return {}; }        // NB-IoT 180 kHz budget
}  // namespace

TEST_CASE("path loss power law") {
    const ChannelParams ch = channel();
    CHECK(path_loss(1.0, ch.alpha_g, ch) == doctest::Approx(db_to_linear(38.0)));
    CHECK(path_loss_db(200.0, 3.5, ch) == doctest::Approx(38.0 + 35.0 * std::log10(200.0)));
    CHECK(path_loss_db(200.0, 3.5, ch) == doctest::Approx(118.5).epsilon(1e-3));
    CHECK(path_loss_db(100.0, 2.2, ch) == doctest::Approx(82.0));
    CHECK_THROWS_AS(path_loss(0.0, 3.5, ch), std::domain_error);
    CHECK_THROWS_AS(path_loss(-5.0, 3.5, ch), std::domain_error);

    // monotone in distance
    double prev = 0.0;
    for (double r = 0.5; r < 1e4; r *= 3.0) {
        const double l = path_loss(r, ch.alpha_g, ch);
        CHECK(l > prev);
        prev = l;
    }
}

TEST_CASE("fractional power control") {
    const ChannelParams ch = channel();
    PowerControlParams pc = power();

    SUBCASE("eps=0 is constant open-loop power") {
        pc.epsilon = 0.0;
        for (double r : {0.01, 1.0, 100.0, 1e6})
            CHECK(tx_power_w(r, ch.alpha_g, pc, ch) == doctest::Approx(dbm_to_watts(-46.0)));
    }
    SUBCASE("saturates at P_max far away") {
        pc.epsilon = 1.0;
        CHECK(tx_power_w(1e9, ch.alpha_g, pc, ch) == doctest::Approx(0.1));
    }
    SUBCASE("mid-range value") {
        const double dbm = watts_to_dbm(tx_power_w(5.0, ch.alpha_g, pc, ch));
        CHECK(dbm == doctest::Approx(-46.0 + 1.4 * 38.0 + 14.0 * std::log10(5.0)).epsilon(1e-12));
        CHECK(dbm == doctest::Approx(17.0).epsilon(1e-3));
    }
    SUBCASE("never exceeds P_max and is nondecreasing") {
        for (double r = 1e-3; r < 1e7; r *= 1.7) {
            const double p1 = tx_power_w(r, ch.alpha_g, pc, ch);
            const double p2 = tx_power_w(r * 1.7, ch.alpha_g, pc, ch);
            CHECK(p1 <= pc.p_max_w());
            CHECK(p2 >= p1);
        }
    }
    SUBCASE("continuous at the critical distance") {
        const double zeta = saturation_root_m(ch.alpha_g, pc, ch);
        const double below = tx_power_w(zeta * (1.0 - 1e-12), ch.alpha_g, pc, ch);
        CHECK(below == doctest::Approx(pc.p_max_w()).epsilon(1e-9));
    }
}

TEST_CASE("saturation indicator agrees with the critical distance under both conventions") {
    const ChannelParams ch = channel();
    for (auto conv : {OpenLoopConvention::kEq10Full, OpenLoopConvention::kStandardFractional}) {
        for (double eps : {0.0, 0.2, 0.4, 0.7, 1.0}) {
            PowerControlParams pc = power();
            pc.epsilon = eps;
            pc.open_loop_convention = conv;
            const double zeta = saturation_root_m(ch.alpha_g, pc, ch);
            for (double r = 1e-4; r < 1e8; r *= 2.3) {
                const bool saturated =
                    tx_power_w(r, ch.alpha_g, pc, ch) == pc.p_max_w();
                CHECK(saturated == (r >= zeta));
            }
        }
    }
}

TEST_CASE("critical distance per strategy") {
    const ChannelParams ch = channel();
    const PowerControlParams pc = power();
    const ClusterGeometry geom{200.0, 100.0};

    SUBCASE("aerial clamps to geometric bounds") {
        // unclamped air root is ~5011 m, far beyond the largest possible distance
        CHECK(saturation_root_m(ch.alpha_air, pc, ch) == doctest::Approx(5011.87).epsilon(1e-3));
        CHECK(critical_distance_m(CentroidAerial{100.0}, pc, ch, geom) ==
              doctest::Approx(std::sqrt(200.0 * 200.0 + 100.0 * 100.0)));
    }
    SUBCASE("aerial lower clamp at the altitude") {
        PowerControlParams hot = pc;
        hot.epsilon = 1.0;  // root drops below h, device saturates everywhere
        const double root = saturation_root_m(ch.alpha_air, hot, ch);
        CHECK(root < 100.0);
        CHECK(critical_distance_m(CentroidAerial{100.0}, hot, ch, geom) == doctest::Approx(100.0));
    }
    SUBCASE("cluster interior keeps an in-range root") {
        // choose P_max so the root is exactly 1 m
        PowerControlParams unit = pc;
        unit.p_max_dbm = unit.p_o_dbm + unit.epsilon * ch.alpha_g * ch.l_o_db;
        CHECK(critical_distance_m(ClusterInterior{1}, unit, ch, geom) == doctest::Approx(1.0));
        CHECK(critical_distance_m(CentroidTerrestrial{}, unit, ch, geom) == doctest::Approx(1.0));
    }
    SUBCASE("random deployment is unclamped") {
        CHECK(critical_distance_m(RandomPpp{5e-6}, pc, ch, geom) ==
              doctest::Approx(saturation_root_m(ch.alpha_g, pc, ch)));
    }
    SUBCASE("eps=0 sentinel") {
        PowerControlParams flat = pc;
        flat.epsilon = 0.0;
        CHECK(std::isinf(critical_distance_m(RandomPpp{5e-6}, flat, ch, geom)));
        // clamped variants fold the sentinel to the support edge
        CHECK(critical_distance_m(ClusterInterior{1}, flat, ch, geom) == doctest::Approx(400.0));
        flat.p_o_dbm = flat.p_max_dbm;  // always saturated instead
        CHECK(critical_distance_m(RandomPpp{5e-6}, flat, ch, geom) == 0.0);
    }
}

TEST_CASE("receiver sensitivity") {
    LinkBudgetParams lb = budget();
    CHECK(receiver_sensitivity_dbm(lb) ==
          doctest::Approx(-174.0 + 5.0 + 10.0 * std::log10(180e3) - 4.3));
    CHECK(receiver_sensitivity_dbm(lb) == doctest::Approx(-120.75).epsilon(1e-4));

    lb.tau_db = -7.8;
    CHECK(receiver_sensitivity_dbm(lb) == doctest::Approx(-124.25).epsilon(1e-4));

    lb = budget();
    lb.bandwidth_hz = 1.0;
    lb.nf_db = 0.0;
    lb.tau_db = 0.0;
    CHECK(receiver_sensitivity_dbm(lb) == doctest::Approx(-174.0));
}

TEST_CASE("achievable coupling loss from the budget") {
    const LinkBudgetParams lb = budget();
    const PowerControlParams pc = power();
    CHECK(achievable_mcl_db(lb, pc) == doctest::Approx(20.0 - (-120.75) + 0.0).epsilon(1e-4));
}

TEST_CASE("MCL to path-loss threshold") {
    const LinkBudgetParams lb = budget();
    ChannelParams ch = channel();

    SUBCASE("no penetration") {
        const auto t = mcl_to_pathloss_threshold(lb, ch);
        CHECK(linear_to_db(t.mu_hat) == doctest::Approx(154.0 - 38.0));
    }
    SUBCASE("25 dB penetration") {
        ch.penetration_loss_db = 25.0;
        const auto t = mcl_to_pathloss_threshold(lb, ch);
        CHECK(linear_to_db(t.mu_hat) == doctest::Approx(91.0));
        CHECK(coverage_distance_m(lb, ch, ch.alpha_g) ==
              doctest::Approx(std::pow(10.0, 91.0 / 35.0)));
    }
    SUBCASE("penetration eats the whole distance budget") {
        ch.penetration_loss_db = 154.0 - 38.0;
        const auto t = mcl_to_pathloss_threshold(lb, ch);
        CHECK(t.mu_hat == doctest::Approx(1.0));
        CHECK(coverage_distance_m(lb, ch, ch.alpha_g) == doctest::Approx(1.0));
    }
}

TEST_CASE("LOS probability") {
    const LosModelParams los{250.0, 150.0, 23.5};

    CHECK(los_probability(125.0, 100.0, los) == 1.0);
    CHECK(los_probability(250.0, 100.0, los) == doctest::Approx(1.0).epsilon(1e-12));
    // continuity at the breakpoint
    CHECK(los_probability(250.0 * (1.0 + 1e-13), 100.0, los) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(los_probability(1e9, 100.0, los) == doctest::Approx(0.0));

    for (double d = 0.0; d <= 1e5; d += 97.0) {
        const double p = los_probability(d, 100.0, los);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
    // decreasing past the breakpoint
    double prev = 1.0;
    for (double d = 250.0; d < 5000.0; d += 50.0) {
        const double p = los_probability(d, 100.0, los);
        CHECK(p <= prev + 1e-15);
        prev = p;
    }
    CHECK_THROWS_AS(los_probability(-1.0, 100.0, los), std::domain_error);
    CHECK_THROWS_AS(los_probability(10.0, 100.0, LosModelParams{0.0, 150.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("parameter invariants") {
    ChannelParams ch = channel();
    ch.alpha_g = 2.0;
    CHECK_THROWS_AS(ch.validate(), std::domain_error);
    ch = channel();
    ch.penetration_loss_db = -1.0;
    CHECK_THROWS_AS(ch.validate(), std::domain_error);

    PowerControlParams pc = power();
    pc.epsilon = 1.5;
    CHECK_THROWS_AS(pc.validate(), std::domain_error);
    pc = power();
    pc.p_o_dbm = 30.0;  // above P_max
    CHECK_THROWS_AS(pc.validate(), std::domain_error);

    LinkBudgetParams lb = budget();
    lb.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(lb.validate(), std::domain_error);
}
