#include <doctest.h>

#include <cmath>
#include <vector>

#include "svtail/errors.hpp"
#include "svtail/models.hpp"
#include "svtail/stats.hpp"

using namespace svtail;

TEST_CASE("built-in model constants") {
    const auto models = standard_models();
    REQUIRE(models.size() == 3);

    CHECK(models[0].kind() == ModelKind::StandardGaussian);
    CHECK(models[0].tail_c() == 0.5);
    CHECK(models[0].mgf_b() == 1.0);  // E exp(theta x) = exp(theta^2/2) exactly, so b=1 is tight

    CHECK(models[1].kind() == ModelKind::Rademacher);
    CHECK(models[1].tail_c() == 0.5);
    CHECK(models[1].mgf_b() == 1.0);

    CHECK(models[2].kind() == ModelKind::UniformSymmetric);
    CHECK(models[2].half_width() == 1.0);
    CHECK(models[2].tail_c() == 0.5);
    CHECK(models[2].mgf_b() == 1.0);
}

TEST_CASE("model keys") {
    CHECK(model_from_key("gaussian").kind() == ModelKind::StandardGaussian);
    CHECK(model_from_key("rademacher").kind() == ModelKind::Rademacher);
    const auto uniform = model_from_key("uniform:0.5");
    CHECK(uniform.half_width() == 0.5);
    CHECK(uniform.tail_c() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(uniform.mgf_b() == 0.5);
    CHECK_THROWS_AS(model_from_key("bogus"), InvalidParamError);
    CHECK_THROWS_AS(model_from_key("uniform:x"), InvalidParamError);
    CHECK_THROWS_AS(model_from_key("uniform:-1"), InvalidParamError);
}

TEST_CASE("draw supports") {
    Rng rng(11);
    const auto rademacher = SubGaussianModel::rademacher();
    const auto uniform = SubGaussianModel::uniform_symmetric(0.75);
    for (int i = 0; i < 20000; ++i) {
        const double r = rademacher.sample(rng);
        CHECK((r == 1.0 || r == -1.0));
        const double u = uniform.sample(rng);
        CHECK(u >= -0.75);
        CHECK(u <= 0.75);
    }
}

TEST_CASE("stored c satisfies the tail condition analytically") {
    // P(|x| > t) <= 2 exp(-c t^2) at t in {0.5, 1, 2, 4}
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
        const double envelope = 2.0 * std::exp(-0.5 * t * t);
        CHECK(standard_normal_tail(t) <= envelope);                    // gaussian, exact erfc
        CHECK((t < 1.0 ? 1.0 : 0.0) <= envelope);                      // rademacher
        CHECK(std::max(0.0, 1.0 - t) <= envelope);                     // uniform on [-1,1]
    }
    // worked case: P(|x| > 0.5) = 1 <= 2 exp(-0.125) for the rademacher model
    CHECK(2.0 * std::exp(-0.125) == doctest::Approx(1.764993805169191).epsilon(1e-15));
    CHECK(1.0 <= 2.0 * std::exp(-0.125));
}

TEST_CASE("empirical mgf check") {
    SUBCASE("theta = 0 is exact") {
        Rng rng(5);
        const double theta = 0.0;
        const auto report =
            empirical_mgf_check(SubGaussianModel::standard_gaussian(), std::span(&theta, 1),
                                10000, rng);
        REQUIRE(report.size() == 1);
        CHECK(report[0].estimate == 1.0);
        CHECK(report[0].bound == 1.0);
        CHECK(report[0].std_error == 0.0);
        CHECK_FALSE(report[0].flagged);
    }
    SUBCASE("rademacher at theta = 1: cosh(1) against exp(1/2)") {
        Rng rng(6);
        const double theta = 1.0;
        const auto report = empirical_mgf_check(SubGaussianModel::rademacher(),
                                                std::span(&theta, 1), 100000, rng);
        CHECK(report[0].estimate == doctest::Approx(1.5430806348152437).epsilon(0.01));
        CHECK(report[0].bound == doctest::Approx(1.6487212707001282).epsilon(1e-14));
        CHECK_FALSE(report[0].flagged);
    }
    SUBCASE("no flags on the 13-point grid for every built-in") {
        std::vector<double> grid;
        for (int k = -6; k <= 6; ++k) grid.push_back(static_cast<double>(k) * 0.5);
        for (const auto& model : standard_models()) {
            Rng rng(909);
            const auto report = empirical_mgf_check(model, grid, 100000, rng);
            for (const auto& point : report) CHECK_FALSE(point.flagged);
        }
    }
    SUBCASE("sample-size precondition") {
        Rng rng(1);
        const double theta = 1.0;
        CHECK_THROWS_AS(empirical_mgf_check(SubGaussianModel::standard_gaussian(),
                                            std::span(&theta, 1), 9999, rng),
                        InvalidParamError);
    }
    SUBCASE("overflow is reported with the offending theta") {
        Rng rng(2);
        const auto huge =
            SubGaussianModel::custom(1.0, 1.0, "huge", [](Rng&) { return 1e308; });
        const double theta = 2.0;
        try {
            empirical_mgf_check(huge, std::span(&theta, 1), 10000, rng);
            FAIL("expected OverflowAtThetaError");
        } catch (const OverflowAtThetaError& e) {
            CHECK(e.theta == 2.0);
        }
    }
}

TEST_CASE("custom model validation") {
    CHECK_THROWS_AS(SubGaussianModel::custom(0.0, 1.0, "x", [](Rng&) { return 0.0; }),
                    InvalidParamError);
    CHECK_THROWS_AS(SubGaussianModel::custom(1.0, -1.0, "x", [](Rng&) { return 0.0; }),
                    InvalidParamError);
    CHECK_THROWS_AS(SubGaussianModel::custom(1.0, 1.0, "x", nullptr), InvalidParamError);
    Rng rng(4);
    const auto constant = SubGaussianModel::custom(3.0, 0.25, "const0", [](Rng&) { return 0.0; });
    CHECK(constant.sample(rng) == 0.0);
    CHECK(constant.tail_c() == 3.0);
}
