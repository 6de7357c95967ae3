#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "arpaint/estimation.hpp"
#include "oracles.hpp"

using namespace arpaint;

namespace {

double rel_error(const std::vector<double>& got, const std::vector<double>& want) {
    REQUIRE(got.size() == want.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += (got[i] - want[i]) * (got[i] - want[i]);
        den += want[i] * want[i];
    }
    return std::sqrt(num) / std::sqrt(den);
}

}  // namespace

TEST_CASE("autocorrelation matches direct summation") {
    CHECK(autocorrelation(std::vector<double>{1, 0, 0}, 2) ==
          std::vector<double>{1, 0, 0});
    CHECK(autocorrelation(std::vector<double>{1, 1}, 1) == std::vector<double>{2, 1});
    CHECK(autocorrelation(std::vector<double>{1, 2, 3}, 2) ==
          std::vector<double>{14, 8, 3});
    CHECK_THROWS_AS(autocorrelation(std::vector<double>{1, 2}, 2), std::invalid_argument);
}

TEST_CASE("levinson_durbin solves small Yule-Walker systems") {
    auto r1 = levinson_durbin(std::vector<double>{1, 0});
    CHECK(r1.model.coeffs == std::vector<double>{1, 0});
    CHECK(r1.error_power == doctest::Approx(1.0));

    auto r2 = levinson_durbin(std::vector<double>{1, 0.5});
    CHECK(r2.model.coeffs[0] == 1.0);
    CHECK(r2.model.coeffs[1] == doctest::Approx(-0.5));
    CHECK(r2.error_power == doctest::Approx(0.75));

    auto r3 = levinson_durbin(std::vector<double>{2, 1, 0.5});
    CHECK(r3.model.coeffs[0] == 1.0);
    CHECK(r3.model.coeffs[1] == doctest::Approx(-0.5));
    CHECK(r3.model.coeffs[2] == doctest::Approx(0.0));

    auto silent = levinson_durbin(std::vector<double>{0, 0, 0});
    CHECK(silent.model.coeffs == std::vector<double>{1, 0, 0});
    CHECK(silent.error_power == 0.0);

    CHECK_THROWS_AS(levinson_durbin(std::vector<double>{1, std::nan("")}),
                    std::invalid_argument);
}

TEST_CASE("estimate_lpc on canonical inputs") {
    std::vector<double> impulse(64, 0.0);
    impulse[0] = 1.0;
    ARModel flat = estimate_lpc(impulse, 8);
    for (std::size_t i = 1; i <= 8; ++i) CHECK(flat.coeffs[i] == doctest::Approx(0.0));

    std::vector<double> zeros(64, 0.0);
    ARModel trivial = estimate_lpc(zeros, 8);
    std::vector<double> want(9, 0.0);
    want[0] = 1.0;
    CHECK(trivial.coeffs == want);
}

TEST_CASE("estimate_lpc recovers the resonator coefficients of a long cosine") {
    const double omega = 2.0 * std::numbers::pi * 441.0 / 44100.0;
    double prev_err = 1e9;
    for (std::size_t n : {1024u, 8192u}) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = std::cos(omega * static_cast<double>(i));
        ARModel model = estimate_lpc(x, 2);
        const std::vector<double> want = {1.0, -2.0 * std::cos(omega), 1.0};
        const double err = rel_error(model.coeffs, want);
        CHECK(err < 0.05);
        CHECK(err < prev_err);  // tolerance shrinks with N
        prev_err = err;
    }
}

TEST_CASE("estimate_lpc equals the dense Yule-Walker solve on random segments") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 64 + rng() % 961;  // up to 1024
        const std::size_t p = 1 + rng() % 32;
        const std::vector<double> x = oracle::random_segment(rng, n);
        const ARModel mine = estimate_lpc(x, p);
        const std::vector<double> dense =
            oracle::yule_walker_dense(autocorrelation(x, p));
        CHECK(rel_error(mine.coeffs, dense) < 1e-8);
    }
}

TEST_CASE("estimate_burg closed form for an exact geometric sequence") {
    ARModel model = estimate_burg(std::vector<double>{1, 0.5, 0.25, 0.125}, 1);
    REQUIRE(model.coeffs.size() == 2);
    CHECK(model.coeffs[0] == 1.0);
    CHECK(model.coeffs[1] == doctest::Approx(-0.8).epsilon(1e-12));
}

TEST_CASE("estimators return the trivial model for silence") {
    std::vector<double> zeros(128, 0.0);
    for (auto est : {Estimator::Lpc, Estimator::Burg}) {
        ARModel model = estimate(zeros, 16, est);
        REQUIRE(model.coeffs.size() == 17);
        CHECK(model.coeffs[0] == 1.0);
        for (std::size_t i = 1; i < model.coeffs.size(); ++i) CHECK(model.coeffs[i] == 0.0);
    }
}

TEST_CASE("Burg models of random data are stable") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> x = oracle::random_segment(rng, 2048);
        ARModel model = estimate_burg(x, 40);
        CHECK(oracle::max_root_modulus(model.coeffs) < 1.0 + 1e-8);
    }
}

TEST_CASE("Burg is symmetric under time reversal") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> x = oracle::random_segment(rng, 256);
        std::vector<double> rev(x.rbegin(), x.rend());
        const ARModel fwd = estimate_burg(x, 12);
        const ARModel bwd = estimate_burg(rev, 12);
        CHECK(rel_error(fwd.coeffs, bwd.coeffs) < 1e-10);
    }
}

TEST_CASE("both estimators are scale invariant") {
    std::mt19937_64 rng(77);
    const std::vector<double> x = oracle::random_segment(rng, 400);
    std::vector<double> scaled(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = -37.5 * x[i];
    for (auto est : {Estimator::Lpc, Estimator::Burg}) {
        const ARModel a = estimate(x, 10, est);
        const ARModel b = estimate(scaled, 10, est);
        CHECK(rel_error(a.coeffs, b.coeffs) < 1e-12);
    }
}

TEST_CASE("chunked estimation accepts disjoint runs and matches the whole signal when given one chunk") {
    std::mt19937_64 rng(31);
    const std::vector<double> x = oracle::random_segment(rng, 300);
    const std::vector<std::span<const double>> one = {std::span<const double>(x)};
    for (auto est : {Estimator::Lpc, Estimator::Burg}) {
        const ARModel whole = estimate(x, 8, est);
        const ARModel chunked = estimate_chunks(one, 8, est);
        CHECK(rel_error(whole.coeffs, chunked.coeffs) < 1e-14);
    }

    const std::vector<std::span<const double>> two = {
        std::span<const double>(x).subspan(0, 150),
        std::span<const double>(x).subspan(150, 150)};
    for (auto est : {Estimator::Lpc, Estimator::Burg}) {
        const ARModel model = estimate_chunks(two, 8, est);
        CHECK(model.coeffs[0] == 1.0);
        CHECK(model.coeffs.size() == 9);
    }

    const std::vector<double> tiny(4, 1.0);
    const std::vector<std::span<const double>> short_chunks = {
        std::span<const double>(tiny)};
    CHECK_THROWS_AS(estimate_chunks(short_chunks, 8, Estimator::Burg),
                    std::invalid_argument);
}
