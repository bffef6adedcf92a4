#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "basta/distribution.hpp"
#include "basta/processes.hpp"

using namespace basta;

TEST_CASE("bernoulli arrivals: event iff draw < alpha, one draw per call") {
    const arrival_spec arrival = bernoulli_arrival{0.3};
    auto rng = rng_stream::scripted({0.25, 0.95, 0.3});
    CHECK(sample_arrival(arrival, 17, rng) == 1);
    CHECK(rng.draws() == 1);
    CHECK(sample_arrival(arrival, 0, rng) == 0);
    CHECK(sample_arrival(arrival, 0, rng) == 0);  // boundary: 0.3 < 0.3 is false
    CHECK(rng.draws() == 3);
}

TEST_CASE("batch arrivals: ascending inverse CDF over cumulative sums") {
    const arrival_spec arrival = batch_arrival{{0.7, 0.2, 0.1}};
    auto rng = rng_stream::scripted({0.65, 0.7, 0.85, 0.95});
    CHECK(sample_arrival(arrival, 0, rng) == 0);  // < 0.7
    CHECK(sample_arrival(arrival, 0, rng) == 1);  // cumulative thresholds 0.7, 0.9
    CHECK(sample_arrival(arrival, 0, rng) == 1);
    CHECK(sample_arrival(arrival, 0, rng) == 2);  // >= 0.9
    CHECK(rng.draws() == 4);
}

TEST_CASE("state-dependent arrivals read alpha at the pre-arrival state") {
    const arrival_spec arrival = state_dependent_arrival{{0.5}, 0.1};
    auto rng = rng_stream::scripted({0.3, 0.3, 0.05});
    CHECK(sample_arrival(arrival, 3, rng) == 0);  // tail alpha 0.1, 0.3 >= 0.1
    CHECK(sample_arrival(arrival, 0, rng) == 1);  // alpha(0) = 0.5
    CHECK(sample_arrival(arrival, 3, rng) == 1);
}

TEST_CASE("completion trials: event iff draw < beta(count)") {
    auto rng = rng_stream::scripted({0.49, 0.6, 0.95, 0.1});
    CHECK(sample_completion(geometric_service{0.5}, 4, rng));
    CHECK(sample_completion(hazard_service{{{0.5, 0.75}, 0.75}}, 2, rng));  // beta(2) = 0.75
    CHECK_FALSE(sample_completion(hazard_service{{{0.5}, 0.9}}, 7, rng));   // tail 0.9
    CHECK(rng.draws() == 3);
    CHECK_THROWS_AS(sample_completion(iid_service{{0.0, 1.0}}, 1, rng), std::logic_error);
}

TEST_CASE("iid durations: inverse CDF, at least one slot") {
    auto rng = rng_stream::scripted({0.99, 0.5, 0.75, 0.2});
    CHECK(sample_service_duration(iid_service{{0.0, 1.0}}, rng) == 1);
    CHECK(sample_service_duration(iid_service{{0.0, 0.0, 1.0}}, rng) == 2);
    CHECK(sample_service_duration(iid_service{{0.0, 0.5, 0.5}}, rng) == 2);
    CHECK(sample_service_duration(iid_service{{0.0, 0.5, 0.5}}, rng) == 1);
    CHECK_THROWS_AS(sample_service_duration(geometric_service{0.5}, rng), std::logic_error);
}

TEST_CASE("mean_batch_size") {
    CHECK(mean_batch_size(bernoulli_arrival{0.3}) == doctest::Approx(0.3));
    CHECK(mean_batch_size(batch_arrival{{0.7, 0.2, 0.1}}) == doctest::Approx(0.4));
    CHECK(mean_batch_size(batch_arrival{{1.0}}) == 0.0);
    CHECK_THROWS_AS(mean_batch_size(state_dependent_arrival{{0.5}, 0.1}), std::logic_error);
}

TEST_CASE("lack of anticipation: arrival frequency does not depend on pre-state") {
    const arrival_spec arrivals[] = {bernoulli_arrival{0.3}, batch_arrival{{0.7, 0.2, 0.1}}};
    for (const auto& arrival : arrivals) {
        rng_stream rng(2024);
        constexpr int kDraws = 1'000'000;
        const std::array<std::uint64_t, 3> states = {0, 1, 5};
        std::array<double, 3> hits{};
        std::array<int, 3> totals{};
        for (int i = 0; i < kDraws; ++i) {
            const std::size_t which = static_cast<std::size_t>(i % 3);
            hits[which] += sample_arrival(arrival, states[which], rng) >= 1 ? 1.0 : 0.0;
            ++totals[which];
        }
        const double p = 0.3;  // P(k >= 1) for both laws
        const double se = std::sqrt(2.0 * p * (1 - p) / (kDraws / 3.0));
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = a + 1; b < 3; ++b) {
                CHECK(std::abs(hits[a] / totals[a] - hits[b] / totals[b]) <= 4.0 * se);
            }
        }
    }
}

TEST_CASE("geometric service equals a flat hazard under identical streams") {
    const service_spec geo = geometric_service{0.5};
    const service_spec flat = hazard_service{{{0.5}, 0.5}};
    rng_stream a(99), b(99);
    for (int i = 0; i < 100'000; ++i) {
        const std::uint64_t count = 1 + static_cast<std::uint64_t>(i % 7);
        CHECK(sample_completion(geo, count, a) == sample_completion(flat, count, b));
    }
    CHECK(a.draws() == b.draws());
}

TEST_CASE("bernoulli and its two-point batch form are equal in law") {
    // The draw conventions differ bit-wise ({u < a} vs {u >= 1-a}), so the
    // equivalence is distributional: same single draw consumed, same event
    // frequency over a shared stream.
    const arrival_spec bern = bernoulli_arrival{0.3};
    const arrival_spec batch = batch_arrival{{0.7, 0.3}};
    rng_stream a(512), b(512);
    constexpr int kDraws = 1'000'000;
    int bern_hits = 0;
    int batch_hits = 0;
    for (int i = 0; i < kDraws; ++i) {
        bern_hits += sample_arrival(bern, 0, a) == 1 ? 1 : 0;
        batch_hits += sample_arrival(batch, 0, b) == 1 ? 1 : 0;
    }
    CHECK(a.draws() == b.draws());
    const double se = std::sqrt(2.0 * 0.3 * 0.7 / kDraws);
    CHECK(std::abs(bern_hits - batch_hits) / static_cast<double>(kDraws) <= 4.0 * se);
}

TEST_CASE("hazard-route and duration-route geometric services agree in distribution") {
    constexpr double kBeta = 0.7;
    constexpr int kSamples = 1'000'000;

    // Exact geometric duration pmf truncated at tail mass 1e-12.
    std::vector<double> pmf{0.0};
    double mass = kBeta;
    while (1.0 - (1.0 - (1.0 - kBeta) * (mass / kBeta)) > 0 && mass > 1e-12 * kBeta) {
        pmf.push_back(mass);
        mass *= (1.0 - kBeta);
        if (pmf.size() > 200) break;
    }

    const service_spec geo = geometric_service{kBeta};
    rng_stream hazard_rng(7771);
    std::vector<double> hazard_hist(pmf.size() + 8, 0.0);
    for (int i = 0; i < kSamples; ++i) {
        std::size_t s = 1;
        while (!sample_completion(geo, 1, hazard_rng)) {
            ++s;
        }
        if (s < hazard_hist.size()) {
            hazard_hist[s] += 1.0 / kSamples;
        }
    }

    const service_spec iid = iid_service{pmf};
    rng_stream iid_rng(7772);
    std::vector<double> iid_hist(pmf.size() + 8, 0.0);
    for (int i = 0; i < kSamples; ++i) {
        const std::uint64_t s = sample_service_duration(iid, iid_rng);
        if (s < iid_hist.size()) {
            iid_hist[s] += 1.0 / kSamples;
        }
    }

    CHECK(tv_distance(hazard_hist, pmf) <= 1e-3);
    CHECK(tv_distance(iid_hist, pmf) <= 1e-3);
    CHECK(tv_distance(hazard_hist, iid_hist) <= 1.5e-3);
}
