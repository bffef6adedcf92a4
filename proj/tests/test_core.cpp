#include <doctest.h>

#include <random>

#include "basta/distribution.hpp"
#include "basta/types.hpp"

using namespace basta;

namespace {

model_spec base_spec() {
    model_spec m;
    m.rule = scheduling_rule::la_df;
    m.arrival = bernoulli_arrival{0.3};
    m.service = geometric_service{0.5};
    m.slots = 1000;
    m.warmup = 100;
    return m;
}

}  // namespace

TEST_CASE("validate_spec accepts and flags stability") {
    auto spec = validate_spec(base_spec());
    CHECK(spec.stable());  // 0.3 < 0.5

    model_spec boundary = base_spec();
    boundary.arrival = bernoulli_arrival{0.5};
    CHECK_FALSE(validate_spec(boundary).stable());  // alpha = beta boundary

    model_spec iid = base_spec();
    iid.service = iid_service{{0.0, 0.0, 1.0}};  // E[S] = 2
    CHECK(validate_spec(iid).stable());          // 0.3 * 2 < 1
    iid.arrival = bernoulli_arrival{0.6};
    CHECK_FALSE(validate_spec(iid).stable());  // 0.6 * 2 >= 1

    model_spec sd = base_spec();
    sd.arrival = state_dependent_arrival{{0.9}, 0.1};
    CHECK(validate_spec(sd).stable());  // tail 0.1 < 0.5 governs the drift
}

TEST_CASE("validate_spec rejects malformed specs with an issue list") {
    model_spec bad = base_spec();
    bad.arrival = batch_arrival{{0.7, 0.2, 0.2}};  // sums to 1.1
    CHECK_THROWS_AS(validate_spec(bad), spec_error);
    CHECK(validation_issues(bad).size() == 1);

    bad = base_spec();
    bad.arrival = bernoulli_arrival{1.5};
    bad.warmup = bad.slots;  // warmup >= slots
    const auto issues = validation_issues(bad);
    CHECK(issues.size() == 2);

    bad = base_spec();
    bad.service = iid_service{{}};
    CHECK_FALSE(validation_issues(bad).empty());

    bad = base_spec();
    bad.service = iid_service{{0.5, 0.5}};  // pmf[0] != 0
    CHECK_FALSE(validation_issues(bad).empty());

    try {
        model_spec multi = base_spec();
        multi.arrival = bernoulli_arrival{-0.1};
        multi.slots = 0;
        validate_spec(multi);
        CHECK(false);
    } catch (const spec_error& err) {
        CHECK(err.issues().size() >= 2);
    }
}

TEST_CASE("validate_spec is idempotent on validated specs") {
    auto spec = validate_spec(base_spec());
    const validated_spec& again = validate_spec(spec);
    CHECK(&again == &spec);
    CHECK(again.spec() == spec.spec());
}

TEST_CASE("tv_distance basics") {
    CHECK(tv_distance(std::vector{0.5, 0.5}, std::vector{0.5, 0.5}) == 0.0);
    CHECK(tv_distance(std::vector{1.0, 0.0}, std::vector{0.0, 1.0}) == 1.0);
    CHECK(tv_distance(std::vector{0.6, 0.4}, std::vector{0.5, 0.5}) == doctest::Approx(0.1));
    // union of supports, missing entries read as zero
    CHECK(tv_distance(std::vector{1.0}, std::vector{0.5, 0.5}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(tv_distance(std::vector{-0.1, 1.1}, std::vector{0.5, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("tv_distance is a metric on random triples") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto random_pmf = [&](std::size_t n) {
        std::vector<double> p(n);
        double sum = 0.0;
        for (auto& x : p) {
            x = unif(gen);
            sum += x;
        }
        for (auto& x : p) {
            x /= sum;
        }
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_pmf(1 + trial % 6);
        const auto q = random_pmf(1 + (trial / 2) % 6);
        const auto r = random_pmf(1 + (trial / 3) % 6);
        const double pq = tv_distance(p, q);
        CHECK(pq == tv_distance(q, p));
        CHECK(tv_distance(p, p) == 0.0);
        CHECK(pq <= tv_distance(p, r) + tv_distance(r, q) + 1e-15);
        CHECK(pq >= 0.0);
        CHECK(pq <= 1.0 + 1e-15);
    }
}

TEST_CASE("normalize_counts") {
    CHECK(normalize_counts(std::vector<std::uint64_t>{3, 1}) == std::vector{0.75, 0.25});
    CHECK(normalize_counts(std::vector<std::uint64_t>{0, 0, 5}) == std::vector{0.0, 0.0, 1.0});
    CHECK_THROWS_AS(normalize_counts(std::vector<std::uint64_t>{0}), std::invalid_argument);
}
