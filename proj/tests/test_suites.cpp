#include "helpers.hpp"

#include <set>

#include "finstoch/random.hpp"
#include "finstoch/suites.hpp"

using namespace finstoch;

TEST_CASE("SplitMix64 reference values")
{
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("trial streams are reproducible and distinct")
{
    SplitMix64 a = SplitMix64::for_trial(7, 3);
    SplitMix64 b = SplitMix64::for_trial(7, 3);
    SplitMix64 c = SplitMix64::for_trial(7, 4);
    const auto first = a.next();
    CHECK(first == b.next());
    CHECK(first != c.next());
}

TEST_CASE("random weights are exact distributions")
{
    SplitMix64 rng(42);
    for (int i = 0; i < 50; ++i)
    {
        const VectorXr w = random_weights(rng, 1 + i % 5);
        CHECK(w.sum() == 1);
        CHECK(w.minCoeff() >= 0);
    }
}

TEST_CASE("suite names are unique and quick suites pass")
{
    std::set<std::string> names;
    for (const auto& s : all_suites())
        CHECK(names.insert(s.name).second);
    for (const auto& s : all_suites())
    {
        const SuiteResult r = run_suite(s, 1, 10);
        INFO(format_result(r));
        CHECK(r.passed());
    }
}

TEST_CASE("reports are deterministic")
{
    const SuiteInfo* s = find_suite("conditional");
    REQUIRE(s);
    CHECK(format_result(run_suite(*s, 5, 20)) == format_result(run_suite(*s, 5, 20)));
    CHECK(format_result(run_suite(*s, 5, 20)) == "conditional: 20 trials, 0 failures\n");
    CHECK_FALSE(find_suite("nope"));
}
