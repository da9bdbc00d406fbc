#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finstoch/random.hpp"

namespace finstoch {

struct SuiteResult
{
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;   // first few failure descriptions, by trial index

    bool passed() const { return failures == 0; }
};

/**
 * One trial: nothing on success, a description of the violation otherwise.
 * The index lets a suite alternate between instance families.
 */
using Trial = std::function<std::optional<std::string>(SplitMix64& rng, std::size_t index)>;

struct SuiteInfo
{
    std::string name;
    std::size_t default_trials;
    std::string summary;
    Trial trial;
};

/** Every named suite, in report order. */
const std::vector<SuiteInfo>& all_suites();

const SuiteInfo* find_suite(const std::string& name);

/**
 * Runs `trials` trials, trial t drawing from SplitMix64::for_trial(seed, t).
 * A thrown exception counts as a failure of that trial.
 */
SuiteResult run_suite(const SuiteInfo& suite, std::uint64_t seed, std::size_t trials);

/** "name: N trials, F failures" followed by the notes, one per line. */
std::string format_result(const SuiteResult& r);

}   // namespace finstoch
