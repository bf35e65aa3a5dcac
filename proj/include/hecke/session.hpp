#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/module.hpp"

namespace hecke {

/// Deterministic RNG (splitmix64); identical sequences on every platform,
/// which is what byte-identical reports require.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

struct SessionConfig {
    ParabolicDatum datum;
    CoefRing ring = CoefRing::integers();
    std::uint64_t seed = 0;
    std::uint64_t orbit_cap = default_orbit_cap;
    int val_bound = 2;

    void validate() const;
    std::string header() const;
};

/// Random word in the level-3 generators of Γ (resp. Γ_M).
GroupElement random_gamma_word(const ParabolicDatum& d, PairTag tag, SplitMix64& rng, int length);

/// Random element of the pair's group with diagonal valuations in
/// [-bound, bound]: block-monomial M-part, bounded-height U-part, and a
/// random Γ-translate on both sides.
GroupElement random_group_element(const ParabolicDatum& d, PairTag tag, SplitMix64& rng, int bound);

/// Random R-combination of `size` Hecke operators T_g (deterministic under
/// the RNG state).
Element random_element(const SessionConfig& cfg, int bound, int size, PairTag tag, SplitMix64& rng);

// ---------------------------------------------------------------------------
// property suites (the acceptance criteria, runnable under any seed)

struct PropertyCase {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<PropertyCase> cases;
    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

struct SuiteParams {
    std::uint64_t seed = 7;
    std::uint64_t orbit_cap = default_orbit_cap;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

} // namespace hecke
