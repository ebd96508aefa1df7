#pragma once

#include "wreathchar/tuple.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wreathchar {

enum class SearchMode { Exhaustive, Sample };

struct ShardSpec {
    int index = 0;
    int total = 1;

    friend bool operator==(const ShardSpec&, const ShardSpec&) = default;
};

// Which verified symmetries the pair stream quotients by:
//   shift - work at rotation-class level instead of raw faithful tuples
//   scale - simultaneous entrywise scaling by a unit, re-canonicalized
//   swap  - unordered pairs
struct SymmetryFlags {
    bool shift = true;
    bool scale = true;
    bool swap = true;

    friend bool operator==(const SymmetryFlags&, const SymmetryFlags&) = default;
};

struct SearchConfig {
    explicit SearchConfig(const Prime& prime) : p(prime) {}

    Prime p;
    SearchMode mode = SearchMode::Exhaustive;
    long long n_pairs = 0;    // sample mode
    std::uint64_t seed = 0;   // sample mode
    ShardSpec shard;
    SymmetryFlags symmetry;
    int worker_count = 0;     // 0 = hardware concurrency

    friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

struct BoundCheck {
    int min_count_above_one = 0;  // 0 when every observed count is 1 (or none)
    bool satisfied = true;        // 2 * min_count_above_one >= p + 1, vacuously true otherwise

    friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct PairWitness {
    Tuple phi, psi;  // canonical representatives

    friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct SearchReport {
    explicit SearchReport(SearchConfig cfg) : config(std::move(cfg)) {}

    SearchConfig config;
    std::string rng_name;                 // "splitmix64" for sampled runs, "" otherwise
    std::map<int, long long> histogram;   // distinct-constituent count -> frequency
    std::map<int, PairWitness> witnesses; // count -> lexicographically least pair
    BoundCheck bound_check;
    std::vector<int> gap_counts;          // observed counts strictly between (p+1)/2 and p-1
    long long pairs_examined = 0;
    int merged_parts = 1;
    double wall_time_seconds = 0.0;       // excluded from determinism guarantees
    int workers_resolved = 1;             // ditto
};

// All canonical rotation representatives with entry sum nonzero mod p, in
// lexicographic order. There are (p-1) * p^(p-2) of them. Enumeration walks
// all p^p tuples, so p is capped at the oracle-scale primes (p <= 7).
std::vector<OrbitRep> enumerate_faithful_reps(const Prime& p);

// Streams the pairs run_search examines, in deterministic order, honoring
// the config's shard. Each enabled symmetry shrinks the stream to exactly
// one representative per orbit (the lexicographically least pair), so
// every faithful pair is covered exactly once up to enabled symmetries.
// With shift off the elements are raw faithful tuples; otherwise they are
// canonical class representatives.
void reduced_pair_stream(const SearchConfig& cfg,
                         const std::function<void(const Tuple&, const Tuple&)>& yield);

// Computes the distribution of distinct-constituent counts over the pair
// stream (exhaustive) or over seeded uniform faithful pairs (sample).
// Deterministic given the config, independent of worker count.
SearchReport run_search(const SearchConfig& cfg);

// Pointwise histogram sum, lexicographically-least witness per count,
// pairs_examined summed; bound and gap checks recomputed. Parts must agree
// on p, mode, and symmetry flags (shards, and seeds of sampled runs, may
// differ).
SearchReport merge_reports(const std::vector<SearchReport>& parts);

// Smallest observed count above one compared against (p+1)/2, in exact
// integer arithmetic (2 * min >= p + 1); vacuously satisfied when every
// observed count is 1.
BoundCheck compute_bound_check(const std::map<int, long long>& histogram, int p);

// Observed counts strictly inside the open interval ((p+1)/2, p-1).
std::vector<int> compute_gap_counts(const std::map<int, long long>& histogram, int p);

namespace detail {

// splitmix64; sampled pairs draw from an independent stream per pair index
// so that worker layout cannot influence the histogram.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

SplitMix64 pair_stream_rng(std::uint64_t seed, std::uint64_t pair_index);
int uniform_residue(SplitMix64& g, int p);  // unbiased draw from [0, p)
void sample_faithful_entries(SplitMix64& g, int p, int* out);
void sample_nonconstant_entries(SplitMix64& g, int p, int* out);

} // namespace detail

} // namespace wreathchar
