#include "wreathchar/search.hpp"

#include "wreathchar/decomposition.hpp"
#include "wreathchar/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

namespace wreathchar {

namespace detail {

SplitMix64 pair_stream_rng(std::uint64_t seed, std::uint64_t pair_index) {
    return SplitMix64(seed + 0x9E3779B97F4A7C15ULL * (pair_index + 1));
}

int uniform_residue(SplitMix64& g, int p) {
    const std::uint64_t m = static_cast<std::uint64_t>(p);
    const std::uint64_t r = (std::numeric_limits<std::uint64_t>::max() % m + 1) % m;
    for (;;) {
        std::uint64_t x = g.next();
        if (r == 0 || x <= std::numeric_limits<std::uint64_t>::max() - r) {
            return static_cast<int>(x % m);
        }
    }
}

void sample_faithful_entries(SplitMix64& g, int p, int* out) {
    for (;;) {
        int sum = 0;
        for (int i = 0; i < p; ++i) {
            out[i] = uniform_residue(g, p);
            sum += out[i];
        }
        if (sum % p != 0) return;
    }
}

void sample_nonconstant_entries(SplitMix64& g, int p, int* out) {
    for (;;) {
        bool constant = true;
        for (int i = 0; i < p; ++i) {
            out[i] = uniform_residue(g, p);
            constant &= (out[i] == out[0]);
        }
        if (!constant) return;
    }
}

} // namespace detail

namespace {

using detail::kMaxFastP;
using detail::SplitMix64;

constexpr int kEnumerationCap = 7;  // enumeration walks all p^p tuples

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Walks all p^p tuples in lexicographic order and keeps those with entry
// sum nonzero mod p; canonical_only additionally keeps only least
// rotations. Codes come out sorted ascending.
std::vector<std::uint64_t> enumerate_faithful_codes(int p, bool canonical_only) {
    if (p > kEnumerationCap) {
        throw budget_error("faithful enumeration walks p^p tuples; p <= " +
                           std::to_string(kEnumerationCap) + " supported, got " +
                           std::to_string(p));
    }
    std::vector<std::uint64_t> codes;
    std::vector<int> t(static_cast<size_t>(2 * p), 0);  // doubled for rotation scan
    for (;;) {
        int sum = 0;
        for (int i = 0; i < p; ++i) sum += t[static_cast<size_t>(i)];
        if (sum % p != 0 &&
            (!canonical_only || detail::least_rotation_index(t.data(), p) == 0)) {
            codes.push_back(detail::encode_tuple(t.data(), p));
        }
        int j = p - 1;
        while (j >= 0 && t[static_cast<size_t>(j)] == p - 1) {
            t[static_cast<size_t>(j)] = t[static_cast<size_t>(j + p)] = 0;
            --j;
        }
        if (j < 0) break;
        ++t[static_cast<size_t>(j)];
        t[static_cast<size_t>(j + p)] = t[static_cast<size_t>(j)];
    }
    return codes;
}

std::uint64_t canonical_code(const int* entries, int p) {
    int doubled[2 * kMaxFastP];
    for (int i = 0; i < p; ++i) doubled[i] = doubled[i + p] = entries[i];
    int r = detail::least_rotation_index(doubled, p);
    return detail::encode_tuple(doubled + r, p);
}

// The element set the pair stream ranges over (faithful rotation-class
// representatives, or raw faithful tuples with shift reduction off), with
// precomputed scale-action tables when scale reduction is on.
struct Domain {
    int p = 0;
    bool class_level = true;
    std::vector<std::uint64_t> codes;               // ascending
    std::vector<int> entries;                       // codes decoded, p per element
    std::vector<std::uint64_t> canon_codes;         // canonical code per element
    std::vector<std::vector<std::int32_t>> scale_maps;  // k = 2..p-1 -> image ids
    std::vector<std::int32_t> firsts;               // first-component candidates
};

Domain build_domain(int p, const SymmetryFlags& sym) {
    Domain d;
    d.p = p;
    d.class_level = sym.shift;
    d.codes = enumerate_faithful_codes(p, d.class_level);
    const size_t n = d.codes.size();

    d.entries.resize(n * static_cast<size_t>(p));
    d.canon_codes.resize(n);
    for (size_t i = 0; i < n; ++i) {
        int* e = d.entries.data() + i * static_cast<size_t>(p);
        detail::decode_tuple(d.codes[i], p, e);
        d.canon_codes[i] = d.class_level ? d.codes[i] : canonical_code(e, p);
    }

    if (sym.scale) {
        d.scale_maps.assign(static_cast<size_t>(std::max(0, p - 2)),
                            std::vector<std::int32_t>(n));
        int scaled[2 * kMaxFastP];
        for (int k = 2; k < p; ++k) {
            auto& map = d.scale_maps[static_cast<size_t>(k - 2)];
            for (size_t i = 0; i < n; ++i) {
                const int* e = d.entries.data() + i * static_cast<size_t>(p);
                for (int j = 0; j < p; ++j) scaled[j] = scaled[j + p] = (e[j] * k) % p;
                std::uint64_t code;
                if (d.class_level) {
                    int r = detail::least_rotation_index(scaled, p);
                    code = detail::encode_tuple(scaled + r, p);
                } else {
                    code = detail::encode_tuple(scaled, p);
                }
                auto it = std::lower_bound(d.codes.begin(), d.codes.end(), code);
                map[i] = static_cast<std::int32_t>(it - d.codes.begin());
            }
        }
    }

    if (sym.scale) {
        for (size_t i = 0; i < n; ++i) {
            bool minimal = true;
            for (const auto& map : d.scale_maps) {
                if (map[i] < static_cast<std::int32_t>(i)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) d.firsts.push_back(static_cast<std::int32_t>(i));
        }
    } else {
        d.firsts.resize(n);
        for (size_t i = 0; i < n; ++i) d.firsts[i] = static_cast<std::int32_t>(i);
    }
    return d;
}

inline std::uint64_t pair_key(std::int32_t a, std::int32_t b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(b));
}

// True iff (a, b) is the lexicographically least ordered pair in its orbit
// under the enabled symmetries, i.e. the unique stream representative.
inline bool is_orbit_min(const Domain& d, const SymmetryFlags& sym, std::int32_t a,
                         std::int32_t b) {
    const std::uint64_t self = pair_key(a, b);
    if (sym.swap && pair_key(b, a) < self) return false;
    for (const auto& map : d.scale_maps) {
        const std::int32_t ma = map[static_cast<size_t>(a)];
        const std::int32_t mb = map[static_cast<size_t>(b)];
        if (pair_key(ma, mb) < self) return false;
        if (sym.swap && pair_key(mb, ma) < self) return false;
    }
    return true;
}

void validate_shard(const ShardSpec& shard) {
    if (shard.total < 1 || shard.index < 0 || shard.index >= shard.total) {
        throw std::invalid_argument("invalid shard " + std::to_string(shard.index) + "/" +
                                    std::to_string(shard.total));
    }
}

// Per-count accumulation with lexicographically-least witness tracking.
struct Accumulator {
    std::vector<long long> hist;
    std::vector<std::uint64_t> wit_phi, wit_psi;
    long long pairs = 0;

    explicit Accumulator(int p)
        : hist(static_cast<size_t>(p) * p + 1, 0),
          wit_phi(hist.size(), std::numeric_limits<std::uint64_t>::max()),
          wit_psi(hist.size(), std::numeric_limits<std::uint64_t>::max()) {}

    void record(int count, std::uint64_t phi_code, std::uint64_t psi_code) {
        ++pairs;
        ++hist[static_cast<size_t>(count)];
        auto& wp = wit_phi[static_cast<size_t>(count)];
        auto& wq = wit_psi[static_cast<size_t>(count)];
        if (phi_code < wp || (phi_code == wp && psi_code < wq)) {
            wp = phi_code;
            wq = psi_code;
        }
    }

    void merge(const Accumulator& other) {
        pairs += other.pairs;
        for (size_t c = 0; c < hist.size(); ++c) {
            hist[c] += other.hist[c];
            const std::uint64_t op = other.wit_phi[c], oq = other.wit_psi[c];
            if (op < wit_phi[c] || (op == wit_phi[c] && oq < wit_psi[c])) {
                wit_phi[c] = op;
                wit_psi[c] = oq;
            }
        }
    }
};

void finalize_report(SearchReport& report, const Accumulator& acc) {
    const int p = report.config.p.value();
    const Prime prime(p);
    for (size_t c = 0; c < acc.hist.size(); ++c) {
        if (acc.hist[c] == 0) continue;
        report.histogram[static_cast<int>(c)] = acc.hist[c];
        std::vector<int> e(static_cast<size_t>(p));
        detail::decode_tuple(acc.wit_phi[c], p, e.data());
        Tuple phi(prime, e);
        detail::decode_tuple(acc.wit_psi[c], p, e.data());
        Tuple psi(prime, std::move(e));
        report.witnesses.emplace(static_cast<int>(c), PairWitness{std::move(phi), std::move(psi)});
    }
    report.pairs_examined = acc.pairs;
}

void compute_checks(SearchReport& report) {
    const int p = report.config.p.value();
    report.bound_check = compute_bound_check(report.histogram, p);
    report.gap_counts = compute_gap_counts(report.histogram, p);
}

void verify_witnesses(const SearchReport& report) {
    for (const auto& [count, witness] : report.witnesses) {
        const int seen = count_distinct(OrbitRep(witness.phi), OrbitRep(witness.psi));
        if (seen != count) {
            throw invariant_error("witness (" + witness.phi.str() + "; " + witness.psi.str() +
                                  ") re-verifies to " + std::to_string(seen) + ", recorded " +
                                  std::to_string(count));
        }
    }
}

void validate_config(const SearchConfig& cfg) {
    validate_shard(cfg.shard);
    const int p = cfg.p.value();
    if (cfg.mode == SearchMode::Exhaustive) {
        if (p > kEnumerationCap) {
            throw budget_error("exhaustive search budget allows p <= " +
                               std::to_string(kEnumerationCap) + ", got " + std::to_string(p));
        }
    } else {
        if (cfg.n_pairs < 1) {
            throw std::invalid_argument("sample mode requires n_pairs >= 1");
        }
        if (p > kMaxFastP) {
            throw std::invalid_argument("sampled search supports p <= " +
                                        std::to_string(kMaxFastP));
        }
    }
}

void run_exhaustive(const SearchConfig& cfg, SearchReport& report, int workers) {
    const int p = cfg.p.value();
    const Domain domain = build_domain(p, cfg.symmetry);
    const size_t n = domain.codes.size();
    const size_t nfirst = domain.firsts.size();

    const long long candidates = static_cast<long long>(nfirst) * static_cast<long long>(n);
    if (candidates > 1'000'000'000LL) {
        std::fprintf(stderr,
                     "warning: exhaustive stream upper bound %lld pairs exceeds 1e9; "
                     "consider sharding\n",
                     candidates);
    }

    // Sharding filters on the global yield index, so shards beyond the
    // first need per-row yield counts up front.
    std::vector<long long> row_start(nfirst, 0);
    if (cfg.shard.total > 1) {
        std::vector<long long> row_count(nfirst, 0);
        std::atomic<size_t> next{0};
        auto count_rows = [&] {
            for (;;) {
                const size_t row = next.fetch_add(1);
                if (row >= nfirst) return;
                const std::int32_t a = domain.firsts[row];
                long long cnt = 0;
                for (size_t b = 0; b < n; ++b) {
                    cnt += is_orbit_min(domain, cfg.symmetry, a, static_cast<std::int32_t>(b));
                }
                row_count[row] = cnt;
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(count_rows);
        count_rows();
        for (auto& th : pool) th.join();
        long long run = 0;
        for (size_t row = 0; row < nfirst; ++row) {
            row_start[row] = run;
            run += row_count[row];
        }
    }

    std::vector<Accumulator> partial(static_cast<size_t>(workers), Accumulator(p));
    std::atomic<size_t> next{0};
    auto process_rows = [&](int w) {
        Accumulator& acc = partial[static_cast<size_t>(w)];
        std::uint64_t scratch[kMaxFastP * kMaxFastP];
        for (;;) {
            const size_t row = next.fetch_add(1);
            if (row >= nfirst) return;
            const std::int32_t a = domain.firsts[row];
            const int* ea = domain.entries.data() +
                            static_cast<size_t>(a) * static_cast<size_t>(p);
            long long ydx = row_start[row];
            for (size_t b = 0; b < n; ++b) {
                if (!is_orbit_min(domain, cfg.symmetry, a, static_cast<std::int32_t>(b))) {
                    continue;
                }
                const bool mine =
                    cfg.shard.total == 1 || (ydx % cfg.shard.total) == cfg.shard.index;
                ++ydx;
                if (!mine) continue;
                const int* eb = domain.entries.data() + b * static_cast<size_t>(p);
                const int count = detail::count_distinct_kernel(ea, eb, p, scratch);
                acc.record(count, domain.canon_codes[static_cast<size_t>(a)],
                           domain.canon_codes[b]);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(process_rows, w);
    process_rows(0);
    for (auto& th : pool) th.join();

    for (int w = 1; w < workers; ++w) partial[0].merge(partial[static_cast<size_t>(w)]);
    finalize_report(report, partial[0]);
}

void run_sample(const SearchConfig& cfg, SearchReport& report, int workers) {
    const int p = cfg.p.value();
    const long long n = cfg.n_pairs;
    report.rng_name = "splitmix64";

    std::vector<Accumulator> partial(static_cast<size_t>(workers), Accumulator(p));
    auto process_range = [&](int w, long long begin, long long end) {
        Accumulator& acc = partial[static_cast<size_t>(w)];
        int phi[kMaxFastP], psi[kMaxFastP];
        std::uint64_t scratch[kMaxFastP * kMaxFastP];
        for (long long i = begin; i < end; ++i) {
            if (cfg.shard.total > 1 && (i % cfg.shard.total) != cfg.shard.index) continue;
            SplitMix64 rng = detail::pair_stream_rng(cfg.seed, static_cast<std::uint64_t>(i));
            detail::sample_faithful_entries(rng, p, phi);
            detail::sample_faithful_entries(rng, p, psi);
            const int count = detail::count_distinct_kernel(phi, psi, p, scratch);
            acc.record(count, canonical_code(phi, p), canonical_code(psi, p));
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(process_range, w, n * w / workers, n * (w + 1) / workers);
    }
    process_range(0, 0, n / workers);
    for (auto& th : pool) th.join();

    for (int w = 1; w < workers; ++w) partial[0].merge(partial[static_cast<size_t>(w)]);
    finalize_report(report, partial[0]);
}

} // namespace

std::vector<OrbitRep> enumerate_faithful_reps(const Prime& p) {
    const auto codes = enumerate_faithful_codes(p.value(), true);
    std::vector<OrbitRep> reps;
    reps.reserve(codes.size());
    std::vector<int> e(static_cast<size_t>(p.value()));
    for (std::uint64_t code : codes) {
        detail::decode_tuple(code, p.value(), e.data());
        reps.emplace_back(Tuple(p, e));
    }
    return reps;
}

void reduced_pair_stream(const SearchConfig& cfg,
                         const std::function<void(const Tuple&, const Tuple&)>& yield) {
    validate_shard(cfg.shard);
    const int p = cfg.p.value();
    const Domain domain = build_domain(p, cfg.symmetry);
    const Prime prime(p);
    std::vector<int> e(static_cast<size_t>(p));
    long long ydx = 0;
    for (const std::int32_t a : domain.firsts) {
        for (size_t b = 0; b < domain.codes.size(); ++b) {
            if (!is_orbit_min(domain, cfg.symmetry, a, static_cast<std::int32_t>(b))) continue;
            const bool mine = (ydx % cfg.shard.total) == cfg.shard.index;
            ++ydx;
            if (!mine) continue;
            detail::decode_tuple(domain.codes[static_cast<size_t>(a)], p, e.data());
            Tuple phi(prime, e);
            detail::decode_tuple(domain.codes[b], p, e.data());
            Tuple psi(prime, e);
            yield(phi, psi);
        }
    }
}

SearchReport run_search(const SearchConfig& cfg) {
    validate_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    SearchReport report(cfg);
    const int workers = resolve_workers(cfg.worker_count);
    report.workers_resolved = workers;

    if (cfg.mode == SearchMode::Sample) {
        run_sample(cfg, report, workers);
    } else {
        run_exhaustive(cfg, report, workers);
    }

    compute_checks(report);
    verify_witnesses(report);
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

BoundCheck compute_bound_check(const std::map<int, long long>& histogram, int p) {
    BoundCheck check;
    for (const auto& [count, freq] : histogram) {
        if (count > 1) {
            check.min_count_above_one = count;
            break;
        }
    }
    check.satisfied =
        (check.min_count_above_one == 0) || (2 * check.min_count_above_one >= p + 1);
    return check;
}

std::vector<int> compute_gap_counts(const std::map<int, long long>& histogram, int p) {
    std::vector<int> gaps;
    for (const auto& [count, freq] : histogram) {
        if (2 * count > p + 1 && count < p - 1) gaps.push_back(count);
    }
    return gaps;
}

SearchReport merge_reports(const std::vector<SearchReport>& parts) {
    if (parts.empty()) {
        throw std::invalid_argument("merge_reports requires at least one part");
    }
    const SearchConfig& base = parts.front().config;
    for (const SearchReport& part : parts) {
        const SearchConfig& c = part.config;
        if (c.p != base.p || c.mode != base.mode || !(c.symmetry == base.symmetry)) {
            throw std::invalid_argument("cannot merge reports with differing p, mode, or "
                                        "symmetry flags");
        }
    }

    SearchReport merged(base);
    merged.config.shard = ShardSpec{0, 1};
    merged.rng_name = parts.front().rng_name;
    merged.merged_parts = 0;
    double wall = 0.0;
    int workers = 1;
    for (const SearchReport& part : parts) {
        for (const auto& [count, freq] : part.histogram) merged.histogram[count] += freq;
        for (const auto& [count, witness] : part.witnesses) {
            auto it = merged.witnesses.find(count);
            if (it == merged.witnesses.end()) {
                merged.witnesses.emplace(count, witness);
            } else if (std::pair(witness.phi, witness.psi) <
                       std::pair(it->second.phi, it->second.psi)) {
                it->second = witness;
            }
        }
        merged.pairs_examined += part.pairs_examined;
        merged.merged_parts += part.merged_parts;
        wall += part.wall_time_seconds;
        workers = std::max(workers, part.workers_resolved);
    }
    merged.wall_time_seconds = wall;
    merged.workers_resolved = workers;
    compute_checks(merged);
    verify_witnesses(merged);
    return merged;
}

} // namespace wreathchar
