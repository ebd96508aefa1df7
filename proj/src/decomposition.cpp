#include "wreathchar/decomposition.hpp"

#include "wreathchar/errors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wreathchar {

int degree_of(const CharacterId& id, int p) {
    return std::holds_alternative<InducedChar>(id) ? p : 1;
}

std::string character_str(const CharacterId& id) {
    if (const auto* ind = std::get_if<InducedChar>(&id)) {
        return "induced(" + ind->rep.tuple().str() + ")";
    }
    const auto& lin = std::get<LinearExtChar>(id);
    return "linear(c=" + std::to_string(lin.c) + ",e=" + std::to_string(lin.e) + ")";
}

namespace {

void check_product_inputs(const OrbitRep& phi, const OrbitRep& psi) {
    if (phi.p() != psi.p()) {
        throw std::invalid_argument("mismatched p: " + std::to_string(phi.p()) + " vs " +
                                    std::to_string(psi.p()));
    }
    if (phi.is_constant() || psi.is_constant()) {
        throw std::invalid_argument("constant tuple does not induce irreducibly: " +
                                    (phi.is_constant() ? phi : psi).tuple().str());
    }
}

} // namespace

std::vector<Tuple> product_sums(const OrbitRep& phi, const OrbitRep& psi) {
    check_product_inputs(phi, psi);
    const int p = phi.p();
    std::vector<Tuple> sums;
    sums.reserve(static_cast<size_t>(p) * static_cast<size_t>(p));
    const auto phi_rots = rotations(phi.tuple());
    const auto psi_rots = rotations(psi.tuple());
    for (const Tuple& a : phi_rots) {
        for (const Tuple& b : psi_rots) {
            sums.push_back(add(a, b));
        }
    }
    return sums;
}

Decomposition decompose(const OrbitRep& phi, const OrbitRep& psi) {
    check_product_inputs(phi, psi);
    const int p = phi.p();

    std::map<Tuple, int> exact_counts;
    for (const Tuple& s : product_sums(phi, psi)) {
        ++exact_counts[s];
    }

    // Group exact tuples into rotation classes, checking that every member
    // of a class occurs equally often (the sum multiset is rotation
    // invariant, so unequal counts would be a defect).
    struct ClassInfo {
        int multiplicity = 0;
        int members_seen = 0;
    };
    std::map<Tuple, ClassInfo> classes;    // canonical non-constant tuple -> info
    std::map<int, int> constant_counts;    // c -> exact count of (c,...,c)

    for (const auto& [t, m] : exact_counts) {
        if (t.is_constant()) {
            constant_counts[t[0]] = m;
            continue;
        }
        Tuple canon = canonical_rotation(t).tuple();
        auto [it, inserted] = classes.try_emplace(std::move(canon), ClassInfo{m, 1});
        if (!inserted) {
            if (it->second.multiplicity != m) {
                throw invariant_error("exact-tuple count differs within rotation class of " +
                                      it->first.str());
            }
            ++it->second.members_seen;
        }
    }

    Decomposition result;
    result.p = p;
    for (const auto& [canon, info] : classes) {
        if (info.members_seen != p) {
            throw invariant_error("rotation class of " + canon.str() + " has " +
                                  std::to_string(info.members_seen) + " members among sums, expected " +
                                  std::to_string(p));
        }
        result.constituents.emplace(InducedChar{OrbitRep(canon)}, info.multiplicity);
    }
    for (const auto& [c, m] : constant_counts) {
        if (m != p) {
            throw invariant_error("constant (" + std::to_string(c) + ",...) occurs " +
                                  std::to_string(m) + " times among sums, expected " +
                                  std::to_string(p));
        }
        for (int e = 0; e < p; ++e) {
            result.constituents.emplace(LinearExtChar{c, e}, 1);
        }
    }

    result.distinct_count = static_cast<int>(result.constituents.size());
    long long total = 0;
    for (const auto& [id, mult] : result.constituents) {
        total += static_cast<long long>(mult) * degree_of(id, p);
    }
    result.degree_total = total;
    if (total != static_cast<long long>(p) * p) {
        throw invariant_error("degree total " + std::to_string(total) + " != p^2 for phi=" +
                              phi.tuple().str() + " psi=" + psi.tuple().str());
    }
    return result;
}

namespace detail {

std::uint64_t encode_tuple(const int* entries, int p) {
    std::uint64_t code = 0;
    for (int i = 0; i < p; ++i) code = code * static_cast<std::uint64_t>(p) + entries[i];
    return code;
}

void decode_tuple(std::uint64_t code, int p, int* entries) {
    for (int i = p - 1; i >= 0; --i) {
        entries[i] = static_cast<int>(code % p);
        code /= static_cast<std::uint64_t>(p);
    }
}

int count_distinct_kernel(const int* phi, const int* psi, int p, std::uint64_t* scratch) {
    int phi2[2 * kMaxFastP], psi2[2 * kMaxFastP], sum[2 * kMaxFastP];
    for (int i = 0; i < p; ++i) {
        phi2[i] = phi2[i + p] = phi[i];
        psi2[i] = psi2[i + p] = psi[i];
    }
    int n = 0;
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
            bool constant = true;
            for (int t = 0; t < p; ++t) {
                int v = phi2[a + t] + psi2[b + t];
                if (v >= p) v -= p;
                sum[t] = sum[t + p] = v;
                constant &= (v == sum[0]);
            }
            std::uint64_t code;
            if (constant) {
                code = kConstantFlag | static_cast<std::uint64_t>(sum[0]);
            } else {
                int r = least_rotation_index(sum, p);
                code = encode_tuple(sum + r, p);
            }
            scratch[n++] = code;
        }
    }
    std::sort(scratch, scratch + n);
    int distinct = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && scratch[i] == scratch[i - 1]) continue;
        distinct += (scratch[i] & kConstantFlag) ? p : 1;
    }
    return distinct;
}

} // namespace detail

int count_distinct(const OrbitRep& phi, const OrbitRep& psi) {
    check_product_inputs(phi, psi);
    const int p = phi.p();
    if (p <= detail::kMaxFastP) {
        std::array<int, detail::kMaxFastP> a{}, b{};
        for (int i = 0; i < p; ++i) {
            a[static_cast<size_t>(i)] = phi.tuple()[i];
            b[static_cast<size_t>(i)] = psi.tuple()[i];
        }
        std::array<std::uint64_t, detail::kMaxFastP * detail::kMaxFastP> scratch;
        return detail::count_distinct_kernel(a.data(), b.data(), p, scratch.data());
    }
    return decompose(phi, psi).distinct_count;
}

TheoremReport verify_theorem(const Prime& prime) {
    const int p = prime.value();
    if (p < 5) {
        throw std::invalid_argument("verify-theorem requires p >= 5, got " + std::to_string(p));
    }

    std::vector<int> phi_entries(static_cast<size_t>(p), 0);
    phi_entries[0] = 1;
    std::vector<int> psi_entries(static_cast<size_t>(p), 0);
    psi_entries[0] = psi_entries[1] = 1;
    Tuple phi(prime, std::move(phi_entries));
    Tuple psi(prime, std::move(psi_entries));

    TheoremReport report(p, phi, psi);
    report.phi_irreducible = is_irreducible_inducing(phi);
    report.psi_irreducible = is_irreducible_inducing(psi);
    report.phi_faithful = is_faithful_inducing(phi);
    report.psi_faithful = is_faithful_inducing(psi);
    if (!report.phi_irreducible || !report.psi_irreducible ||
        !report.phi_faithful || !report.psi_faithful) {
        throw invariant_error("canonical pair failed the faithful/irreducible checks at p = " +
                              std::to_string(p));
    }

    // One representative sum per shift of phi with psi held fixed; every
    // one of the p^2 sums is a rotation of one of these.
    for (int i = 0; i < p; ++i) {
        report.walkthrough_sums.push_back(add(rotated(phi, i), psi));
    }

    std::vector<Tuple> sorted = report.walkthrough_sums;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw invariant_error("walkthrough sums are not pairwise distinct at p = " +
                              std::to_string(p));
    }
    report.pre_collapse_distinct_tuples = p;

    for (const Tuple& s : report.walkthrough_sums) {
        report.sum_classes.push_back(canonical_rotation(s));
    }
    int collisions = 0;
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            if (report.sum_classes[static_cast<size_t>(i)] ==
                report.sum_classes[static_cast<size_t>(j)]) {
                ++collisions;
                report.collision = {i, j};
            }
        }
    }
    if (collisions != 1 || report.collision != std::pair<int, int>{2, p - 1}) {
        throw invariant_error("expected exactly one class collision at indices (2, p-1), found " +
                              std::to_string(collisions));
    }

    OrbitRep phi_rep(phi), psi_rep(psi);
    report.decomposition = decompose(phi_rep, psi_rep);
    report.distinct_constituents = report.decomposition.distinct_count;
    if (report.distinct_constituents != p - 1) {
        throw invariant_error("expected p-1 = " + std::to_string(p - 1) +
                              " distinct constituents, got " +
                              std::to_string(report.distinct_constituents));
    }
    if (count_distinct(phi_rep, psi_rep) != p - 1) {
        throw invariant_error("count_distinct disagrees with decompose at p = " + std::to_string(p));
    }

    // Every constituent must be induced (the sums have entry total 3 mod p,
    // never 0, so no constants can arise for p >= 5), with the collided
    // class appearing twice and all others once.
    for (const auto& [id, mult] : report.decomposition.constituents) {
        const auto* ind = std::get_if<InducedChar>(&id);
        if (ind == nullptr) {
            throw invariant_error("unexpected linear constituent in canonical-pair product");
        }
        const bool collided = ind->rep == report.sum_classes[2];
        if (mult != (collided ? 2 : 1)) {
            throw invariant_error("unexpected multiplicity " + std::to_string(mult) + " for " +
                                  character_str(id));
        }
    }

    report.passed = true;
    return report;
}

} // namespace wreathchar
