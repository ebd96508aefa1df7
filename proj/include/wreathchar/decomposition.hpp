#pragma once

#include "wreathchar/tuple.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

namespace wreathchar {

// The degree-p irreducible induced from a non-constant rotation class.
struct InducedChar {
    OrbitRep rep;

    friend bool operator==(const InducedChar&, const InducedChar&) = default;
    friend std::strong_ordering operator<=>(const InducedChar&, const InducedChar&) = default;
};

// The e-th of the p linear characters of the wreath product restricting to
// the constant tuple (c,...,c) on A. The p extensions of a fixed c agree on
// A, so e never influences multiplicities; it only labels distinct keys.
struct LinearExtChar {
    int c = 0;
    int e = 0;

    friend bool operator==(const LinearExtChar&, const LinearExtChar&) = default;
    friend std::strong_ordering operator<=>(const LinearExtChar&, const LinearExtChar&) = default;
};

// Linear extensions come first so the variant stays default-constructible;
// reports list induced constituents ahead of linear ones regardless.
using CharacterId = std::variant<LinearExtChar, InducedChar>;

int degree_of(const CharacterId& id, int p);
std::string character_str(const CharacterId& id);

// Multiset of irreducible constituents with positive multiplicities.
// Invariant: degree_total == p^2 for every product of two degree-p
// irreducibles.
struct Decomposition {
    int p = 0;
    std::map<CharacterId, int> constituents;
    int distinct_count = 0;
    long long degree_total = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// The multiset { rot_i(phi) + rot_j(psi) : 0 <= i,j < p } of p^2 tuples:
// the A-constituents (with multiplicity) of the restriction of phi*psi.
std::vector<Tuple> product_sums(const OrbitRep& phi, const OrbitRep& psi);

// Groups the p^2 sums into irreducible constituents of phi*psi. Each
// non-constant rotation class with exact-tuple count m contributes one
// induced constituent of multiplicity m; each occurring constant (c,...,c)
// contributes the p linear extensions of c, multiplicity 1 each.
Decomposition decompose(const OrbitRep& phi, const OrbitRep& psi);

// distinct_count of decompose(phi, psi), computed without materializing
// constituent keys: rotation classes of the p^2 sums are counted through
// canonical rotation, plus p per distinct occurring constant.
int count_distinct(const OrbitRep& phi, const OrbitRep& psi);

// Intermediates of the p-1 product-count identity for the canonical pair
// phi = (1,0,...,0), psi = (1,1,0,...,0).
struct TheoremReport {
    TheoremReport(int p_in, Tuple phi_in, Tuple psi_in)
        : p(p_in), phi(std::move(phi_in)), psi(std::move(psi_in)) {}

    int p;
    Tuple phi, psi;
    bool phi_irreducible = false, psi_irreducible = false;
    bool phi_faithful = false, psi_faithful = false;
    // rot_i(phi) + psi for i = 0..p-1: one representative sum per shift of
    // phi, with psi held fixed. Every one of the p^2 sums is a rotation of
    // one of these.
    std::vector<Tuple> walkthrough_sums;
    int pre_collapse_distinct_tuples = 0;
    std::pair<int, int> collision{-1, -1};  // indices into walkthrough_sums
    std::vector<OrbitRep> sum_classes;      // classes of the walkthrough sums, in order
    int distinct_constituents = 0;
    Decomposition decomposition;
    bool passed = false;
};

// Builds the canonical pair for p >= 5 and checks: both inputs faithful and
// irreducible-inducing, the p walkthrough sums pairwise distinct as tuples,
// exactly one rotation-class collision (indices 2 and p-1), and exactly
// p-1 distinct constituents. Any check failure throws invariant_error.
TheoremReport verify_theorem(const Prime& p);

namespace detail {

inline constexpr int kMaxFastP = 13;  // largest p whose tuples pack into 63 bits
inline constexpr std::uint64_t kConstantFlag = std::uint64_t{1} << 63;

// Big-endian base-p packing; numeric order on codes equals lexicographic
// order on tuples.
std::uint64_t encode_tuple(const int* entries, int p);
void decode_tuple(std::uint64_t code, int p, int* entries);

// Distinct-constituent count from raw entry arrays; requires p <= kMaxFastP
// and scratch space for p^2 codes. Allocation-free.
int count_distinct_kernel(const int* phi, const int* psi, int p, std::uint64_t* scratch);

} // namespace detail

} // namespace wreathchar
