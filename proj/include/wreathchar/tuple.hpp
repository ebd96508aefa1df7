#pragma once

#include <compare>
#include <string>
#include <vector>

namespace wreathchar {

// A verified prime modulus p >= 2.
class Prime {
public:
    explicit Prime(int p);

    int value() const { return p_; }

    static bool is_prime(int n);

    friend bool operator==(const Prime&, const Prime&) = default;
    friend std::strong_ordering operator<=>(const Prime&, const Prime&) = default;

private:
    int p_;
};

// Length-p vector of residues mod p. Entry j is the exponent of the fixed
// non-principal character of C_p in coordinate j, so a tuple names one
// linear character of the base group A = C_p^p.
class Tuple {
public:
    Tuple(const Prime& p, std::vector<int> entries);

    // Parses "1,0,0,0,0"; p is the entry count and must be prime.
    static Tuple parse(const std::string& text);
    static Tuple zero(const Prime& p);
    static Tuple constant(const Prime& p, int c);

    int p() const { return p_; }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

    int sum_mod_p() const;
    bool is_constant() const;
    std::string str() const;  // comma-separated residues

    friend bool operator==(const Tuple&, const Tuple&) = default;
    friend std::strong_ordering operator<=>(const Tuple&, const Tuple&) = default;

private:
    int p_;
    std::vector<int> entries_;
};

// A tuple that is lexicographically minimal among its p cyclic rotations:
// the canonical representative of its rotation class. Rotation classes are
// exactly the conjugacy classes of characters of A under the acting C_p,
// so one OrbitRep names one induced character of the wreath product.
class OrbitRep {
public:
    explicit OrbitRep(const Tuple& t);  // canonicalizes

    const Tuple& tuple() const { return tuple_; }
    int p() const { return tuple_.p(); }
    bool is_constant() const { return tuple_.is_constant(); }

    friend bool operator==(const OrbitRep&, const OrbitRep&) = default;
    friend std::strong_ordering operator<=>(const OrbitRep&, const OrbitRep&) = default;

private:
    Tuple tuple_;
};

// Lexicographically least rotation; O(p).
OrbitRep canonical_rotation(const Tuple& t);

// Rotation by `shift` positions: entry j of the result is entry
// (j - shift) mod p of the input, so rotated((1,0,0), 1) = (0,1,0).
Tuple rotated(const Tuple& t, int shift);

// The p rotations in shift order, starting with t itself. These are the
// A-constituents of the restriction to A of the character induced by t.
std::vector<Tuple> rotations(const Tuple& t);

// True iff t is non-constant, i.e. iff t induces irreducibly.
bool is_irreducible_inducing(const Tuple& t);

// True iff the entry sum is nonzero mod p, i.e. iff the induced character
// is faithful. Requires a non-constant tuple (test irreducibility first).
bool is_faithful_inducing(const Tuple& t);

// Entrywise sum mod p: the product of the two linear characters of A.
Tuple add(const Tuple& a, const Tuple& b);

// Entrywise multiplication by the unit k mod p.
Tuple scale(const Tuple& t, int k);

namespace detail {

// Start index of the lexicographically least rotation. `doubled` must hold
// the sequence twice (doubled[i + n] == doubled[i]); runs in O(n) via the
// two-candidate scan. Returns a value in [0, n).
int least_rotation_index(const int* doubled, int n);

} // namespace detail

} // namespace wreathchar
