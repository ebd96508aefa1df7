#pragma once

#include "wreathchar/decomposition.hpp"
#include "wreathchar/tuple.hpp"

#include <optional>
#include <vector>

namespace wreathchar {

// Elements of the base group A = C_p^p reuse the residue-vector
// representation of Tuple: entry j is the C_p-coordinate x_j.
using GroupElementA = Tuple;

// Exact element of Z[zeta_p], stored as the coefficient vector of
// 1, zeta, ..., zeta^{p-1}. Canonical form subtracts the minimum
// coefficient from every entry (legal since the p-th roots sum to zero),
// which makes the representation unique: two values are equal iff their
// canonical vectors are equal. All arithmetic is overflow-checked.
class CyclotomicInt {
public:
    CyclotomicInt(const Prime& p, std::vector<long long> coeffs);

    static CyclotomicInt zero(const Prime& p);
    static CyclotomicInt integer(const Prime& p, long long n);
    static CyclotomicInt root_power(const Prime& p, long long k);  // zeta^k

    int p() const { return p_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    std::optional<long long> as_rational_integer() const;
    CyclotomicInt conjugate() const;  // zeta^i -> zeta^{-i}

    friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

    std::string str() const;

private:
    void reduce();

    int p_;
    std::vector<long long> coeffs_;
};

// Value of the linear character named by t at the element a:
// zeta^{sum_j t_j * a_j}.
CyclotomicInt linear_char_value(const Tuple& t, const GroupElementA& a);

// Value on A of the character induced from rep: the sum of the values of
// the p rotations. Induced characters vanish off A, so this is the whole
// character as far as inner products of products of two of them go.
CyclotomicInt induced_value_on_A(const OrbitRep& rep, const GroupElementA& a);

// Brute-force summation over A is priced at p^p elements per inner
// product; the referee only ever needs small p.
inline constexpr int kOracleCap = 7;

// Multiplicity <phi*psi, theta> computed exactly by summing
// phi^P(a) * psi^P(a) * conj(theta(a)) over all a in A and dividing by
// |P| = p^{p+1} (both products vanish off A, so the A-sum is the full
// group sum). Throws invariant_error if the sum is not a nonnegative
// integer multiple of p^{p+1}.
long long inner_product_over_A(const OrbitRep& phi, const OrbitRep& psi,
                               const CharacterId& theta, int cap = kOracleCap);

// Independent referee for decompose(): enumerates every candidate
// constituent visible in product_sums and computes each multiplicity by
// the A-summation above. workers = 0 uses the hardware thread count; the
// sum is partitioned exactly, so the result is independent of worker count.
Decomposition oracle_decompose(const OrbitRep& phi, const OrbitRep& psi,
                               int cap = kOracleCap, int workers = 0);

// Kernel test at the central elements: faithful iff no nontrivial
// z = (x,...,x) has character value equal to the degree p.
bool faithfulness_oracle(const OrbitRep& rep);

} // namespace wreathchar
