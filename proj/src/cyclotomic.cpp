#include "wreathchar/cyclotomic.hpp"

#include "wreathchar/errors.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <thread>

namespace wreathchar {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("cyclotomic coefficient overflow in addition");
    }
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("cyclotomic coefficient overflow in subtraction");
    }
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("cyclotomic coefficient overflow in multiplication");
    }
    return r;
}

} // namespace

CyclotomicInt::CyclotomicInt(const Prime& p, std::vector<long long> coeffs)
    : p_(p.value()), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != p_) {
        throw std::invalid_argument("coefficient vector length must equal p");
    }
    reduce();
}

void CyclotomicInt::reduce() {
    long long m = *std::min_element(coeffs_.begin(), coeffs_.end());
    if (m != 0) {
        for (long long& c : coeffs_) c = checked_sub(c, m);
    }
}

CyclotomicInt CyclotomicInt::zero(const Prime& p) {
    return CyclotomicInt(p, std::vector<long long>(static_cast<size_t>(p.value()), 0));
}

CyclotomicInt CyclotomicInt::integer(const Prime& p, long long n) {
    std::vector<long long> c(static_cast<size_t>(p.value()), 0);
    c[0] = n;
    return CyclotomicInt(p, std::move(c));
}

CyclotomicInt CyclotomicInt::root_power(const Prime& p, long long k) {
    long long e = k % p.value();
    if (e < 0) e += p.value();
    std::vector<long long> c(static_cast<size_t>(p.value()), 0);
    c[static_cast<size_t>(e)] = 1;
    return CyclotomicInt(p, std::move(c));
}

bool CyclotomicInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

std::optional<long long> CyclotomicInt::as_rational_integer() const {
    // In canonical form n >= 0 is (n, 0, ..., 0) and n < 0 is (0, -n, ..., -n),
    // so rational integers are exactly the vectors constant past index 0.
    for (int i = 2; i < p_; ++i) {
        if (coeffs_[static_cast<size_t>(i)] != coeffs_[1]) return std::nullopt;
    }
    return checked_sub(coeffs_[0], coeffs_[1]);
}

CyclotomicInt CyclotomicInt::conjugate() const {
    std::vector<long long> c(static_cast<size_t>(p_));
    for (int i = 0; i < p_; ++i) {
        c[static_cast<size_t>((p_ - i) % p_)] = coeffs_[static_cast<size_t>(i)];
    }
    return CyclotomicInt(Prime(p_), std::move(c));
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mismatched p in cyclotomic addition");
    std::vector<long long> c(static_cast<size_t>(a.p_));
    for (int i = 0; i < a.p_; ++i) {
        c[static_cast<size_t>(i)] =
            checked_add(a.coeffs_[static_cast<size_t>(i)], b.coeffs_[static_cast<size_t>(i)]);
    }
    return CyclotomicInt(Prime(a.p_), std::move(c));
}

CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mismatched p in cyclotomic subtraction");
    std::vector<long long> c(static_cast<size_t>(a.p_));
    for (int i = 0; i < a.p_; ++i) {
        c[static_cast<size_t>(i)] =
            checked_sub(a.coeffs_[static_cast<size_t>(i)], b.coeffs_[static_cast<size_t>(i)]);
    }
    return CyclotomicInt(Prime(a.p_), std::move(c));
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mismatched p in cyclotomic multiplication");
    const int p = a.p_;
    std::vector<long long> c(static_cast<size_t>(p), 0);
    for (int i = 0; i < p; ++i) {
        long long ai = a.coeffs_[static_cast<size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; j < p; ++j) {
            long long bj = b.coeffs_[static_cast<size_t>(j)];
            if (bj == 0) continue;
            size_t k = static_cast<size_t>((i + j) % p);
            c[k] = checked_add(c[k], checked_mul(ai, bj));
        }
    }
    return CyclotomicInt(Prime(p), std::move(c));
}

std::string CyclotomicInt::str() const {
    std::string out = "[";
    for (int i = 0; i < p_; ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[static_cast<size_t>(i)]);
    }
    return out + "]";
}

CyclotomicInt linear_char_value(const Tuple& t, const GroupElementA& a) {
    if (t.p() != a.p()) throw std::invalid_argument("mismatched p in character evaluation");
    const int p = t.p();
    long long e = 0;
    for (int j = 0; j < p; ++j) e += static_cast<long long>(t[j]) * a[j];
    return CyclotomicInt::root_power(Prime(p), e);
}

CyclotomicInt induced_value_on_A(const OrbitRep& rep, const GroupElementA& a) {
    if (rep.is_constant()) {
        throw std::invalid_argument("constant tuple does not induce irreducibly: " +
                                    rep.tuple().str());
    }
    if (rep.p() != a.p()) throw std::invalid_argument("mismatched p in character evaluation");
    const int p = rep.p();
    std::vector<long long> coeffs(static_cast<size_t>(p), 0);
    for (const Tuple& rot : rotations(rep.tuple())) {
        long long e = 0;
        for (int j = 0; j < p; ++j) e += static_cast<long long>(rot[j]) * a[j];
        ++coeffs[static_cast<size_t>(e % p)];
    }
    return CyclotomicInt(Prime(p), std::move(coeffs));
}

bool faithfulness_oracle(const OrbitRep& rep) {
    const int p = rep.p();
    const Prime prime(p);
    const CyclotomicInt degree = CyclotomicInt::integer(prime, p);
    for (int x = 1; x < p; ++x) {
        if (induced_value_on_A(rep, Tuple::constant(prime, x)) == degree) {
            return false;  // central element in the kernel
        }
    }
    return true;
}

namespace {

constexpr int kMaxP = kOracleCap;

struct Candidate {
    bool induced = false;
    std::array<int, kMaxP> entries{};  // induced: class representative
    int c = 0;                         // linear: the constant
};

long long pow_ll(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// Adds, for every candidate theta, the exact coefficient vector of
//     sum over a in [begin, end) of phi^P(a) * psi^P(a) * conj(theta(a))
// into acc. Elements of A are indexed base-p little-endian and walked with
// an odometer; every digit transition (increment or wrap) shifts the
// affected dot products by +1 mod p, so the per-element work is the p^2
// exponent-pair collection plus p^2 per induced candidate. Coefficients
// stay below p^2 * p^p, far inside long long, so plain additions suffice
// here; the final conversion to CyclotomicInt re-checks everything.
void accumulate_range(int p, const int* phi, const int* psi,
                      const std::vector<Candidate>& candidates,
                      long long begin, long long end,
                      std::vector<std::array<long long, kMaxP>>& acc) {
    const int ncand = static_cast<int>(candidates.size());
    int col_phi[kMaxP][kMaxP], col_psi[kMaxP][kMaxP];
    for (int j = 0; j < p; ++j) {
        for (int o = 0; o < p; ++o) {
            col_phi[j][o] = phi[(j + o) % p];
            col_psi[j][o] = psi[(j + o) % p];
        }
    }
    int digits[kMaxP] = {0};
    {
        long long idx = begin;
        for (int j = 0; j < p; ++j) {
            digits[j] = static_cast<int>(idx % p);
            idx /= p;
        }
    }

    // Dot products of each rotation offset with the current element.
    int dphi[kMaxP], dpsi[kMaxP];
    std::vector<std::array<int, kMaxP>> dtheta(static_cast<size_t>(ncand));
    int asum = 0;
    for (int o = 0; o < p; ++o) {
        long long sp = 0, sq = 0;
        for (int t = 0; t < p; ++t) {
            sp += static_cast<long long>(phi[(t + o) % p]) * digits[t];
            sq += static_cast<long long>(psi[(t + o) % p]) * digits[t];
        }
        dphi[o] = static_cast<int>(sp % p);
        dpsi[o] = static_cast<int>(sq % p);
    }
    for (int t = 0; t < ncand; ++t) {
        const Candidate& cand = candidates[static_cast<size_t>(t)];
        if (!cand.induced) continue;
        for (int o = 0; o < p; ++o) {
            long long s = 0;
            for (int u = 0; u < p; ++u) {
                s += static_cast<long long>(cand.entries[static_cast<size_t>((u + o) % p)]) *
                     digits[u];
            }
            dtheta[static_cast<size_t>(t)][static_cast<size_t>(o)] = static_cast<int>(s % p);
        }
    }
    {
        long long s = 0;
        for (int j = 0; j < p; ++j) s += digits[j];
        asum = static_cast<int>(s % p);
    }

    auto apply_digit = [&](int j) {
        for (int o = 0; o < p; ++o) {
            dphi[o] += col_phi[j][o];
            if (dphi[o] >= p) dphi[o] -= p;
            dpsi[o] += col_psi[j][o];
            if (dpsi[o] >= p) dpsi[o] -= p;
        }
        for (int t = 0; t < ncand; ++t) {
            const Candidate& cand = candidates[static_cast<size_t>(t)];
            if (!cand.induced) continue;
            auto& dt = dtheta[static_cast<size_t>(t)];
            for (int o = 0; o < p; ++o) {
                dt[static_cast<size_t>(o)] += cand.entries[static_cast<size_t>((j + o) % p)];
                if (dt[static_cast<size_t>(o)] >= p) dt[static_cast<size_t>(o)] -= p;
            }
        }
        ++asum;
        if (asum >= p) asum -= p;
    };

    long long prod[kMaxP];
    for (long long idx = begin; idx < end; ++idx) {
        for (int t = 0; t < p; ++t) prod[t] = 0;
        for (int k = 0; k < p; ++k) {
            for (int l = 0; l < p; ++l) {
                int e = dphi[k] + dpsi[l];
                if (e >= p) e -= p;
                ++prod[e];
            }
        }
        for (int t = 0; t < ncand; ++t) {
            const Candidate& cand = candidates[static_cast<size_t>(t)];
            auto& out = acc[static_cast<size_t>(t)];
            if (cand.induced) {
                const auto& dt = dtheta[static_cast<size_t>(t)];
                for (int m = 0; m < p; ++m) {
                    const int g = dt[static_cast<size_t>(m)];
                    // theta contributes conj(zeta^g): shift the product
                    // coefficients down by g.
                    for (int u = g; u < p; ++u) out[static_cast<size_t>(u - g)] += prod[u];
                    for (int u = 0; u < g; ++u) out[static_cast<size_t>(u + p - g)] += prod[u];
                }
            } else {
                const int g = (cand.c * asum) % p;
                for (int u = g; u < p; ++u) out[static_cast<size_t>(u - g)] += prod[u];
                for (int u = 0; u < g; ++u) out[static_cast<size_t>(u + p - g)] += prod[u];
            }
        }
        if (idx + 1 == end) break;
        int j = 0;
        while (digits[j] == p - 1) {
            digits[j] = 0;
            apply_digit(j);
            ++j;
        }
        ++digits[j];
        apply_digit(j);
    }
}

// Shared exact A-summation for a batch of candidates; returns one
// multiplicity per candidate.
std::vector<long long> oracle_multiplicities(const OrbitRep& phi, const OrbitRep& psi,
                                             const std::vector<Candidate>& candidates,
                                             int cap, int workers) {
    const int p = phi.p();
    if (p > cap || p > kOracleCap) {
        throw std::invalid_argument("p = " + std::to_string(p) +
                                    " above oracle cap (cost p^p); cap = " +
                                    std::to_string(std::min(cap, kOracleCap)));
    }
    if (phi.p() != psi.p()) throw std::invalid_argument("mismatched p in oracle");
    if (phi.is_constant() || psi.is_constant()) {
        throw std::invalid_argument("oracle inputs must induce irreducibly");
    }

    int phi_e[kMaxP], psi_e[kMaxP];
    for (int i = 0; i < p; ++i) {
        phi_e[i] = phi.tuple()[i];
        psi_e[i] = psi.tuple()[i];
    }

    const long long total = pow_ll(p, p);
    int nworkers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (nworkers < 1) nworkers = 1;
    nworkers = static_cast<int>(std::min<long long>(nworkers, total));

    std::vector<std::vector<std::array<long long, kMaxP>>> partial(
        static_cast<size_t>(nworkers),
        std::vector<std::array<long long, kMaxP>>(candidates.size(),
                                                  std::array<long long, kMaxP>{}));
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w) {
            long long begin = total * w / nworkers;
            long long end = total * (w + 1) / nworkers;
            pool.emplace_back([&, w, begin, end] {
                accumulate_range(p, phi_e, psi_e, candidates, begin, end,
                                 partial[static_cast<size_t>(w)]);
            });
        }
        for (auto& th : pool) th.join();
    }

    const Prime prime(p);
    const long long group_order = pow_ll(p, p + 1);  // |P| = p^(p+1)
    std::vector<long long> result;
    result.reserve(candidates.size());
    for (size_t t = 0; t < candidates.size(); ++t) {
        std::vector<long long> coeffs(static_cast<size_t>(p), 0);
        for (int w = 0; w < nworkers; ++w) {
            for (int i = 0; i < p; ++i) {
                coeffs[static_cast<size_t>(i)] = checked_add(
                    coeffs[static_cast<size_t>(i)],
                    partial[static_cast<size_t>(w)][t][static_cast<size_t>(i)]);
            }
        }
        CyclotomicInt sum(prime, std::move(coeffs));
        auto n = sum.as_rational_integer();
        if (!n.has_value()) {
            throw invariant_error("oracle inner product is not a rational integer: " + sum.str());
        }
        if (*n < 0 || *n % group_order != 0) {
            throw invariant_error("oracle inner product sum " + std::to_string(*n) +
                                  " is not a nonnegative multiple of |P| = " +
                                  std::to_string(group_order));
        }
        result.push_back(*n / group_order);
    }
    return result;
}

Candidate candidate_from(const CharacterId& theta, int p) {
    Candidate cand;
    if (const auto* ind = std::get_if<InducedChar>(&theta)) {
        if (ind->rep.p() != p) throw std::invalid_argument("mismatched p in oracle candidate");
        if (ind->rep.is_constant()) {
            throw std::invalid_argument("induced candidate must be non-constant");
        }
        cand.induced = true;
        for (int i = 0; i < p; ++i) cand.entries[static_cast<size_t>(i)] = ind->rep.tuple()[i];
    } else {
        const auto& lin = std::get<LinearExtChar>(theta);
        if (lin.c < 0 || lin.c >= p || lin.e < 0 || lin.e >= p) {
            throw std::invalid_argument("linear extension labels out of range");
        }
        cand.induced = false;
        cand.c = lin.c;
    }
    return cand;
}

} // namespace

long long inner_product_over_A(const OrbitRep& phi, const OrbitRep& psi,
                               const CharacterId& theta, int cap) {
    std::vector<Candidate> candidates{candidate_from(theta, phi.p())};
    return oracle_multiplicities(phi, psi, candidates, cap, 1).front();
}

Decomposition oracle_decompose(const OrbitRep& phi, const OrbitRep& psi, int cap, int workers) {
    const int p = phi.p();

    // Candidate constituents: every rotation class visible among the p^2
    // sums. Classes absent from the sums have inner product zero by
    // Frobenius reciprocity, so nothing else can appear.
    std::set<OrbitRep> induced_classes;
    std::set<int> constants;
    for (const Tuple& s : product_sums(phi, psi)) {
        if (s.is_constant()) {
            constants.insert(s[0]);
        } else {
            induced_classes.insert(canonical_rotation(s));
        }
    }

    std::vector<Candidate> candidates;
    std::vector<CharacterId> keys;  // parallel to candidates; linear keys use e = 0
    for (const OrbitRep& rep : induced_classes) {
        keys.emplace_back(InducedChar{rep});
        candidates.push_back(candidate_from(keys.back(), p));
    }
    for (int c : constants) {
        keys.emplace_back(LinearExtChar{c, 0});
        candidates.push_back(candidate_from(keys.back(), p));
    }

    const auto mults = oracle_multiplicities(phi, psi, candidates, cap, workers);

    Decomposition result;
    result.p = p;
    for (size_t i = 0; i < keys.size(); ++i) {
        if (mults[i] == 0) continue;
        if (const auto* lin = std::get_if<LinearExtChar>(&keys[i])) {
            for (int e = 0; e < p; ++e) {
                result.constituents.emplace(LinearExtChar{lin->c, e},
                                            static_cast<int>(mults[i]));
            }
        } else {
            result.constituents.emplace(keys[i], static_cast<int>(mults[i]));
        }
    }
    result.distinct_count = static_cast<int>(result.constituents.size());
    long long total = 0;
    for (const auto& [id, mult] : result.constituents) {
        total += static_cast<long long>(mult) * degree_of(id, p);
    }
    result.degree_total = total;
    if (total != static_cast<long long>(p) * p) {
        throw invariant_error("oracle degree total " + std::to_string(total) + " != p^2");
    }
    return result;
}

} // namespace wreathchar
