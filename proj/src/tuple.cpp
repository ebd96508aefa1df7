#include "wreathchar/tuple.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace wreathchar {

bool Prime::is_prime(int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime::Prime(int p) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("not a prime: " + std::to_string(p));
    }
}

Tuple::Tuple(const Prime& p, std::vector<int> entries) : p_(p.value()), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != p_) {
        throw std::invalid_argument("tuple length " + std::to_string(entries_.size()) +
                                    " does not equal p = " + std::to_string(p_));
    }
    for (int v : entries_) {
        if (v < 0 || v >= p_) {
            throw std::invalid_argument("entry " + std::to_string(v) + " out of range mod " +
                                        std::to_string(p_));
        }
    }
}

Tuple Tuple::parse(const std::string& text) {
    std::vector<int> entries;
    const char* ptr = text.data();
    const char* end = text.data() + text.size();
    while (ptr != end) {
        int value = 0;
        auto [next, ec] = std::from_chars(ptr, end, value);
        if (ec != std::errc() || (next != end && *next != ',')) {
            throw std::invalid_argument("malformed tuple string: \"" + text + "\"");
        }
        entries.push_back(value);
        ptr = (next == end) ? end : next + 1;
        if (ptr == end && next != end) {
            throw std::invalid_argument("trailing comma in tuple string: \"" + text + "\"");
        }
    }
    if (entries.empty()) {
        throw std::invalid_argument("empty tuple string");
    }
    Prime p(static_cast<int>(entries.size()));
    return Tuple(p, std::move(entries));
}

Tuple Tuple::zero(const Prime& p) {
    return Tuple(p, std::vector<int>(static_cast<size_t>(p.value()), 0));
}

Tuple Tuple::constant(const Prime& p, int c) {
    int v = c % p.value();
    if (v < 0) v += p.value();
    return Tuple(p, std::vector<int>(static_cast<size_t>(p.value()), v));
}

int Tuple::sum_mod_p() const {
    long long s = 0;
    for (int v : entries_) s += v;
    return static_cast<int>(s % p_);
}

bool Tuple::is_constant() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [this](int v) { return v == entries_[0]; });
}

std::string Tuple::str() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

namespace detail {

int least_rotation_index(const int* doubled, int n) {
    int i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int c = doubled[i + k] - doubled[j + k];
        if (c == 0) {
            ++k;
            continue;
        }
        if (c > 0) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

} // namespace detail

OrbitRep::OrbitRep(const Tuple& t) : tuple_(t) {
    const int p = t.p();
    std::vector<int> doubled(static_cast<size_t>(2 * p));
    for (int i = 0; i < p; ++i) doubled[i] = doubled[i + p] = t[i];
    int start = detail::least_rotation_index(doubled.data(), p);
    if (start != 0) {
        std::vector<int> entries(static_cast<size_t>(p));
        for (int i = 0; i < p; ++i) entries[i] = doubled[start + i];
        tuple_ = Tuple(Prime(p), std::move(entries));
    }
}

OrbitRep canonical_rotation(const Tuple& t) {
    return OrbitRep(t);
}

Tuple rotated(const Tuple& t, int shift) {
    const int p = t.p();
    int s = shift % p;
    if (s < 0) s += p;
    std::vector<int> entries(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) {
        entries[(j + s) % p] = t[j];
    }
    return Tuple(Prime(p), std::move(entries));
}

std::vector<Tuple> rotations(const Tuple& t) {
    std::vector<Tuple> out;
    out.reserve(static_cast<size_t>(t.p()));
    for (int s = 0; s < t.p(); ++s) out.push_back(rotated(t, s));
    return out;
}

bool is_irreducible_inducing(const Tuple& t) {
    return !t.is_constant();
}

bool is_faithful_inducing(const Tuple& t) {
    if (t.is_constant()) {
        throw std::invalid_argument("faithfulness is asked of irreducible induced characters; "
                                    "tuple is constant: " + t.str());
    }
    return t.sum_mod_p() != 0;
}

Tuple add(const Tuple& a, const Tuple& b) {
    if (a.p() != b.p()) {
        throw std::invalid_argument("mismatched p: " + std::to_string(a.p()) + " vs " +
                                    std::to_string(b.p()));
    }
    const int p = a.p();
    std::vector<int> entries(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) {
        int v = a[j] + b[j];
        if (v >= p) v -= p;
        entries[j] = v;
    }
    return Tuple(Prime(p), std::move(entries));
}

Tuple scale(const Tuple& t, int k) {
    const int p = t.p();
    int u = k % p;
    if (u < 0) u += p;
    if (u == 0) {
        throw std::invalid_argument("scale factor " + std::to_string(k) +
                                    " is not a unit mod " + std::to_string(p));
    }
    std::vector<int> entries(static_cast<size_t>(p));
    for (int j = 0; j < p; ++j) entries[j] = (t[j] * u) % p;
    return Tuple(Prime(p), std::move(entries));
}

} // namespace wreathchar
