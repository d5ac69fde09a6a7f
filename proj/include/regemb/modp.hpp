#pragma once

// Exact prime-field and p-adic combinatorics: base-p digit expansions and
// digit sums, Lucas binomials and multinomials, the f(d,l) truncation
// statistic, and degree/length/excess bookkeeping for admissible operation
// sequences.  All operations are pure functions on immutable values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <regemb/errors.hpp>

namespace regemb {

using i64 = std::int64_t;

namespace detail {

inline i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 powmod(i64 base, i64 exp, i64 m) {
    i64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool miller_rabin(i64 n) {
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (a % n == 0) continue;
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

// Trial division while the candidate divisor stays below 10^6, deterministic
// Miller-Rabin beyond that.  Inputs in this library are small; correctness
// over speed.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 d = 3; d <= 1000000 && d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    if (n < 1000000LL * 1000000LL) return true;
    return detail::miller_rabin(n);
}

inline void require_prime(i64 p, const char* what = "modulus") {
    if (!is_prime(p))
        throw invalid_modulus(std::string(what) + " must be prime, got " + std::to_string(p));
}

inline void require_odd_prime(i64 p, const char* what = "modulus") {
    require_prime(p, what);
    if (p == 2)
        throw invalid_modulus(std::string(what) + " must be an odd prime, got 2");
}

// Residue in [0, p-1] for a prime modulus p.  Arithmetic is closed under
// +, -, * and unit inversion; mixing moduli is a contract violation.
class ModPInt {
public:
    ModPInt(i64 value, i64 p) : p_(p) {
        require_prime(p_);
        v_ = value % p_;
        if (v_ < 0) v_ += p_;
    }

    i64 value() const { return v_; }
    i64 modulus() const { return p_; }

    ModPInt operator+(const ModPInt& o) const { return with(v_ + o.check(p_).v_); }
    ModPInt operator-(const ModPInt& o) const { return with(v_ - o.check(p_).v_ + p_); }
    ModPInt operator*(const ModPInt& o) const { return with(detail::mulmod(v_, o.check(p_).v_, p_)); }
    ModPInt operator-() const { return with(p_ - v_); }

    bool operator==(const ModPInt& o) const { return p_ == o.p_ && v_ == o.v_; }

    ModPInt pow(i64 e) const { return with(detail::powmod(v_, e, p_)); }

    ModPInt inverse() const {
        if (v_ == 0) throw non_unit_error("0 has no inverse mod " + std::to_string(p_));
        return pow(p_ - 2);
    }

private:
    ModPInt with(i64 raw) const {
        ModPInt r(*this);
        r.v_ = raw % p_;
        if (r.v_ < 0) r.v_ += p_;
        return r;
    }
    const ModPInt& check(i64 p) const {
        if (p_ != p) throw contract_violation("mixed moduli in ModPInt arithmetic");
        return *this;
    }

    i64 v_;
    i64 p_;
};

// Inverse of a mod p for p prime, 0 < a handled via normalization.
inline i64 inverse_mod(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw non_unit_error("0 has no inverse mod " + std::to_string(p));
    return detail::powmod(a, p - 2, p);
}

// Base-p expansion, least significant digit first.  The highest stored digit
// is nonzero; the value 0 has an empty digit sequence.
struct PAdicDigits {
    i64 p = 0;
    std::vector<i64> digits;

    i64 value() const {
        i64 v = 0;
        for (std::size_t r = digits.size(); r-- > 0;) v = v * p + digits[r];
        return v;
    }

    i64 digit_sum() const {
        i64 s = 0;
        for (i64 d : digits) s += d;
        return s;
    }
};

inline PAdicDigits p_adic_digits(i64 k, i64 p) {
    require_prime(p);
    if (k < 0) throw contract_violation("p_adic_digits requires k >= 0");
    PAdicDigits out;
    out.p = p;
    while (k > 0) {
        out.digits.push_back(k % p);
        k /= p;
    }
    return out;
}

// Sum of the base-p digits of k.  For p > k this is k itself (a single
// digit), which collapses the downstream bounds; that is the intended
// degenerate behaviour.
inline i64 alpha_p(i64 k, i64 p) {
    require_prime(p);
    if (k < 1) throw contract_violation("alpha_p requires k >= 1");
    return p_adic_digits(k, p).digit_sum();
}

namespace detail {

// C(n, m) mod p for 0 <= m <= n < p, by the multiplicative formula.
inline i64 small_binom_mod(i64 n, i64 m, i64 p) {
    if (m > n) return 0;
    if (m > n - m) m = n - m;
    i64 num = 1, den = 1;
    for (i64 i = 1; i <= m; ++i) {
        num = mulmod(num, (n - m + i) % p, p);
        den = mulmod(den, i % p, p);
    }
    return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace detail

// C(n, m) mod p evaluated digit-wise (Lucas); 0 when m > n.
inline ModPInt binom_mod_p(i64 n, i64 m, i64 p) {
    require_prime(p);
    if (n < 0 || m < 0) throw contract_violation("binom_mod_p requires n, m >= 0");
    if (m > n) return ModPInt(0, p);
    i64 r = 1;
    while (n > 0 || m > 0) {
        i64 nd = n % p, md = m % p;
        if (md > nd) return ModPInt(0, p);
        r = detail::mulmod(r, detail::small_binom_mod(nd, md, p), p);
        n /= p;
        m /= p;
    }
    return ModPInt(r, p);
}

// Multinomial coefficient mod p as a telescoping product of Lucas binomials.
inline ModPInt multinom_mod_p(i64 n, const std::vector<i64>& parts, i64 p) {
    require_prime(p);
    if (n < 0) throw contract_violation("multinom_mod_p requires n >= 0");
    i64 sum = 0;
    for (i64 part : parts) {
        if (part < 0) throw contract_violation("multinomial parts must be non-negative");
        sum += part;
    }
    if (sum != n) throw contract_violation("multinomial parts must sum to n");
    ModPInt r(1, p);
    i64 rest = n;
    for (i64 part : parts) {
        r = r * binom_mod_p(rest, part, p);
        rest -= part;
    }
    return r;
}

// f(d, l) = max{ k : 0 <= k <= d-1 and l does not divide C(d+k, d) }.
// Always defined: k = 0 gives C(d, d) = 1.
inline i64 f_dl(i64 d, i64 ell) {
    require_odd_prime(ell);
    if (d < 1) throw contract_violation("f_dl requires d >= 1");
    for (i64 k = d - 1; k >= 1; --k) {
        if (binom_mod_p(d + k, d, ell).value() != 0) return k;
    }
    return 0;
}

// Admissible-sequence bookkeeping.  For p = 2 the sequence is (s_1,...,s_k);
// for p > 2 it is a list of pairs (eps_j, s_j) with eps_j in {0,1} and
// s_j >= eps_j.  The empty sequence is valid.
struct DLSequence {
    i64 p = 2;
    std::vector<i64> s;
    std::vector<i64> eps;  // empty when p == 2
};

inline DLSequence make_dl_sequence(i64 p, std::vector<i64> s, std::vector<i64> eps = {}) {
    require_prime(p);
    DLSequence seq;
    seq.p = p;
    seq.s = std::move(s);
    seq.eps = std::move(eps);
    if (p == 2) {
        if (!seq.eps.empty())
            throw contract_violation("p = 2 sequences carry no Bockstein markers");
        for (i64 v : seq.s)
            if (v < 0) throw contract_violation("sequence entries must be non-negative");
    } else {
        if (seq.eps.size() != seq.s.size())
            throw contract_violation("odd-prime sequences pair one eps with each s");
        for (std::size_t j = 0; j < seq.s.size(); ++j) {
            if (seq.eps[j] != 0 && seq.eps[j] != 1)
                throw contract_violation("eps entries must lie in {0,1}");
            if (seq.s[j] < seq.eps[j])
                throw contract_violation("sequence entries require s_j >= eps_j");
        }
    }
    return seq;
}

struct DLStats {
    i64 degree = 0;
    i64 length = 0;
    std::optional<i64> excess;  // nullopt encodes +infinity (empty sequence)
    i64 b = 0;
    bool admissible = true;
};

inline DLStats dl_sequence_stats(const DLSequence& seq) {
    // revalidate: the struct is an open aggregate
    make_dl_sequence(seq.p, seq.s, seq.eps);
    DLStats st;
    st.length = static_cast<i64>(seq.s.size());
    if (seq.s.empty()) {
        st.excess = std::nullopt;
        return st;
    }
    if (seq.p == 2) {
        i64 tail = 0;
        for (std::size_t j = 0; j < seq.s.size(); ++j) {
            st.degree += seq.s[j];
            if (j >= 1) {
                tail += seq.s[j];
                if (2 * seq.s[j] < seq.s[j - 1]) st.admissible = false;
            }
        }
        st.excess = seq.s[0] - tail;
        st.b = 0;
    } else {
        i64 tail = 0;
        for (std::size_t j = 0; j < seq.s.size(); ++j) {
            st.degree += 2 * seq.s[j] * (seq.p - 1) - seq.eps[j];
            if (j >= 1) {
                tail += seq.s[j] * (seq.p - 1) - seq.eps[j];
                if (seq.p * seq.s[j] - seq.eps[j] < seq.s[j - 1]) st.admissible = false;
            }
        }
        st.excess = seq.s[0] - tail;
        st.b = seq.eps[0];
    }
    return st;
}

}  // namespace regemb
