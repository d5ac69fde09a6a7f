#pragma once

// Exact sparse arithmetic in finitely presented graded-commutative algebras
// over F_p.
//
// A presentation fixes the prime, an ordered list of generators (polynomial
// with an optional truncation x^s = 0, or exterior), and an optional global
// degree cap.  Elements are sparse maps from monomials to nonzero residues.
// Monomials violating a truncation or the cap represent the zero class and
// are dropped during multiplication; this is the quotient-ring semantics and
// keeps elements canonical.
//
// Monomials are ordered graded-lexicographically over the generator order of
// the presentation.  Serialization follows that order, so output is
// deterministic and usable in golden files.
//
// Elements are immutable values; presentations are shared read-only.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <regemb/errors.hpp>
#include <regemb/modp.hpp>

namespace regemb {

enum class GeneratorKind { polynomial, exterior };

struct Generator {
    std::string name;
    i64 degree = 0;
    GeneratorKind kind = GeneratorKind::polynomial;
    i64 truncation = 0;  // x^s = 0; 0 means no relation (free polynomial generator)

    bool operator==(const Generator&) const = default;
};

inline Generator poly_gen(std::string name, i64 degree, i64 truncation = 0) {
    return Generator{std::move(name), degree, GeneratorKind::polynomial, truncation};
}

inline Generator ext_gen(std::string name, i64 degree) {
    return Generator{std::move(name), degree, GeneratorKind::exterior, 0};
}

// Exponent vector plus its cached total degree.  Comparison is graded first,
// lexicographic on exponents second.
struct Monomial {
    i64 degree = 0;
    std::vector<std::int32_t> exps;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    bool is_unit() const {
        for (auto e : exps)
            if (e != 0) return false;
        return true;
    }
};

class AlgebraPresentation {
public:
    AlgebraPresentation(i64 p, std::vector<Generator> gens,
                        std::optional<i64> degree_cap = std::nullopt)
        : p_(p), gens_(std::move(gens)), cap_(degree_cap) {
        require_prime(p_);
        for (const auto& g : gens_) {
            if (g.name.empty())
                throw contract_violation("generator names must be nonempty");
            if (g.degree < 1)
                throw contract_violation("generator degrees must be positive");
            if (g.kind == GeneratorKind::exterior) {
                if (p_ == 2)
                    throw contract_violation(
                        "exterior generators are not allowed for p = 2; declare a "
                        "truncation-2 polynomial generator instead");
                if (g.degree % 2 == 0)
                    throw contract_violation(
                        "exterior generators must have odd degree for odd p");
            } else {
                if (g.truncation != 0 && g.truncation < 2)
                    throw contract_violation("truncation exponents must be >= 2");
                if (p_ != 2 && g.degree % 2 != 0)
                    throw contract_violation(
                        "odd-degree generators over an odd prime must be exterior "
                        "(graded commutativity forces their square to vanish)");
            }
        }
        if (cap_ && *cap_ < 0)
            throw contract_violation("degree cap must be non-negative");
        odd_.reserve(gens_.size());
        for (const auto& g : gens_) odd_.push_back(g.degree % 2 != 0);
    }

    i64 p() const { return p_; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<i64> degree_cap() const { return cap_; }
    std::size_t size() const { return gens_.size(); }

    bool operator==(const AlgebraPresentation& o) const {
        return p_ == o.p_ && gens_ == o.gens_ && cap_ == o.cap_;
    }

    Monomial unit_monomial() const {
        return Monomial{0, std::vector<std::int32_t>(gens_.size(), 0)};
    }

    // nullopt when the exponent vector names the zero class.
    std::optional<Monomial> make_monomial(std::vector<std::int32_t> exps) const {
        if (exps.size() != gens_.size())
            throw contract_violation("exponent vector length does not match presentation");
        i64 deg = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            auto e = exps[i];
            if (e < 0) throw contract_violation("exponents must be non-negative");
            if (e == 0) continue;
            const auto& g = gens_[i];
            if (g.kind == GeneratorKind::exterior && e > 1) return std::nullopt;
            if (g.kind == GeneratorKind::polynomial && g.truncation != 0 && e >= g.truncation)
                return std::nullopt;
            deg += static_cast<i64>(e) * g.degree;
        }
        if (cap_ && deg > *cap_) return std::nullopt;
        return Monomial{deg, std::move(exps)};
    }

    struct MonomialProduct {
        Monomial mono;
        int sign;  // +1 or -1, Koszul sign of the merge
    };

    // Product of two monomials in normal form; nullopt for the zero class.
    // The sign counts crossings of odd-degree generator occurrences.
    std::optional<MonomialProduct> multiply_monomials(const Monomial& a,
                                                      const Monomial& b) const {
        i64 deg = a.degree + b.degree;
        if (cap_ && deg > *cap_) return std::nullopt;
        std::vector<std::int32_t> exps(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            std::int32_t e = a.exps[i] + b.exps[i];
            if (e != 0) {
                const auto& g = gens_[i];
                if (g.kind == GeneratorKind::exterior && e > 1) return std::nullopt;
                if (g.kind == GeneratorKind::polynomial && g.truncation != 0 &&
                    e >= g.truncation)
                    return std::nullopt;
            }
            exps[i] = e;
        }
        // crossings: b's occurrence of generator i moves left past a's
        // occurrences of generators j > i; only odd-odd pairs contribute.
        int parity = 0;
        int odd_suffix = 0;  // number of odd occurrences of a in positions > i
        for (std::size_t i = gens_.size(); i-- > 0;) {
            if (odd_[i]) {
                parity ^= (b.exps[i] & 1) & (odd_suffix & 1);
                odd_suffix += a.exps[i];
            }
        }
        return MonomialProduct{Monomial{deg, std::move(exps)}, parity ? -1 : 1};
    }

    std::string monomial_to_string(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!first) os << "*";
            os << gens_[i].name;
            if (m.exps[i] > 1) os << "^" << m.exps[i];
            first = false;
        }
        return os.str();
    }

private:
    i64 p_;
    std::vector<Generator> gens_;
    std::optional<i64> cap_;
    std::vector<bool> odd_;
};

using PresPtr = std::shared_ptr<const AlgebraPresentation>;

inline PresPtr make_presentation(i64 p, std::vector<Generator> gens,
                                 std::optional<i64> degree_cap = std::nullopt) {
    return std::make_shared<const AlgebraPresentation>(p, std::move(gens), degree_cap);
}

class Element {
public:
    explicit Element(PresPtr pres) : pres_(std::move(pres)) {
        if (!pres_) throw contract_violation("element requires a presentation");
    }

    static Element zero(PresPtr pres) { return Element(std::move(pres)); }

    static Element scalar(PresPtr pres, i64 c) {
        Element e(std::move(pres));
        e.add_term(e.pres_->unit_monomial(), c);
        return e;
    }

    static Element one(PresPtr pres) { return scalar(std::move(pres), 1); }

    static Element generator(PresPtr pres, std::size_t index, std::int32_t power = 1) {
        Element e(std::move(pres));
        if (index >= e.pres_->size())
            throw contract_violation("generator index out of range");
        std::vector<std::int32_t> exps(e.pres_->size(), 0);
        exps[index] = power;
        if (auto m = e.pres_->make_monomial(std::move(exps))) e.add_term(*m, 1);
        return e;
    }

    const PresPtr& presentation() const { return pres_; }
    const std::map<Monomial, i64>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    i64 constant_term() const {
        if (terms_.empty()) return 0;
        const auto& first = *terms_.begin();
        return first.first.is_unit() ? first.second : 0;
    }

    // Accumulate c on monomial m, reducing mod p and dropping zeros.
    void add_term(const Monomial& m, i64 c) {
        i64 p = pres_->p();
        c %= p;
        if (c < 0) c += p;
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = (it->second + c) % p;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        check_same(o);
        Element r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Element operator-(const Element& o) const {
        check_same(o);
        Element r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Element operator-() const {
        Element r(pres_);
        for (const auto& [m, c] : terms_) r.add_term(m, -c);
        return r;
    }

    Element operator*(const Element& o) const {
        check_same(o);
        Element r(pres_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                auto prod = pres_->multiply_monomials(ma, mb);
                if (!prod) continue;
                r.add_term(prod->mono, ca * cb * prod->sign);
            }
        }
        return r;
    }

    Element operator*(i64 c) const {
        Element r(pres_);
        for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * (c % pres_->p()));
        return r;
    }

    friend Element operator*(i64 c, const Element& e) { return e * c; }

    Element pow(i64 n) const {
        if (n < 0) throw contract_violation("pow requires a non-negative exponent");
        Element acc = one(pres_);
        Element base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool operator==(const Element& o) const {
        return (pres_ == o.pres_ || *pres_ == *o.pres_) && terms_ == o.terms_;
    }

    // Largest total degree among the terms; 0 for the zero element.
    i64 max_degree() const {
        if (terms_.empty()) return 0;
        return terms_.rbegin()->first.degree;
    }

    // Canonical text form: terms in the fixed monomial order, "0" when zero.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::string mono = pres_->monomial_to_string(m);
            if (mono.empty()) {
                os << c;
            } else if (c == 1) {
                os << mono;
            } else {
                os << c << "*" << mono;
            }
        }
        return os.str();
    }

private:
    void check_same(const Element& o) const {
        if (pres_ != o.pres_ && !(*pres_ == *o.pres_))
            throw contract_violation("elements belong to different presentations");
    }

    PresPtr pres_;
    std::map<Monomial, i64> terms_;
};

inline Element multiply(const Element& a, const Element& b) { return a * b; }

// Multiplicative inverse of a unit: with a = a_0 (1 - n) for nilpotent n,
// the inverse is a_0^{-1} sum n^k.  Termination is guaranteed by the degree
// cap or by the truncations; a free presentation with neither is rejected.
inline Element invert_unit(const Element& a) {
    const auto& pres = a.presentation();
    i64 p = pres->p();
    i64 a0 = a.constant_term();
    if (a0 % p == 0)
        throw non_unit_error("element has zero constant term; it is not a unit");
    i64 inv0 = inverse_mod(a0, p);
    Element nil = Element::one(pres) - a * inv0;  // nilpotent part of a_0^{-1} a, negated
    if (nil.is_zero()) return Element::scalar(pres, inv0);

    i64 min_deg = nil.terms().begin()->first.degree;
    if (min_deg <= 0)
        throw contract_violation("internal: nilpotent part has a constant term");
    i64 bound;
    if (pres->degree_cap()) {
        bound = *pres->degree_cap() / min_deg + 1;
    } else {
        i64 top = 0;
        for (const auto& g : pres->generators()) {
            if (g.kind == GeneratorKind::exterior) {
                top += g.degree;
            } else if (g.truncation != 0) {
                top += (g.truncation - 1) * g.degree;
            } else {
                throw contract_violation(
                    "inversion requires a finite presentation (degree cap or "
                    "truncated generators)");
            }
        }
        bound = top / min_deg + 1;
    }

    Element sum = Element::zero(pres);
    Element power = Element::one(pres);
    for (i64 k = 0; k <= bound && !power.is_zero(); ++k) {
        sum = sum + power;
        power = power * nil;
    }
    return sum * inv0;
}

// Least n <= cap with a^n = 0, for a non-unit a; nullopt when the cap is
// exceeded.  a = 0 has height 1.
inline std::optional<i64> element_height(const Element& a, i64 cap) {
    if (cap < 1) throw contract_violation("height cap must be >= 1");
    if (a.constant_term() != 0)
        throw contract_violation("height is defined for non-units only");
    if (a.is_zero()) return 1;
    Element power = a;
    for (i64 n = 1; n <= cap; ++n) {
        if (power.is_zero()) return n;
        if (n < cap) power = power * a;
    }
    return std::nullopt;
}

// Default height cap: four times the largest truncation exponent.
inline i64 default_height_cap(const AlgebraPresentation& pres) {
    i64 s_max = 2;
    for (const auto& g : pres.generators()) {
        if (g.kind == GeneratorKind::polynomial && g.truncation > s_max)
            s_max = g.truncation;
    }
    return 4 * s_max;
}

inline std::optional<i64> element_height(const Element& a) {
    return element_height(a, default_height_cap(*a.presentation()));
}

// a^(p^t), computed literally by repeated multiplication.
inline Element frobenius_power(const Element& a, i64 t) {
    if (t < 0) throw contract_violation("frobenius_power requires t >= 0");
    i64 p = a.presentation()->p();
    i64 exp = 1;
    for (i64 i = 0; i < t; ++i) {
        if (exp > (1LL << 40) / p)
            throw contract_violation("frobenius exponent overflow");
        exp *= p;
    }
    return a.pow(exp);
}

}  // namespace regemb
