#pragma once

// The free graded Hopf algebra on the configuration-space coalgebra:
// coproducts into the tensor square, the Bockstein derivation, Newton and
// extended Newton polynomials, and the primitivity / basis-change checks
// built from them.
//
// Generators: x_l of degree 2(p-1)l (polynomial, no truncation) and y_l of
// degree 2(p-1)l - 1 (exterior), for l in the coalgebra's index range:
// [1, (d-1)/2] in the plain variant, [(n+1)/2, (d-1)/2] in the cofiber
// variant.  Out-of-range generators are literal zero at construction time,
// so recursions cancel them automatically.  x_0 is the unit.
//
// Coproduct on generators:
//   D(x_l) = sum_{i=0..l} x_i (x) x_{l-i}
//   D(y_l) = y_l (x) 1 + sum_{i=1..l-1} (x_i (x) y_{l-i} + y_{l-i} (x) x_i)
//            + 1 (x) y_l
// extended multiplicatively.  The Bockstein sends x_l to y_l, kills y_l,
// and extends as a signed derivation d(ab) = (da)b + (-1)^{deg a} a(db);
// that convention makes d an involution-free differential (d^2 = 0) and is
// pinned by the test suite.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <regemb/errors.hpp>
#include <regemb/graded.hpp>
#include <regemb/modp.hpp>

namespace regemb {

struct CoalgebraSpec {
    i64 p = 3;
    i64 d = 3;                   // odd, >= 3
    std::optional<i64> n;        // cofiber variant bottom dimension (odd, 3 <= n < d)
    i64 lo = 1;                  // first nonzero generator index
    i64 hi = 1;                  // last generator index, (d-1)/2
    PresPtr pres;                // x_lo..x_hi then y_lo..y_hi

    bool in_range(i64 l) const { return lo <= l && l <= hi; }

    // x_l as an element: the unit for l = 0, zero outside the range.
    Element x(i64 l) const {
        if (l == 0) return Element::one(pres);
        if (!in_range(l)) return Element::zero(pres);
        return Element::generator(pres, static_cast<std::size_t>(l - lo));
    }

    Element y(i64 l) const {
        if (!in_range(l)) return Element::zero(pres);
        return Element::generator(pres, static_cast<std::size_t>(hi - lo + 1 + l - lo));
    }

    // generator index bookkeeping for the Bockstein
    bool is_x_index(std::size_t gen) const { return gen < static_cast<std::size_t>(hi - lo + 1); }
    std::size_t partner_y_index(std::size_t x_gen) const {
        return x_gen + static_cast<std::size_t>(hi - lo + 1);
    }
};

inline CoalgebraSpec make_coalgebra_spec(i64 p, i64 d, std::optional<i64> n = std::nullopt) {
    require_odd_prime(p);
    if (d < 3 || d % 2 == 0) throw contract_violation("d must be odd and >= 3");
    CoalgebraSpec spec;
    spec.p = p;
    spec.d = d;
    spec.n = n;
    spec.hi = (d - 1) / 2;
    if (n) {
        if (*n < 3 || *n % 2 == 0) throw contract_violation("n must be odd and >= 3");
        if (*n >= d) throw contract_violation("the cofiber variant requires n < d");
        spec.lo = (*n + 1) / 2;
    } else {
        spec.lo = 1;
    }
    std::vector<Generator> gens;
    for (i64 l = spec.lo; l <= spec.hi; ++l)
        gens.push_back(poly_gen("x_" + std::to_string(l), 2 * (p - 1) * l));
    for (i64 l = spec.lo; l <= spec.hi; ++l)
        gens.push_back(ext_gen("y_" + std::to_string(l), 2 * (p - 1) * l - 1));
    // large enough to hold every term of the Newton recursions
    i64 cap = 2 * (2 * (p - 1) * spec.hi) * (d - 1);
    spec.pres = make_presentation(p, std::move(gens), cap);
    return spec;
}

inline CoalgebraSpec make_cofiber_spec(i64 p, i64 d, i64 n) {
    return make_coalgebra_spec(p, d, n);
}

// Sparse element of the tensor square, with the Koszul-signed product
// (a (x) b)(c (x) d) = (-1)^{deg b deg c} ac (x) bd.
class TensorSquareElement {
public:
    explicit TensorSquareElement(PresPtr pres) : pres_(std::move(pres)) {
        if (!pres_) throw contract_violation("tensor element requires a presentation");
    }

    static TensorSquareElement zero(PresPtr pres) { return TensorSquareElement(std::move(pres)); }

    static TensorSquareElement unit(PresPtr pres) {
        TensorSquareElement t(std::move(pres));
        auto u = t.pres_->unit_monomial();
        t.add_term(u, u, 1);
        return t;
    }

    // a (x) b
    static TensorSquareElement pure(const Element& a, const Element& b) {
        if (a.presentation() != b.presentation() &&
            !(*a.presentation() == *b.presentation()))
            throw contract_violation("tensor factors belong to different presentations");
        TensorSquareElement t(a.presentation());
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
        return t;
    }

    const PresPtr& presentation() const { return pres_; }
    const std::map<std::pair<Monomial, Monomial>, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& left, const Monomial& right, i64 c) {
        // the tensor square inherits the algebra's cap on total degree
        if (auto cap = pres_->degree_cap(); cap && left.degree + right.degree > *cap)
            return;
        i64 p = pres_->p();
        c %= p;
        if (c < 0) c += p;
        if (c == 0) return;
        auto key = std::make_pair(left, right);
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second = (it->second + c) % p;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorSquareElement operator+(const TensorSquareElement& o) const {
        check_same(o);
        TensorSquareElement r(*this);
        for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
        return r;
    }

    TensorSquareElement operator-(const TensorSquareElement& o) const {
        check_same(o);
        TensorSquareElement r(*this);
        for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }

    TensorSquareElement operator*(const TensorSquareElement& o) const {
        check_same(o);
        TensorSquareElement r(pres_);
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                auto left = pres_->multiply_monomials(ka.first, kb.first);
                if (!left) continue;
                auto right = pres_->multiply_monomials(ka.second, kb.second);
                if (!right) continue;
                i64 cross = (ka.second.degree % 2 != 0 && kb.first.degree % 2 != 0) ? -1 : 1;
                r.add_term(left->mono, right->mono,
                           ca * cb * left->sign * right->sign * cross);
            }
        }
        return r;
    }

    TensorSquareElement operator*(i64 c) const {
        TensorSquareElement r(pres_);
        for (const auto& [k, coeff] : terms_) r.add_term(k.first, k.second, coeff * (c % pres_->p()));
        return r;
    }

    bool operator==(const TensorSquareElement& o) const {
        return (pres_ == o.pres_ || *pres_ == *o.pres_) && terms_ == o.terms_;
    }

    // counit applied to the left (or right) tensor factor: keeps terms whose
    // that factor is the unit monomial and returns the other side.
    Element contract_left() const {
        Element e(pres_);
        for (const auto& [k, c] : terms_)
            if (k.first.is_unit()) e.add_term(k.second, c);
        return e;
    }

    Element contract_right() const {
        Element e(pres_);
        for (const auto& [k, c] : terms_)
            if (k.second.is_unit()) e.add_term(k.first, c);
        return e;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c << "*";
            std::string l = pres_->monomial_to_string(k.first);
            std::string r = pres_->monomial_to_string(k.second);
            os << (l.empty() ? "1" : l) << " (x) " << (r.empty() ? "1" : r);
        }
        return os.str();
    }

private:
    void check_same(const TensorSquareElement& o) const {
        if (pres_ != o.pres_ && !(*pres_ == *o.pres_))
            throw contract_violation("tensor elements belong to different presentations");
    }

    PresPtr pres_;
    std::map<std::pair<Monomial, Monomial>, i64> terms_;
};

namespace detail {

inline TensorSquareElement coproduct_of_generator(const CoalgebraSpec& spec,
                                                  std::size_t gen) {
    TensorSquareElement out(spec.pres);
    i64 width = spec.hi - spec.lo + 1;
    if (spec.is_x_index(gen)) {
        i64 l = spec.lo + static_cast<i64>(gen);
        for (i64 i = 0; i <= l; ++i) {
            Element left = spec.x(i);
            Element right = spec.x(l - i);
            if (left.is_zero() || right.is_zero()) continue;
            out = out + TensorSquareElement::pure(left, right);
        }
    } else {
        i64 l = spec.lo + static_cast<i64>(gen) - width;
        out = out + TensorSquareElement::pure(spec.y(l), Element::one(spec.pres));
        out = out + TensorSquareElement::pure(Element::one(spec.pres), spec.y(l));
        for (i64 i = 1; i <= l - 1; ++i) {
            Element xi = spec.x(i);
            Element yli = spec.y(l - i);
            if (!xi.is_zero() && !yli.is_zero()) {
                out = out + TensorSquareElement::pure(xi, yli);
                out = out + TensorSquareElement::pure(yli, xi);
            }
        }
    }
    return out;
}

}  // namespace detail

// The algebra morphism extending the generator coproducts.
inline TensorSquareElement coproduct(const Element& a, const CoalgebraSpec& spec) {
    if (a.presentation() != spec.pres && !(*a.presentation() == *spec.pres))
        throw contract_violation("element does not live over the coalgebra's generators");
    TensorSquareElement out(spec.pres);
    for (const auto& [mon, c] : a.terms()) {
        TensorSquareElement term = TensorSquareElement::unit(spec.pres);
        for (std::size_t g = 0; g < mon.exps.size(); ++g) {
            if (mon.exps[g] == 0) continue;
            TensorSquareElement dg = detail::coproduct_of_generator(spec, g);
            for (std::int32_t e = 0; e < mon.exps[g]; ++e) term = term * dg;
        }
        out = out + term * c;
    }
    return out;
}

// D(a) - a (x) 1 - 1 (x) a; an element is primitive iff this is zero.
inline TensorSquareElement coproduct_defect(const Element& a, const CoalgebraSpec& spec) {
    TensorSquareElement d = coproduct(a, spec);
    Element one = Element::one(spec.pres);
    return d - TensorSquareElement::pure(a, one) - TensorSquareElement::pure(one, a);
}

inline bool is_primitive(const Element& a, const CoalgebraSpec& spec) {
    if (a.constant_term() != 0)
        throw contract_violation("primitivity is defined for elements without constant term");
    return coproduct_defect(a, spec).is_zero();
}

namespace detail {

inline Element bockstein_monomial(const Monomial& mon, const CoalgebraSpec& spec);

}  // namespace detail

// d(x_l) = y_l, d(y_l) = 0, extended as a derivation with the sign
// (-1)^{deg a} on the right-hand factor.
inline Element bockstein(const Element& a, const CoalgebraSpec& spec) {
    if (a.presentation() != spec.pres && !(*a.presentation() == *spec.pres))
        throw contract_violation("element does not live over the coalgebra's generators");
    Element out(spec.pres);
    for (const auto& [mon, c] : a.terms()) out = out + detail::bockstein_monomial(mon, spec) * c;
    return out;
}

namespace detail {

inline Element bockstein_monomial(const Monomial& mon, const CoalgebraSpec& spec) {
    const auto& pres = spec.pres;
    std::size_t g = 0;
    while (g < mon.exps.size() && mon.exps[g] == 0) ++g;
    if (g == mon.exps.size()) return Element::zero(pres);

    std::int32_t e = mon.exps[g];
    i64 head_degree = static_cast<i64>(e) * pres->generators()[g].degree;

    std::vector<std::int32_t> rest_exps = mon.exps;
    rest_exps[g] = 0;
    Element rest(pres);
    if (auto rm = pres->make_monomial(rest_exps)) rest.add_term(*rm, 1);

    // d(head) * rest
    Element term1(pres);
    if (spec.is_x_index(g)) {
        Element dhead = Element::generator(pres, g, e - 1) *
                        Element::generator(pres, spec.partner_y_index(g)) * static_cast<i64>(e);
        term1 = dhead * rest;
    }

    // (-1)^{deg head} head * d(rest)
    Element drest = bockstein_monomial(rest.terms().empty() ? Monomial{0, rest_exps}
                                                            : rest.terms().begin()->first,
                                       spec);
    Element term2 = Element::generator(pres, g, e) * drest;
    if (head_degree % 2 != 0) term2 = -term2;

    return term1 + term2;
}

}  // namespace detail

// The derivation d (x) 1 + sigma (x) d on the tensor square, where sigma is
// the degree sign.  Naturality of the Bockstein with the coproduct reads
// D(d a) = (d (x) 1 + sigma (x) d)(D a).
inline TensorSquareElement tensor_bockstein(const TensorSquareElement& t,
                                            const CoalgebraSpec& spec) {
    TensorSquareElement out(spec.pres);
    for (const auto& [k, c] : t.terms()) {
        Element left(spec.pres), right(spec.pres);
        left.add_term(k.first, 1);
        right.add_term(k.second, 1);
        Element dl = bockstein(left, spec);
        if (!dl.is_zero()) out = out + TensorSquareElement::pure(dl, right) * c;
        Element dr = bockstein(right, spec);
        if (!dr.is_zero()) {
            i64 sign = (k.first.degree % 2 != 0) ? -1 : 1;
            out = out + TensorSquareElement::pure(left, dr) * (c * sign);
        }
    }
    return out;
}

// v_1 = x_1, v_l = l x_l - sum_{i=1..l-1} x_i v_{l-i}; returned as
// v_1..v_{(d-1)/2} (index l at position l-1).
inline std::vector<Element> newton_polynomials(const CoalgebraSpec& spec) {
    if (spec.n)
        throw precondition_error("plain Newton polynomials require the plain variant");
    if (spec.d > 2 * spec.p - 1)
        throw precondition_error(
            "plain Newton recursion needs d <= 2p-1 so all leading coefficients "
            "are invertible mod p");
    std::vector<Element> v;
    for (i64 l = 1; l <= spec.hi; ++l) {
        Element vl = spec.x(l) * l;
        for (i64 i = 1; i <= l - 1; ++i) vl = vl - spec.x(i) * v[static_cast<std::size_t>(l - i - 1)];
        v.push_back(vl);
    }
    return v;
}

// v_l = floor(2l/(n+1)) x_l - sum_{i=1..l-1} x_i v_{l-i} with out-of-range
// x's equal to zero; nonzero exactly for (n+1)/2 <= l <= (d-1)/2.
inline std::vector<Element> extended_newton_polynomials(const CoalgebraSpec& spec) {
    if (!spec.n)
        throw precondition_error("extended Newton polynomials require the cofiber variant");
    if (spec.d >= (*spec.n + 1) * spec.p)
        throw precondition_error(
            "extended Newton recursion needs d < (n+1)p so all leading coefficients "
            "are invertible mod p");
    std::vector<Element> v;
    for (i64 l = 1; l <= spec.hi; ++l) {
        i64 lead = (2 * l) / (*spec.n + 1);
        Element vl = spec.x(l) * lead;
        for (i64 i = 1; i <= l - 1; ++i) vl = vl - spec.x(i) * v[static_cast<std::size_t>(l - i - 1)];
        v.push_back(vl);
    }
    return v;
}

// Each x_l is recoverable from {v_i} by triangular back-substitution
// exactly when every leading coefficient is a unit mod p; this also
// verifies the reconstruction identity itself.
inline bool basis_change_check(const CoalgebraSpec& spec) {
    std::vector<Element> v = spec.n ? extended_newton_polynomials(spec)
                                    : newton_polynomials(spec);
    std::vector<Element> x_rec(static_cast<std::size_t>(spec.hi) + 1,
                               Element::zero(spec.pres));
    for (i64 l = 1; l <= spec.hi; ++l) {
        i64 lead = spec.n ? (2 * l) / (*spec.n + 1) : l;
        bool in_support = spec.in_range(l);
        if (!in_support) continue;
        if (lead % spec.p == 0) return false;
        Element sum = v[static_cast<std::size_t>(l - 1)];
        for (i64 i = 1; i <= l - 1; ++i)
            sum = sum + x_rec[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(l - i - 1)];
        Element xl = sum * inverse_mod(lead, spec.p);
        if (!(xl == spec.x(l))) return false;
        x_rec[static_cast<std::size_t>(l)] = xl;
    }
    return true;
}

}  // namespace regemb
