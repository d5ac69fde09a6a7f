#pragma once

// Explicit cohomology models and the Chern-class computations of the
// obstruction machinery.
//
// CyclicModel is the truncated ring F_p[T]/(T^(M+1)) with deg T = 2 and
// M = floor((d-1)(p-1)/2) for a source of real dimension d; the ambient
// exterior class e (degree 1) is carried in the presentation but never
// enters the even-degree Chern arithmetic.
//
// ConfigModel is F_p[c_1,...,c_{k-1}]/(c_i^d) with deg c_i = 2i and a global
// degree cap of 2(d-1)(k-1), for d = p^t: per-generator truncation encodes
// the height bound, the cap the dimension of the underlying space.
//
// "Chern index" of a class always means cohomological degree / 2.

#include <cstdint>
#include <string>
#include <vector>

#include <regemb/errors.hpp>
#include <regemb/graded.hpp>
#include <regemb/modp.hpp>

namespace regemb {

struct CyclicModel {
    i64 p = 3;        // odd prime
    i64 d_real = 1;   // real dimension of the source
    i64 max_power = 0;  // largest i with T^i != 0
    PresPtr pres;

    Element T(std::int32_t power = 1) const { return Element::generator(pres, 0, power); }
    Element one() const { return Element::one(pres); }

    // Degree at which the p-regular obstruction class is evaluated:
    // floor((d-1)/2) * (p-1).
    i64 obstruction_degree() const { return ((d_real - 1) / 2) * (p - 1); }
};

inline CyclicModel make_cyclic_model(i64 p, i64 d_real) {
    require_odd_prime(p);
    if (d_real < 1) throw contract_violation("real dimension must be >= 1");
    CyclicModel m;
    m.p = p;
    m.d_real = d_real;
    m.max_power = (d_real - 1) * (p - 1) / 2;
    // cap 2M makes T^(M+1) = 0 even in the degenerate M = 0 case
    m.pres = make_presentation(
        p, {poly_gen("T", 2, std::max<i64>(m.max_power + 1, 2)), ext_gen("e", 1)},
        2 * m.max_power);
    return m;
}

struct ConfigModel {
    i64 p = 3;
    i64 t = 1;
    i64 d = 3;  // = p^t, complex dimension
    i64 k = 2;  // number of points
    PresPtr pres;

    Element c(i64 i, std::int32_t power = 1) const {
        if (i < 1 || i > k - 1) throw contract_violation("c_i requires 1 <= i <= k-1");
        return Element::generator(pres, static_cast<std::size_t>(i - 1), power);
    }
    Element one() const { return Element::one(pres); }
};

namespace detail {

inline std::vector<Generator> config_generators(i64 d, i64 k) {
    std::vector<Generator> gens;
    for (i64 i = 1; i <= k - 1; ++i)
        gens.push_back(poly_gen("c_" + std::to_string(i), 2 * i, d));
    return gens;
}

}  // namespace detail

inline ConfigModel make_config_model(i64 p, i64 t, i64 k) {
    require_odd_prime(p);
    if (t < 1) throw contract_violation("config model requires t >= 1");
    if (k < 2) throw contract_violation("config model requires k >= 2");
    ConfigModel m;
    m.p = p;
    m.t = t;
    m.k = k;
    m.d = 1;
    for (i64 i = 0; i < t; ++i) {
        if (m.d > (1LL << 40) / p) throw contract_violation("p^t overflows");
        m.d *= p;
    }
    m.pres = make_presentation(p, detail::config_generators(m.d, k),
                               2 * (m.d - 1) * (k - 1));
    return m;
}

// Same model, but validates that the given complex dimension is a power of p.
inline ConfigModel make_config_model_for_dimension(i64 p, i64 d, i64 k) {
    require_odd_prime(p);
    i64 t = 0, v = d;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++t;
    }
    if (v != 1 || t < 1)
        throw domain_error("complex dimension " + std::to_string(d) +
                           " is not a positive power of " + std::to_string(p));
    return make_config_model(p, t, k);
}

// Total Chern class of mult copies of the cyclic regular-representation
// bundle: the literal product prod_{j=1}^{p-1} (1 + jT)^mult reduced in the
// model.  For mult = 1 this collapses to 1 + (p-1) T^(p-1): the intermediate
// elementary symmetric functions of 1..p-1 vanish mod p and the top one is
// (p-1)! = p-1 (Wilson).  Closed forms elsewhere often quote 1 + T^(p-1);
// the literal product carries the coefficient p-1 = -1 instead, and every
// consumer here sticks to the computed value.
inline Element total_chern_cyclic(i64 p, i64 mult, const CyclicModel& model) {
    require_odd_prime(p);
    if (p != model.p) throw contract_violation("model prime does not match p");
    if (mult < 0) throw contract_violation("mult must be >= 0");
    Element acc = model.one();
    for (i64 rep = 0; rep < mult; ++rep) {
        for (i64 j = 1; j <= p - 1; ++j) {
            acc = acc * (model.one() + model.T() * j);
        }
    }
    return acc;
}

inline Element inverse_chern_cyclic(i64 p, i64 mult, const CyclicModel& model) {
    return invert_unit(total_chern_cyclic(p, mult, model));
}

// Inverse Chern class of the configuration bundle: since every class has
// vanishing d-th power, c-bar equals (1 + c_1 + ... + c_{k-1})^(d-1).
inline Element inverse_chern_config(const ConfigModel& model) {
    Element base = model.one();
    for (i64 i = 1; i <= model.k - 1; ++i) base = base + model.c(i);
    return base.pow(model.d - 1);
}

// Largest Chern index with a nonzero component (cohomological degree / 2);
// 0 for scalars, contract violation for the zero element.
inline i64 max_nonvanishing_inverse_degree(const Element& elem) {
    if (elem.is_zero())
        throw contract_violation("the zero element has no non-vanishing degree");
    return elem.max_degree() / 2;
}

struct ConfigClassReport {
    Element inverse_chern;       // reduced in the capped model
    i64 top_dual_coefficient;    // coefficient of c_{k-1}^{d-1}
    i64 max_degree;              // largest nonzero Chern index
    bool zero_above_top;         // no monomial of c-weight > (d-1)(k-1) survives
};

// Expands the inverse Chern class with the generator truncations only (no
// degree cap) and certifies that everything above Chern index (d-1)(k-1)
// vanishes on its own, then extracts the coefficient of c_{k-1}^{d-1}.
inline ConfigClassReport analyze_config_model(const ConfigModel& model) {
    auto free_pres = make_presentation(model.p, detail::config_generators(model.d, model.k));
    Element base = Element::one(free_pres);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(model.k); ++i)
        base = base + Element::generator(free_pres, i);
    Element expansion = base.pow(model.d - 1);

    i64 top = (model.d - 1) * (model.k - 1);
    bool zero_above = true;
    for (const auto& [m, c] : expansion.terms()) {
        if (m.degree / 2 > top) zero_above = false;
    }

    std::vector<std::int32_t> top_exps(static_cast<std::size_t>(model.k - 1), 0);
    top_exps.back() = static_cast<std::int32_t>(model.d - 1);
    i64 coeff = 0;
    if (auto mono = free_pres->make_monomial(top_exps)) {
        auto it = expansion.terms().find(*mono);
        if (it != expansion.terms().end()) coeff = it->second;
    }

    ConfigClassReport rep{inverse_chern_config(model), coeff, 0, zero_above};
    rep.max_degree = max_nonvanishing_inverse_degree(rep.inverse_chern);
    return rep;
}

inline ModPInt top_dual_coefficient(const ConfigModel& model) {
    auto rep = analyze_config_model(model);
    if (!rep.zero_above_top)
        throw contract_violation(
            "inverse Chern class has support above Chern index (d-1)(k-1)");
    return ModPInt(rep.top_dual_coefficient, model.p);
}

// Maximal certified non-vanishing degree of the inverse Chern class for k
// points in complex dimension p^t: the p-adic digits of k split the class
// into an external product of digit-many prime-power factors, and the
// degrees of the factor classes add.  A factor with one point contributes 0.
inline i64 kunneth_max_degree(i64 p, i64 t, i64 k) {
    require_odd_prime(p);
    if (k < 1) throw contract_violation("kunneth_max_degree requires k >= 1");
    auto digits = p_adic_digits(k, p);
    i64 total = 0;
    i64 power = 1;
    for (std::size_t r = 0; r < digits.digits.size(); ++r) {
        i64 beta = digits.digits[r];
        if (beta > 0 && power >= 2) {
            auto model = make_config_model(p, t, power);
            total += beta * max_nonvanishing_inverse_degree(inverse_chern_config(model));
        }
        power *= p;
    }
    return total;
}

}  // namespace regemb
