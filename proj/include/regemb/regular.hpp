#pragma once

// Exact-arithmetic verification that candidate polynomial maps are k-regular
// on sampled configurations.
//
// The check is one-sided by design: a sample on which the value matrix drops
// rank certifies that the map is NOT k-regular, while passing samples are
// evidence, not proof (a proof over all of C^d would need a symbolic
// non-vanishing certificate).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <regemb/errors.hpp>
#include <regemb/exact.hpp>
#include <regemb/modp.hpp>

namespace regemb {

struct PolyTermC {
    GaussianRational coeff;
    std::vector<i64> exps;  // one exponent per source variable
};

// A polynomial map C^d -> C^N with exact coefficients.
struct PolyMapC {
    i64 arity = 1;
    std::vector<std::vector<PolyTermC>> components;

    i64 dimension() const { return static_cast<i64>(components.size()); }

    std::vector<GaussianRational> evaluate(const std::vector<GaussianRational>& z) const {
        if (static_cast<i64>(z.size()) != arity)
            throw contract_violation("point arity does not match the map");
        std::vector<GaussianRational> out;
        out.reserve(components.size());
        for (const auto& component : components) {
            GaussianRational acc{};
            for (const auto& term : component) {
                if (static_cast<i64>(term.exps.size()) != arity)
                    throw contract_violation("term arity does not match the map");
                GaussianRational mono = gaussian_one();
                for (i64 v = 0; v < arity; ++v) {
                    for (i64 e = 0; e < term.exps[static_cast<std::size_t>(v)]; ++e)
                        mono = mono * z[static_cast<std::size_t>(v)];
                }
                acc = acc + term.coeff * mono;
            }
            out.push_back(acc);
        }
        return out;
    }
};

// z -> (1, z, z^2, ..., z^{k-1})
inline PolyMapC vandermonde_map(i64 k) {
    if (k < 1) throw contract_violation("vandermonde_map requires k >= 1");
    PolyMapC f;
    f.arity = 1;
    for (i64 j = 0; j < k; ++j)
        f.components.push_back({PolyTermC{gaussian_one(), {j}}});
    return f;
}

// The truncated tuple (1, z, ..., z^{k-2}); rank on k points is at most
// k-1, so this is a guaranteed negative control.
inline PolyMapC truncated_vandermonde_map(i64 k) {
    if (k < 2) throw contract_violation("the truncated control requires k >= 2");
    return vandermonde_map(k - 1);
}

// k pairwise distinct points of C^d.
struct ConfigSample {
    std::vector<std::vector<GaussianRational>> points;

    i64 count() const { return static_cast<i64>(points.size()); }
};

inline bool has_duplicate_points(const ConfigSample& s) {
    for (std::size_t i = 0; i < s.points.size(); ++i)
        for (std::size_t j = i + 1; j < s.points.size(); ++j)
            if (s.points[i] == s.points[j]) return true;
    return false;
}

// true iff the k evaluated vectors are linearly independent over C.
inline bool check_k_regular_on_sample(const PolyMapC& f, const ConfigSample& s) {
    if (s.points.empty()) throw contract_violation("sample is empty");
    if (has_duplicate_points(s))
        throw precondition_error("sample has duplicate points; it is not a configuration");
    GaussianMatrix values;
    values.reserve(s.points.size());
    for (const auto& point : s.points) values.push_back(f.evaluate(point));
    return rank_exact(std::move(values)) == s.points.size();
}

// Deterministic sample of k distinct points of C^d with numerators and
// denominators bounded by box; distinctness by rejection, bounded at 10^4.
inline ConfigSample random_config(std::uint64_t seed, i64 k, i64 d, i64 box) {
    if (k < 1 || d < 1) throw contract_violation("random_config requires k, d >= 1");
    if (box < 1) throw contract_violation("random_config requires box >= 1");
    std::mt19937_64 rng(seed);
    auto draw_int = [&](i64 lo, i64 hi) {
        return lo + static_cast<i64>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto draw_rational = [&] {
        return BigRational(draw_int(-box, box), draw_int(1, box));
    };
    ConfigSample s;
    int rejections = 0;
    while (s.count() < k) {
        std::vector<GaussianRational> point;
        point.reserve(static_cast<std::size_t>(d));
        for (i64 v = 0; v < d; ++v) point.push_back({draw_rational(), draw_rational()});
        bool fresh = true;
        for (const auto& existing : s.points) fresh &= !(existing == point);
        if (fresh) {
            s.points.push_back(std::move(point));
        } else if (++rejections > 10000) {
            throw sampling_error("could not draw distinct points; enlarge box");
        }
    }
    return s;
}

struct VerifyOutcome {
    i64 samples = 0;
    i64 passes = 0;
    i64 failures = 0;

    bool all_pass() const { return failures == 0; }
};

inline VerifyOutcome verify_on_samples(const PolyMapC& f, i64 k, i64 samples,
                                       std::uint64_t seed, i64 box) {
    VerifyOutcome out;
    out.samples = samples;
    for (i64 i = 0; i < samples; ++i) {
        ConfigSample s = random_config(seed + static_cast<std::uint64_t>(i), k, f.arity, box);
        if (check_k_regular_on_sample(f, s)) {
            ++out.passes;
        } else {
            ++out.failures;
        }
    }
    return out;
}

}  // namespace regemb
