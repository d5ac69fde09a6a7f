#pragma once

// Exact complex-rational arithmetic and fraction-free rank computation.
// No floating point anywhere: "linearly independent" is a zero-test, and
// exactness removes tolerance policy entirely.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <regemb/errors.hpp>

namespace regemb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;  // auto-normalized

// A complex number with exact rational real and imaginary parts.
struct GaussianRational {
    BigRational re = 0;
    BigRational im = 0;

    bool is_zero() const { return re == 0 && im == 0; }

    bool operator==(const GaussianRational&) const = default;

    GaussianRational operator+(const GaussianRational& o) const {
        return {re + o.re, im + o.im};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re - o.re, im - o.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw contract_violation("division by zero");
        BigRational norm = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / norm, (im * o.re - re * o.im) / norm};
    }

    std::string to_string() const {
        auto rat = [](const BigRational& q) {
            std::string s = numerator(q).str();
            if (denominator(q) != 1) s += "/" + denominator(q).str();
            return s;
        };
        if (im == 0) return rat(re);
        if (re == 0) return rat(im) + "*i";
        return rat(re) + (im > 0 ? " + " : " - ") + rat(im < 0 ? -im : im) + "*i";
    }
};

inline GaussianRational gaussian(std::int64_t re_num, std::int64_t re_den,
                                 std::int64_t im_num = 0, std::int64_t im_den = 1) {
    if (re_den == 0 || im_den == 0) throw contract_violation("zero denominator");
    return {BigRational(re_num, re_den), BigRational(im_num, im_den)};
}

inline GaussianRational gaussian_one() { return gaussian(1, 1); }

using GaussianMatrix = std::vector<std::vector<GaussianRational>>;

// Exact rank by fraction-free (Bareiss-style) elimination.  Over a field the
// divisions by the previous pivot are exact, and the scheme keeps the
// intermediate entries polynomially sized.
inline std::size_t rank_exact(GaussianMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw contract_violation("ragged matrix");

    GaussianRational prev = gaussian_one();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);

        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = GaussianRational{};
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace regemb
