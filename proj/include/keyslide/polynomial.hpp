#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "keyslide/compositions.hpp"

namespace keyslide {

/// Coefficient arithmetic is exact: overflow throws instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (add)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (mul)");
    return r;
}

/// Sparse polynomial with integer coefficients: finitely supported map from
/// exponent vectors (all of length nvars) to nonzero coefficients.
struct Polynomial {
    int nvars = 0;
    std::map<std::vector<int>, std::int64_t> terms;

    Polynomial() = default;
    explicit Polynomial(int n) : nvars(n) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial one(int nvars);
    static Polynomial monomial(const WeakComposition& exps, std::int64_t coef = 1);

    bool is_zero() const { return terms.empty(); }
    std::int64_t coefficient(const std::vector<int>& e) const;

    /// Adds c * x^e in place, pruning a zero result.
    void add_term(const std::vector<int>& e, std::int64_t c);

    Polynomial padded(int new_nvars) const;

    bool is_homogeneous() const;
    /// Invariance under every adjacent variable swap.
    bool is_symmetric() const;

    bool operator==(const Polynomial& o) const = default;

    std::string to_string() const;  // "1 x^(0,3,2) + ..." sorted lex
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(std::int64_t c, const Polynomial& p);

}  // namespace keyslide
