#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "keyslide/compositions.hpp"
#include "keyslide/polynomial.hpp"

namespace keyslide {

enum class Basis { Monomial, FundamentalF, Slide, Schur, Key };

std::string basis_name(Basis b);

/// Finitely supported integer combination of basis elements. Index kind
/// depends on the basis: partitions for Schur, strong compositions for F,
/// weak compositions otherwise.
struct BasisExpansion {
    Basis basis = Basis::Monomial;
    std::map<std::vector<int>, std::int64_t> terms;

    BasisExpansion() = default;
    explicit BasisExpansion(Basis b) : basis(b) {}

    void add(const std::vector<int>& index, std::int64_t c);
    std::int64_t coefficient(const std::vector<int>& index) const;
    std::int64_t total_mass() const;  // sum of coefficients
    bool nonnegative() const;
    int term_count() const { return static_cast<int>(terms.size()); }

    bool operator==(const BasisExpansion& o) const = default;

    /// "1*key(3,1,0,1) + 1*key(3,2,0,0)", sorted lexicographically on index.
    std::string to_string() const;
};

/// Fundamental quasisymmetric polynomial F_alpha truncated to nvars variables.
Polynomial fundamental_F(const StrongComposition& alpha, int nvars);

/// Fundamental slide polynomial; nvars = length of a.
Polynomial fundamental_slide(const WeakComposition& a);

/// Generating-polynomial contribution of a possibly virtual index (0 for virtual).
Polynomial slide_or_zero(const VirtualOrWeak& a, int nvars);

/// Expands p exactly in the slide basis by repeatedly stripping a minimal
/// surviving exponent in prefix order (lexicographically smallest among
/// minimal ones) and subtracting that slide polynomial.
BasisExpansion expand_in_slide(const Polynomial& p);

/// Same triangular strip-and-subtract loop against caller-supplied basis
/// polynomials. The generator receives the chosen index (length = p.nvars).
BasisExpansion expand_triangular(const Polynomial& p, Basis basis,
                                 const std::function<Polynomial(const WeakComposition&)>& basis_poly);

// Defined with the named bases (they need key and Schur polynomials).
BasisExpansion expand_in_key(const Polynomial& p);
BasisExpansion expand_in_schur(const Polynomial& p);
Polynomial realize(const BasisExpansion& e, int nvars);

}  // namespace keyslide
