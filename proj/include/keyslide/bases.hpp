#pragma once

#include "keyslide/compositions.hpp"
#include "keyslide/expansion.hpp"
#include "keyslide/permwords.hpp"
#include "keyslide/polynomial.hpp"
#include "keyslide/tableaux.hpp"

namespace keyslide {

/// Schur polynomial s_lambda(x_1..x_k) as the quasisymmetric generating
/// function of SYT(lambda).
Polynomial schur_poly(const Partition& lambda, int k);

/// Key polynomial kappa_a, computed from both tableau models (quasi-
/// Yamanouchi Kohnert tableaux and standard key tableaux) with the results
/// asserted equal; memoized. Shapes larger than `key_poly_dual_model_limit`
/// skip the Kohnert-side recomputation.
const Polynomial& key_poly(const WeakComposition& a);
inline constexpr int key_poly_dual_model_limit = 8;

/// Schubert polynomial in n-1 variables for w in S_n, as the slide
/// generating polynomial of the nonvirtual reduced expressions.
Polynomial schubert_poly(const Permutation& w);
BasisExpansion schubert_slide_expansion(const Permutation& w);

/// Stanley symmetric function truncated to nvars variables.
Polynomial stanley_poly(const Permutation& w, int nvars);
BasisExpansion stanley_F_expansion(const Permutation& w);

/// Schur expansion of the Stanley symmetric function by rectifying every
/// reduced expression and counting super-standard ones; cross-checked
/// against the triangular expansion of the realized polynomial.
BasisExpansion stanley_schur_expansion(const Permutation& w);

/// Key expansion of the Schubert polynomial by weakly rectifying the reduced
/// expressions of the stabilized permutation and counting yamanouchi ones;
/// cross-checked against the triangular expansion and checked nonnegative.
BasisExpansion schubert_key_expansion(const Permutation& w);

/// Descent composition of a word with repeated letters allowed (descents at
/// strict drops); used by the shuffle machinery.
StrongComposition word_descents(const std::vector<int>& word);

/// Weak descent composition of a slide shuffle word: maximal weakly
/// increasing runs, block rows ceil(first letter / 2) capped by the chain.
VirtualOrWeak slide_word_descent(const std::vector<int>& word, int n);

/// F-expansion of F_alpha * F_beta over all shuffles of two witness words;
/// computed for two distinct witness pairs and asserted identical.
BasisExpansion shuffle_product(const StrongComposition& alpha, const StrongComposition& beta);

/// Slide expansion of F_a * F_b over nonvirtual slide shuffles;
/// cross-checked against the triangular expansion of the product.
BasisExpansion slide_product(const WeakComposition& a, const WeakComposition& b);

/// Skew key polynomial of shape d/a.
Polynomial skew_key_poly(const WeakComposition& d, const WeakComposition& a);

/// Key expansion of kappa_{d/a(lambda)} for the weakly increasing inner
/// shape sorting to lambda; every equivalence class contributes one key
/// polynomial. Checked nonnegative and against the triangular expansion.
BasisExpansion skew_key_expansion(const WeakComposition& d, const Partition& lambda);

Polynomial skew_schur_poly(const Partition& lambda, const Partition& mu, int k);

/// Schur expansion of s_{lambda/mu} by classes of skew tableaux.
BasisExpansion skew_schur_expansion(const Partition& lambda, const Partition& mu);

/// Littlewood-Richardson coefficients of s_mu s_nu via product tableaux.
BasisExpansion lr_coefficients(const Partition& mu, const Partition& nu);

/// Key expansion of kappa_b * s_lambda(x_1..x_n) via the product shape
/// b (x) a(lambda,n), the partition factor on the right. Requires
/// length(b) == n; one key polynomial per nonvirtual equivalence class.
BasisExpansion key_times_schur(const WeakComposition& b, const Partition& lambda, int n);

/// Weak descent of a product tableau transported through the factor
/// bijection: the factors' weak descents pick shuffle witness words and the
/// slot pattern merges them. Makes the product tableau generating sum equal
/// the polynomial product pair by pair.
VirtualOrWeak product_skt_descent(const Filling& f, int width_a, int len_a, int len_b);

/// Slide expansion of kappa_a * kappa_b over product key tableaux with the
/// transported descents; cross-checked against the triangular expansion.
BasisExpansion key_product_slide_model(const WeakComposition& a, const WeakComposition& b);

/// Signed key expansion of kappa_a * kappa_b.
BasisExpansion key_product_key_expansion(const WeakComposition& a, const WeakComposition& b);

}  // namespace keyslide
