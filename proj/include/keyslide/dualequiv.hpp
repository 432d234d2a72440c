#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "keyslide/compositions.hpp"
#include "keyslide/permwords.hpp"
#include "keyslide/tableaux.hpp"

namespace keyslide {

/// Haiman's involution d_i on standard Young tableaux (straight, skew or
/// product shapes): swap i with i+-1 when i-+1 lies between them in the
/// column reading word.
Filling haiman_d(int i, const Filling& syt);

/// The involution on reduced words built from braid and commutation moves.
ReducedWord word_d(int i, const ReducedWord& rho);

/// The involution on standard key tableaux (straight, skew or product).
Filling skt_d(int i, const Filling& skt);

/// Run blocks of a reduced word with their chained row indices, leftmost
/// block first; rows may drop to 0 or below exactly when the word is virtual.
std::vector<std::pair<int, int>> word_weak_rows(const ReducedWord& rho);  // (row, size)

/// Run blocks of a key-tableau filling with their chained row indices, block
/// containing n first.
std::vector<std::pair<int, int>> skt_weak_rows(const Filling& f);  // (row, size)

/// A finite carrier together with a family of involutions apply(i,.) for
/// 1 < i < n and its descent statistics. The windowed statistics restrict to
/// the entries lo..hi of an object (positions for words, values for
/// fillings), keeping the globally chained row indices of the run blocks.
template <class T>
struct InvolutionFamily {
    std::vector<T> carrier;  // sorted, unique
    int n = 0;               // number of entries of each object
    int stat_length = 0;     // padding length of weak descent compositions
    // word families pair descent compositions with the reverse of their
    // class shape under rectification; tableau families pair them straight
    bool reversed_rectification = false;
    std::function<T(int, const T&)> apply;
    std::function<StrongComposition(const T&, int lo, int hi)> Des_window;
    std::function<VirtualOrWeak(const T&, int lo, int hi)> des_window;  // empty if unavailable

    StrongComposition Des(const T& x) const { return Des_window(x, 1, n); }
    VirtualOrWeak des(const T& x) const { return des_window(x, 1, n); }
};

InvolutionFamily<ReducedWord> family_reduced_words(const Permutation& w, int length);
InvolutionFamily<ReducedWord> family_words(std::vector<ReducedWord> carrier, int length);
InvolutionFamily<Filling> family_syt(const Partition& lambda);
InvolutionFamily<Filling> family_skew_syt(const Partition& lambda, const Partition& mu);
InvolutionFamily<Filling> family_product_syt(const Partition& mu, const Partition& nu);
InvolutionFamily<Filling> family_skt(const WeakComposition& a);
InvolutionFamily<Filling> family_skew_skt(const WeakComposition& d, const WeakComposition& a);
InvolutionFamily<Filling> family_product_skt(const WeakComposition& a, const WeakComposition& b);

/// Equivalence class of x under apply(h..i), sorted.
template <class T>
std::vector<T> orbit(const InvolutionFamily<T>& fam, const T& x, int h, int i);

/// Partition of the whole carrier into classes under apply(h..i).
template <class T>
std::vector<std::vector<T>> orbits(const InvolutionFamily<T>& fam, int h, int i);

/// Restriction of a descent composition to the entry window [h, i]:
/// descents outside the window are dropped and positions renormalized.
StrongComposition restrict_Des(const StrongComposition& des, int h, int i);

/// Restriction of a weak descent composition to the entry window [h, i]:
/// run blocks are clipped, keeping their row positions. Virtual input stays
/// virtual. (The family-level windowed statistics refine this on virtual
/// objects, where the blocks' rows are not recoverable from des alone.)
VirtualOrWeak restrict_des(const VirtualOrWeak& des, int h, int i);

struct CheckFailure {
    std::string kind;  // "involution" | "commutation" | "class-expansion"
    int h = 0, i = 0, j = 0;
    std::string witness;
    std::string detail;
};

struct CheckReport {
    bool passed = true;
    long long classes_checked = 0;
    std::vector<CheckFailure> failures;
    std::string to_string() const;
};

template <class T>
CheckReport check_involutions(const InvolutionFamily<T>& fam);

/// Every class restricted to generators h..i with i-h <= 3 must generate a
/// single Schur function (strong) or a single key polynomial (weak, zero
/// allowed for all-virtual classes) through the windowed statistic on
/// entries h-1..i+1.
template <class T>
CheckReport check_class_expansions(const InvolutionFamily<T>& fam, bool weak);

/// Same for a single window width i-h.
template <class T>
CheckReport check_class_expansions_width(const InvolutionFamily<T>& fam, bool weak, int width);

template <class T>
CheckReport check_dual_equivalence(const InvolutionFamily<T>& fam);

template <class T>
CheckReport check_weak_dual_equivalence(const InvolutionFamily<T>& fam);

/// Rectification of the full class of x onto SYT(lambda), where s_lambda is
/// the class generating function: the anchor member maps to the
/// super-standard tableau and images propagate equivariantly.
template <class T>
std::map<T, Filling> rectify_class(const InvolutionFamily<T>& fam, const T& x);

template <class T>
Filling rectify(const InvolutionFamily<T>& fam, const T& x);

/// Weak rectification of the full class of x onto SKT(a), where kappa_a is
/// the class's slide generating polynomial; anchored at the member with
/// weak descent composition a, propagated equivariantly.
template <class T>
std::map<T, Filling> weak_rectify_class(const InvolutionFamily<T>& fam, const T& x);

template <class T>
Filling weak_rectify(const InvolutionFamily<T>& fam, const T& x);

}  // namespace keyslide
