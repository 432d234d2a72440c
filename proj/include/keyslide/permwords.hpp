#pragma once

#include <string>
#include <vector>

#include "keyslide/compositions.hpp"

namespace keyslide {

/// Permutation in one-line notation, values 1..n.
struct Permutation {
    std::vector<int> oneline;

    Permutation() = default;
    explicit Permutation(std::vector<int> w);
    Permutation(std::initializer_list<int> w);

    static Permutation identity(int n);

    int n() const { return static_cast<int>(oneline.size()); }
    int operator[](int pos) const { return oneline[static_cast<size_t>(pos - 1)]; }  // 1-based
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const;  // "42153" below 10 values, comma-separated above
    static Permutation parse(const std::string& text);
};

/// Reduced word, letters stored in printed order: the leftmost letter is the
/// first simple transposition applied when building the permutation by
/// successive value swaps from the identity.
using ReducedWord = std::vector<int>;

std::string word_to_string(const ReducedWord& rho);

long long inversions(const Permutation& w);

/// Permutation realized by a word (any word, not necessarily reduced).
/// n defaults to (max letter + 1).
Permutation permutation_of_word(const ReducedWord& rho, int n = 0);

bool is_reduced_word(const ReducedWord& rho, const Permutation& w);

/// Complete enumeration of the reduced expressions of w, sorted.
std::vector<ReducedWord> reduced_words(const Permutation& w);

/// Maximal strictly increasing runs, leftmost block first.
struct RunDecomposition {
    std::vector<std::vector<int>> blocks;
    std::string to_string() const;  // "(14|23|1)"
};

RunDecomposition run_decomposition(const ReducedWord& rho);

/// Descent composition: run lengths listed from the rightmost block to the
/// leftmost one.
StrongComposition descent_composition(const ReducedWord& rho);

/// Weak descent composition of a reduced word, padded to `length`; virtual
/// when the row recursion drops to zero or below.
VirtualOrWeak weak_descent_word(const ReducedWord& rho, int length);

/// Grassmannian permutation v(lambda,k): v_i = i + lambda_{k-i+1}, extended
/// minimally to a permutation. Requires k >= length(lambda).
Permutation grassmannian(const Partition& lambda, int k);

/// 1^m x w: prepend the fixed points 1..m and add m to all values.
Permutation shift(const Permutation& w, int m);

/// Smallest m such that no reduced expression of 1^m x w is virtual.
int stabilization_shift(const Permutation& w);

/// All permutations of S_n with exactly k inversions.
std::vector<Permutation> permutations_with_inversions(int n, int k);

std::vector<Permutation> symmetric_group(int n);

}  // namespace keyslide
