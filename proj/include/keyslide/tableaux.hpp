#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "keyslide/compositions.hpp"

namespace keyslide {

/// Lattice cell in coordinate (French) convention: rows grow upward and
/// start at 1; Kohnert tableaux may use rows <= 0 (virtual diagrams).
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Bijective labeling of a diagram. Skew shapes carry their skewed cells;
/// product shapes record the column where the left factor ends.
struct Filling {
    std::map<Cell, int> entries;
    std::set<Cell> skew;
    int boundary = 0;  // 0: not a product shape

    int size() const { return static_cast<int>(entries.size()); }
    int entry_at(const Cell& c) const;  // 0 if absent
    Cell cell_of(int value) const;

    auto operator<=>(const Filling&) const = default;

    /// Paper-style layout, one row per line from the top row down; skewed
    /// cells render as ##, empty rows inside the span are preserved.
    std::string render() const;
};

std::vector<Cell> young_diagram_cells(const Partition& lambda);
std::vector<Cell> key_diagram_cells(const WeakComposition& a);

// --- standard Young tableaux ---------------------------------------------

std::vector<Filling> enumerate_syt(const Partition& lambda);
std::vector<Filling> enumerate_skew_syt(const Partition& lambda, const Partition& mu);
/// Concatenation mu (x) nu, the nu factor placed to the right.
std::vector<Filling> enumerate_product_syt(const Partition& mu, const Partition& nu);

bool is_valid_syt(const Filling& f);

/// Descent set {i : i+1 precedes i in the column word read top to bottom,
/// columns left to right}; works for straight, skew, and product shapes.
std::set<int> syt_descent_set(const Filling& f);
StrongComposition syt_descent_composition(const Filling& f);

/// The unique tableau whose reverse row reading word is n...21.
Filling super_standard(const Partition& lambda);

// --- standard key tableaux -------------------------------------------------

std::vector<Filling> enumerate_skt(const WeakComposition& a);
std::vector<Filling> enumerate_skew_skt(const WeakComposition& d, const WeakComposition& a);
std::vector<Filling> enumerate_product_skt(const WeakComposition& a, const WeakComposition& b);

bool is_valid_skt(const Filling& f);

std::set<int> skt_descent_set(const Filling& f);
/// Runs of n...1 broken at descents, block containing n first.
std::vector<std::vector<int>> skt_runs(const Filling& f);
/// Run lengths from the block containing 1 up to the block containing n.
StrongComposition skt_descent_composition(const Filling& f);
/// Weak descent composition, padded to `length`. The row of each run block
/// is the minimum over all of its entries, capped one below the block above.
VirtualOrWeak weak_descent_tableau(const Filling& f, int length);

/// The unique element of SKT(a) whose reverse row reading word (rows bottom
/// to top, right to left) is the identity.
Filling yamanouchi_key(const WeakComposition& a);

bool is_yamanouchi_key(const Filling& f);

/// Product of two key fillings: relabel T and U through the slot alphabet of
/// `pattern` (letters 'A' for T, 'B' for U; slot p of N carries label N+1-p)
/// and concatenate the diagrams.
Filling assemble_product_skt(const Filling& T, const Filling& U, int width_a,
                             const std::string& pattern);

/// Inverse of the assembly: standardized factors and the slot pattern.
struct ProductFactors {
    Filling left;
    Filling right;
    std::string pattern;
};
ProductFactors disassemble_product_skt(const Filling& f, int width_a);

// --- Kohnert tableaux -------------------------------------------------------

/// Filling of a diagram by entries 1^(a_1)...n^(a_n): one i in each column
/// 1..a_i, entries at least their row, the i's weakly descending left to
/// right, plus the column-crossing condition.
struct KohnertTableau {
    std::map<Cell, int> entries;
    WeakComposition shape;

    auto operator<=>(const KohnertTableau&) const = default;
    std::string render() const;
};

/// Quasi-Yamanouchi Kohnert tableaux (virtual elements included).
std::vector<KohnertTableau> enumerate_qkt(const WeakComposition& a);

bool is_valid_kohnert(const KohnertTableau& d);
bool is_quasi_yamanouchi(const KohnertTableau& d);

/// Row counts; virtual (nullopt) when a cell sits at row <= 0.
VirtualOrWeak kohnert_weight(const KohnertTableau& d);

/// Relabel along rows from the top with n..1, then return every cell to the
/// row given by its Kohnert entry.
Filling ascend(const KohnertTableau& d);

/// Push cells down minimally until the reverse reading word is the identity,
/// then relabel cells by their original row.
KohnertTableau descend(const Filling& t, const WeakComposition& shape);

/// Shape of a straight key filling (cells must form a key diagram).
WeakComposition shape_of_key_filling(const Filling& f, int length);

// --- flattening --------------------------------------------------------------

/// Column-wise flattening map onto the sorted shape: entries fall and sort to
/// descend upward (skew cells counted smaller than all entries), then labels
/// are complemented i -> n+1-i. Sends SKT(a) to SYT(sort(a)), reversing the
/// descent set; extends to skew and product shapes.
Filling phi_flatten(const Filling& f);

}  // namespace keyslide
