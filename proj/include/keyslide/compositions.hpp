#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace keyslide {

/// Weak composition: finite sequence of nonnegative integers. Length is
/// significant; padding and flattening are always explicit.
struct WeakComposition {
    std::vector<int> parts;

    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> p);
    WeakComposition(std::initializer_list<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;  // sum of parts
    int operator[](int i) const { return parts[static_cast<size_t>(i)]; }

    auto operator<=>(const WeakComposition&) const = default;

    std::string to_string() const;  // "(0,3,0,2)"
    static WeakComposition parse(const std::string& text);
};

/// Strong composition: finite sequence of positive integers.
struct StrongComposition {
    std::vector<int> parts;

    StrongComposition() = default;
    explicit StrongComposition(std::vector<int> p);
    StrongComposition(std::initializer_list<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    int operator[](int i) const { return parts[static_cast<size_t>(i)]; }

    auto operator<=>(const StrongComposition&) const = default;

    std::string to_string() const;
    static StrongComposition parse(const std::string& text);
};

/// Partition: weakly decreasing sequence of positive integers.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);  // must be weakly decreasing
    Partition(std::initializer_list<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    int operator[](int i) const { return parts[static_cast<size_t>(i)]; }
    /// part(i) with 1-based index, 0 beyond the length
    int part(int i) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;
    static Partition parse(const std::string& text);
};

/// A weak composition or the distinguished virtual value (nullopt).
/// Virtual objects contribute zero to generating polynomials.
using VirtualOrWeak = std::optional<WeakComposition>;

StrongComposition flat(const WeakComposition& a);
Partition sorted_parts(const WeakComposition& a);
Partition sorted_parts(const StrongComposition& a);

/// True iff beta refines alpha: the partial sums of alpha all occur among
/// the partial sums of beta (totals must agree).
bool refines(const StrongComposition& beta, const StrongComposition& alpha);

/// True iff b_1+...+b_k >= a_1+...+a_k for all k. Throws on length mismatch.
bool prefix_geq(const WeakComposition& b, const WeakComposition& a);

/// 0^m x a: prepend m zeros.
WeakComposition prepend_zeros(const WeakComposition& a, int m);

/// Drop m leading zeros; throws if any of the first m parts is nonzero.
WeakComposition drop_leading_zeros(const WeakComposition& a, int m);

/// The weakly increasing weak composition of length k sorting to lambda.
WeakComposition increasing_composition(const Partition& lambda, int k);

WeakComposition pad_to(const WeakComposition& a, int length);

/// True iff a_i <= d_i for all i (equal lengths required).
bool contained_in(const WeakComposition& a, const WeakComposition& d);

bool contained_in(const Partition& mu, const Partition& lambda);

/// All weak compositions of total `size` with `length` parts.
std::vector<WeakComposition> weak_compositions(int size, int length);

/// All partitions of n.
std::vector<Partition> partitions_of(int n);

}  // namespace keyslide
