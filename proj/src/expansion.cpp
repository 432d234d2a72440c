#include "keyslide/expansion.hpp"

#include <algorithm>
#include <mutex>

namespace keyslide {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "x^";
        case Basis::FundamentalF: return "F";
        case Basis::Slide: return "slide";
        case Basis::Schur: return "s";
        case Basis::Key: return "key";
    }
    return "?";
}

void BasisExpansion::add(const std::vector<int>& index, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(index, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms.erase(it);
    }
}

std::int64_t BasisExpansion::coefficient(const std::vector<int>& index) const {
    auto it = terms.find(index);
    return it == terms.end() ? 0 : it->second;
}

std::int64_t BasisExpansion::total_mass() const {
    std::int64_t m = 0;
    for (const auto& [i, c] : terms) m = checked_add(m, c);
    return m;
}

bool BasisExpansion::nonnegative() const {
    for (const auto& [i, c] : terms)
        if (c < 0) return false;
    return true;
}

std::string BasisExpansion::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        s += std::to_string(a) + "*" + basis_name(basis) + WeakComposition(idx).to_string();
    }
    return s;
}

namespace {

int degree_of(const std::vector<int>& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

}  // namespace

Polynomial fundamental_F(const StrongComposition& alpha, int nvars) {
    Polynomial p(nvars);
    for (const auto& b : weak_compositions(alpha.size(), nvars))
        if (refines(flat(b), alpha)) p.terms[b.parts] = 1;
    return p;
}

Polynomial fundamental_slide(const WeakComposition& a) {
    static std::map<WeakComposition, Polynomial> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
    }
    Polynomial p(a.length());
    StrongComposition fa = flat(a);
    for (const auto& b : weak_compositions(a.size(), a.length()))
        if (prefix_geq(b, a) && refines(flat(b), fa)) p.terms[b.parts] = 1;
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(a, std::move(p)).first->second;
}

Polynomial slide_or_zero(const VirtualOrWeak& a, int nvars) {
    if (!a) return Polynomial::zero(nvars);
    if (a->length() != nvars) throw std::invalid_argument("slide_or_zero: length mismatch");
    return fundamental_slide(*a);
}

BasisExpansion expand_triangular(const Polynomial& p, Basis basis,
                                 const std::function<Polynomial(const WeakComposition&)>& basis_poly) {
    // Homogeneous components never interact (each basis polynomial is
    // homogeneous), so expand degree by degree. Within one degree the
    // lexicographically smallest surviving exponent is prefix-minimal: if f
    // is strictly below e in prefix order with the same total, the first
    // index where they differ already forces f_i < e_i.
    BasisExpansion out(basis);
    std::map<int, Polynomial> by_degree;
    for (const auto& [e, c] : p.terms) {
        auto [it, inserted] = by_degree.emplace(degree_of(e), Polynomial(p.nvars));
        it->second.terms[e] = c;
    }
    for (auto& [deg, rest] : by_degree) {
        while (!rest.terms.empty()) {
            WeakComposition a(rest.terms.begin()->first);
            std::int64_t c = rest.terms.begin()->second;
            Polynomial basis_elt = basis_poly(a);
            if (basis_elt.coefficient(a.parts) != 1)
                throw std::logic_error("expand_triangular: basis element not unitriangular at " +
                                       a.to_string());
            out.add(a.parts, c);
            rest = rest - c * basis_elt;
            if (rest.coefficient(a.parts) != 0)
                throw std::logic_error("expand_triangular: chosen exponent survived subtraction");
        }
    }
    return out;
}

BasisExpansion expand_in_slide(const Polynomial& p) {
    return expand_triangular(p, Basis::Slide,
                             [](const WeakComposition& a) { return fundamental_slide(a); });
}

}  // namespace keyslide
