#include "keyslide/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace keyslide {

Polynomial Polynomial::one(int nvars) {
    Polynomial p(nvars);
    p.terms[std::vector<int>(static_cast<size_t>(nvars), 0)] = 1;
    return p;
}

Polynomial Polynomial::monomial(const WeakComposition& exps, std::int64_t coef) {
    Polynomial p(exps.length());
    if (coef != 0) p.terms[exps.parts] = coef;
    return p;
}

std::int64_t Polynomial::coefficient(const std::vector<int>& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? 0 : it->second;
}

void Polynomial::add_term(const std::vector<int>& e, std::int64_t c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("add_term: exponent length != nvars");
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms.erase(it);
    }
}

Polynomial Polynomial::padded(int new_nvars) const {
    if (new_nvars < nvars) throw std::invalid_argument("padded: would truncate variables");
    Polynomial out(new_nvars);
    for (const auto& [e, c] : terms) {
        std::vector<int> e2 = e;
        e2.resize(static_cast<size_t>(new_nvars), 0);
        out.terms[std::move(e2)] = c;
    }
    return out;
}

bool Polynomial::is_homogeneous() const {
    if (terms.empty()) return true;
    int deg = std::accumulate(terms.begin()->first.begin(), terms.begin()->first.end(), 0);
    for (const auto& [e, c] : terms)
        if (std::accumulate(e.begin(), e.end(), 0) != deg) return false;
    return true;
}

bool Polynomial::is_symmetric() const {
    for (int i = 0; i + 1 < nvars; ++i) {
        for (const auto& [e, c] : terms) {
            std::vector<int> f = e;
            std::swap(f[static_cast<size_t>(i)], f[static_cast<size_t>(i + 1)]);
            if (coefficient(f) != c) return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms) {
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
        s += std::to_string(a) + " x^" + WeakComposition(e).to_string();
    }
    return s;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    if (p.nvars != q.nvars) throw std::invalid_argument("polynomial add: nvars mismatch");
    Polynomial out = p;
    for (const auto& [e, c] : q.terms) out.add_term(e, c);
    return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    if (p.nvars != q.nvars) throw std::invalid_argument("polynomial sub: nvars mismatch");
    Polynomial out = p;
    for (const auto& [e, c] : q.terms) out.add_term(e, -c);
    return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.nvars != q.nvars) throw std::invalid_argument("polynomial mul: nvars mismatch");
    Polynomial out(p.nvars);
    std::vector<int> e(static_cast<size_t>(p.nvars));
    for (const auto& [ep, cp] : p.terms) {
        for (const auto& [eq, cq] : q.terms) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            out.add_term(e, checked_mul(cp, cq));
        }
    }
    return out;
}

Polynomial operator*(std::int64_t c, const Polynomial& p) {
    Polynomial out(p.nvars);
    if (c == 0) return out;
    for (const auto& [e, k] : p.terms) out.terms[e] = checked_mul(c, k);
    return out;
}

}  // namespace keyslide
