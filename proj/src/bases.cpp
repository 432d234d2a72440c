#include "keyslide/bases.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

#include "keyslide/dualequiv.hpp"

namespace keyslide {

// ---------------------------------------------------------------------------
// Schur and key polynomials
// ---------------------------------------------------------------------------

Polynomial schur_poly(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("schur_poly: k < 0");
    std::map<StrongComposition, std::int64_t> mult;
    for (const Filling& t : enumerate_syt(lambda)) mult[syt_descent_composition(t)] += 1;
    Polynomial out = Polynomial::zero(k);
    for (const auto& [alpha, m] : mult) out = out + m * fundamental_F(alpha, k);
    return out;
}

const Polynomial& key_poly(const WeakComposition& a) {
    static std::map<WeakComposition, Polynomial> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
    }
    int len = a.length();
    Polynomial via_skt = Polynomial::zero(len);
    for (const Filling& t : enumerate_skt(a))
        via_skt = via_skt + slide_or_zero(weak_descent_tableau(t, len), len);
    if (a.size() <= key_poly_dual_model_limit) {
        Polynomial via_qkt = Polynomial::zero(len);
        for (const KohnertTableau& d : enumerate_qkt(a))
            via_qkt = via_qkt + slide_or_zero(kohnert_weight(d), len);
        if (!(via_skt == via_qkt))
            throw std::logic_error("key_poly: tableau models disagree for " + a.to_string());
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(a, std::move(via_skt)).first->second;
}

// ---------------------------------------------------------------------------
// triangular expansions against the named bases
// ---------------------------------------------------------------------------

BasisExpansion expand_in_key(const Polynomial& p) {
    return expand_triangular(p, Basis::Key, [](const WeakComposition& a) { return key_poly(a); });
}

BasisExpansion expand_in_schur(const Polynomial& p) {
    if (!p.is_symmetric())
        throw std::invalid_argument("expand_in_schur: polynomial is not symmetric");
    BasisExpansion keys = expand_in_key(p);
    BasisExpansion out(Basis::Schur);
    for (const auto& [idx, c] : keys.terms) {
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] > idx[i + 1])
                throw std::logic_error("expand_in_schur: non-increasing key index " +
                                       WeakComposition(idx).to_string());
        out.add(sorted_parts(WeakComposition(idx)).parts, c);
    }
    return out;
}

Polynomial realize(const BasisExpansion& e, int nvars) {
    Polynomial out = Polynomial::zero(nvars);
    for (const auto& [idx, c] : e.terms) {
        switch (e.basis) {
            case Basis::Monomial:
                out.add_term(WeakComposition(idx).parts, c);
                break;
            case Basis::FundamentalF:
                out = out + c * fundamental_F(StrongComposition(idx), nvars);
                break;
            case Basis::Slide:
                if (static_cast<int>(idx.size()) != nvars)
                    throw std::invalid_argument("realize: slide index length != nvars");
                out = out + c * fundamental_slide(WeakComposition(idx));
                break;
            case Basis::Schur:
                out = out + c * schur_poly(Partition(idx), nvars);
                break;
            case Basis::Key:
                if (static_cast<int>(idx.size()) != nvars)
                    throw std::invalid_argument("realize: key index length != nvars");
                out = out + c * key_poly(WeakComposition(idx));
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Schubert and Stanley
// ---------------------------------------------------------------------------

BasisExpansion schubert_slide_expansion(const Permutation& w) {
    BasisExpansion out(Basis::Slide);
    int length = w.n() - 1;
    for (const ReducedWord& rho : reduced_words(w))
        if (VirtualOrWeak des = weak_descent_word(rho, length))
            out.add(des->parts, 1);
    return out;
}

Polynomial schubert_poly(const Permutation& w) {
    return realize(schubert_slide_expansion(w), w.n() - 1);
}

BasisExpansion stanley_F_expansion(const Permutation& w) {
    BasisExpansion out(Basis::FundamentalF);
    for (const ReducedWord& rho : reduced_words(w)) out.add(descent_composition(rho).parts, 1);
    return out;
}

Polynomial stanley_poly(const Permutation& w, int nvars) {
    return realize(stanley_F_expansion(w), nvars);
}

BasisExpansion stanley_schur_expansion(const Permutation& w) {
    int n = static_cast<int>(inversions(w));
    InvolutionFamily<ReducedWord> fam = family_reduced_words(w, std::max(w.n() - 1, 1));
    BasisExpansion out(Basis::Schur);
    std::set<ReducedWord> seen;
    for (const ReducedWord& rho : fam.carrier) {
        if (seen.count(rho)) continue;
        std::map<ReducedWord, Filling> phi = rectify_class(fam, rho);
        Partition lambda;
        int supers = 0;
        for (const auto& [y, img] : phi) {
            seen.insert(y);
            WeakComposition shape(
                [&] {
                    std::vector<int> rows;
                    for (const auto& [c, v] : img.entries) {
                        if (c.row > static_cast<int>(rows.size())) rows.resize(static_cast<size_t>(c.row), 0);
                        rows[static_cast<size_t>(c.row - 1)] += 1;
                    }
                    return rows;
                }());
            if (img == super_standard(sorted_parts(shape))) {
                lambda = sorted_parts(shape);
                ++supers;
            }
        }
        if (supers != 1)
            throw std::logic_error("stanley_schur_expansion: class without unique super-standard image");
        out.add(lambda.parts, 1);
    }
    BasisExpansion cross = expand_in_schur(stanley_poly(w, std::max(n, 1)));
    if (!(cross == out))
        throw std::logic_error("stanley_schur_expansion: rectification count disagrees with expansion");
    return out;
}

BasisExpansion schubert_key_expansion(const Permutation& w) {
    int m = stabilization_shift(w);
    Permutation ws = shift(w, m);
    int length = ws.n() - 1;
    InvolutionFamily<ReducedWord> fam = family_reduced_words(ws, length);
    BasisExpansion out(Basis::Key);
    std::set<ReducedWord> seen;
    for (const ReducedWord& rho : fam.carrier) {
        if (seen.count(rho)) continue;
        std::vector<ReducedWord> cls = orbit(fam, rho, 2, fam.n - 1);
        Polynomial sum = Polynomial::zero(length);
        for (const ReducedWord& y : cls) {
            seen.insert(y);
            sum = sum + slide_or_zero(fam.des(y), length);
        }
        BasisExpansion e = expand_in_key(sum);
        if (e.term_count() != 1 || e.terms.begin()->second != 1)
            throw std::logic_error("schubert_key_expansion: class is not a single key polynomial");
        WeakComposition a(e.terms.begin()->first);
        // the induced map to SKT(a) preserves weak descents, so the
        // yamanouchi word of the class is exactly the member with des = a
        int yam = 0;
        for (const ReducedWord& y : cls)
            if (fam.des(y) == VirtualOrWeak(a)) ++yam;
        if (yam != 1)
            throw std::logic_error("schubert_key_expansion: class without unique yamanouchi member");
        out.add(drop_leading_zeros(a, m).parts, 1);
    }
    if (!out.nonnegative())
        throw std::logic_error("schubert_key_expansion: negative coefficient");
    BasisExpansion cross = expand_in_key(schubert_poly(w));
    if (!(cross == out))
        throw std::logic_error("schubert_key_expansion: yamanouchi count disagrees with expansion for " +
                               w.to_string());
    return out;
}

// ---------------------------------------------------------------------------
// shuffle and slide products
// ---------------------------------------------------------------------------

StrongComposition word_descents(const std::vector<int>& word) {
    std::vector<int> parts;
    int run = 0;
    for (size_t p = 0; p < word.size(); ++p) {
        ++run;
        if (p + 1 == word.size() || word[p] > word[p + 1]) {
            parts.push_back(run);
            run = 0;
        }
    }
    return StrongComposition(std::move(parts));
}

VirtualOrWeak slide_word_descent(const std::vector<int>& word, int n) {
    std::vector<int> des(static_cast<size_t>(n), 0);
    int prev_row = 0;
    size_t p = 0;
    bool first = true;
    while (p < word.size()) {
        size_t q = p;
        while (q + 1 < word.size() && word[q] <= word[q + 1]) ++q;
        int row = (word[p] + 1) / 2;
        if (!first) row = std::min(row, prev_row - 1);
        if (row <= 0) return std::nullopt;
        if (row > n) throw std::invalid_argument("slide_word_descent: letter too large for n");
        des[static_cast<size_t>(row - 1)] = static_cast<int>(q - p + 1);
        prev_row = row;
        first = false;
        p = q + 1;
    }
    return WeakComposition(std::move(des));
}

namespace {

// all interleavings of two fixed words, in order
void for_each_shuffle(const std::vector<int>& A, const std::vector<int>& B,
                      const std::function<void(const std::vector<int>&)>& fn) {
    size_t n = A.size() + B.size();
    std::vector<int> merged(n);
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == A.size() && j == B.size()) {
            fn(merged);
            return;
        }
        if (i < A.size()) {
            merged[i + j] = A[i];
            rec(i + 1, j);
        }
        if (j < B.size()) {
            merged[i + j] = B[j];
            rec(i, j + 1);
        }
    };
    rec(0, 0);
}

std::vector<int> plateau_witness(const StrongComposition& alpha, int base) {
    std::vector<int> word;
    int k = alpha.length();
    for (int j = 1; j <= k; ++j)
        for (int r = 0; r < alpha[j - 1]; ++r) word.push_back(base + k - j);
    return word;
}

std::vector<int> staircase_witness(const StrongComposition& alpha, int base) {
    std::vector<int> word;
    int k = alpha.length();
    int big = alpha.size() + 2;
    for (int j = 1; j <= k; ++j)
        for (int r = 0; r < alpha[j - 1]; ++r) word.push_back(base + (k - j) * big + r);
    return word;
}

BasisExpansion shuffle_once(const std::vector<int>& A, const std::vector<int>& B) {
    BasisExpansion out(Basis::FundamentalF);
    for_each_shuffle(A, B, [&](const std::vector<int>& c) { out.add(word_descents(c).parts, 1); });
    return out;
}

}  // namespace

BasisExpansion shuffle_product(const StrongComposition& alpha, const StrongComposition& beta) {
    std::vector<int> a1 = plateau_witness(alpha, 1);
    std::vector<int> b1 = plateau_witness(beta, alpha.length() + 2);
    std::vector<int> a2 = staircase_witness(alpha, 1);
    std::vector<int> b2 = staircase_witness(beta, (alpha.length() + 1) * (alpha.size() + 2) + 2);
    for (auto [word, comp] : {std::pair(&a1, &alpha), std::pair(&b1, &beta), std::pair(&a2, &alpha),
                              std::pair(&b2, &beta)})
        if (!(word_descents(*word) == *comp))
            throw std::logic_error("shuffle_product: witness word has wrong descents");
    BasisExpansion e1 = shuffle_once(a1, b1);
    BasisExpansion e2 = shuffle_once(a2, b2);
    if (!(e1 == e2)) throw std::logic_error("shuffle_product: witness choice changed the result");
    return e1;
}

BasisExpansion slide_product(const WeakComposition& a, const WeakComposition& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("slide_product: compositions must have equal length");
    int n = a.length();
    std::vector<int> A, B;
    for (int i = n; i >= 1; --i)
        for (int r = 0; r < a[i - 1]; ++r) A.push_back(2 * i - 1);
    for (int i = n; i >= 1; --i)
        for (int r = 0; r < b[i - 1]; ++r) B.push_back(2 * i);
    if (!(slide_word_descent(A, n) == VirtualOrWeak(a)) ||
        !(slide_word_descent(B, n) == VirtualOrWeak(b)))
        throw std::logic_error("slide_product: witness word has wrong weak descents");
    BasisExpansion out(Basis::Slide);
    for_each_shuffle(A, B, [&](const std::vector<int>& c) {
        if (VirtualOrWeak d = slide_word_descent(c, n)) out.add(d->parts, 1);
    });
    BasisExpansion cross = expand_in_slide(fundamental_slide(a) * fundamental_slide(b));
    if (!(cross == out))
        throw std::logic_error("slide_product: shuffle model disagrees with polynomial product");
    return out;
}

// ---------------------------------------------------------------------------
// skew and product expansions
// ---------------------------------------------------------------------------

Polynomial skew_key_poly(const WeakComposition& d, const WeakComposition& a) {
    int len = d.length();
    Polynomial out = Polynomial::zero(len);
    for (const Filling& t : enumerate_skew_skt(d, a))
        out = out + slide_or_zero(weak_descent_tableau(t, len), len);
    return out;
}

namespace {

// one key polynomial per equivalence class of the carrier; classes that are
// virtual in every member contribute nothing
BasisExpansion classes_in_key(const InvolutionFamily<Filling>& fam) {
    BasisExpansion out(Basis::Key);
    std::set<Filling> seen;
    for (const Filling& x : fam.carrier) {
        if (seen.count(x)) continue;
        std::vector<Filling> cls = orbit(fam, x, 2, fam.n - 1);
        Polynomial sum = Polynomial::zero(fam.stat_length);
        for (const Filling& y : cls) {
            seen.insert(y);
            sum = sum + slide_or_zero(fam.des(y), fam.stat_length);
        }
        if (sum.is_zero()) continue;
        BasisExpansion e = expand_in_key(sum);
        if (e.term_count() != 1 || e.terms.begin()->second != 1)
            throw std::logic_error("class generating polynomial is not a single key polynomial: " +
                                   e.to_string());
        out.add(e.terms.begin()->first, 1);
    }
    return out;
}

}  // namespace

BasisExpansion skew_key_expansion(const WeakComposition& d, const Partition& lambda) {
    WeakComposition a = increasing_composition(lambda, d.length());
    if (!contained_in(a, d))
        throw std::invalid_argument("skew_key_expansion: inner shape not contained in outer");
    BasisExpansion out = classes_in_key(family_skew_skt(d, a));
    if (!out.nonnegative()) throw std::logic_error("skew_key_expansion: negative coefficient");
    BasisExpansion cross = expand_in_key(skew_key_poly(d, a));
    if (!(cross == out))
        throw std::logic_error("skew_key_expansion: class count disagrees with expansion");
    return out;
}

Polynomial skew_schur_poly(const Partition& lambda, const Partition& mu, int k) {
    Polynomial out = Polynomial::zero(k);
    for (const Filling& t : enumerate_skew_syt(lambda, mu))
        out = out + fundamental_F(syt_descent_composition(t), k);
    return out;
}

namespace {

Partition shape_of_image(const Filling& img) {
    std::vector<int> rows;
    for (const auto& [c, v] : img.entries) {
        if (c.row > static_cast<int>(rows.size())) rows.resize(static_cast<size_t>(c.row), 0);
        rows[static_cast<size_t>(c.row - 1)] += 1;
    }
    return Partition(rows);
}

// one Schur function per rectification class, counted by the shape of the
// unique member rectifying to a super-standard tableau
BasisExpansion classes_in_schur(const InvolutionFamily<Filling>& fam) {
    BasisExpansion out(Basis::Schur);
    std::set<Filling> seen;
    for (const Filling& x : fam.carrier) {
        if (seen.count(x)) continue;
        std::map<Filling, Filling> phi = rectify_class(fam, x);
        int supers = 0;
        Partition lambda;
        for (const auto& [y, img] : phi) {
            seen.insert(y);
            Partition shape = shape_of_image(img);
            if (img == super_standard(shape)) {
                lambda = shape;
                ++supers;
            }
        }
        if (supers != 1) throw std::logic_error("rectification class without unique super-standard image");
        out.add(lambda.parts, 1);
    }
    return out;
}

}  // namespace

BasisExpansion skew_schur_expansion(const Partition& lambda, const Partition& mu) {
    return classes_in_schur(family_skew_syt(lambda, mu));
}

BasisExpansion lr_coefficients(const Partition& mu, const Partition& nu) {
    return classes_in_schur(family_product_syt(mu, nu));
}

BasisExpansion key_times_schur(const WeakComposition& b, const Partition& lambda, int n) {
    if (b.length() != n)
        throw std::invalid_argument(
            "key_times_schur: factors must have equal length (the product rule needs the "
            "partition-shaped factor on matching rows)");
    WeakComposition a = increasing_composition(lambda, n);
    BasisExpansion out = classes_in_key(family_product_skt(b, a));
    if (!out.nonnegative()) throw std::logic_error("key_times_schur: negative coefficient");
    Polynomial product = key_poly(b) * schur_poly(lambda, n);
    BasisExpansion cross = expand_in_key(product);
    if (!(cross == out))
        throw std::logic_error("key_times_schur: class count disagrees with expansion");
    return out;
}

namespace {

std::vector<int> slide_witness_word(const WeakComposition& a, bool even_letters) {
    std::vector<int> word;
    for (int i = a.length(); i >= 1; --i)
        for (int r = 0; r < a[i - 1]; ++r) word.push_back(2 * i - (even_letters ? 0 : 1));
    return word;
}

}  // namespace

VirtualOrWeak product_skt_descent(const Filling& f, int width_a, int len_a, int len_b) {
    ProductFactors pf = disassemble_product_skt(f, width_a);
    VirtualOrWeak da = weak_descent_tableau(pf.left, len_a);
    VirtualOrWeak db = weak_descent_tableau(pf.right, len_b);
    if (!da || !db) return std::nullopt;
    int len = std::max(len_a, len_b);
    std::vector<int> A = slide_witness_word(pad_to(*da, len), false);
    std::vector<int> B = slide_witness_word(pad_to(*db, len), true);
    std::vector<int> merged;
    size_t ia = 0, ib = 0;
    for (char ch : pf.pattern) merged.push_back(ch == 'A' ? A[ia++] : B[ib++]);
    return slide_word_descent(merged, len);
}

BasisExpansion key_product_slide_model(const WeakComposition& a, const WeakComposition& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("key_product_slide_model: compositions must have equal length");
    int n = a.length();
    int width = 0;
    for (int v : a.parts) width = std::max(width, v);
    BasisExpansion out(Basis::Slide);
    for (const Filling& t : enumerate_product_skt(a, b))
        if (VirtualOrWeak des = product_skt_descent(t, width, n, n)) out.add(des->parts, 1);
    BasisExpansion cross = expand_in_slide(key_poly(a) * key_poly(b));
    if (!(cross == out))
        throw std::logic_error("key_product_slide_model: tableau model disagrees with product");
    return out;
}

BasisExpansion key_product_key_expansion(const WeakComposition& a, const WeakComposition& b) {
    int len = std::max(a.length(), b.length());
    return expand_in_key(key_poly(pad_to(a, len)) * key_poly(pad_to(b, len)));
}

}  // namespace keyslide
