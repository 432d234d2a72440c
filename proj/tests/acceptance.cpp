// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact; no tolerances apply anywhere.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "keyslide/bases.hpp"
#include "keyslide/dualequiv.hpp"

using namespace keyslide;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
}

BasisExpansion make(Basis b, const std::vector<std::pair<std::vector<int>, std::int64_t>>& terms) {
    BasisExpansion e(b);
    for (const auto& [i, c] : terms) e.add(i, c);
    return e;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void criterion1_golden_identities() {
    report("1a Schubert 42153 key expansion",
           schubert_key_expansion(Permutation::parse("42153")) ==
               make(Basis::Key, {{{3, 1, 0, 1}, 1}, {{3, 2, 0, 0}, 1}}));

    report("1b Stanley 42153 Schur expansion",
           stanley_schur_expansion(Permutation::parse("42153")) ==
               make(Basis::Schur, {{{3, 2}, 1}, {{3, 1, 1}, 1}}));

    report("1c Stanley 42153 F expansion (8 terms, multiplicities 1,2,2,1,2,1,1,1)",
           stanley_F_expansion(Permutation::parse("42153")) ==
               make(Basis::FundamentalF,
                    {{{3, 1, 1}, 1}, {{2, 2, 1}, 2}, {{1, 3, 1}, 2}, {{3, 2}, 1},
                     {{1, 2, 2}, 2}, {{1, 1, 3}, 1}, {{2, 1, 2}, 1}, {{2, 3}, 1}}));

    report("1d Schubert 153264 slide expansion (7 terms)",
           schubert_slide_expansion(Permutation::parse("153264")) ==
               make(Basis::Slide,
                    {{{0, 3, 1, 0, 1}, 1}, {{2, 2, 0, 0, 1}, 1}, {{1, 3, 0, 0, 1}, 1},
                     {{0, 3, 2, 0, 0}, 1}, {{2, 2, 1, 0, 0}, 1}, {{1, 3, 1, 0, 0}, 1},
                     {{2, 3, 0, 0, 0}, 1}}));

    report("1e key (0,3,0,2) slide expansion (4 terms)",
           expand_in_slide(key_poly(WeakComposition{0, 3, 0, 2})) ==
               make(Basis::Slide, {{{0, 3, 0, 2}, 1}, {{2, 2, 0, 1}, 1}, {{1, 3, 0, 1}, 1},
                                   {{2, 3, 0, 0}, 1}}));

    report("1f skew key (3,2,3)/(0,1,2) key expansion",
           skew_key_expansion(WeakComposition{3, 2, 3}, Partition{2, 1}) ==
               make(Basis::Key, {{{3, 1, 1}, 1}, {{3, 2, 0}, 1}}));

    report("1g skew key (0,2,1,2)/(0,1,0,0) signed key expansion (7 terms)",
           expand_in_key(skew_key_poly(WeakComposition{0, 2, 1, 2}, WeakComposition{0, 1, 0, 0})) ==
               make(Basis::Key, {{{0, 2, 0, 2}, 1}, {{1, 1, 0, 2}, 1}, {{0, 1, 2, 1}, 1},
                                 {{0, 2, 1, 1}, -1}, {{1, 2, 0, 1}, -1}, {{1, 1, 2, 0}, -1},
                                 {{1, 2, 1, 0}, 1}}));

    report("1h key product (0,2,1,0)x(0,1,0,1) signed key expansion (6 terms)",
           key_product_key_expansion(WeakComposition{0, 2, 1, 0}, WeakComposition{0, 1, 0, 1}) ==
               make(Basis::Key, {{{0, 3, 1, 1}, 1}, {{1, 2, 1, 1}, 1}, {{0, 3, 2, 0}, 1},
                                 {{2, 2, 0, 1}, 1}, {{1, 2, 2, 0}, 1}, {{2, 2, 1, 0}, -1}}));

    report("1i key times Schur (0,2,1,0)x(0,0,1,1) key expansion (4 terms)",
           key_times_schur(WeakComposition{0, 2, 1, 0}, Partition{1, 1}, 4) ==
               make(Basis::Key, {{{0, 3, 1, 1}, 1}, {{1, 2, 1, 1}, 1}, {{0, 3, 2, 0}, 1},
                                 {{0, 2, 2, 1}, 1}}));

    report("1j slide product (2,0,3)x(0,2,1) (12 terms)",
           slide_product(WeakComposition{2, 0, 3}, WeakComposition{0, 2, 1}) ==
               make(Basis::Slide,
                    {{{2, 2, 4}, 1}, {{2, 3, 3}, 1}, {{2, 4, 2}, 1}, {{2, 5, 1}, 1},
                     {{3, 1, 4}, 1}, {{3, 2, 3}, 1}, {{3, 3, 2}, 1}, {{3, 4, 1}, 1},
                     {{4, 0, 4}, 1}, {{4, 1, 3}, 1}, {{4, 2, 2}, 1}, {{4, 3, 1}, 1}}));

    {
        Polynomial prod = schur_poly(Partition{1, 1}, 3) * schur_poly(Partition{1}, 2).padded(3);
        report("1k s(1,1)(x1..x3) * s(1)(x1,x2) key expansion",
               expand_in_key(prod) == make(Basis::Key, {{{1, 1, 1}, 1}, {{0, 2, 1}, 1}}));
    }

    report("1l skew Schur (3,3,2)/(2,1) expansion (3 terms)",
           skew_schur_expansion(Partition{3, 3, 2}, Partition{2, 1}) ==
               make(Basis::Schur, {{{3, 1, 1}, 1}, {{3, 2}, 1}, {{2, 2, 1}, 1}}));

    {
        std::vector<ReducedWord> expected = {
            {4, 2, 1, 2, 3}, {4, 1, 2, 1, 3}, {4, 1, 2, 3, 1}, {2, 4, 1, 2, 3},
            {2, 1, 4, 2, 3}, {2, 1, 2, 4, 3}, {1, 4, 2, 3, 1}, {1, 2, 4, 3, 1},
            {1, 4, 2, 1, 3}, {1, 2, 4, 1, 3}, {1, 2, 1, 4, 3}};
        std::sort(expected.begin(), expected.end());
        report("1m R(42153) is the known 11-element word set",
               reduced_words(Permutation::parse("42153")) == expected);
    }
}

void criterion2_oracle_equivalence() {
    // every w in S_4 and S_5: yamanouchi-count key expansion equals the
    // triangular expansion of the realized polynomial and is nonnegative
    bool schubert_ok = true;
    std::string witness;
    for (int n : {4, 5}) {
        for (const auto& w : symmetric_group(n)) {
            try {
                BasisExpansion e = schubert_key_expansion(w);  // self-cross-checking
                if (!e.nonnegative() || !(realize(e, w.n() - 1) == schubert_poly(w))) {
                    schubert_ok = false;
                    witness = w.to_string();
                }
            } catch (const std::exception& ex) {
                schubert_ok = false;
                witness = w.to_string() + " (" + ex.what() + ")";
            }
            if (!schubert_ok) break;
        }
        if (!schubert_ok) break;
    }
    report("2a Schubert key expansions for all of S4 and S5", schubert_ok, witness);

    bool key_ok = true;
    for (int len = 1; len <= 4 && key_ok; ++len) {
        for (int size = 0; size <= 6 && key_ok; ++size) {
            for (const auto& a : weak_compositions(size, len)) {
                Polynomial via_skt = Polynomial::zero(len);
                for (const auto& t : enumerate_skt(a))
                    via_skt = via_skt + slide_or_zero(weak_descent_tableau(t, len), len);
                Polynomial via_qkt = Polynomial::zero(len);
                for (const auto& d : enumerate_qkt(a))
                    via_qkt = via_qkt + slide_or_zero(kohnert_weight(d), len);
                Polynomial reconstructed = realize(expand_in_slide(via_skt), len);
                if (!(via_skt == via_qkt) || !(reconstructed == via_skt)) {
                    key_ok = false;
                    witness = a.to_string();
                    break;
                }
            }
        }
    }
    report("2b key polynomial models agree for all |a| <= 6, length <= 4", key_ok, witness);
}

void criterion3_bijections_involutions() {
    bool ok = true;
    std::string witness;
    for (int len = 1; len <= 4 && ok; ++len)
        for (int size = 0; size <= 6 && ok; ++size)
            for (const auto& a : weak_compositions(size, len)) {
                auto qkts = enumerate_qkt(a);
                auto skts = enumerate_skt(a);
                std::set<Filling> skt_set(skts.begin(), skts.end());
                if (qkts.size() != skts.size()) ok = false;
                for (const auto& d : qkts) {
                    Filling t = ascend(d);
                    if (!skt_set.count(t) || !(descend(t, a) == d) ||
                        !(kohnert_weight(d) == weak_descent_tableau(t, a.length())))
                        ok = false;
                }
                for (const auto& t : skts)
                    if (!(ascend(descend(t, a)) == t)) ok = false;
                if (!ok) witness = a.to_string();
            }
    report("3a ascend/descend mutually inverse with weight-descent match", ok, witness);

    ok = true;
    for (int n = 3; n <= 6 && ok; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto fam = family_syt(lam);
            CheckReport rep = check_involutions(fam);
            if (!rep.passed) {
                ok = false;
                witness = lam.to_string();
            }
        }
    report("3b haiman_d involution and distant commutation on SYT, |lambda| <= 6", ok, witness);

    ok = true;
    for (int n : {4, 5})
        for (const auto& w : symmetric_group(n)) {
            if (inversions(w) < 3) continue;
            auto fam = family_reduced_words(w, w.n() - 1);
            CheckReport rep = check_involutions(fam);
            if (!rep.passed) {
                ok = false;
                witness = w.to_string();
            }
        }
    report("3c word_d involution and distant commutation on R(w), w in S4 and S5", ok, witness);

    ok = true;
    for (int len = 1; len <= 4 && ok; ++len)
        for (int size = 3; size <= 6 && ok; ++size)
            for (const auto& a : weak_compositions(size, len)) {
                auto fam = family_skt(a);
                if (fam.n < 3) continue;
                CheckReport rep = check_involutions(fam);
                if (!rep.passed) {
                    ok = false;
                    witness = a.to_string();
                }
            }
    report("3d skt_d involution and distant commutation on SKT(a), |a| <= 6", ok, witness);

    ok = true;
    for (int len = 1; len <= 4 && ok; ++len)
        for (int size = 3; size <= 6 && ok; ++size)
            for (const auto& a : weak_compositions(size, len)) {
                int n = a.size();
                for (const auto& t : enumerate_skt(a))
                    for (int i = 2; i < n; ++i)
                        if (!(phi_flatten(skt_d(i, t)) == haiman_d(n - i + 1, phi_flatten(t)))) {
                            ok = false;
                            witness = a.to_string();
                        }
            }
    report("3e flattening intertwines skt_d(i) with haiman_d(n-i+1)", ok, witness);

    // every full class of reduced words generates a single Schur function,
    // exhaustively over S5 (verdicts cached by descent multiset)
    ok = true;
    std::map<std::vector<std::vector<int>>, bool> cache;
    for (const auto& w : symmetric_group(5)) {
        if (inversions(w) < 1) continue;
        auto fam = family_reduced_words(w, 4);
        for (const auto& cls : orbits(fam, 2, fam.n - 1)) {
            std::vector<std::vector<int>> key;
            for (const auto& rho : cls) key.push_back(fam.Des(rho).parts);
            std::sort(key.begin(), key.end());
            auto it = cache.find(key);
            bool good;
            if (it != cache.end()) {
                good = it->second;
            } else {
                Polynomial sum = Polynomial::zero(fam.n);
                for (const auto& k : key) sum = sum + fundamental_F(StrongComposition(k), fam.n);
                try {
                    BasisExpansion e = expand_in_schur(sum);
                    good = e.term_count() == 1 && e.terms.begin()->second == 1;
                } catch (const std::exception&) {
                    good = false;
                }
                cache.emplace(std::move(key), good);
            }
            if (!good) {
                ok = false;
                witness = w.to_string();
            }
        }
    }
    report("3f full word classes generate single Schur functions across S5", ok, witness);
}

// The involution at index g reads and writes only positions g-1, g, g+1, so
// a class restricted to generators h..i replaces the factor at positions
// h-1..i+1 by its own class and fixes everything else; the windowed
// statistics are the factor's. Windows of long words therefore reduce to
// full windows of words of length i-h+3. Criterion 4a checks every such
// factor class and validates the reduction itself on a full small-alphabet
// sweep.
namespace axioms {

std::uint64_t encode_word(const ReducedWord& w) {
    std::uint64_t x = 1;
    for (int l : w) x = (x << 4) | static_cast<std::uint64_t>(l);
    return x;
}

std::vector<ReducedWord> word_orbit(const ReducedWord& start, int h, int i) {
    std::set<ReducedWord> seen{start};
    std::vector<ReducedWord> queue{start};
    while (!queue.empty()) {
        ReducedWord cur = queue.back();
        queue.pop_back();
        for (int g = h; g <= i; ++g) {
            ReducedWord nxt = word_d(g, cur);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return std::vector<ReducedWord>(seen.begin(), seen.end());
}

// cached full-window Schur verdict, keyed by the descent multiset
bool strong_class_ok(const std::vector<ReducedWord>& cls) {
    static std::map<std::vector<std::vector<int>>, bool> cache;
    std::vector<std::vector<int>> key;
    for (const auto& y : cls) key.push_back(descent_composition(y).parts);
    std::sort(key.begin(), key.end());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int m = static_cast<int>(cls.front().size());
    Polynomial sum = Polynomial::zero(m);
    for (const auto& k : key) sum = sum + fundamental_F(StrongComposition(k), m);
    bool ok = false;
    try {
        BasisExpansion e = expand_in_schur(sum);
        ok = e.term_count() == 1 && e.terms.begin()->second == 1;
    } catch (const std::exception&) {
        ok = false;
    }
    cache.emplace(std::move(key), ok);
    return ok;
}

// enumerate all reduced words of the given length on letters 1..letters
template <class Fn>
void for_each_reduced_word(int letters, int length, Fn&& fn) {
    std::vector<int> pos(static_cast<size_t>(letters) + 2);
    for (size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<int>(i);
    std::vector<int> perm = pos;
    ReducedWord word;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(word.size()) == length) {
            fn(word);
            return;
        }
        for (int l = 1; l <= letters; ++l) {
            if (pos[static_cast<size_t>(l)] > pos[static_cast<size_t>(l + 1)]) continue;
            std::swap(perm[static_cast<size_t>(pos[static_cast<size_t>(l)])],
                      perm[static_cast<size_t>(pos[static_cast<size_t>(l + 1)])]);
            std::swap(pos[static_cast<size_t>(l)], pos[static_cast<size_t>(l + 1)]);
            word.push_back(l);
            rec();
            word.pop_back();
            std::swap(pos[static_cast<size_t>(l)], pos[static_cast<size_t>(l + 1)]);
            std::swap(perm[static_cast<size_t>(pos[static_cast<size_t>(l)])],
                      perm[static_cast<size_t>(pos[static_cast<size_t>(l + 1)])]);
        }
    };
    rec();
}

}  // namespace axioms

void criterion4_axiom_checks() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string witness;
    long long classes = 0;
    // every factor class of every window width, over the full alphabet
    for (int width = 0; width <= 3 && ok; ++width) {
        int s = width + 3;
        std::unordered_set<std::uint64_t> visited;
        axioms::for_each_reduced_word(2 * s, s, [&](const ReducedWord& sigma) {
            if (!ok || visited.count(axioms::encode_word(sigma))) return;
            std::vector<ReducedWord> cls = axioms::word_orbit(sigma, 2, s - 1);
            for (const auto& y : cls) visited.insert(axioms::encode_word(y));
            ++classes;
            if (!axioms::strong_class_ok(cls)) {
                ok = false;
                witness = word_to_string(sigma) + " width " + std::to_string(width);
            }
        });
    }
    report("4a strong axiom windows: all factor classes up to width 3", ok,
           witness.empty() ? std::to_string(classes) + " classes, " +
                                 std::to_string(static_cast<int>(seconds_since(t0))) + "s"
                           : witness);

    // the reduction itself, verified literally on the 6-letter alphabet up
    // to total length 8: every window's class is the factor replacement and
    // carries the factor's statistics
    t0 = std::chrono::steady_clock::now();
    ok = true;
    long long windows = 0;
    for (int len = 3; len <= 8 && ok; ++len) {
        static InvolutionFamily<ReducedWord> stats_fam = family_words({}, 6);
        axioms::for_each_reduced_word(6, len, [&](const ReducedWord& rho) {
            if (!ok) return;
            for (int width = 0; width <= 3 && ok; ++width) {
                for (int h = 2; h + width < len && ok; ++h) {
                    int i = h + width;
                    ++windows;
                    std::vector<ReducedWord> direct = axioms::word_orbit(rho, h, i);
                    ReducedWord sub(rho.begin() + (h - 2), rho.begin() + (i + 1));
                    std::vector<ReducedWord> factor = axioms::word_orbit(sub, 2, i - h + 2);
                    if (direct.size() != factor.size()) {
                        ok = false;
                        witness = word_to_string(rho);
                        return;
                    }
                    std::set<ReducedWord> expected;
                    for (const auto& f : factor) {
                        ReducedWord whole = rho;
                        std::copy(f.begin(), f.end(), whole.begin() + (h - 2));
                        expected.insert(whole);
                    }
                    std::multiset<StrongComposition> direct_stats, factor_stats;
                    for (const auto& y : direct) {
                        if (!expected.count(y)) {
                            ok = false;
                            witness = word_to_string(rho);
                            return;
                        }
                        direct_stats.insert(stats_fam.Des_window(y, h - 1, i + 1));
                    }
                    for (const auto& f : factor) factor_stats.insert(descent_composition(f));
                    if (direct_stats != factor_stats) {
                        ok = false;
                        witness = word_to_string(rho);
                    }
                }
            }
        });
    }
    report("4a' window classes factor through the subword (6 letters, length <= 8)", ok,
           witness.empty() ? std::to_string(windows) + " windows, " +
                                 std::to_string(static_cast<int>(seconds_since(t0))) + "s"
                           : witness);

    t0 = std::chrono::steady_clock::now();
    ok = true;
    classes = 0;
    for (int len = 1; len <= 5 && ok; ++len) {
        for (int size = 1; size <= 7 && ok; ++size) {
            for (const auto& a : weak_compositions(size, len)) {
                auto fam = family_skt(a);
                CheckReport rep = check_class_expansions(fam, true);
                classes += rep.classes_checked;
                if (!rep.passed) {
                    ok = false;
                    witness = a.to_string();
                    break;
                }
            }
        }
    }
    report("4b weak axiom windows across key tableau shapes (|a| <= 7)", ok,
           witness.empty() ? std::to_string(classes) + " restricted classes, " +
                                 std::to_string(static_cast<int>(seconds_since(t0))) + "s"
                           : witness);
}

void criterion5_stability() {
    bool ok = true;
    std::string witness;
    for (const auto& a : {WeakComposition{0, 3, 0, 2}, WeakComposition{3, 1, 0, 1},
                          WeakComposition{1, 0, 2}}) {
        std::vector<int> counts;
        for (int m = 0; m <= 3; ++m)
            counts.push_back(expand_in_slide(key_poly(prepend_zeros(a, m))).term_count());
        int syt_count = static_cast<int>(enumerate_syt(sorted_parts(a)).size());
        if (counts[2] != counts[3] || counts[3] != syt_count) {
            ok = false;
            witness = a.to_string();
        }
        BasisExpansion slides = expand_in_slide(key_poly(prepend_zeros(a, 3)));
        BasisExpansion flattened(Basis::FundamentalF);
        for (const auto& [idx, c] : slides.terms)
            flattened.add(flat(WeakComposition(idx)).parts, c);
        BasisExpansion schur_F(Basis::FundamentalF);
        for (const auto& t : enumerate_syt(sorted_parts(a)))
            schur_F.add(syt_descent_composition(t).parts, 1);
        if (!(flattened == schur_F)) {
            ok = false;
            witness = a.to_string();
        }
    }
    report("5a shifted key polynomials stabilize to Schur F-expansions", ok, witness);

    ok = true;
    for (const auto& w : {Permutation::parse("42153"), Permutation{3, 2, 1},
                          Permutation{2, 1, 4, 3}}) {
        int m = stabilization_shift(w) + 1;
        BasisExpansion slides = schubert_slide_expansion(shift(w, m));
        BasisExpansion flattened(Basis::FundamentalF);
        for (const auto& [idx, c] : slides.terms)
            flattened.add(flat(WeakComposition(idx)).parts, c);
        if (!(flattened == stanley_F_expansion(w))) {
            ok = false;
            witness = w.to_string();
        }
    }
    report("5b Stanley is the flattened stable limit of Schubert", ok, witness);
}

void criterion6_product_oracles() {
    bool ok = true;
    std::string witness;
    // all strong composition pairs with combined size <= 8; witness
    // independence is asserted inside shuffle_product
    std::vector<StrongComposition> strongs;
    for (int size = 0; size <= 7; ++size)
        for (const auto& a : weak_compositions(size, size))
            if (flat(a).length() == size && size <= 4) strongs.push_back(flat(a));
    for (int s1 = 0; s1 <= 8; ++s1)
        for (int s2 = 0; s2 + s1 <= 8; ++s2)
            for (const auto& alpha : weak_compositions(s1, std::min(s1, 4)))
                for (const auto& beta : weak_compositions(s2, std::min(s2, 4))) {
                    StrongComposition fa = flat(alpha);
                    StrongComposition fb = flat(beta);
                    if (fa.size() != s1 || fb.size() != s2) continue;
                    if (static_cast<int>(fa.length()) != alpha.length() ||
                        static_cast<int>(fb.length()) != beta.length())
                        continue;  // enumerate strict compositions exactly once
                    try {
                        BasisExpansion e = shuffle_product(fa, fb);
                        int n = std::max(1, s1 + s2);
                        if (!(realize(e, n) == fundamental_F(fa, n) * fundamental_F(fb, n))) {
                            ok = false;
                            witness = fa.to_string() + " * " + fb.to_string();
                        }
                    } catch (const std::exception& ex) {
                        ok = false;
                        witness = std::string(ex.what());
                    }
                    if (!ok) break;
                }
    report("6a shuffle products reconstruct F-products (combined size <= 8)", ok, witness);

    ok = true;
    long long pairs = 0;
    for (int len = 1; len <= 3 && ok; ++len)
        for (int s1 = 0; s1 <= 8 && ok; ++s1)
            for (int s2 = 0; s1 + s2 <= 8 && (len < 3 || s1 + s2 <= 8) && ok; ++s2)
                for (const auto& a : weak_compositions(s1, len)) {
                    for (const auto& b : weak_compositions(s2, len)) {
                        try {
                            slide_product(a, b);  // cross-checks internally
                            ++pairs;
                        } catch (const std::exception& ex) {
                            ok = false;
                            witness = a.to_string() + " * " + b.to_string() + ": " + ex.what();
                            break;
                        }
                    }
                    if (!ok) break;
                }
    report("6b slide products reconstruct slide-polynomial products (combined size <= 8)", ok,
           witness.empty() ? std::to_string(pairs) + " pairs" : witness);
}

}  // namespace

int main() {
    setvbuf(stdout, nullptr, _IOLBF, 0);
    auto t0 = std::chrono::steady_clock::now();
    criterion1_golden_identities();
    criterion2_oracle_equivalence();
    criterion3_bijections_involutions();
    criterion4_axiom_checks();
    criterion5_stability();
    criterion6_product_oracles();
    std::printf("%s: %d failure(s), %.1fs total\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
