#include "keyslide/dualequiv.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "keyslide/expansion.hpp"

namespace keyslide {

namespace {

int factor_of(int col, int boundary) { return (boundary > 0 && col > boundary) ? 1 : 0; }

}  // namespace

// ---------------------------------------------------------------------------
// involutions
// ---------------------------------------------------------------------------

Filling haiman_d(int i, const Filling& syt) {
    int n = syt.size();
    if (i <= 1 || i >= n) throw std::invalid_argument("haiman_d: need 1 < i < n");
    // column word read top to bottom, columns left to right
    std::vector<Cell> cells;
    for (const auto& [c, v] : syt.entries) cells.push_back(c);
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
        return x.col != y.col ? x.col < y.col : x.row > y.row;
    });
    std::map<int, int> pos;
    for (size_t p = 0; p < cells.size(); ++p) pos[syt.entries.at(cells[p])] = static_cast<int>(p);
    int a = pos[i - 1], b = pos[i], c = pos[i + 1];
    Filling out = syt;
    auto swap_values = [&](int u, int v) {
        Cell cu = syt.cell_of(u), cv = syt.cell_of(v);
        out.entries[cu] = v;
        out.entries[cv] = u;
    };
    if ((a < b && b < c) || (c < b && b < a)) return out;  // i between: fixed
    if ((b < a && a < c) || (c < a && a < b)) {
        swap_values(i, i + 1);  // i-1 between i and i+1
    } else {
        swap_values(i - 1, i);  // i+1 between i-1 and i
    }
    return out;
}

ReducedWord word_d(int i, const ReducedWord& rho) {
    int n = static_cast<int>(rho.size());
    if (i <= 1 || i >= n) throw std::invalid_argument("word_d: need 1 < i < len");
    int a = rho[static_cast<size_t>(i - 2)];  // position i-1
    int b = rho[static_cast<size_t>(i - 1)];  // position i
    int c = rho[static_cast<size_t>(i)];      // position i+1
    ReducedWord out = rho;
    if (c == a && (a == b + 1 || a == b - 1)) {
        // braid: aba -> bab
        out[static_cast<size_t>(i - 2)] = b;
        out[static_cast<size_t>(i - 1)] = a;
        out[static_cast<size_t>(i)] = b;
    } else if ((a > c && c > b) || (a < c && c < b)) {
        std::swap(out[static_cast<size_t>(i - 2)], out[static_cast<size_t>(i - 1)]);
    } else if ((c > a && a > b) || (c < a && a < b)) {
        std::swap(out[static_cast<size_t>(i - 1)], out[static_cast<size_t>(i)]);
    }
    return out;
}

Filling skt_d(int i, const Filling& skt) {
    int n = skt.size();
    if (i <= 1 || i >= n) throw std::invalid_argument("skt_d: need 1 < i < n");
    // column reading order: columns left to right, bottom to top within one
    Cell ca = skt.cell_of(i - 1), cb = skt.cell_of(i), cc = skt.cell_of(i + 1);
    std::vector<std::pair<Cell, int>> three = {{ca, i - 1}, {cb, i}, {cc, i + 1}};
    std::sort(three.begin(), three.end(), [](const auto& x, const auto& y) {
        return x.first.col != y.first.col ? x.first.col < y.first.col : x.first.row < y.first.row;
    });
    const Cell& b = three[0].first;
    const Cell& c = three[1].first;
    const Cell& d = three[2].first;
    int vc = three[1].second;
    Filling out = skt;
    auto swap_values = [&](int u, int v) {
        out.entries[skt.cell_of(u)] = v;
        out.entries[skt.cell_of(v)] = u;
    };
    // rows of distinct product factors never braid
    bool same_row = b.row == d.row && factor_of(b.col, skt.boundary) == factor_of(d.col, skt.boundary);
    if (same_row && c.row != b.row) {
        if (vc == i + 1) {
            // cycle i-1 -> i -> i+1 -> i-1 at fixed cells
            out.entries[skt.cell_of(i - 1)] = i;
            out.entries[skt.cell_of(i)] = i + 1;
            out.entries[skt.cell_of(i + 1)] = i - 1;
        } else if (vc == i - 1) {
            out.entries[skt.cell_of(i + 1)] = i;
            out.entries[skt.cell_of(i)] = i - 1;
            out.entries[skt.cell_of(i - 1)] = i + 1;
        }
        // vc == i: fixed
    } else if (vc == i + 1) {
        swap_values(i - 1, i);
    } else if (vc == i - 1) {
        swap_values(i, i + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// annotated run blocks and windowed statistics
// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> word_weak_rows(const ReducedWord& rho) {
    RunDecomposition rd = run_decomposition(rho);
    std::vector<std::pair<int, int>> out;
    int prev = 0;
    for (size_t b = 0; b < rd.blocks.size(); ++b) {
        int r = rd.blocks[b].front();
        if (b > 0) r = std::min(r, prev - 1);
        out.emplace_back(r, static_cast<int>(rd.blocks[b].size()));
        prev = r;
    }
    return out;
}

std::vector<std::pair<int, int>> skt_weak_rows(const Filling& f) {
    auto blocks = skt_runs(f);
    std::map<int, Cell> at;
    for (const auto& [c, v] : f.entries) at[v] = c;
    std::vector<std::pair<int, int>> out;
    int prev = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        int r = at[blocks[b].front()].row;
        for (int v : blocks[b]) r = std::min(r, at[v].row);
        if (b > 0) r = std::min(r, prev - 1);
        out.emplace_back(r, static_cast<int>(blocks[b].size()));
        prev = r;
    }
    return out;
}

namespace {

// rows_and_sizes lists blocks from the one holding the largest entries down;
// spans are the entry intervals each block covers
VirtualOrWeak clip_weak_blocks(const std::vector<std::pair<int, int>>& rows_and_sizes, int n,
                               int lo, int hi, int length) {
    std::vector<int> des(static_cast<size_t>(length), 0);
    int top = n;
    for (const auto& [row, size] : rows_and_sizes) {
        int bottom = top - size + 1;  // block covers entries bottom..top
        int overlap = std::min(hi, top) - std::max(lo, bottom) + 1;
        if (overlap > 0) {
            if (row <= 0) return std::nullopt;
            if (row > length) throw std::invalid_argument("windowed statistic: length too small");
            des[static_cast<size_t>(row - 1)] = overlap;
        }
        top = bottom - 1;
    }
    return WeakComposition(std::move(des));
}

StrongComposition clip_strong(const StrongComposition& full, int lo, int hi) {
    std::vector<int> parts;
    int top = 0;  // strong compositions list blocks from the smallest entries up
    for (int p : full.parts) {
        int bottom = top + 1;
        top += p;
        int overlap = std::min(hi, top) - std::max(lo, bottom) + 1;
        if (overlap > 0) parts.push_back(overlap);
    }
    return StrongComposition(std::move(parts));
}

}  // namespace

StrongComposition restrict_Des(const StrongComposition& des, int h, int i) {
    return clip_strong(des, h, i);
}

VirtualOrWeak restrict_des(const VirtualOrWeak& des, int h, int i) {
    if (!des) return std::nullopt;
    // recover blocks from the composition: nonzero parts left to right hold
    // the entries in increasing order
    std::vector<int> out(des->parts.size(), 0);
    int top = 0;
    for (size_t p = 0; p < des->parts.size(); ++p) {
        if ((*des)[static_cast<int>(p)] == 0) continue;
        int bottom = top + 1;
        top += (*des)[static_cast<int>(p)];
        int overlap = std::min(i, top) - std::max(h, bottom) + 1;
        if (overlap > 0) out[p] = overlap;
    }
    return WeakComposition(std::move(out));
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

InvolutionFamily<ReducedWord> family_words(std::vector<ReducedWord> carrier, int length) {
    InvolutionFamily<ReducedWord> fam;
    std::sort(carrier.begin(), carrier.end());
    fam.carrier = std::move(carrier);
    fam.n = fam.carrier.empty() ? 0 : static_cast<int>(fam.carrier.front().size());
    fam.stat_length = length;
    fam.reversed_rectification = true;
    fam.apply = [](int i, const ReducedWord& rho) { return word_d(i, rho); };
    // word run blocks cover positions left to right while the descent
    // composition lists them from the right, so position windows flip before
    // clipping: clipping then matches the statistics of the subword
    fam.Des_window = [](const ReducedWord& rho, int lo, int hi) {
        int n = static_cast<int>(rho.size());
        return clip_strong(descent_composition(rho), n - hi + 1, n - lo + 1);
    };
    fam.des_window = [length](const ReducedWord& rho, int lo, int hi) {
        int n = static_cast<int>(rho.size());
        return clip_weak_blocks(word_weak_rows(rho), n, n - hi + 1, n - lo + 1, length);
    };
    return fam;
}

InvolutionFamily<ReducedWord> family_reduced_words(const Permutation& w, int length) {
    return family_words(reduced_words(w), length);
}

namespace {

InvolutionFamily<Filling> syt_family_from(std::vector<Filling> carrier) {
    InvolutionFamily<Filling> fam;
    std::sort(carrier.begin(), carrier.end());
    fam.carrier = std::move(carrier);
    fam.n = fam.carrier.empty() ? 0 : fam.carrier.front().size();
    fam.apply = [](int i, const Filling& f) { return haiman_d(i, f); };
    fam.Des_window = [](const Filling& f, int lo, int hi) {
        return clip_strong(syt_descent_composition(f), lo, hi);
    };
    return fam;
}

InvolutionFamily<Filling> skt_family_from(std::vector<Filling> carrier, int length) {
    InvolutionFamily<Filling> fam;
    std::sort(carrier.begin(), carrier.end());
    fam.carrier = std::move(carrier);
    fam.n = fam.carrier.empty() ? 0 : fam.carrier.front().size();
    fam.stat_length = length;
    fam.apply = [](int i, const Filling& f) { return skt_d(i, f); };
    fam.Des_window = [](const Filling& f, int lo, int hi) {
        return clip_strong(skt_descent_composition(f), lo, hi);
    };
    fam.des_window = [length](const Filling& f, int lo, int hi) {
        return clip_weak_blocks(skt_weak_rows(f), f.size(), lo, hi, length);
    };
    return fam;
}

}  // namespace

InvolutionFamily<Filling> family_syt(const Partition& lambda) {
    return syt_family_from(enumerate_syt(lambda));
}

InvolutionFamily<Filling> family_skew_syt(const Partition& lambda, const Partition& mu) {
    return syt_family_from(enumerate_skew_syt(lambda, mu));
}

InvolutionFamily<Filling> family_product_syt(const Partition& mu, const Partition& nu) {
    return syt_family_from(enumerate_product_syt(mu, nu));
}

InvolutionFamily<Filling> family_skt(const WeakComposition& a) {
    return skt_family_from(enumerate_skt(a), a.length());
}

InvolutionFamily<Filling> family_skew_skt(const WeakComposition& d, const WeakComposition& a) {
    return skt_family_from(enumerate_skew_skt(d, a), d.length());
}

InvolutionFamily<Filling> family_product_skt(const WeakComposition& a, const WeakComposition& b) {
    return skt_family_from(enumerate_product_skt(a, b), std::max(a.length(), b.length()));
}

// ---------------------------------------------------------------------------
// orbits
// ---------------------------------------------------------------------------

template <class T>
std::vector<T> orbit(const InvolutionFamily<T>& fam, const T& x, int h, int i) {
    std::set<T> seen{x};
    std::vector<T> queue{x};
    while (!queue.empty()) {
        T cur = queue.back();
        queue.pop_back();
        for (int g = h; g <= i; ++g) {
            T nxt = fam.apply(g, cur);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return std::vector<T>(seen.begin(), seen.end());
}

template <class T>
std::vector<std::vector<T>> orbits(const InvolutionFamily<T>& fam, int h, int i) {
    std::vector<std::vector<T>> out;
    std::set<T> seen;
    for (const T& x : fam.carrier) {
        if (seen.count(x)) continue;
        std::vector<T> cls = orbit(fam, x, h, i);
        for (const T& y : cls) seen.insert(y);
        out.push_back(std::move(cls));
    }
    return out;
}

// ---------------------------------------------------------------------------
// axiom checks
// ---------------------------------------------------------------------------

std::string CheckReport::to_string() const {
    std::string s = passed ? "PASS" : "FAIL";
    s += " (" + std::to_string(classes_checked) + " restricted classes checked";
    if (!failures.empty()) s += ", " + std::to_string(failures.size()) + " failures";
    s += ")";
    for (size_t k = 0; k < failures.size() && k < 5; ++k) {
        const auto& f = failures[k];
        s += "\n  " + f.kind + " window(" + std::to_string(f.h) + "," + std::to_string(f.i) + ")";
        if (f.j) s += " j=" + std::to_string(f.j);
        s += ": " + f.detail + " witness " + f.witness;
    }
    return s;
}

namespace {

std::string witness_string(const ReducedWord& rho) { return word_to_string(rho); }
std::string witness_string(const Filling& f) { return "\n" + f.render(); }

// verdict caches: the same restricted multiset shows up across thousands of
// carriers, so memoize the expansions
struct StrongVerdict {
    std::map<std::vector<std::vector<int>>, std::string> cache;  // "" = pass, else detail
    std::mutex mtx;
};
struct WeakVerdict {
    std::map<std::vector<std::vector<int>>, std::string> cache;
    std::mutex mtx;
};

std::string schur_class_verdict(std::vector<StrongComposition> stats) {
    static StrongVerdict v;
    std::vector<std::vector<int>> key;
    for (const auto& s : stats) key.push_back(s.parts);
    std::sort(key.begin(), key.end());
    {
        std::lock_guard<std::mutex> lock(v.mtx);
        auto it = v.cache.find(key);
        if (it != v.cache.end()) return it->second;
    }
    std::string verdict;
    int m = stats.empty() ? 0 : stats.front().size();
    Polynomial sum = Polynomial::zero(m);
    for (const auto& s : stats) sum = sum + fundamental_F(s, m);
    try {
        BasisExpansion e = expand_in_schur(sum);
        if (e.term_count() != 1 || e.terms.begin()->second != 1)
            verdict = "restricted class is not a single Schur function: " + e.to_string();
    } catch (const std::exception& ex) {
        verdict = std::string("restricted class is not Schur: ") + ex.what();
    }
    std::lock_guard<std::mutex> lock(v.mtx);
    v.cache.emplace(std::move(key), verdict);
    return verdict;
}

std::string key_class_verdict(std::vector<VirtualOrWeak> stats, int length) {
    static WeakVerdict v;
    std::vector<std::vector<int>> key;
    for (const auto& s : stats)
        key.push_back(s ? s->parts : std::vector<int>{-1});
    std::sort(key.begin(), key.end());
    {
        std::lock_guard<std::mutex> lock(v.mtx);
        auto it = v.cache.find(key);
        if (it != v.cache.end()) return it->second;
    }
    std::string verdict;
    Polynomial sum = Polynomial::zero(length);
    for (const auto& s : stats) sum = sum + slide_or_zero(s, length);
    try {
        // a class whose members are all virtual in the window contributes
        // nothing, which is fine; anything nonzero must be one key polynomial
        if (!sum.is_zero()) {
            BasisExpansion e = expand_in_key(sum);
            if (e.term_count() != 1 || e.terms.begin()->second != 1)
                verdict = "restricted class is not a single key polynomial: " + e.to_string();
        }
    } catch (const std::exception& ex) {
        verdict = std::string("restricted class is not key: ") + ex.what();
    }
    std::lock_guard<std::mutex> lock(v.mtx);
    v.cache.emplace(std::move(key), verdict);
    return verdict;
}

}  // namespace

template <class T>
CheckReport check_involutions(const InvolutionFamily<T>& fam) {
    CheckReport rep;
    int n = fam.n;
    for (const T& x : fam.carrier) {
        for (int i = 2; i < n; ++i) {
            T y = fam.apply(i, x);
            if (fam.apply(i, y) != x) {
                rep.passed = false;
                rep.failures.push_back({"involution", i, i, 0, witness_string(x), "d_i not involutive"});
            }
            if (!std::binary_search(fam.carrier.begin(), fam.carrier.end(), y)) {
                rep.passed = false;
                rep.failures.push_back({"involution", i, i, 0, witness_string(x), "image leaves carrier"});
            }
        }
        for (int i = 2; i < n; ++i)
            for (int j = i + 3; j < n; ++j)
                if (fam.apply(j, fam.apply(i, x)) != fam.apply(i, fam.apply(j, x))) {
                    rep.passed = false;
                    rep.failures.push_back(
                        {"commutation", i, i, j, witness_string(x), "distant involutions do not commute"});
                }
    }
    return rep;
}

namespace {

void merge_reports(CheckReport& into, CheckReport&& from) {
    into.passed = into.passed && from.passed;
    into.classes_checked += from.classes_checked;
    for (auto& f : from.failures) into.failures.push_back(std::move(f));
}

}  // namespace

template <class T>
CheckReport check_class_expansions_width(const InvolutionFamily<T>& fam, bool weak, int width) {
    CheckReport rep;
    int n = fam.n;
    for (int h = 2; h + width < n; ++h) {
        int i = h + width;
        for (const auto& cls : orbits(fam, h, i)) {
            ++rep.classes_checked;
            std::string verdict;
            if (weak) {
                std::vector<VirtualOrWeak> stats;
                for (const T& y : cls) stats.push_back(fam.des_window(y, h - 1, i + 1));
                verdict = key_class_verdict(std::move(stats), fam.stat_length);
            } else {
                std::vector<StrongComposition> stats;
                for (const T& y : cls) stats.push_back(fam.Des_window(y, h - 1, i + 1));
                verdict = schur_class_verdict(std::move(stats));
            }
            if (!verdict.empty()) {
                rep.passed = false;
                rep.failures.push_back({"class-expansion", h, i, 0, witness_string(cls.front()), verdict});
            }
        }
    }
    return rep;
}

template <class T>
CheckReport check_class_expansions(const InvolutionFamily<T>& fam, bool weak) {
    CheckReport rep;
    for (int width = 0; width <= 3; ++width)
        merge_reports(rep, check_class_expansions_width(fam, weak, width));
    return rep;
}

template <class T>
CheckReport check_dual_equivalence(const InvolutionFamily<T>& fam) {
    CheckReport rep = check_involutions(fam);
    merge_reports(rep, check_class_expansions(fam, false));
    return rep;
}

template <class T>
CheckReport check_weak_dual_equivalence(const InvolutionFamily<T>& fam) {
    CheckReport rep = check_involutions(fam);
    merge_reports(rep, check_class_expansions(fam, true));
    return rep;
}

// ---------------------------------------------------------------------------
// rectification
// ---------------------------------------------------------------------------

namespace {

// equivariant propagation from anchor |-> image; empty optional on conflict
template <class T>
std::optional<std::map<T, Filling>> propagate(const InvolutionFamily<T>& fam,
                                              const std::vector<T>& cls, const T& anchor,
                                              const Filling& image,
                                              const std::function<Filling(int, const Filling&)>& target_d) {
    std::map<T, Filling> phi;
    phi[anchor] = image;
    std::vector<T> queue{anchor};
    while (!queue.empty()) {
        T cur = queue.back();
        queue.pop_back();
        Filling img = phi.at(cur);
        for (int g = 2; g < fam.n; ++g) {
            T nxt = fam.apply(g, cur);
            Filling nimg = target_d(g, img);
            auto it = phi.find(nxt);
            if (it != phi.end()) {
                if (it->second != nimg) return std::nullopt;
            } else {
                phi.emplace(nxt, nimg);
                queue.push_back(nxt);
            }
        }
    }
    if (phi.size() != cls.size()) return std::nullopt;
    std::set<Filling> images;
    for (const auto& [x, f] : phi) images.insert(f);
    if (images.size() != cls.size()) return std::nullopt;  // must be a bijection
    return phi;
}

}  // namespace

template <class T>
std::map<T, Filling> rectify_class(const InvolutionFamily<T>& fam, const T& x) {
    std::vector<T> cls = orbit(fam, x, 2, fam.n - 1);
    // shape of the class: its generating function is a single Schur function
    Polynomial sum = Polynomial::zero(fam.n);
    for (const T& y : cls) sum = sum + fundamental_F(fam.Des(y), fam.n);
    BasisExpansion e = expand_in_schur(sum);
    if (e.term_count() != 1 || e.terms.begin()->second != 1)
        throw std::logic_error("rectify: class generating function is not a single Schur function: " +
                               e.to_string());
    Partition lambda(e.terms.begin()->first);
    // anchor: the member whose descent composition pairs with the
    // super-standard tableau under the family's rectification convention
    std::vector<int> anchor_parts = lambda.parts;
    if (fam.reversed_rectification) std::reverse(anchor_parts.begin(), anchor_parts.end());
    StrongComposition anchor_des(anchor_parts);
    const T* anchor = nullptr;
    for (const T& y : cls) {
        if (fam.Des(y) != anchor_des) continue;
        if (anchor) throw std::logic_error("rectify: anchor not unique for shape " + lambda.to_string());
        anchor = &y;
    }
    if (!anchor)
        throw std::logic_error("rectify: no class member has descent composition " +
                               anchor_des.to_string());
    auto target_d = [](int g, const Filling& f) { return haiman_d(g, f); };
    auto phi = propagate(fam, cls, *anchor, super_standard(lambda), target_d);
    if (!phi) throw std::logic_error("rectify: equivariant propagation is inconsistent");
    for (const auto& [y, img] : *phi) {
        std::vector<int> expect = syt_descent_composition(img).parts;
        if (fam.reversed_rectification) std::reverse(expect.begin(), expect.end());
        if (fam.Des(y) != StrongComposition(expect))
            throw std::logic_error("rectify: propagation does not respect descent compositions");
    }
    return *phi;
}

template <class T>
Filling rectify(const InvolutionFamily<T>& fam, const T& x) {
    return rectify_class(fam, x).at(x);
}

template <class T>
std::map<T, Filling> weak_rectify_class(const InvolutionFamily<T>& fam, const T& x) {
    std::vector<T> cls = orbit(fam, x, 2, fam.n - 1);
    Polynomial sum = Polynomial::zero(fam.stat_length);
    for (const T& y : cls) sum = sum + slide_or_zero(fam.des(y), fam.stat_length);
    BasisExpansion e = expand_in_key(sum);
    if (e.term_count() != 1 || e.terms.begin()->second != 1)
        throw std::logic_error(
            "weak_rectify: class generating polynomial is not a single key polynomial: " + e.to_string());
    WeakComposition a(e.terms.begin()->first);
    const T* anchor = nullptr;
    for (const T& y : cls) {
        VirtualOrWeak dy = fam.des(y);
        if (dy && *dy == a) {
            if (anchor) throw std::logic_error("weak_rectify: anchor not unique for " + a.to_string());
            anchor = &y;
        }
    }
    if (!anchor) throw std::logic_error("weak_rectify: no class member has weak descent " + a.to_string());

    // try equivariant propagation from the anchor; when it is consistent and
    // preserves weak descents it realizes the induced map on the whole class.
    // word families intertwine with complemented indices, as with flattening
    int n = fam.n;
    bool complement = fam.reversed_rectification;
    auto target_d = [n, complement](int g, const Filling& f) {
        return skt_d(complement ? n + 1 - g : g, f);
    };
    if (auto phi = propagate(fam, cls, *anchor, yamanouchi_key(a), target_d)) {
        bool preserves = true;
        for (const auto& [y, img] : *phi)
            if (fam.des(y) != weak_descent_tableau(img, a.length())) preserves = false;
        if (preserves) return *phi;
    }

    // the induced map need not commute with the involutions; it is still
    // des-preserving, which pins every member whose weak descent value is
    // unique on both sides
    std::map<std::vector<int>, int> class_mult;
    for (const T& y : cls)
        if (VirtualOrWeak dy = fam.des(y)) class_mult[dy->parts] += 1;
    std::map<std::vector<int>, Filling> target_by_des;
    std::map<std::vector<int>, int> target_mult;
    for (const Filling& t : enumerate_skt(a))
        if (VirtualOrWeak dt = weak_descent_tableau(t, a.length())) {
            target_mult[dt->parts] += 1;
            target_by_des[dt->parts] = t;
        }
    std::map<T, Filling> partial;
    for (const T& y : cls) {
        VirtualOrWeak dy = fam.des(y);
        if (!dy) continue;
        if (class_mult[dy->parts] == 1 && target_mult[dy->parts] == 1)
            partial.emplace(y, target_by_des.at(dy->parts));
    }
    return partial;
}

template <class T>
Filling weak_rectify(const InvolutionFamily<T>& fam, const T& x) {
    std::map<T, Filling> psi = weak_rectify_class(fam, x);
    auto it = psi.find(x);
    if (it == psi.end())
        throw std::logic_error("weak_rectify: image not determined by descents on this class");
    return it->second;
}

// explicit instantiations for the two carrier types used by the library
template std::vector<ReducedWord> orbit(const InvolutionFamily<ReducedWord>&, const ReducedWord&, int, int);
template std::vector<Filling> orbit(const InvolutionFamily<Filling>&, const Filling&, int, int);
template std::vector<std::vector<ReducedWord>> orbits(const InvolutionFamily<ReducedWord>&, int, int);
template std::vector<std::vector<Filling>> orbits(const InvolutionFamily<Filling>&, int, int);
template CheckReport check_involutions(const InvolutionFamily<ReducedWord>&);
template CheckReport check_involutions(const InvolutionFamily<Filling>&);
template CheckReport check_class_expansions_width(const InvolutionFamily<ReducedWord>&, bool, int);
template CheckReport check_class_expansions_width(const InvolutionFamily<Filling>&, bool, int);
template CheckReport check_class_expansions(const InvolutionFamily<ReducedWord>&, bool);
template CheckReport check_class_expansions(const InvolutionFamily<Filling>&, bool);
template CheckReport check_dual_equivalence(const InvolutionFamily<ReducedWord>&);
template CheckReport check_dual_equivalence(const InvolutionFamily<Filling>&);
template CheckReport check_weak_dual_equivalence(const InvolutionFamily<ReducedWord>&);
template CheckReport check_weak_dual_equivalence(const InvolutionFamily<Filling>&);
template std::map<ReducedWord, Filling> rectify_class(const InvolutionFamily<ReducedWord>&, const ReducedWord&);
template std::map<Filling, Filling> rectify_class(const InvolutionFamily<Filling>&, const Filling&);
template Filling rectify(const InvolutionFamily<ReducedWord>&, const ReducedWord&);
template Filling rectify(const InvolutionFamily<Filling>&, const Filling&);
template std::map<ReducedWord, Filling> weak_rectify_class(const InvolutionFamily<ReducedWord>&, const ReducedWord&);
template std::map<Filling, Filling> weak_rectify_class(const InvolutionFamily<Filling>&, const Filling&);
template Filling weak_rectify(const InvolutionFamily<ReducedWord>&, const ReducedWord&);
template Filling weak_rectify(const InvolutionFamily<Filling>&, const Filling&);

}  // namespace keyslide
