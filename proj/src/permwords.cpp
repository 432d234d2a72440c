#include "keyslide/permwords.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace keyslide {

Permutation::Permutation(std::vector<int> w) : oneline(std::move(w)) {
    std::vector<bool> seen(oneline.size() + 1, false);
    for (int v : oneline) {
        if (v < 1 || v > static_cast<int>(oneline.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> w) : Permutation(std::vector<int>(w)) {}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)[i] != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    bool compact = n() < 10;
    std::string s;
    for (int i = 1; i <= n(); ++i) {
        if (!compact && i > 1) s += ",";
        s += std::to_string((*this)[i]);
    }
    return s;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos < text.size()) {
            size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            w.push_back(std::stoi(text.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad permutation: " + text);
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::string word_to_string(const ReducedWord& rho) {
    std::string s = "(";
    for (size_t i = 0; i < rho.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rho[i]);
    }
    return s + ")";
}

long long inversions(const Permutation& w) {
    long long inv = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Permutation permutation_of_word(const ReducedWord& rho, int n) {
    int maxl = 0;
    for (int l : rho) {
        if (l < 1) throw std::invalid_argument("word letter < 1");
        maxl = std::max(maxl, l);
    }
    if (n == 0) n = maxl + 1;
    if (n <= maxl) throw std::invalid_argument("word letter exceeds n-1");
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    // each letter swaps the values l and l+1
    std::vector<int> pos(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(w[static_cast<size_t>(i)])] = i;
    for (int l : rho) {
        int i = pos[static_cast<size_t>(l)], j = pos[static_cast<size_t>(l + 1)];
        std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)]);
        std::swap(pos[static_cast<size_t>(l)], pos[static_cast<size_t>(l + 1)]);
    }
    return Permutation(std::move(w));
}

bool is_reduced_word(const ReducedWord& rho, const Permutation& w) {
    if (static_cast<long long>(rho.size()) != inversions(w)) return false;
    for (int l : rho)
        if (l < 1 || l >= w.n()) return false;
    return permutation_of_word(rho, w.n()) == w;
}

std::vector<ReducedWord> reduced_words(const Permutation& w) {
    std::vector<ReducedWord> out;
    ReducedWord prefix;
    std::vector<int> cur = w.oneline;
    // peel descents from the front: the first letter of a reduced word is a
    // descent position j of w, and the rest is a reduced word of w*s_j
    std::function<void()> rec = [&]() {
        bool any = false;
        for (size_t j = 0; j + 1 < cur.size(); ++j) {
            if (cur[j] > cur[j + 1]) {
                any = true;
                std::swap(cur[j], cur[j + 1]);
                prefix.push_back(static_cast<int>(j) + 1);
                rec();
                prefix.pop_back();
                std::swap(cur[j], cur[j + 1]);
            }
        }
        if (!any) out.push_back(prefix);
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

RunDecomposition run_decomposition(const ReducedWord& rho) {
    RunDecomposition rd;
    for (size_t i = 0; i < rho.size(); ++i) {
        if (i == 0 || rho[i] <= rho[i - 1]) rd.blocks.emplace_back();
        rd.blocks.back().push_back(rho[i]);
    }
    return rd;
}

std::string RunDecomposition::to_string() const {
    std::string s = "(";
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += "|";
        for (int v : blocks[b]) s += std::to_string(v);
    }
    return s + ")";
}

StrongComposition descent_composition(const ReducedWord& rho) {
    RunDecomposition rd = run_decomposition(rho);
    std::vector<int> parts;
    for (auto it = rd.blocks.rbegin(); it != rd.blocks.rend(); ++it)
        parts.push_back(static_cast<int>(it->size()));
    return StrongComposition(std::move(parts));
}

VirtualOrWeak weak_descent_word(const ReducedWord& rho, int length) {
    RunDecomposition rd = run_decomposition(rho);
    int k = static_cast<int>(rd.blocks.size());
    std::vector<int> des(static_cast<size_t>(length), 0);
    int prev_row = 0;  // r_{i+1} of the block above
    for (int b = 0; b < k; ++b) {
        const auto& block = rd.blocks[static_cast<size_t>(b)];  // leftmost block first
        int r = block.front();
        if (b > 0) r = std::min(r, prev_row - 1);
        if (r <= 0) return std::nullopt;
        if (r > length)
            throw std::invalid_argument("weak_descent_word: length " + std::to_string(length) +
                                        " too small for row " + std::to_string(r));
        des[static_cast<size_t>(r - 1)] = static_cast<int>(block.size());
        prev_row = r;
    }
    return WeakComposition(std::move(des));
}

Permutation grassmannian(const Partition& lambda, int k) {
    if (k < lambda.length()) throw std::invalid_argument("grassmannian: k < length(lambda)");
    int n = k + lambda.part(1);
    std::vector<int> w;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (int i = 1; i <= k; ++i) {
        int v = i + lambda.part(k - i + 1);
        w.push_back(v);
        used[static_cast<size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<size_t>(v)]) w.push_back(v);
    return Permutation(std::move(w));
}

Permutation shift(const Permutation& w, int m) {
    std::vector<int> out;
    for (int i = 1; i <= m; ++i) out.push_back(i);
    for (int v : w.oneline) out.push_back(v + m);
    return Permutation(std::move(out));
}

int stabilization_shift(const Permutation& w) {
    std::vector<ReducedWord> words = reduced_words(w);
    for (int m = 0;; ++m) {
        bool all_nonvirtual = true;
        for (const auto& rho : words) {
            ReducedWord shifted = rho;
            for (int& l : shifted) l += m;
            if (!weak_descent_word(shifted, w.n() - 1 + m)) {
                all_nonvirtual = false;
                break;
            }
        }
        if (all_nonvirtual) return m;
    }
}

std::vector<Permutation> permutations_with_inversions(int n, int k) {
    // Lehmer codes: code[i] = #{j > i : w_i > w_j} in [0, n-1-i], summing to k
    std::vector<Permutation> out;
    std::vector<int> code(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            std::vector<int> unused(static_cast<size_t>(n));
            std::iota(unused.begin(), unused.end(), 1);
            std::vector<int> w;
            for (int j = 0; j < n; ++j) {
                int c = code[static_cast<size_t>(j)];
                w.push_back(unused[static_cast<size_t>(c)]);
                unused.erase(unused.begin() + c);
            }
            out.push_back(Permutation(std::move(w)));
            return;
        }
        long long max_rest = static_cast<long long>(n - i) * (n - i - 1) / 2;
        if (left > max_rest) return;
        int cap = std::min(left, n - 1 - i);
        for (int c = 0; c <= cap; ++c) {
            code[static_cast<size_t>(i)] = c;
            rec(i + 1, left - c);
        }
        code[static_cast<size_t>(i)] = 0;
    };
    rec(0, k);
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace keyslide
