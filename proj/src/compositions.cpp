#include "keyslide/compositions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace keyslide {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in: " + text);
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "' in: " + text);
        out.push_back(v);
    }
    return out;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

}  // namespace

WeakComposition::WeakComposition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("weak composition part < 0");
}

WeakComposition::WeakComposition(std::initializer_list<int> p) : WeakComposition(std::vector<int>(p)) {}

int WeakComposition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string WeakComposition::to_string() const { return join_parts(parts); }

WeakComposition WeakComposition::parse(const std::string& text) {
    return WeakComposition(parse_int_list(text));
}

StrongComposition::StrongComposition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 1) throw std::invalid_argument("strong composition part < 1");
}

StrongComposition::StrongComposition(std::initializer_list<int> p)
    : StrongComposition(std::vector<int>(p)) {}

int StrongComposition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string StrongComposition::to_string() const { return join_parts(parts); }

StrongComposition StrongComposition::parse(const std::string& text) {
    return StrongComposition(parse_int_list(text));
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition part < 1");
        if (i && parts[i - 1] < parts[i]) throw std::invalid_argument("partition not weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts[static_cast<size_t>(i - 1)] : 0;
}

std::string Partition::to_string() const { return join_parts(parts); }

Partition Partition::parse(const std::string& text) { return Partition(parse_int_list(text)); }

StrongComposition flat(const WeakComposition& a) {
    std::vector<int> out;
    for (int v : a.parts)
        if (v > 0) out.push_back(v);
    return StrongComposition(std::move(out));
}

Partition sorted_parts(const WeakComposition& a) { return sorted_parts(flat(a)); }

Partition sorted_parts(const StrongComposition& a) {
    std::vector<int> out = a.parts;
    std::sort(out.begin(), out.end(), std::greater<int>());
    return Partition(std::move(out));
}

bool refines(const StrongComposition& beta, const StrongComposition& alpha) {
    if (beta.size() != alpha.size()) return false;
    size_t j = 0;
    int bsum = 0;
    for (int target_sum = 0; int apart : alpha.parts) {
        target_sum += apart;
        while (j < beta.parts.size() && bsum < target_sum) bsum += beta.parts[j++];
        if (bsum != target_sum) return false;
    }
    return true;
}

bool prefix_geq(const WeakComposition& b, const WeakComposition& a) {
    if (b.length() != a.length())
        throw std::invalid_argument("prefix_geq: length mismatch " + b.to_string() + " vs " + a.to_string());
    long long bsum = 0, asum = 0;
    for (int i = 0; i < a.length(); ++i) {
        bsum += b[i];
        asum += a[i];
        if (bsum < asum) return false;
    }
    return true;
}

WeakComposition prepend_zeros(const WeakComposition& a, int m) {
    std::vector<int> out(static_cast<size_t>(m), 0);
    out.insert(out.end(), a.parts.begin(), a.parts.end());
    return WeakComposition(std::move(out));
}

WeakComposition drop_leading_zeros(const WeakComposition& a, int m) {
    if (m > a.length()) throw std::invalid_argument("drop_leading_zeros: too short");
    for (int i = 0; i < m; ++i)
        if (a[i] != 0)
            throw std::invalid_argument("drop_leading_zeros: part " + std::to_string(i + 1) +
                                        " of " + a.to_string() + " is nonzero");
    return WeakComposition(std::vector<int>(a.parts.begin() + m, a.parts.end()));
}

WeakComposition increasing_composition(const Partition& lambda, int k) {
    if (k < lambda.length())
        throw std::invalid_argument("increasing_composition: k < length of " + lambda.to_string());
    std::vector<int> out(static_cast<size_t>(k), 0);
    for (int i = 0; i < lambda.length(); ++i)
        out[static_cast<size_t>(k - 1 - i)] = lambda[i];
    return WeakComposition(std::move(out));
}

WeakComposition pad_to(const WeakComposition& a, int length) {
    if (length < a.length()) throw std::invalid_argument("pad_to: target shorter than input");
    std::vector<int> out = a.parts;
    out.resize(static_cast<size_t>(length), 0);
    return WeakComposition(std::move(out));
}

bool contained_in(const WeakComposition& a, const WeakComposition& d) {
    if (a.length() != d.length()) throw std::invalid_argument("contained_in: length mismatch");
    for (int i = 0; i < a.length(); ++i)
        if (a[i] > d[i]) return false;
    return true;
}

bool contained_in(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

std::vector<WeakComposition> weak_compositions(int size, int length) {
    std::vector<WeakComposition> out;
    std::vector<int> cur(static_cast<size_t>(length), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == length) {
            if (left == 0) out.push_back(WeakComposition(cur));
            return;
        }
        if (pos == length - 1) {
            cur[static_cast<size_t>(pos)] = left;
            rec(pos + 1, 0);
            cur[static_cast<size_t>(pos)] = 0;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    if (length == 0) {
        if (size == 0) out.push_back(WeakComposition{});
        return out;
    }
    rec(0, size);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace keyslide
