#include "keyslide/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace keyslide {

namespace {

// factor of a column in a product shape (everything is factor 0 otherwise)
int factor_of(int col, int boundary) { return (boundary > 0 && col > boundary) ? 1 : 0; }

}  // namespace

int Filling::entry_at(const Cell& c) const {
    auto it = entries.find(c);
    return it == entries.end() ? 0 : it->second;
}

Cell Filling::cell_of(int value) const {
    for (const auto& [c, v] : entries)
        if (v == value) return c;
    throw std::invalid_argument("cell_of: value " + std::to_string(value) + " not present");
}

std::string Filling::render() const {
    if (entries.empty() && skew.empty()) return "(empty)\n";
    int rmin = 1, rmax = 1, cmax = 1, wide = 1;
    for (const auto& [c, v] : entries) {
        rmin = std::min(rmin, c.row);
        rmax = std::max(rmax, c.row);
        cmax = std::max(cmax, c.col);
        wide = std::max(wide, static_cast<int>(std::to_string(v).size()));
    }
    for (const auto& c : skew) {
        rmin = std::min(rmin, c.row);
        rmax = std::max(rmax, c.row);
        cmax = std::max(cmax, c.col);
    }
    wide = std::max(wide, 2);
    std::string out;
    for (int r = rmax; r >= rmin; --r) {
        std::string line;
        for (int c = 1; c <= cmax; ++c) {
            std::string cellstr(static_cast<size_t>(wide), ' ');
            if (skew.count({r, c})) {
                cellstr = std::string(static_cast<size_t>(wide), '#');
            } else if (int v = entry_at({r, c}); v != 0) {
                std::string num = std::to_string(v);
                cellstr = std::string(static_cast<size_t>(wide) - num.size(), ' ') + num;
            }
            if (c > 1) line += ' ';
            line += cellstr;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::vector<Cell> young_diagram_cells(const Partition& lambda) {
    std::vector<Cell> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int c = 1; c <= lambda.part(i); ++c) cells.push_back({i, c});
    return cells;
}

std::vector<Cell> key_diagram_cells(const WeakComposition& a) {
    std::vector<Cell> cells;
    for (int i = 1; i <= a.length(); ++i)
        for (int c = 1; c <= a[i - 1]; ++c) cells.push_back({i, c});
    return cells;
}

// ---------------------------------------------------------------------------
// generic enumeration: rows fill left to right, so placing values in a fixed
// global order forces the in-row order for free
// ---------------------------------------------------------------------------

namespace {

struct TrackSet {
    std::vector<std::vector<Cell>> rows;  // fill order within each row
    std::set<Cell> skew;
    std::set<Cell> cells;  // all entry cells
    int boundary = 0;
    int total = 0;
};

// increasing fillings (SYT family): place 1..n; a cell is available once the
// cell directly below it (when part of the diagram) is filled
std::vector<Filling> enumerate_increasing(const TrackSet& ts) {
    std::vector<Filling> out;
    std::vector<size_t> next(ts.rows.size(), 0);
    Filling cur;
    cur.skew = ts.skew;
    cur.boundary = ts.boundary;
    std::function<void(int)> rec = [&](int value) {
        if (value > ts.total) {
            out.push_back(cur);
            return;
        }
        for (size_t t = 0; t < ts.rows.size(); ++t) {
            if (next[t] >= ts.rows[t].size()) continue;
            Cell cell = ts.rows[t][next[t]];
            Cell below{cell.row - 1, cell.col};
            if (ts.cells.count(below) && !cur.entries.count(below)) continue;
            cur.entries[cell] = value;
            ++next[t];
            rec(value + 1);
            --next[t];
            cur.entries.erase(cell);
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

// decreasing fillings (SKT family): place n..1 and validate columns at leaves
std::vector<Filling> enumerate_decreasing(const TrackSet& ts,
                                          const std::function<bool(const Filling&)>& valid) {
    std::vector<Filling> out;
    std::vector<size_t> next(ts.rows.size(), 0);
    Filling cur;
    cur.skew = ts.skew;
    cur.boundary = ts.boundary;
    std::function<void(int)> rec = [&](int value) {
        if (value == 0) {
            if (valid(cur)) out.push_back(cur);
            return;
        }
        for (size_t t = 0; t < ts.rows.size(); ++t) {
            if (next[t] >= ts.rows[t].size()) continue;
            Cell cell = ts.rows[t][next[t]];
            cur.entries[cell] = value;
            ++next[t];
            rec(value - 1);
            --next[t];
            cur.entries.erase(cell);
        }
    };
    rec(ts.total);
    std::sort(out.begin(), out.end());
    return out;
}

TrackSet young_tracks(const Partition& lambda) {
    TrackSet ts;
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<Cell> row;
        for (int c = 1; c <= lambda.part(i); ++c) {
            row.push_back({i, c});
            ts.cells.insert({i, c});
        }
        if (!row.empty()) ts.rows.push_back(std::move(row));
    }
    ts.total = lambda.size();
    return ts;
}

TrackSet skew_young_tracks(const Partition& lambda, const Partition& mu) {
    if (!contained_in(mu, lambda)) throw std::invalid_argument("skew shape: mu not inside lambda");
    TrackSet ts;
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<Cell> row;
        for (int c = 1; c <= lambda.part(i); ++c) {
            if (c <= mu.part(i)) {
                ts.skew.insert({i, c});
            } else {
                row.push_back({i, c});
                ts.cells.insert({i, c});
            }
        }
        if (!row.empty()) ts.rows.push_back(std::move(row));
    }
    ts.total = lambda.size() - mu.size();
    return ts;
}

TrackSet key_tracks(const WeakComposition& a) {
    TrackSet ts;
    for (int i = 1; i <= a.length(); ++i) {
        std::vector<Cell> row;
        for (int c = 1; c <= a[i - 1]; ++c) {
            row.push_back({i, c});
            ts.cells.insert({i, c});
        }
        if (!row.empty()) ts.rows.push_back(std::move(row));
    }
    ts.total = a.size();
    return ts;
}

TrackSet skew_key_tracks(const WeakComposition& d, const WeakComposition& a) {
    if (!contained_in(a, d)) throw std::invalid_argument("skew key shape: a not inside d");
    TrackSet ts;
    for (int i = 1; i <= d.length(); ++i) {
        std::vector<Cell> row;
        for (int c = 1; c <= d[i - 1]; ++c) {
            if (c <= a[i - 1]) {
                ts.skew.insert({i, c});
            } else {
                row.push_back({i, c});
                ts.cells.insert({i, c});
            }
        }
        if (!row.empty()) ts.rows.push_back(std::move(row));
    }
    ts.total = d.size() - a.size();
    return ts;
}

int diagram_width(const WeakComposition& a) {
    int w = 0;
    for (int v : a.parts) w = std::max(w, v);
    return w;
}

TrackSet product_key_tracks(const WeakComposition& a, const WeakComposition& b) {
    TrackSet ts = key_tracks(a);
    int off = diagram_width(a);
    ts.boundary = off;
    for (int i = 1; i <= b.length(); ++i) {
        std::vector<Cell> row;
        for (int c = 1; c <= b[i - 1]; ++c) {
            row.push_back({i, off + c});
            ts.cells.insert({i, off + c});
        }
        if (!row.empty()) ts.rows.push_back(std::move(row));
    }
    ts.total = a.size() + b.size();
    return ts;
}

}  // namespace

// ---------------------------------------------------------------------------
// standard Young tableaux
// ---------------------------------------------------------------------------

std::vector<Filling> enumerate_syt(const Partition& lambda) {
    return enumerate_increasing(young_tracks(lambda));
}

std::vector<Filling> enumerate_skew_syt(const Partition& lambda, const Partition& mu) {
    return enumerate_increasing(skew_young_tracks(lambda, mu));
}

std::vector<Filling> enumerate_product_syt(const Partition& mu, const Partition& nu) {
    TrackSet ts = young_tracks(mu);
    int off = mu.part(1);
    ts.boundary = off;
    for (int i = 1; i <= nu.length(); ++i) {
        std::vector<Cell> row;
        for (int c = 1; c <= nu.part(i); ++c) {
            row.push_back({i, off + c});
            ts.cells.insert({i, off + c});
        }
        if (!row.empty()) ts.rows.push_back(std::move(row));
    }
    ts.total = mu.size() + nu.size();
    return enumerate_increasing(ts);
}

bool is_valid_syt(const Filling& f) {
    std::vector<bool> seen(static_cast<size_t>(f.size()) + 1, false);
    for (const auto& [c, v] : f.entries) {
        if (v < 1 || v > f.size() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
        int right = f.entry_at({c.row, c.col + 1});
        if (right != 0 && factor_of(c.col, f.boundary) == factor_of(c.col + 1, f.boundary) &&
            right <= v)
            return false;
        int above = f.entry_at({c.row + 1, c.col});
        if (above != 0 && above <= v) return false;
    }
    return true;
}

std::set<int> syt_descent_set(const Filling& f) {
    // column word position: (col asc, row desc)
    std::map<int, int> pos;
    std::vector<Cell> cells;
    for (const auto& [c, v] : f.entries) cells.push_back(c);
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
        return x.col != y.col ? x.col < y.col : x.row > y.row;
    });
    for (size_t i = 0; i < cells.size(); ++i) pos[f.entries.at(cells[i])] = static_cast<int>(i);
    std::set<int> des;
    for (int i = 1; i < f.size(); ++i)
        if (pos[i + 1] < pos[i]) des.insert(i);
    return des;
}

StrongComposition syt_descent_composition(const Filling& f) {
    std::set<int> des = syt_descent_set(f);
    std::vector<int> parts;
    int prev = 0;
    for (int d : des) {
        parts.push_back(d - prev);
        prev = d;
    }
    if (f.size() > prev) parts.push_back(f.size() - prev);
    return StrongComposition(std::move(parts));
}

Filling super_standard(const Partition& lambda) {
    Filling f;
    int v = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int c = 1; c <= lambda.part(i); ++c) f.entries[{i, c}] = v++;
    return f;
}

// ---------------------------------------------------------------------------
// standard key tableaux
// ---------------------------------------------------------------------------

bool is_valid_skt(const Filling& f) {
    std::vector<bool> seen(static_cast<size_t>(f.size()) + 1, false);
    for (const auto& [c, v] : f.entries) {
        if (v < 1 || v > f.size() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
        int right = f.entry_at({c.row, c.col + 1});
        if (right != 0 && factor_of(c.col, f.boundary) == factor_of(c.col + 1, f.boundary) &&
            right >= v)
            return false;
    }
    // column condition: smaller entry above larger in one column forces a
    // larger-than-the-small entry immediately right of the lower cell, or the
    // skew escape hatch
    for (const auto& [upper, i] : f.entries) {
        for (const auto& [lower, k] : f.entries) {
            if (upper.col != lower.col || upper.row <= lower.row) continue;
            if (i >= k) continue;
            Cell right{lower.row, lower.col + 1};
            bool ok = false;
            if (factor_of(lower.col, f.boundary) == factor_of(right.col, f.boundary)) {
                int j = f.entry_at(right);
                if (j != 0 && j > i) ok = true;
            }
            if (!ok && f.skew.count({lower.row, lower.col - 1})) {
                int j = f.entry_at({upper.row, upper.col - 1});
                if (j != 0 && j < k) ok = true;
            }
            if (!ok) return false;
        }
    }
    return true;
}

std::vector<Filling> enumerate_skt(const WeakComposition& a) {
    return enumerate_decreasing(key_tracks(a), is_valid_skt);
}

std::vector<Filling> enumerate_skew_skt(const WeakComposition& d, const WeakComposition& a) {
    return enumerate_decreasing(skew_key_tracks(d, a), is_valid_skt);
}

std::vector<Filling> enumerate_product_skt(const WeakComposition& a, const WeakComposition& b) {
    return enumerate_decreasing(product_key_tracks(a, b), is_valid_skt);
}

std::set<int> skt_descent_set(const Filling& f) {
    // i is a descent when i+1 lies weakly right of i
    std::map<int, Cell> at;
    for (const auto& [c, v] : f.entries) at[v] = c;
    std::set<int> des;
    for (int i = 1; i < f.size(); ++i)
        if (at[i + 1].col >= at[i].col) des.insert(i);
    return des;
}

std::vector<std::vector<int>> skt_runs(const Filling& f) {
    std::set<int> des = skt_descent_set(f);
    std::vector<std::vector<int>> blocks;
    for (int v = f.size(); v >= 1; --v) {
        if (v == f.size() || des.count(v)) blocks.emplace_back();
        blocks.back().push_back(v);
    }
    if (f.size() == 0) blocks.clear();
    return blocks;
}

StrongComposition skt_descent_composition(const Filling& f) {
    auto blocks = skt_runs(f);
    std::vector<int> parts;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        parts.push_back(static_cast<int>(it->size()));
    return StrongComposition(std::move(parts));
}

VirtualOrWeak weak_descent_tableau(const Filling& f, int length) {
    auto blocks = skt_runs(f);
    std::map<int, Cell> at;
    for (const auto& [c, v] : f.entries) at[v] = c;
    std::vector<int> des(static_cast<size_t>(length), 0);
    int prev_row = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
        int r = at[blocks[b].front()].row;
        for (int v : blocks[b]) r = std::min(r, at[v].row);
        if (b > 0) r = std::min(r, prev_row - 1);
        if (r <= 0) return std::nullopt;
        if (r > length)
            throw std::invalid_argument("weak_descent_tableau: length too small for row " +
                                        std::to_string(r));
        des[static_cast<size_t>(r - 1)] = static_cast<int>(blocks[b].size());
        prev_row = r;
    }
    return WeakComposition(std::move(des));
}

Filling yamanouchi_key(const WeakComposition& a) {
    Filling f;
    int v = 1;
    for (int i = 1; i <= a.length(); ++i)
        for (int c = a[i - 1]; c >= 1; --c) f.entries[{i, c}] = v++;
    return f;
}

bool is_yamanouchi_key(const Filling& f) {
    std::vector<Cell> cells;
    for (const auto& [c, v] : f.entries) cells.push_back(c);
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
        return x.row != y.row ? x.row < y.row : x.col > y.col;
    });
    for (size_t p = 0; p < cells.size(); ++p)
        if (f.entries.at(cells[p]) != static_cast<int>(p) + 1) return false;
    return true;
}

Filling assemble_product_skt(const Filling& T, const Filling& U, int width_a,
                             const std::string& pattern) {
    int n = static_cast<int>(pattern.size());
    if (T.size() + U.size() != n)
        throw std::invalid_argument("assemble_product_skt: pattern length mismatch");
    std::vector<int> a_slots, b_slots;
    for (int p = 1; p <= n; ++p) {
        char ch = pattern[static_cast<size_t>(p - 1)];
        if (ch == 'A' || ch == 'a')
            a_slots.push_back(n + 1 - p);
        else if (ch == 'B' || ch == 'b')
            b_slots.push_back(n + 1 - p);
        else
            throw std::invalid_argument("assemble_product_skt: pattern must be A/B letters");
    }
    if (static_cast<int>(a_slots.size()) != T.size())
        throw std::invalid_argument("assemble_product_skt: A-count differs from |T|");
    std::sort(a_slots.begin(), a_slots.end());
    std::sort(b_slots.begin(), b_slots.end());
    Filling out;
    out.boundary = width_a;
    for (const auto& [c, v] : T.entries) out.entries[c] = a_slots[static_cast<size_t>(v - 1)];
    for (const auto& [c, v] : U.entries)
        out.entries[{c.row, c.col + width_a}] = b_slots[static_cast<size_t>(v - 1)];
    return out;
}

ProductFactors disassemble_product_skt(const Filling& f, int width_a) {
    int n = f.size();
    std::vector<int> left_vals, right_vals;
    for (const auto& [c, v] : f.entries)
        (c.col <= width_a ? left_vals : right_vals).push_back(v);
    std::sort(left_vals.begin(), left_vals.end());
    std::sort(right_vals.begin(), right_vals.end());
    std::map<int, int> rank_left, rank_right;
    for (size_t r = 0; r < left_vals.size(); ++r) rank_left[left_vals[r]] = static_cast<int>(r) + 1;
    for (size_t r = 0; r < right_vals.size(); ++r) rank_right[right_vals[r]] = static_cast<int>(r) + 1;
    ProductFactors out;
    for (const auto& [c, v] : f.entries) {
        if (c.col <= width_a)
            out.left.entries[c] = rank_left[v];
        else
            out.right.entries[{c.row, c.col - width_a}] = rank_right[v];
    }
    out.pattern.assign(static_cast<size_t>(n), 'B');
    for (int v : left_vals) out.pattern[static_cast<size_t>(n - v)] = 'A';  // slot of label v
    return out;
}

// ---------------------------------------------------------------------------
// Kohnert tableaux
// ---------------------------------------------------------------------------

std::string KohnertTableau::render() const {
    Filling f;
    f.entries = entries;
    return f.render();
}

bool is_valid_kohnert(const KohnertTableau& d) {
    const WeakComposition& a = d.shape;
    int n = a.length();
    // one i in each column 1..a_i, nothing else
    std::map<int, std::vector<Cell>> by_value;
    for (const auto& [c, v] : d.entries) {
        if (v < 1 || v > n) return false;
        by_value[v].push_back(c);
    }
    for (int i = 1; i <= n; ++i) {
        auto& cells = by_value[i];
        std::sort(cells.begin(), cells.end(),
                  [](const Cell& x, const Cell& y) { return x.col < y.col; });
        if (static_cast<int>(cells.size()) != a[i - 1]) return false;
        for (int c = 0; c < a[i - 1]; ++c) {
            if (cells[static_cast<size_t>(c)].col != c + 1) return false;
            if (cells[static_cast<size_t>(c)].row > i) return false;  // entries at least their row
            if (c > 0 && cells[static_cast<size_t>(c)].row > cells[static_cast<size_t>(c - 1)].row)
                return false;  // weakly descend left to right
        }
    }
    // crossing condition: i above j (i<j) in a column needs an i strictly
    // right and strictly above j
    for (const auto& [ci, i] : d.entries) {
        for (const auto& [cj, j] : d.entries) {
            if (ci.col != cj.col || i >= j || ci.row <= cj.row) continue;
            bool ok = false;
            for (const auto& [ck, k] : d.entries)
                if (k == i && ck.col > ci.col && ck.row > cj.row) ok = true;
            if (!ok) return false;
        }
    }
    return true;
}

bool is_quasi_yamanouchi(const KohnertTableau& d) {
    std::map<int, std::pair<int, int>> row_span;  // row -> (min col, max col)
    std::map<int, std::set<int>> row_values;
    for (const auto& [c, v] : d.entries) {
        auto [it, inserted] = row_span.emplace(c.row, std::make_pair(c.col, c.col));
        if (!inserted) {
            it->second.first = std::min(it->second.first, c.col);
            it->second.second = std::max(it->second.second, c.col);
        }
        row_values[c.row].insert(v);
    }
    for (const auto& [r, span] : row_span) {
        if (row_values[r].count(r)) continue;
        auto above = row_span.find(r + 1);
        if (above == row_span.end() || span.first > above->second.second) return false;
    }
    return true;
}

VirtualOrWeak kohnert_weight(const KohnertTableau& d) {
    std::vector<int> wt(static_cast<size_t>(d.shape.length()), 0);
    for (const auto& [c, v] : d.entries) {
        if (c.row <= 0) return std::nullopt;
        wt[static_cast<size_t>(c.row - 1)] += 1;
    }
    return WeakComposition(std::move(wt));
}

std::vector<KohnertTableau> enumerate_qkt(const WeakComposition& a) {
    int n = a.length();
    int total = a.size();
    int low = 2 - total;  // a deeper cell could not close the ladder below row 1
    std::vector<int> values;
    for (int i = n; i >= 1; --i)
        if (a[i - 1] > 0) values.push_back(i);

    std::vector<KohnertTableau> out;
    KohnertTableau cur;
    cur.shape = a;
    std::set<Cell> occupied;

    // rows chosen for the current value, indexed by column
    std::function<void(size_t, int, int)> place_cols;
    std::function<void(size_t)> place_value = [&](size_t vi) {
        if (vi == values.size()) {
            if (is_quasi_yamanouchi(cur)) out.push_back(cur);
            return;
        }
        place_cols(vi, 1, values[vi]);
    };
    place_cols = [&](size_t vi, int col, int max_row) {
        int i = values[vi];
        if (col > a[i - 1]) {
            place_value(vi + 1);
            return;
        }
        // crossing condition: wherever i sits above a larger j in the
        // previous column, the i here must be strictly above that j
        // (for col >= 2, max_row is exactly the row chosen in column col-1)
        int floor_excl = low - 1;
        if (col > 1) {
            for (const auto& [c2, j] : cur.entries)
                if (c2.col == col - 1 && j > i && max_row > c2.row)
                    floor_excl = std::max(floor_excl, c2.row);
        }
        for (int r = std::min(max_row, i); r > floor_excl; --r) {
            Cell cell{r, col};
            if (occupied.count(cell)) continue;
            cur.entries[cell] = i;
            occupied.insert(cell);
            place_cols(vi, col + 1, r);
            occupied.erase(cell);
            cur.entries.erase(cell);
        }
    };
    place_value(0);

    // the crossing condition for the LAST column of each value has no right
    // neighbour, so re-validate fully (cheap at desk scale)
    std::vector<KohnertTableau> checked;
    for (auto& d : out)
        if (is_valid_kohnert(d)) checked.push_back(std::move(d));
    std::sort(checked.begin(), checked.end());
    return checked;
}

Filling ascend(const KohnertTableau& d) {
    std::vector<Cell> cells;
    for (const auto& [c, v] : d.entries) cells.push_back(c);
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
        return x.row != y.row ? x.row > y.row : x.col < y.col;
    });
    Filling f;
    int label = static_cast<int>(cells.size());
    for (const Cell& c : cells) {
        int home_row = d.entries.at(c);
        f.entries[{home_row, c.col}] = label--;
    }
    return f;
}

KohnertTableau descend(const Filling& t, const WeakComposition& shape) {
    int n = t.size();
    KohnertTableau d;
    d.shape = shape;
    if (n == 0) return d;
    std::map<int, Cell> at;
    for (const auto& [c, v] : t.entries) at[v] = c;
    // cells drop straight down, minimally, so that the reverse reading word
    // (rows bottom to top, right to left within a row) becomes the identity
    std::map<int, int> fall_row;
    fall_row[n] = at[n].row;
    for (int k = n - 1; k >= 1; --k) {
        int cap = fall_row[k + 1] - (at[k].col <= at[k + 1].col ? 1 : 0);
        fall_row[k] = std::min(at[k].row, cap);
    }
    for (int k = 1; k <= n; ++k) d.entries[{fall_row[k], at[k].col}] = at[k].row;
    return d;
}

WeakComposition shape_of_key_filling(const Filling& f, int length) {
    std::vector<int> a(static_cast<size_t>(length), 0);
    for (const auto& [c, v] : f.entries) {
        if (c.row < 1 || c.row > length) throw std::invalid_argument("key filling row out of range");
        a[static_cast<size_t>(c.row - 1)] += 1;
    }
    for (const auto& [c, v] : f.entries)
        if (c.col < 1 || c.col > a[static_cast<size_t>(c.row - 1)])
            throw std::invalid_argument("key filling not left-justified");
    return WeakComposition(std::move(a));
}

// ---------------------------------------------------------------------------
// flattening
// ---------------------------------------------------------------------------

Filling phi_flatten(const Filling& f) {
    int n = f.size();
    std::map<int, std::vector<int>> col_entries;
    std::map<int, int> col_skew;
    for (const auto& [c, v] : f.entries) col_entries[c.col].push_back(v);
    for (const auto& c : f.skew) col_skew[c.col] += 1;
    Filling out;
    out.boundary = f.boundary;
    std::set<int> cols;
    for (const auto& [c, v] : col_entries) cols.insert(c);
    for (const auto& [c, v] : col_skew) cols.insert(c);
    for (int c : cols) {
        int k = col_skew.count(c) ? col_skew[c] : 0;
        for (int r = 1; r <= k; ++r) out.skew.insert({r, c});
        auto vals = col_entries.count(c) ? col_entries[c] : std::vector<int>{};
        std::sort(vals.begin(), vals.end(), std::greater<int>());
        int r = k + 1;
        for (int v : vals) out.entries[{r++, c}] = n + 1 - v;
    }
    return out;
}

}  // namespace keyslide
