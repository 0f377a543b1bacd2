#include "qchar/tableaux.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qchar {

namespace {

void require_descriptor(const KRDescriptor& desc) {
    if (desc.length < 1)
        throw std::invalid_argument("KR descriptor requires k >= 1, got " +
                                    std::to_string(desc.length));
}

}  // namespace

Tableau Tableau::default_filling(const KRDescriptor& desc) {
    require_descriptor(desc);
    Tableau t;
    t.desc_ = desc;
    return t;
}

Tableau Tableau::from_deviations(const KRDescriptor& desc, std::map<Cell, int> devs) {
    require_descriptor(desc);
    Tableau t;
    t.desc_ = desc;
    t.devs_ = std::move(devs);
    for (const auto& [cell, dev] : t.devs_) {
        auto [alpha, beta] = cell;
        if (alpha > desc.node || beta < 1 || beta > desc.length)
            throw std::invalid_argument("tableau cell outside the row/column range");
        if (dev <= 0)
            throw std::invalid_argument("stored deviations must be positive");
        if (t.entry(alpha, beta) <= t.entry(alpha - 1, beta) ||
            (alpha < desc.node && t.entry(alpha + 1, beta) <= t.entry(alpha, beta)))
            throw std::invalid_argument("tableau columns must strictly increase");
        if ((beta > 1 && t.entry(alpha, beta) < t.entry(alpha, beta - 1)) ||
            (beta < desc.length && t.entry(alpha, beta + 1) < t.entry(alpha, beta)))
            throw std::invalid_argument("tableau rows must weakly increase");
    }
    return t;
}

int Tableau::entry(int alpha, int beta) const {
    auto it = devs_.find({alpha, beta});
    return alpha + (it == devs_.end() ? 0 : it->second);
}

std::int64_t Tableau::depth() const {
    std::int64_t total = 0;
    for (const auto& [cell, dev] : devs_) total = checked_add(total, dev);
    return total;
}

Monomial box_monomial(int r, int s) {
    return Monomial::from_factors({{VarKey{r - 1, s + r}, -1}, {VarKey{r, s + r - 1}, 1}});
}

int cell_shift(const KRDescriptor& desc, int alpha, int beta) {
    return desc.base_shift + desc.node - 1 + 2 * (beta - alpha);
}

Monomial default_column_tail(const KRDescriptor& desc, int m, int beta) {
    return Monomial::y(m, desc.base_shift + desc.node + 2 * beta - 2 - m);
}

Monomial tableau_monomial(const Tableau& t) {
    const KRDescriptor& desc = t.desc();
    Monomial result;
    for (int beta = 1; beta <= desc.length; ++beta) {
        // Lowest deviating row of this column; everything above it telescopes.
        int cutoff = desc.node + 1;
        for (const auto& [cell, dev] : t.deviations())
            if (cell.second == beta) cutoff = std::min(cutoff, cell.first);
        result = combine(result, default_column_tail(desc, cutoff - 1, beta), 1);
        for (int alpha = cutoff; alpha <= desc.node; ++alpha)
            result = combine(result, box_monomial(t.entry(alpha, beta), cell_shift(desc, alpha, beta)), 1);
    }
    return result;
}

Monomial tableau_monomial_window(const Tableau& t, int n) {
    const KRDescriptor& desc = t.desc();
    if (n < 0) throw std::invalid_argument("window radius must be >= 0");
    Monomial result;
    for (int beta = 1; beta <= desc.length; ++beta)
        for (int alpha = desc.node - n; alpha <= desc.node; ++alpha)
            result = combine(result, box_monomial(t.entry(alpha, beta), cell_shift(desc, alpha, beta)), 1);
    return kill_outside_window(result, desc.node - n, desc.node + n);
}

namespace {

std::map<Tableau::Cell, int> deviations_of_grid(const KRDescriptor& desc,
                                                const std::vector<std::vector<int>>& rows,
                                                int top_alpha) {
    // rows[r][b] is the entry at (top_alpha + r, beta = b + 1)
    std::map<Tableau::Cell, int> devs;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t b = 0; b < rows[r].size(); ++b) {
            int alpha = top_alpha + static_cast<int>(r);
            int dev = rows[r][b] - alpha;
            if (dev != 0) devs[{alpha, static_cast<int>(b) + 1}] = dev;
        }
    return devs;
}

void sort_canonically(std::vector<Tableau>& out, bool window, int n) {
    std::vector<std::pair<std::pair<std::int64_t, Monomial>, std::size_t>> keys;
    keys.reserve(out.size());
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        Monomial m = window ? tableau_monomial_window(out[idx], n) : tableau_monomial(out[idx]);
        keys.push_back({{out[idx].depth(), std::move(m)}, idx});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Tableau> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, idx] : keys) sorted.push_back(std::move(out[idx]));
    out = std::move(sorted);
}

}  // namespace

std::vector<Tableau> enumerate_window(const KRDescriptor& desc, int n) {
    require_descriptor(desc);
    if (n < 0) throw std::invalid_argument("window radius must be >= 0");
    const int k = desc.length;
    const int top = desc.node - n;
    const int rows = n + 1;
    const int max_entry = desc.node + n + 1;

    std::vector<Tableau> out;
    std::vector<std::vector<int>> grid(rows, std::vector<int>(k, 0));

    // Fill cell by cell, row major.
    auto rec = [&](auto&& self, int r, int b) -> void {
        if (r == rows) {
            out.push_back(Tableau::from_deviations(desc, deviations_of_grid(desc, grid, top)));
            return;
        }
        int next_r = (b + 1 == k) ? r + 1 : r;
        int next_b = (b + 1 == k) ? 0 : b + 1;
        int lowest = top + r;                                    // entry >= alpha
        if (r > 0) lowest = std::max(lowest, grid[r - 1][b] + 1);  // column strict
        if (b > 0) lowest = std::max(lowest, grid[r][b - 1]);      // row weak
        for (int v = lowest; v <= max_entry; ++v) {
            grid[r][b] = v;
            self(self, next_r, next_b);
        }
    };
    rec(rec, 0, 0);
    sort_canonically(out, true, n);
    return out;
}

std::vector<Tableau> enumerate_by_depth(const KRDescriptor& desc, std::int64_t max_depth) {
    require_descriptor(desc);
    if (max_depth < 0) throw std::invalid_argument("depth bound must be >= 0");
    const int k = desc.length;

    // In deviation coordinates a tableau is a reverse plane partition growing
    // toward the corner (node, k): deviations weakly increase along beta and
    // along alpha. Enumerate row by row downward from alpha = node; each row
    // is bounded by the one above and the remaining depth budget.
    std::vector<Tableau> out;
    std::vector<std::vector<int>> dev_rows;  // dev_rows[r] is row alpha = node - r

    auto emit = [&]() {
        std::map<Tableau::Cell, int> devs;
        for (std::size_t r = 0; r < dev_rows.size(); ++r)
            for (int b = 0; b < k; ++b)
                if (dev_rows[r][b] > 0)
                    devs[{desc.node - static_cast<int>(r), b + 1}] = dev_rows[r][b];
        out.push_back(Tableau::from_deviations(desc, std::move(devs)));
    };

    // Generates one row (weakly increasing, componentwise <= bound), then
    // recurses downward while the row is nonzero and budget remains.
    // `remaining` is the depth budget left for this row and everything below;
    // cells still to fill in this row each cost at least the current value.
    auto rows_rec = [&](auto&& self, const std::vector<int>& bound, std::int64_t budget) -> void {
        std::vector<int> row(k, 0);
        auto cells_rec = [&](auto&& cself, int b, std::int64_t remaining) -> void {
            if (b == k) {
                bool nonzero = false;
                for (int v : row)
                    if (v > 0) nonzero = true;
                if (!nonzero) return;  // an all-zero row ends the tableau
                dev_rows.push_back(row);
                emit();
                self(self, row, remaining);
                dev_rows.pop_back();
                return;
            }
            int low = (b > 0) ? row[b - 1] : 0;  // weakly increasing along the row
            for (int v = low;; ++v) {
                if (v > bound[b]) break;
                if (static_cast<std::int64_t>(v) * (k - b) > remaining) break;
                row[b] = v;
                cself(cself, b + 1, remaining - v);
            }
        };
        cells_rec(cells_rec, 0, budget);
    };

    // The top row is bounded only by the budget.
    emit();  // the default tableau
    std::vector<int> top_bound(k, static_cast<int>(std::min<std::int64_t>(max_depth, 1 << 30)));
    rows_rec(rows_rec, top_bound, max_depth);
    sort_canonically(out, false, 0);
    return out;
}

QCharacter kr_qcharacter_window(const KRDescriptor& desc, int n) {
    QCharacter chi;
    chi.cartan = CartanDatum::window_a(desc.node - n, desc.node + n);
    chi.highest = kr_highest_monomial(desc);
    for (const Tableau& t : enumerate_window(desc, n))
        chi.add_term(tableau_monomial_window(t, n), 1);
    return chi;
}

QCharacter kr_qcharacter_depth(const KRDescriptor& desc, std::int64_t max_depth) {
    QCharacter chi;
    chi.cartan = CartanDatum::infinite_a();
    chi.highest = kr_highest_monomial(desc);
    chi.depth_bound = max_depth;
    for (const Tableau& t : enumerate_by_depth(desc, max_depth))
        chi.add_term(tableau_monomial(t), 1);
    return chi;
}

Monomial kr_highest_monomial(const KRDescriptor& desc) {
    require_descriptor(desc);
    Monomial m;
    for (int beta = 1; beta <= desc.length; ++beta)
        m = combine(m, Monomial::y(desc.node, desc.base_shift + 2 * (beta - 1)), 1);
    return m;
}

}  // namespace qchar
