#ifndef QCHAR_TABLEAUX_HPP
#define QCHAR_TABLEAUX_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qchar/character.hpp"

namespace qchar {

/// Kirillov-Reshetikhin datum: node i, string length k >= 1 and base shift c
/// (the spectral base is q^c). The associated Drinfeld datum is the q-string
/// of length k starting at shift c.
struct KRDescriptor {
    int node = 0;
    int length = 1;
    int base_shift = 0;

    friend bool operator==(const KRDescriptor&, const KRDescriptor&) = default;
};

/// Semistandard tableau with rows alpha <= i and columns 1..k, entries weakly
/// increasing along rows and strictly increasing down columns, stabilized to
/// T[alpha][beta] = alpha far up. Stored sparsely as the deviations
/// T[alpha][beta] - alpha > 0; the all-default tableau is the highest one.
class Tableau {
public:
    using Cell = std::pair<int, int>;  // (alpha, beta)

    static Tableau default_filling(const KRDescriptor& desc);

    /// Validates row/column monotonicity and positivity of the deviations.
    /// Throws std::invalid_argument on violation.
    static Tableau from_deviations(const KRDescriptor& desc, std::map<Cell, int> devs);

    const KRDescriptor& desc() const { return desc_; }
    const std::map<Cell, int>& deviations() const { return devs_; }

    int entry(int alpha, int beta) const;
    std::int64_t depth() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    KRDescriptor desc_;
    std::map<Cell, int> devs_;
};

/// The letter monomial: box(r, s) = Y[r-1, s+r]^-1 Y[r, s+r-1].
Monomial box_monomial(int r, int s);

/// Spectral shift attached to cell (alpha, beta): c + i - 1 + 2(beta - alpha).
int cell_shift(const KRDescriptor& desc, int alpha, int beta);

/// Closed form of the telescoping half-infinite default column product
/// prod_{alpha <= m} box(alpha, cell_shift(alpha, beta)) = Y[m, c+i+2*beta-2-m].
Monomial default_column_tail(const KRDescriptor& desc, int m, int beta);

/// Monomial of a stabilized tableau over InfiniteA; the infinite default tail
/// of each column is folded in via default_column_tail.
Monomial tableau_monomial(const Tableau& t);

/// Window variant: only rows i-n..i contribute and factors at nodes outside
/// [i-n, i+n] are dropped.
Monomial tableau_monomial_window(const Tableau& t, int n);

/// All semistandard fillings of the (n+1) x k window (rows i-n..i) with
/// entries in [i-n, i+n+1], in canonical order (depth, then monomial).
std::vector<Tableau> enumerate_window(const KRDescriptor& desc, int n);

/// All stabilized tableaux of depth <= max_depth, in canonical order.
std::vector<Tableau> enumerate_by_depth(const KRDescriptor& desc, std::int64_t max_depth);

/// Window truncation of the KR q-character, over WindowA(i-n, i+n).
QCharacter kr_qcharacter_window(const KRDescriptor& desc, int n);

/// Depth truncation of the KR q-character, over InfiniteA, with highest
/// monomial and depth bound recorded.
QCharacter kr_qcharacter_depth(const KRDescriptor& desc, std::int64_t max_depth);

/// The highest monomial prod_{beta=1..k} Y[i, c + 2(beta-1)].
Monomial kr_highest_monomial(const KRDescriptor& desc);

}  // namespace qchar

#endif
