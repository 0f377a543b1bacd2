#ifndef QCHAR_CHARACTER_HPP
#define QCHAR_CHARACTER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

/// Finitely supported integer weight in fundamental-weight coordinates:
/// coeff(i) is the coefficient of the fundamental weight at node i.
class Weight {
public:
    using Entry = std::pair<int, std::int64_t>;

    Weight() = default;

    static Weight zero() { return Weight(); }
    static Weight fundamental(int node, std::int64_t coeff = 1);
    static Weight from_entries(std::vector<Entry> entries);

    std::int64_t coeff(int node) const;
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Weight plus(const Weight& other, std::int64_t scale = 1) const;
    Weight scaled(std::int64_t scale) const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<Entry> entries_;  // sorted by node, no zeros
};

/// The simple root at node i in fundamental-weight coordinates, relative to
/// the given Cartan datum (column of the Cartan matrix).
Weight simple_root(const CartanDatum& d, int i);

/// Projects a monomial to its weight: coeff(i) = sum of exponents of
/// Y[i, s] over all shifts s.
Weight weight_of(const Monomial& m);

/// A formal integer combination of monomials over a fixed Cartan datum.
/// `highest` and `depth_bound` are optional truncation metadata: when set,
/// every term lies at some depth 0..depth_bound below `highest`.
struct QCharacter {
    CartanDatum cartan = CartanDatum::infinite_a();
    std::map<Monomial, std::int64_t> terms;
    std::optional<Monomial> highest;
    std::optional<std::int64_t> depth_bound;

    void add_term(const Monomial& m, std::int64_t coeff);
    std::int64_t coeff(const Monomial& m) const;

    /// Signed sum of all multiplicities.
    std::int64_t total_multiplicity() const;
};

/// Multiset of A-monomials, keyed by (node, shift) of A[node, shift].
using AFactorization = std::map<VarKey, std::int64_t>;

/// Solves m_plus / m = prod A[i,s]^{c[i,s]} with all c >= 0, over the given
/// Cartan datum. The solution is unique when it exists: the system is
/// triangular in the spectral-shift filtration, since at the top shift level
/// of the quotient only A-monomials one level below can contribute, with no
/// cancellation. Returns nullopt when no such factorization exists.
std::optional<AFactorization> a_factorization(const Monomial& m, const Monomial& m_plus,
                                              const CartanDatum& d);

/// Number of A-factors separating m from m_plus (0 iff m == m_plus);
/// nullopt when m_plus / m is not a product of A-monomials.
std::optional<std::int64_t> depth_of(const Monomial& m, const Monomial& m_plus,
                                     const CartanDatum& d);

/// Collapses a q-character to weight multiplicities via weight_of.
std::map<Weight, std::int64_t> classical_character(const QCharacter& chi);

/// Like classical_character but refined by depth below chi.highest, so that
/// cyclic data keep the imaginary grading that plain fundamental-weight
/// coordinates collapse. Requires highest; terms must factor through it.
std::map<std::pair<Weight, std::int64_t>, std::int64_t> graded_classical_character(
    const QCharacter& chi);

/// Substitution Y[i,s] -> Y[i mod (n+1), s].
Monomial fold_monomial(const Monomial& m, int n);

/// The companion relabeling of weights: the fundamental weight at node i is
/// sent to the one at i mod (n+1).
Weight fold_weight(const Weight& w, int n);

/// Folds a character with integer node indices (InfiniteA or WindowA) to one
/// over CyclicA(n); colliding monomials have their multiplicities summed and
/// the highest monomial, when present, is folded along.
QCharacter fold_qcharacter(const QCharacter& chi, int n);

/// Sets every variable at a node outside [lo, hi] to 1.
Monomial kill_outside_window(const Monomial& m, int lo, int hi);

}  // namespace qchar

#endif
