#ifndef QCHAR_SL2_HPP
#define QCHAR_SL2_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qchar/character.hpp"

namespace qchar {

/// Segment of spectral shifts in geometric q^2 progression:
/// start, start+2, ..., start+2*(length-1).
struct QString {
    int start = 0;
    int length = 1;

    int end() const { return start + 2 * (length - 1); }
    friend bool operator==(const QString&, const QString&) = default;
};

/// Two strings are in general position iff their shift sets live in different
/// parity classes, or one contains the other, or their union is not a single
/// q^2 progression.
bool strings_in_general_position(const QString& a, const QString& b);

/// Exponents of m at the given node, keyed by shift.
std::map<int, std::int64_t> node_part(const Monomial& m, const CartanDatum& d, int node);

/// True iff m has no negative exponent at the node.
bool is_node_dominant(const Monomial& m, const CartanDatum& d, int node);

/// Greedy decomposition of a positive finitely-supported shift multiset into
/// q-strings: repeatedly extract the longest string starting at the minimal
/// shift. The output is pairwise in general position (checked) and its
/// multiset union reproduces the input.
std::vector<QString> string_decompose(const std::map<int, std::int64_t>& part);

/// Rank-one string character in ambient variables: l+1 monomials
///   m_0 = prod_t Y[i, s+2t],   m_j = m_{j-1} * A[i, s+2(l-j)+1]^-1.
QCharacter string_expansion(const CartanDatum& d, int node, const QString& str);

struct ExpansionTerm {
    Monomial monomial;
    std::int64_t coeff = 0;
    std::int64_t depth = 0;  // number of A-inverse factors below the head
};

/// Terms of i_expansion with their depths relative to the head monomial m.
/// Sorted by (depth, monomial).
std::vector<ExpansionTerm> i_expansion_terms(const CartanDatum& d, int node, const Monomial& m);

/// E_i(m): m times the product of the normalized string expansions of the
/// general-position decomposition of the i-part of m. The head term is m with
/// multiplicity 1; every other term is m times a nonempty product of
/// A[i,.]^-1. Throws std::domain_error when m has a negative exponent at the
/// node.
QCharacter i_expansion(const CartanDatum& d, int node, const Monomial& m);

}  // namespace qchar

#endif
