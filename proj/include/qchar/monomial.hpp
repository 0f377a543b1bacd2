#ifndef QCHAR_MONOMIAL_HPP
#define QCHAR_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "qchar/errors.hpp"

namespace qchar {

/// Index of a variable Y[node, shift]: the node of the Dynkin diagram and the
/// integer exponent s of the spectral parameter q^s (a single q-lattice with
/// implicit base).
struct VarKey {
    int node = 0;
    int shift = 0;
    friend constexpr auto operator<=>(const VarKey&, const VarKey&) = default;
};

/// Sparse Laurent monomial in the variables Y[node, shift].
///
/// Factors are kept sorted by (node, shift) with no zero exponents, so
/// structural equality is monomial equality and operator< is the canonical
/// lexicographic order on (node, shift, exponent) triples.
class Monomial {
public:
    using Factor = std::pair<VarKey, std::int64_t>;

    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial y(int node, int shift, std::int64_t exp = 1);

    /// Builds from an arbitrary factor list: sorts, merges duplicate keys,
    /// drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    bool is_unit() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    const std::vector<Factor>& factors() const { return factors_; }

    /// Exponent of Y[node, shift]; 0 when the variable does not occur.
    std::int64_t exponent(int node, int shift) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    /// m1 * m2^e with zero exponents pruned. The group law of the monomial
    /// lattice; combine(m, m, -1) is the unit.
    friend Monomial combine(const Monomial& m1, const Monomial& m2, std::int64_t e);

private:
    std::vector<Factor> factors_;
};

/// True iff every stored exponent is positive (the unit is dominant).
bool is_dominant(const Monomial& m);

}  // namespace qchar

#endif
