#ifndef QCHAR_CARTAN_HPP
#define QCHAR_CARTAN_HPP

#include <cstdint>
#include <vector>

#include "qchar/monomial.hpp"

namespace qchar {

enum class CartanKind { InfiniteA, WindowA, CyclicA };

/// One of the three type-A index lattices:
///  - InfiniteA: nodes are all integers, doubly infinite line.
///  - WindowA(lo, hi): nodes restricted to [lo, hi]; variables at nodes
///    outside the window are identified with 1.
///  - CyclicA(n): nodes are residues mod n+1, cyclic diagram. n = 1 carries
///    the special doubled adjacency.
///
/// The datum fixes node arithmetic, Cartan matrix entries and the
/// generalized-simple-root monomials A[i, s].
class CartanDatum {
public:
    static CartanDatum infinite_a();
    static CartanDatum window_a(int lo, int hi);  // requires lo <= hi
    static CartanDatum cyclic_a(int n);           // requires n >= 1

    CartanKind kind() const { return kind_; }
    bool is_infinite() const { return kind_ == CartanKind::InfiniteA; }
    bool is_window() const { return kind_ == CartanKind::WindowA; }
    bool is_cyclic() const { return kind_ == CartanKind::CyclicA; }

    int lo() const;      // WindowA only
    int hi() const;      // WindowA only
    int n() const;       // CyclicA only
    int period() const;  // n + 1, CyclicA only

    bool has_node(int i) const;

    /// CyclicA: nonnegative residue mod n+1. Others: identity.
    int canonical_node(int i) const;

    /// Throws std::domain_error when i is not a node of this datum.
    void require_node(int i) const;

    /// Cartan matrix entry C[i][j]: 2 on the diagonal, -1 on adjacency
    /// (-2 off-diagonal for CyclicA(1)), 0 otherwise.
    std::int64_t entry(int i, int j) const;

    /// The monomial A[i, s]:
    ///   Y[i,s-1] Y[i,s+1] Y[i+1,s]^-1 Y[i-1,s]^-1
    /// with node arithmetic mod n+1 for CyclicA(n >= 2), the doubled factor
    /// Y[i+1,s]^-2 for CyclicA(1), and out-of-window factors dropped for
    /// WindowA.
    Monomial a_monomial(int i, int s) const;

    /// All nodes, in ascending order. WindowA and CyclicA only.
    std::vector<int> node_range() const;

    friend bool operator==(const CartanDatum&, const CartanDatum&) = default;

private:
    CartanDatum(CartanKind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    CartanKind kind_ = CartanKind::InfiniteA;
    int a_ = 0;  // lo (WindowA) or n (CyclicA)
    int b_ = 0;  // hi (WindowA)
};

}  // namespace qchar

#endif
