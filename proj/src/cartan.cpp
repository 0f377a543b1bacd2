#include "qchar/cartan.hpp"

#include <stdexcept>
#include <string>

namespace qchar {

CartanDatum CartanDatum::infinite_a() {
    return CartanDatum(CartanKind::InfiniteA, 0, 0);
}

CartanDatum CartanDatum::window_a(int lo, int hi) {
    if (lo > hi)
        throw std::invalid_argument("WindowA requires lo <= hi, got [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return CartanDatum(CartanKind::WindowA, lo, hi);
}

CartanDatum CartanDatum::cyclic_a(int n) {
    if (n < 1)
        throw std::invalid_argument("CyclicA requires n >= 1, got " + std::to_string(n));
    return CartanDatum(CartanKind::CyclicA, n, 0);
}

int CartanDatum::lo() const {
    if (!is_window()) throw std::logic_error("lo() requires WindowA");
    return a_;
}

int CartanDatum::hi() const {
    if (!is_window()) throw std::logic_error("hi() requires WindowA");
    return b_;
}

int CartanDatum::n() const {
    if (!is_cyclic()) throw std::logic_error("n() requires CyclicA");
    return a_;
}

int CartanDatum::period() const { return n() + 1; }

bool CartanDatum::has_node(int i) const {
    switch (kind_) {
        case CartanKind::InfiniteA: return true;
        case CartanKind::WindowA: return a_ <= i && i <= b_;
        case CartanKind::CyclicA: return true;  // every integer names a residue
    }
    return false;
}

int CartanDatum::canonical_node(int i) const {
    if (!is_cyclic()) return i;
    int p = a_ + 1;
    int r = i % p;
    return r < 0 ? r + p : r;
}

void CartanDatum::require_node(int i) const {
    if (!has_node(i))
        throw std::domain_error("node " + std::to_string(i) + " outside window [" +
                                std::to_string(a_) + ", " + std::to_string(b_) + "]");
}

std::int64_t CartanDatum::entry(int i, int j) const {
    require_node(i);
    require_node(j);
    if (is_cyclic()) {
        int p = period();
        int d = canonical_node(i - j);
        if (d == 0) return 2;
        if (n() == 1) return -2;  // doubled adjacency of the two-node cycle
        if (d == 1 || d == p - 1) return -1;
        return 0;
    }
    int d = i - j;
    if (d == 0) return 2;
    if (d == 1 || d == -1) return -1;
    return 0;
}

Monomial CartanDatum::a_monomial(int i, int s) const {
    require_node(i);
    std::vector<Monomial::Factor> factors;
    if (is_cyclic() && n() == 1) {
        int r = canonical_node(i);
        factors.push_back({VarKey{r, s - 1}, 1});
        factors.push_back({VarKey{r, s + 1}, 1});
        factors.push_back({VarKey{canonical_node(i + 1), s}, -2});
        return Monomial::from_factors(std::move(factors));
    }
    auto push = [&](int node, int shift, std::int64_t exp) {
        if (is_window() && !has_node(node)) return;  // boundary variables are 1
        factors.push_back({VarKey{canonical_node(node), shift}, exp});
    };
    push(i, s - 1, 1);
    push(i, s + 1, 1);
    push(i + 1, s, -1);
    push(i - 1, s, -1);
    return Monomial::from_factors(std::move(factors));
}

std::vector<int> CartanDatum::node_range() const {
    std::vector<int> nodes;
    if (is_window()) {
        for (int i = a_; i <= b_; ++i) nodes.push_back(i);
    } else if (is_cyclic()) {
        for (int i = 0; i <= a_; ++i) nodes.push_back(i);
    } else {
        throw std::logic_error("node_range() is not defined for InfiniteA");
    }
    return nodes;
}

}  // namespace qchar
