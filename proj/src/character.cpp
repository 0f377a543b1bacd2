#include "qchar/character.hpp"

#include <algorithm>
#include <stdexcept>

namespace qchar {

Weight Weight::fundamental(int node, std::int64_t coeff) {
    Weight w;
    if (coeff != 0) w.entries_.push_back({node, coeff});
    return w;
}

Weight Weight::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Weight w;
    for (const Entry& e : entries) {
        if (!w.entries_.empty() && w.entries_.back().first == e.first) {
            w.entries_.back().second = checked_add(w.entries_.back().second, e.second);
            if (w.entries_.back().second == 0) w.entries_.pop_back();
        } else if (e.second != 0) {
            w.entries_.push_back(e);
        }
    }
    return w;
}

std::int64_t Weight::coeff(int node) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), node,
                               [](const Entry& e, int n) { return e.first < n; });
    if (it != entries_.end() && it->first == node) return it->second;
    return 0;
}

Weight Weight::plus(const Weight& other, std::int64_t scale) const {
    std::vector<Entry> acc = entries_;
    for (const Entry& e : other.entries_)
        acc.push_back({e.first, checked_mul(scale, e.second)});
    return from_entries(std::move(acc));
}

Weight Weight::scaled(std::int64_t scale) const {
    std::vector<Entry> acc;
    for (const Entry& e : entries_) acc.push_back({e.first, checked_mul(scale, e.second)});
    return from_entries(std::move(acc));
}

Weight simple_root(const CartanDatum& d, int i) {
    d.require_node(i);
    std::vector<Weight::Entry> acc;
    if (d.is_cyclic()) {
        int r = d.canonical_node(i);
        acc.push_back({r, 2});
        if (d.n() == 1) {
            acc.push_back({d.canonical_node(i + 1), -2});
        } else {
            acc.push_back({d.canonical_node(i + 1), -1});
            acc.push_back({d.canonical_node(i - 1), -1});
        }
    } else {
        acc.push_back({i, 2});
        if (d.has_node(i + 1) || d.is_infinite()) acc.push_back({i + 1, -1});
        if (d.has_node(i - 1) || d.is_infinite()) acc.push_back({i - 1, -1});
    }
    return Weight::from_entries(std::move(acc));
}

Weight weight_of(const Monomial& m) {
    std::vector<Weight::Entry> acc;
    for (const auto& [key, exp] : m.factors()) acc.push_back({key.node, exp});
    return Weight::from_entries(std::move(acc));
}

void QCharacter::add_term(const Monomial& m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms.erase(it);
    }
}

std::int64_t QCharacter::coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? 0 : it->second;
}

std::int64_t QCharacter::total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& [m, c] : terms) total = checked_add(total, c);
    return total;
}

std::optional<AFactorization> a_factorization(const Monomial& m, const Monomial& m_plus,
                                              const CartanDatum& d) {
    Monomial quotient = combine(m_plus, m, -1);
    if (d.is_cyclic()) quotient = fold_monomial(quotient, d.n());
    AFactorization result;
    if (quotient.is_unit()) return result;

    int shift_floor = quotient.factors().front().first.shift;
    for (const auto& [key, exp] : quotient.factors())
        shift_floor = std::min(shift_floor, key.shift);

    // Peel from the top shift level down. Every entry at the top level must
    // come from the Y[i, s+1] factor of some A[i, s] one level below; the
    // multiplicities there are forced.
    while (!quotient.is_unit()) {
        int top = quotient.factors().front().first.shift;
        for (const auto& [key, exp] : quotient.factors()) top = std::max(top, key.shift);
        if (top - 1 < shift_floor + 1) return std::nullopt;

        std::vector<std::pair<VarKey, std::int64_t>> forced;
        for (const auto& [key, exp] : quotient.factors()) {
            if (key.shift != top) continue;
            if (exp < 0) return std::nullopt;
            forced.push_back({VarKey{key.node, top - 1}, exp});
        }
        for (const auto& [akey, count] : forced) {
            if (!d.has_node(akey.node)) return std::nullopt;
            quotient = combine(quotient, d.a_monomial(akey.node, akey.shift), -count);
            auto [it, inserted] = result.try_emplace(akey, count);
            if (!inserted) it->second = checked_add(it->second, count);
        }
    }
    return result;
}

std::optional<std::int64_t> depth_of(const Monomial& m, const Monomial& m_plus,
                                     const CartanDatum& d) {
    auto fact = a_factorization(m, m_plus, d);
    if (!fact) return std::nullopt;
    std::int64_t depth = 0;
    for (const auto& [key, count] : *fact) depth = checked_add(depth, count);
    return depth;
}

std::map<Weight, std::int64_t> classical_character(const QCharacter& chi) {
    std::map<Weight, std::int64_t> out;
    for (const auto& [m, c] : chi.terms) {
        auto [it, inserted] = out.try_emplace(weight_of(m), c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

std::map<std::pair<Weight, std::int64_t>, std::int64_t> graded_classical_character(
    const QCharacter& chi) {
    if (!chi.highest)
        throw std::invalid_argument("graded_classical_character requires a highest monomial");
    std::map<std::pair<Weight, std::int64_t>, std::int64_t> out;
    for (const auto& [m, c] : chi.terms) {
        auto depth = depth_of(m, *chi.highest, chi.cartan);
        if (!depth)
            throw std::invalid_argument(
                "graded_classical_character: term does not factor through the highest monomial");
        auto [it, inserted] = out.try_emplace(std::pair{weight_of(m), *depth}, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

Monomial fold_monomial(const Monomial& m, int n) {
    int p = n + 1;
    std::vector<Monomial::Factor> acc;
    acc.reserve(m.size());
    for (const auto& [key, exp] : m.factors()) {
        int r = key.node % p;
        if (r < 0) r += p;
        acc.push_back({VarKey{r, key.shift}, exp});
    }
    return Monomial::from_factors(std::move(acc));
}

Weight fold_weight(const Weight& w, int n) {
    int p = n + 1;
    std::vector<Weight::Entry> acc;
    for (const auto& [node, c] : w.entries()) {
        int r = node % p;
        if (r < 0) r += p;
        acc.push_back({r, c});
    }
    return Weight::from_entries(std::move(acc));
}

QCharacter fold_qcharacter(const QCharacter& chi, int n) {
    if (chi.cartan.is_cyclic())
        throw std::invalid_argument("fold_qcharacter requires integer node indices");
    QCharacter out;
    out.cartan = CartanDatum::cyclic_a(n);
    out.depth_bound = chi.depth_bound;
    if (chi.highest) out.highest = fold_monomial(*chi.highest, n);
    for (const auto& [m, c] : chi.terms) out.add_term(fold_monomial(m, n), c);
    return out;
}

Monomial kill_outside_window(const Monomial& m, int lo, int hi) {
    std::vector<Monomial::Factor> acc;
    for (const auto& [key, exp] : m.factors())
        if (lo <= key.node && key.node <= hi) acc.push_back({key, exp});
    return Monomial::from_factors(std::move(acc));
}

}  // namespace qchar
