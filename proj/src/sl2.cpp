#include "qchar/sl2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qchar {

bool strings_in_general_position(const QString& a, const QString& b) {
    if (((a.start - b.start) % 2 + 2) % 2 == 1) return true;  // different parity classes
    bool a_in_b = b.start <= a.start && a.end() <= b.end();
    bool b_in_a = a.start <= b.start && b.end() <= a.end();
    if (a_in_b || b_in_a) return true;
    // Same parity, no containment: the union is a single progression exactly
    // when the strings overlap or are adjacent.
    return std::max(a.start, b.start) - std::min(a.end(), b.end()) > 2;
}

std::map<int, std::int64_t> node_part(const Monomial& m, const CartanDatum& d, int node) {
    int target = d.canonical_node(node);
    std::map<int, std::int64_t> part;
    for (const auto& [key, exp] : m.factors())
        if (d.canonical_node(key.node) == target)
            part[key.shift] = checked_add(part.count(key.shift) ? part[key.shift] : 0, exp);
    return part;
}

bool is_node_dominant(const Monomial& m, const CartanDatum& d, int node) {
    for (const auto& [shift, exp] : node_part(m, d, node))
        if (exp < 0) return false;
    return true;
}

std::vector<QString> string_decompose(const std::map<int, std::int64_t>& part) {
    for (const auto& [shift, mult] : part)
        if (mult <= 0)
            throw std::invalid_argument("string_decompose requires positive multiplicities");

    std::map<int, std::int64_t> rest = part;
    std::vector<QString> out;
    while (!rest.empty()) {
        int start = rest.begin()->first;
        int length = 0;
        while (rest.count(start + 2 * length)) ++length;
        for (int t = 0; t < length; ++t) {
            auto it = rest.find(start + 2 * t);
            if (--(it->second) == 0) rest.erase(it);
        }
        out.push_back(QString{start, length});
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!strings_in_general_position(out[i], out[j]))
                throw std::logic_error("string_decompose produced strings in special position");
    return out;
}

QCharacter string_expansion(const CartanDatum& d, int node, const QString& str) {
    d.require_node(node);
    if (str.length < 1) throw std::invalid_argument("q-strings have length >= 1");
    QCharacter chi;
    chi.cartan = d;
    Monomial cur;
    for (int t = 0; t < str.length; ++t)
        cur = combine(cur, Monomial::y(d.canonical_node(node), str.start + 2 * t), 1);
    chi.highest = cur;
    chi.add_term(cur, 1);
    for (int j = 1; j <= str.length; ++j) {
        cur = combine(cur, d.a_monomial(node, str.start + 2 * (str.length - j) + 1), -1);
        chi.add_term(cur, 1);
    }
    return chi;
}

std::vector<ExpansionTerm> i_expansion_terms(const CartanDatum& d, int node, const Monomial& m) {
    d.require_node(node);
    std::map<int, std::int64_t> part = node_part(m, d, node);
    for (const auto& [shift, exp] : part)
        if (exp < 0)
            throw std::domain_error("i_expansion requires the node part to be dominant");

    // Product over strings of the expansions normalized by their heads.
    std::map<Monomial, std::pair<std::int64_t, std::int64_t>> acc;  // ratio -> (coeff, depth)
    acc[Monomial::unit()] = {1, 0};
    for (const QString& str : string_decompose(part)) {
        std::vector<std::pair<Monomial, std::int64_t>> ratios;  // (head-normalized term, depth)
        Monomial cur;
        ratios.push_back({cur, 0});
        for (int j = 1; j <= str.length; ++j) {
            cur = combine(cur, d.a_monomial(node, str.start + 2 * (str.length - j) + 1), -1);
            ratios.push_back({cur, j});
        }
        std::map<Monomial, std::pair<std::int64_t, std::int64_t>> next;
        for (const auto& [ratio, cd] : acc)
            for (const auto& [extra, jdepth] : ratios) {
                Monomial prod = combine(ratio, extra, 1);
                auto [it, inserted] = next.try_emplace(prod, std::pair{cd.first, cd.second + jdepth});
                if (!inserted) {
                    it->second.first = checked_add(it->second.first, cd.first);
                    if (it->second.second != cd.second + jdepth)
                        throw std::logic_error("i_expansion: colliding terms of unequal depth");
                }
            }
        acc = std::move(next);
    }

    std::vector<ExpansionTerm> out;
    out.reserve(acc.size());
    for (const auto& [ratio, cd] : acc)
        out.push_back({combine(m, ratio, 1), cd.first, cd.second});
    std::sort(out.begin(), out.end(), [](const ExpansionTerm& a, const ExpansionTerm& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.monomial < b.monomial;
    });
    return out;
}

QCharacter i_expansion(const CartanDatum& d, int node, const Monomial& m) {
    QCharacter chi;
    chi.cartan = d;
    chi.highest = m;
    for (const ExpansionTerm& term : i_expansion_terms(d, node, m))
        chi.add_term(term.monomial, term.coeff);
    return chi;
}

}  // namespace qchar
