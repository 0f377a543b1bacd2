#include "qchar/monomial.hpp"

#include <algorithm>

namespace qchar {

Monomial Monomial::y(int node, int shift, std::int64_t exp) {
    Monomial m;
    if (exp != 0) m.factors_.push_back({VarKey{node, shift}, exp});
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    m.factors_.reserve(factors.size());
    for (const Factor& f : factors) {
        if (!m.factors_.empty() && m.factors_.back().first == f.first) {
            m.factors_.back().second = checked_add(m.factors_.back().second, f.second);
            if (m.factors_.back().second == 0) m.factors_.pop_back();
        } else if (f.second != 0) {
            m.factors_.push_back(f);
        }
    }
    return m;
}

std::int64_t Monomial::exponent(int node, int shift) const {
    VarKey key{node, shift};
    auto it = std::lower_bound(
        factors_.begin(), factors_.end(), key,
        [](const Factor& f, const VarKey& k) { return f.first < k; });
    if (it != factors_.end() && it->first == key) return it->second;
    return 0;
}

Monomial combine(const Monomial& m1, const Monomial& m2, std::int64_t e) {
    Monomial out;
    auto& dst = out.factors_;
    dst.reserve(m1.size() + m2.size());
    auto a = m1.factors().begin(), ea = m1.factors().end();
    auto b = m2.factors().begin(), eb = m2.factors().end();
    while (a != ea || b != eb) {
        if (b == eb || (a != ea && a->first < b->first)) {
            dst.push_back(*a++);
        } else if (a == ea || b->first < a->first) {
            std::int64_t v = checked_mul(e, b->second);
            if (v != 0) dst.push_back({b->first, v});
            ++b;
        } else {
            std::int64_t v = checked_add(a->second, checked_mul(e, b->second));
            if (v != 0) dst.push_back({a->first, v});
            ++a;
            ++b;
        }
    }
    return out;
}

bool is_dominant(const Monomial& m) {
    for (const auto& [key, exp] : m.factors())
        if (exp <= 0) return false;
    return true;
}

}  // namespace qchar
