#ifndef QCHAR_FM_HPP
#define QCHAR_FM_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qchar/character.hpp"
#include "qchar/sl2.hpp"

namespace qchar {

/// Frontier value meaning "verify everything".
inline constexpr std::int64_t kUnboundedFrontier = std::numeric_limits<std::int64_t>::max();

/// Outcome of a membership / characterization check.
///  - Pass: the subtraction loop consumed every term.
///  - PassWithFrontier: everything up to the frontier depth was consumed; the
///    residual holds the unjudged terms beyond it.
///  - Fail: witness is a minimal-depth remainder monomial that violates the
///    property being checked.
struct Verdict {
    enum class Status { Pass, PassWithFrontier, Fail };

    Status status = Status::Pass;
    QCharacter residual;
    std::optional<Monomial> witness;

    bool failed() const { return status == Status::Fail; }
};

/// Checks that chi is a sum of elements of the node ring
/// Z[Y_i(1+A^-1), Y_j^{+-1}] by greedy subtraction of i-expansions in depth
/// order. Requires chi.highest; every term must factor through it.
Verdict verify_ki(const QCharacter& chi, int node, std::int64_t frontier);

/// Restriction of chi.terms to dominant monomials.
std::map<Monomial, std::int64_t> dominant_monomials(const QCharacter& chi);

/// Full characterization: verify_ki at every node of chi.cartan (support
/// nodes for InfiniteA) plus uniqueness of the dominant monomial m_plus
/// (with multiplicity 1) among depths <= frontier.
Verdict verify_characterization(const QCharacter& chi, const Monomial& m_plus,
                                std::int64_t frontier);

/// Computes the unique character with highest monomial m_plus satisfying the
/// node-ring memberships, up to the given depth. Monomials are processed in
/// depth order; a monomial that is non-dominant at some node takes the
/// multiplicity forced by the flows into it, and inconsistent or negative
/// forced multiplicities raise GenerationError.
QCharacter fm_generate(const CartanDatum& d, const Monomial& m_plus, std::int64_t max_depth);

struct Decomposition {
    std::vector<std::pair<Monomial, std::int64_t>> components;  // (highest, coefficient)
    QCharacter residual;                                        // all-deep leftover
};

/// Greedy decomposition into generated characters: repeatedly take the
/// minimal-depth monomial within depth max_depth - margin (it must be
/// dominant, else DecompositionError), emit it with its coefficient and
/// subtract the generated character. Depths are relative to chi.highest.
Decomposition decompose_into_simples(const QCharacter& chi, std::int64_t max_depth,
                                     std::int64_t margin = 0);

}  // namespace qchar

#endif
