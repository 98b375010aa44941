#pragma once

/// Equivariant graded dimensions of the chiral algebra of a sector,
///   Q = dx ^ dp (x) C[x, p] / (d_x W~, d_p W~),   W~ = sum_i p_i W_{i,gamma},
/// restricted to classes invariant under the torus and the symmetry group.
/// Piece k collects p-degree k; it carries bidegree (D~ - k, k) before shifts.

#include "lgcy/exact.hpp"
#include "lgcy/model.hpp"
#include "lgcy/symmetry.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lgcy {

struct RankSettings {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t verify_prime = kDefaultVerifyPrime;
    bool exact = false;

    static RankSettings from(const ModelOptions& o) { return {o.prime, o.verify_prime, o.exact_ranks}; }
};

/// Rank bookkeeping for one graded piece.
struct PieceRank {
    int k = 0;
    std::size_t monomials = 0;
    std::size_t rank = 0;           // with the working prime (or over Q)
    std::size_t verify_rank = 0;    // with the verification prime (or over Q)
    std::uint64_t prime = 0;        // 0 when computed over Q
    std::uint64_t verify_prime = 0;
    std::size_t blocks = 0;         // lattice blocks the piece split into
};

struct PrimitiveBlock {
    int sector = 0;
    int dtilde = -1;
    std::vector<long long> dims;   // indexed by k = 0..dtilde; empty when dtilde < 0
    std::vector<PieceRank> pieces;

    bool empty() const { return dims.empty(); }
    long long total() const;
};

/// Monomials x^a p^b in the sector variables with |b| = k whose twisted
/// character (including dx ^ dp) is trivial against the torus and every generator.
std::vector<Monomial> enumerate_invariant_monomials(const SectorModel& sm, const ComponentSet& comps, int k);

/// Rank of the invariant part of the Jacobian ideal in piece k, modulo `prime`.
std::size_t ideal_piece_rank(const SectorModel& sm, const ComponentSet& comps, int k, std::uint64_t prime);

/// Same, over Q (fraction-free elimination).
std::size_t ideal_piece_rank_exact(const SectorModel& sm, const ComponentSet& comps, int k);

/// dims[k] = #invariant monomials - ideal rank, k = 0..D~. Ranks are computed
/// with both primes (retrying with fresh primes on disagreement) or over Q.
PrimitiveBlock primitive_hodge_dims(const SectorModel& sm, const ComponentSet& comps, const RankSettings& settings);

/// Coefficients of prod_j (1 - t^{d - w_j}) / (1 - t^{w_j}).
/// Throws std::invalid_argument when the quotient is not a polynomial.
std::vector<BigInt> milnor_hilbert_series(const std::vector<int>& weights, int degree);

/// Character-refined version of the product formula for a hypersurface
/// W(x) of degree d invariant under a diagonal group with generator phases
/// `characters[j][g]` on x_j. Coefficients are keyed by (t-degree, character
/// of the monomial as a phase vector over the generators), truncated at `max_degree`.
using CharacterVector = std::vector<Phase>;
std::map<std::pair<long long, CharacterVector>, BigInt> equivariant_milnor_series(
    const std::vector<int>& weights, int degree, const std::vector<CharacterVector>& characters, long long max_degree);

/// Primitive dims of a hypersurface sector read off the equivariant series:
/// the coefficient at t^{(k+1)d - sum w_j} and character -sum_j chi_j.
std::vector<long long> hypersurface_dims_from_series(const SectorModel& sm, const ComponentSet& comps);

}  // namespace lgcy
