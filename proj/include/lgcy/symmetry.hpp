#pragma once

/// The diagonal group generated by the weighted torus and the symmetry
/// generators, its component group, and the Chen-Ruan sectors.

#include "lgcy/exact.hpp"
#include "lgcy/model.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lgcy {

/// Diagonal element acting on C^{n+r}: x-phases then p-phases.
struct GroupElement {
    std::vector<Phase> x;
    std::vector<Phase> p;

    static GroupElement identity(std::size_t n, std::size_t r) {
        return {std::vector<Phase>(n), std::vector<Phase>(r)};
    }
    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    /// Composes with the torus element lambda = exp(-2 pi i t).
    GroupElement torus_shift(const Phase& t, const ModelData& m) const;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Checks sum_j a_j theta_j == -pi_i (mod 1) for every monomial x^a of every W_i.
bool preserves_model(const GroupElement& g, const ModelData& m);

/// Lexicographically smallest element among the w_1 torus shifts of g whose
/// first x-phase vanishes. Equal outputs iff same component.
GroupElement canonicalize(const GroupElement& g, const ModelData& m);

struct Component {
    int id = 0;
    GroupElement pure;       // product of generators, p-phases zero
    GroupElement canonical;  // torus-canonical form
};

struct ComponentSet {
    std::vector<Component> components;
    std::vector<GroupElement> generators;  // pure, as given in the model

    std::size_t size() const { return components.size(); }
};

class NonFiniteGroup : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kComponentCap = 200000;

/// Breadth-first closure of the generators modulo the torus.
ComponentSet enumerate_components(const ModelData& m, std::size_t cap = kComponentCap);

enum class Side { cy, lg, all };

struct Sector {
    int id = 0;          // position in the full (Side::all) enumeration
    int component = 0;
    Phase t;             // torus parameter, lambda = exp(-2 pi i t)
    GroupElement phases; // theta_j = <a_j - t w_j>, pi_i = <t d_i>
    std::vector<Phase> chi;  // phi_i = <-pi_i>, the phase of chi_i(gamma)
    std::vector<int> fix_x;
    std::vector<int> fix_p;
    Rational age_total;  // age on C^{n+r}
    Rational age_x;      // age on the tangent space of X_W

    int n_fixed() const { return static_cast<int>(fix_x.size()); }
    int r_fixed() const { return static_cast<int>(fix_p.size()); }
    int dtilde() const { return n_fixed() - r_fixed() - 1; }
    bool on_side(Side side) const;
};

/// Sectors in deterministic (component id, t) order, filtered by side:
/// cy keeps n_gamma >= 1, lg keeps r_gamma >= 1, all keeps either.
std::vector<Sector> enumerate_sectors(const ModelData& m, const ComponentSet& comps, Side side);

/// Builds one sector from a component's pure representative and t.
Sector make_sector(const ModelData& m, const Component& comp, const Phase& t, int id);

/// (a_tot, a_X) recomputed from the sector's phases.
std::pair<Rational, Rational> sector_ages(const Sector& s);

/// The model restricted to a sector's fixed locus.
struct SectorModel {
    int sector = 0;
    std::vector<int> x_vars;   // fixed x-coordinates (original indices)
    std::vector<int> kept;     // equations with trivial character
    std::vector<int> weights;  // w_j for j in x_vars
    std::vector<int> degrees;  // d_i for i in kept
    std::vector<Polynomial> polynomials;  // W_{i,gamma} over x_vars, no p-slots
    int dtilde = 0;            // n_gamma - r_gamma - 1, may be negative
};

SectorModel restrict_to_sector(const ModelData& m, const Sector& s);

}  // namespace lgcy
