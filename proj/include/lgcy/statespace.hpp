#pragma once

/// Bigraded assembly of both sides of the correspondence: Chen-Ruan Hodge
/// numbers of [X_W/G], the hybrid LG state space, the two bundle cohomologies,
/// and the checks tying them together.

#include "lgcy/dots.hpp"
#include "lgcy/exact.hpp"
#include "lgcy/jacobian.hpp"
#include "lgcy/model.hpp"
#include "lgcy/symmetry.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgcy {

enum class ClassKind { ambient, primitive };
enum class Narrowness { unset, narrow, broad };

std::string_view to_string(ClassKind k);
std::string_view to_string(Narrowness n);

struct Bidegree {
    Rational p;
    Rational q;

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    friend std::strong_ordering operator<=>(const Bidegree& a, const Bidegree& b) {
        if (auto c = a.p <=> b.p; c != 0) return c;
        return a.q <=> b.q;
    }
};

struct CRClass {
    int sector = 0;
    ClassKind kind = ClassKind::ambient;
    int k = 0;
    Bidegree degree;
    long long multiplicity = 1;
    Narrowness narrowness = Narrowness::unset;
};

class BigradedTable {
public:
    /// Adds the class; zero multiplicities are ignored.
    void add(const CRClass& c);

    const std::map<Bidegree, long long>& entries() const { return entries_; }
    const std::vector<CRClass>& provenance() const { return provenance_; }
    std::vector<CRClass>& provenance() { return provenance_; }
    long long at(const Rational& p, const Rational& q) const;
    long long total() const;
    bool empty() const { return entries_.empty(); }

    /// Tables compare by their entries only.
    friend bool operator==(const BigradedTable& a, const BigradedTable& b) { return a.entries_ == b.entries_; }

private:
    std::map<Bidegree, long long> entries_;
    std::vector<CRClass> provenance_;
};

/// Model, components, every sector (Side::all order) with its restriction and
/// primitive block. Blocks are computed once, in parallel over sectors.
struct Analysis {
    ModelData model;
    ComponentSet comps;
    std::vector<Sector> sectors;
    std::vector<SectorModel> sector_models;
    std::vector<PrimitiveBlock> blocks;

    static Analysis build(const ModelData& m);
    int dimension() const { return model.n - model.r - 1; }
};

BigradedTable assemble_cy(const Analysis& a);
BigradedTable assemble_lg(const Analysis& a);
BigradedTable assemble_bundle_cr(const Analysis& a, Side side);

struct MilnorFiberDims {
    int sector = 0;
    std::map<int, long long> dims;  // degree -> dim H^k(F_gamma), zero entries omitted
};
MilnorFiberDims milnor_fiber_dims(const Analysis& a, const Sector& s);

struct ThomReport {
    bool pass = true;
    BigradedTable relative;    // H_CR([O_w(-d)/G], [F/G]) from the Milnor fibre
    BigradedTable shifted_cy;  // assemble_cy shifted by (r, r)
    std::vector<std::string> mismatches;
};
ThomReport thom_shift_check(const Analysis& a);

/// Ambient classes are narrow, primitive classes broad.
BigradedTable classify_states(BigradedTable table);

struct VerificationReport {
    bool primitive_shared = true;  // (a)
    bool certificate_ok = true;    // (b)
    bool tables_equal = true;      // (c)
    BigradedTable cy;
    BigradedTable lg;
    BigradedTable bundle_cy;
    BigradedTable bundle_lg;
    std::vector<DotDiagram> diagrams;
    std::vector<PairingCertificate> certificates;
    std::vector<std::string> counterexamples;

    bool pass() const { return primitive_shared && certificate_ok && tables_equal; }
};
VerificationReport verify_correspondence(const Analysis& a);

struct HodgeSummary {
    long long euler = 0;                 // over integer bidegrees
    std::vector<Bidegree> fractional;    // bidegrees left out of the Euler sum
    bool conjugation_symmetric = true;   // h^{p,q} = h^{q,p}
    bool duality_symmetric = true;       // h^{p,q} = h^{D-p,D-q}
    long long total = 0;
};
HodgeSummary hodge_report(const BigradedTable& table, int dimension);

}  // namespace lgcy
