#include "lgcy/statespace.hpp"

#include "lgcy/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace lgcy {

std::string_view to_string(ClassKind k) { return k == ClassKind::ambient ? "ambient" : "primitive"; }

std::string_view to_string(Narrowness n) {
    switch (n) {
        case Narrowness::narrow: return "narrow";
        case Narrowness::broad: return "broad";
        case Narrowness::unset: break;
    }
    return "unset";
}

void BigradedTable::add(const CRClass& c) {
    if (c.multiplicity == 0) return;
    if (c.multiplicity < 0) throw std::logic_error("negative multiplicity");
    entries_[c.degree] += c.multiplicity;
    provenance_.push_back(c);
}

long long BigradedTable::at(const Rational& p, const Rational& q) const {
    const auto it = entries_.find({p, q});
    return it == entries_.end() ? 0 : it->second;
}

long long BigradedTable::total() const {
    long long sum = 0;
    for (const auto& [deg, h] : entries_) sum += h;
    return sum;
}

Analysis Analysis::build(const ModelData& m) {
    Analysis a;
    a.model = m;
    a.comps = enumerate_components(m);
    a.sectors = enumerate_sectors(m, a.comps, Side::all);
    a.sector_models.resize(a.sectors.size());
    a.blocks.resize(a.sectors.size());
    const RankSettings settings = RankSettings::from(m.options);
    parallel_for(a.sectors.size(), m.options.jobs, [&](std::size_t i) {
        a.sector_models[i] = restrict_to_sector(m, a.sectors[i]);
        a.blocks[i] = primitive_hodge_dims(a.sector_models[i], a.comps, settings);
    });
    return a;
}

namespace {

Bidegree diag(const Rational& v) { return {v, v}; }

void add_primitive(BigradedTable& table, const Sector& s, const PrimitiveBlock& block, const Rational& shift) {
    for (int k = 0; k <= block.dtilde && k < static_cast<int>(block.dims.size()); ++k) {
        table.add({s.id, ClassKind::primitive, k,
                   {Rational(block.dtilde - k) + shift, Rational(k) + shift}, block.dims[k], Narrowness::unset});
    }
}

}  // namespace

BigradedTable assemble_cy(const Analysis& a) {
    BigradedTable table;
    for (const auto& s : a.sectors) {
        const int n = s.n_fixed();
        const int r = s.r_fixed();
        if (n < 1 || r >= n) continue;
        for (int k = 0; k <= s.dtilde(); ++k)
            table.add({s.id, ClassKind::ambient, k, diag(Rational(k) + s.age_x), 1, Narrowness::unset});
        add_primitive(table, s, a.blocks[s.id], s.age_x);
    }
    return table;
}

BigradedTable assemble_lg(const Analysis& a) {
    BigradedTable table;
    const int r_total = a.model.r;
    for (const auto& s : a.sectors) {
        const int n = s.n_fixed();
        const int r = s.r_fixed();
        if (r < 1 || r == n) continue;
        if (r < n) {
            add_primitive(table, s, a.blocks[s.id], s.age_total + Rational(r - r_total));
        } else {
            for (int m = 0; m < r - n; ++m)
                table.add({s.id, ClassKind::ambient, m, diag(Rational(m + n - r_total) + s.age_total), 1,
                           Narrowness::unset});
        }
    }
    return table;
}

BigradedTable assemble_bundle_cr(const Analysis& a, Side side) {
    if (side == Side::all) throw std::invalid_argument("bundle cohomology needs a side");
    BigradedTable table;
    for (const auto& s : a.sectors) {
        const int count = side == Side::cy ? s.n_fixed() : s.r_fixed();
        for (int k = 0; k < count; ++k)
            table.add({s.id, ClassKind::ambient, k, diag(Rational(k) + s.age_total), 1, Narrowness::unset});
    }
    return table;
}

MilnorFiberDims milnor_fiber_dims(const Analysis& a, const Sector& s) {
    MilnorFiberDims out;
    out.sector = s.id;
    const int n = s.n_fixed();
    const int r = s.r_fixed();
    if (r < n) {
        for (int k = 0; k <= 2 * r - 2; k += 2) out.dims[k] += 1;
        const long long prim = a.blocks[s.id].total();
        if (prim != 0) out.dims[n + r - 2] += prim;
    } else {
        for (int k = 0; k <= 2 * n - 2; k += 2) out.dims[k] += 1;
    }
    return out;
}

ThomReport thom_shift_check(const Analysis& a) {
    ThomReport report;
    const int r_total = a.model.r;
    const BigradedTable cy = assemble_cy(a);
    for (const auto& c : cy.provenance()) {
        CRClass shifted = c;
        shifted.degree.p += Rational(r_total);
        shifted.degree.q += Rational(r_total);
        report.shifted_cy.add(shifted);
    }
    for (const auto& s : a.sectors) {
        const int n = s.n_fixed();
        const int r = s.r_fixed();
        if (n < 1) continue;  // the bundle O_w(-d) lives over x != 0
        const MilnorFiberDims fibre = milnor_fiber_dims(a, s);
        auto h_fibre = [&](int k) {
            const auto it = fibre.dims.find(k);
            return it == fibre.dims.end() ? 0LL : it->second;
        };
        auto h_base = [&](int k) { return k >= 0 && k <= 2 * n - 2 && k % 2 == 0 ? 1LL : 0LL; };
        // Restriction H^k(base) -> H^k(F) is an isomorphism on the Lefschetz
        // range and zero above it.
        auto restriction_rank = [&](int k) {
            const bool lefschetz = r >= n || k <= 2 * r - 2;
            return lefschetz ? std::min(h_base(k), h_fibre(k)) : 0LL;
        };
        BigradedTable sector_rel;
        const int top = 2 * (n + r);
        for (int k = 0; k <= top; ++k) {
            const long long kernel = h_base(k) - restriction_rank(k);
            if (kernel > 0)
                sector_rel.add({s.id, ClassKind::ambient, k, diag(Rational(k / 2) + s.age_total), kernel,
                                Narrowness::unset});
            const long long coker = k >= 1 ? h_fibre(k - 1) - restriction_rank(k - 1) : 0;
            if (coker == 0) continue;
            if (r >= n || k - 1 != n + r - 2) {
                std::ostringstream os;
                os << "sector " << s.id << ": unexpected fibre class in degree " << k - 1;
                report.mismatches.push_back(os.str());
                continue;
            }
            add_primitive(sector_rel, s, a.blocks[s.id], Rational(r) + s.age_total);
        }
        for (const auto& c : sector_rel.provenance()) report.relative.add(c);

        BigradedTable sector_cy;
        for (const auto& c : report.shifted_cy.provenance())
            if (c.sector == s.id) sector_cy.add(c);
        if (!(sector_cy == sector_rel)) {
            std::ostringstream os;
            os << "sector " << s.id << " (t=" << s.t.value().str() << "): relative table differs from shifted CY";
            report.mismatches.push_back(os.str());
        }
    }
    if (!(report.relative == report.shifted_cy)) report.mismatches.push_back("assembled tables differ");
    report.pass = report.mismatches.empty();
    return report;
}

BigradedTable classify_states(BigradedTable table) {
    for (auto& c : table.provenance())
        c.narrowness = c.kind == ClassKind::ambient ? Narrowness::narrow : Narrowness::broad;
    return table;
}

namespace {

using ClassKey = std::tuple<int, int, Bidegree, long long>;

std::vector<ClassKey> primitive_classes(const BigradedTable& t) {
    std::vector<ClassKey> out;
    for (const auto& c : t.provenance())
        if (c.kind == ClassKind::primitive) out.emplace_back(c.sector, c.k, c.degree, c.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

std::string describe_difference(const std::string& what, const BigradedTable& a, const BigradedTable& b) {
    std::ostringstream os;
    os << what << ":";
    std::map<Bidegree, std::pair<long long, long long>> diff;
    for (const auto& [deg, h] : a.entries()) diff[deg].first = h;
    for (const auto& [deg, h] : b.entries()) diff[deg].second = h;
    for (const auto& [deg, hh] : diff)
        if (hh.first != hh.second)
            os << " (" << deg.p.str() << "," << deg.q.str() << "): " << hh.first << " vs " << hh.second << ";";
    return os.str();
}

}  // namespace

VerificationReport verify_correspondence(const Analysis& a) {
    VerificationReport rep;
    rep.cy = assemble_cy(a);
    rep.lg = assemble_lg(a);
    rep.bundle_cy = assemble_bundle_cr(a, Side::cy);
    rep.bundle_lg = assemble_bundle_cr(a, Side::lg);

    // (a) primitive blocks sit at the same bidegrees on both sides.
    for (const auto& s : a.sectors) {
        const Rational bridge = s.age_total + Rational(s.r_fixed() - a.model.r);
        if (bridge != s.age_x) {
            rep.primitive_shared = false;
            rep.counterexamples.push_back("sector " + std::to_string(s.id) + ": a_X = " + s.age_x.str() +
                                          " but a_tot + r_g - r = " + bridge.str());
        }
    }
    if (primitive_classes(rep.cy) != primitive_classes(rep.lg)) {
        rep.primitive_shared = false;
        rep.counterexamples.push_back("primitive classes differ between the CY and LG assemblies");
    }

    // (b) dot certificate.
    std::map<std::pair<int, Phase>, const Sector*> by_ray;
    for (const auto& s : a.sectors) by_ray[{s.component, s.t}] = &s;
    BigradedTable from_black;
    BigradedTable from_white;
    for (const auto& comp : a.comps.components) {
        DotDiagram d = order_and_f(build_diagram(a.model, comp));
        if (!piecewise_linear_consistent(d) || !levels_balanced(d)) {
            rep.certificate_ok = false;
            rep.counterexamples.push_back("component " + std::to_string(comp.id) + ": unbalanced f");
        }
        PairingCertificate cert = pair_dots(d);
        if (static_cast<int>(cert.pairs.size()) != d.total) {
            rep.certificate_ok = false;
            rep.counterexamples.push_back("component " + std::to_string(comp.id) + ": matching not perfect");
        }
        for (const auto& pair : cert.pairs) {
            if (pair.black.f != pair.white.f || dot_degree(d, pair.black) != dot_degree(d, pair.white)) {
                rep.certificate_ok = false;
                rep.counterexamples.push_back("component " + std::to_string(comp.id) + ": pair changes degree");
            }
        }
        for (const auto& [t, ray] : rays(d)) {
            const auto it = by_ray.find({comp.id, t});
            if (it == by_ray.end()) {
                rep.certificate_ok = false;
                rep.counterexamples.push_back("component " + std::to_string(comp.id) + ": ray t=" +
                                              t.value().str() + " has no sector");
                continue;
            }
            const Sector& s = *it->second;
            auto expected = [&](int count) {
                std::vector<Rational> v;
                for (int k = 0; k < count; ++k) v.push_back(Rational(k) + s.age_total);
                return v;
            };
            auto degrees = [&](const std::vector<int>& fs) {
                std::vector<Rational> v;
                for (int f : fs) v.push_back(d.sum_a + Rational(f));
                std::sort(v.begin(), v.end());
                return v;
            };
            if (degrees(ray.black_f) != expected(s.n_fixed()) || degrees(ray.white_f) != expected(s.r_fixed())) {
                rep.certificate_ok = false;
                rep.counterexamples.push_back("sector " + std::to_string(s.id) +
                                              ": dot degrees on the ray differ from bundle degrees");
            }
            for (std::size_t k = 0; k < ray.black_f.size(); ++k)
                from_black.add({s.id, ClassKind::ambient, static_cast<int>(k),
                                diag(d.sum_a + Rational(ray.black_f[k])), 1, Narrowness::unset});
            for (std::size_t k = 0; k < ray.white_f.size(); ++k)
                from_white.add({s.id, ClassKind::ambient, static_cast<int>(k),
                                diag(d.sum_a + Rational(ray.white_f[k])), 1, Narrowness::unset});
        }
        rep.diagrams.push_back(std::move(d));
        rep.certificates.push_back(std::move(cert));
    }
    if (!(from_black == rep.bundle_cy) || !(from_white == rep.bundle_lg)) {
        rep.certificate_ok = false;
        rep.counterexamples.push_back("dot degrees do not reproduce the bundle tables");
    }
    if (!(rep.bundle_cy == rep.bundle_lg)) {
        rep.certificate_ok = false;
        rep.counterexamples.push_back(describe_difference("bundle tables (CY vs LG)", rep.bundle_cy, rep.bundle_lg));
    }

    // (c) the assembled tables.
    if (!(rep.cy == rep.lg)) {
        rep.tables_equal = false;
        rep.counterexamples.push_back(describe_difference("state spaces (CY vs LG)", rep.cy, rep.lg));
    }
    return rep;
}

HodgeSummary hodge_report(const BigradedTable& table, int dimension) {
    HodgeSummary out;
    const Rational dim(dimension);
    for (const auto& [deg, h] : table.entries()) {
        out.total += h;
        if (deg.p.is_integer() && deg.q.is_integer()) {
            const bool odd = static_cast<long long>((deg.p + deg.q).num() % 2) != 0;
            out.euler += odd ? -h : h;
        } else {
            out.fractional.push_back(deg);
        }
        if (table.at(deg.q, deg.p) != h) out.conjugation_symmetric = false;
        if (table.at(dim - deg.p, dim - deg.q) != h) out.duality_symmetric = false;
    }
    return out;
}

}  // namespace lgcy
