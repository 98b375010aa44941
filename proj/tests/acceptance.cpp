// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "lgcy/cli.hpp"
#include "lgcy/statespace.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lgcy;

namespace {

std::string path(const std::string& name) { return std::string(LGCY_DATA_DIR) + "/" + name; }

Bidegree bd(long long p, long long q) { return {Rational(p), Rational(q)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_quiet(Verb verb, const std::string& input) {
    Command cmd;
    cmd.verb = verb;
    cmd.input = input;
    std::ostringstream out, err;
    return run(cmd, out, err);
}

std::string table_str(const BigradedTable& t) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, h] : t.entries()) {
        os << (first ? "" : ", ") << "(" << d.p.str() << "," << d.q.str() << "):" << h;
        first = false;
    }
    os << "}";
    return os.str();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
};

Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const ModelData m = load_model(path("quintic.json"));
    if (!validate(m).all_pass()) o.fail("quintic does not validate");
    const Analysis a = Analysis::build(m);
    const BigradedTable cy = assemble_cy(a);
    const BigradedTable lg = assemble_lg(a);
    const double elapsed = seconds_since(t0);

    // Reference middle dims: coefficients of t^5 and t^10 in (1+t+t^2+t^3)^5.
    const auto series = oracle::truncated_geometric_power(4, 5);
    const long long h21 = series[5].convert_to<long long>();
    const long long h12 = series[10].convert_to<long long>();
    const std::map<Bidegree, long long> expected{{bd(0, 0), 1}, {bd(1, 1), 1}, {bd(2, 2), 1}, {bd(3, 3), 1},
                                                 {bd(3, 0), 1}, {bd(2, 1), h21}, {bd(1, 2), h12}, {bd(0, 3), 1}};
    if (h21 != 101) o.fail("series oracle gives " + std::to_string(h21));
    if (cy.entries() != expected) o.fail("cy table " + table_str(cy));
    if (lg.entries() != expected) o.fail("lg table " + table_str(lg));
    if (elapsed >= 10.0) o.fail("took " + std::to_string(elapsed) + " s");
    if (o.pass) {
        std::ostringstream os;
        os << "cy = lg = " << table_str(cy) << " in " << elapsed << " s";
        o.detail = os.str();
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    const ModelData m = load_model(path("fig1.json"));
    const Analysis a = Analysis::build(m);
    const DotDiagram d = order_and_f(build_diagram(m, a.comps.components[0]));
    // Labels in traversal order as printed in the figure: three blacks on the
    // t = 0 ray, then t = 1/4, 1/3, the t = 1/2 ray (two whites, one black),
    // 2/3, 3/4, and the two whites of the t = 0 ray closing the cycle.
    struct Label {
        bool black;
        Rational t;
        int f;
    };
    const std::vector<Label> figure{
        {true, 0, 0},  {true, 0, 1},  {true, 0, 2},  {false, Rational(1, 4), 2},
        {true, Rational(1, 3), 2},   {false, Rational(1, 2), 2}, {false, Rational(1, 2), 1},
        {true, Rational(1, 2), 1},   {true, Rational(2, 3), 2},  {false, Rational(3, 4), 2},
        {false, 0, 1}, {false, 0, 0},
    };
    if (d.dots.size() != figure.size()) {
        o.fail("diagram has " + std::to_string(d.dots.size()) + " dots");
    } else {
        for (std::size_t i = 0; i < figure.size(); ++i) {
            const Dot& dot = d.dots[i];
            if (dot.black() != figure[i].black || dot.t.value() != figure[i].t || dot.f != figure[i].f)
                o.fail("dot " + std::to_string(i) + " differs from the figure");
        }
        // Ring-by-ring: the d = 4 white at t = 0 is labeled 1, the d = 2 white 0.
        for (const auto& dot : d.dots)
            if (!dot.black() && dot.t.is_zero() && dot.f != (dot.source == 1 ? 1 : 0))
                o.fail("t = 0 white labels differ from the figure");
    }
    const std::map<Bidegree, long long> four{{bd(0, 0), 4}};
    if (assemble_cy(a).entries() != four) o.fail("cy table " + table_str(assemble_cy(a)));
    if (assemble_lg(a).entries() != four) o.fail("lg table " + table_str(assemble_lg(a)));
    const int code = run_quiet(Verb::verify, path("fig1.json"));
    if (code != 0) o.fail("verify exited " + std::to_string(code));
    if (o.pass) o.detail = "12 dot labels match the figure; cy = lg = {(0,0):4}; verify exit 0";
    return o;
}

Outcome criterion3() {
    Outcome o;
    const ModelData m = load_model(path("ci24.json"));
    if (!validate(m).all_pass()) o.fail("model does not validate");
    const BigradedTable cy = assemble_cy(Analysis::build(m));
    const BigInt chi = oracle::ci_euler_characteristic(5, {2, 4});
    const long long h11_ref = 1;  // Lefschetz
    const long long h21_ref = h11_ref - (chi / 2).convert_to<long long>();
    const long long h11 = cy.at(Rational(1), Rational(1));
    const long long h21 = cy.at(Rational(2), Rational(1));
    if (h11 != h11_ref || h21 != h21_ref)
        o.fail("h11 = " + std::to_string(h11) + ", h21 = " + std::to_string(h21) + ", oracle " +
               std::to_string(h11_ref) + ", " + std::to_string(h21_ref));
    if (o.pass) o.detail = "h11 = 1, h21 = 89 (Chern class oracle: chi = " + chi.str() + ")";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const ModelData m = load_model(path("mirror_quintic.json"));
    const BigradedTable cy = assemble_cy(Analysis::build(m));
    const int code = run_quiet(Verb::verify, path("mirror_quintic.json"));
    const double elapsed = seconds_since(t0);
    std::vector<std::vector<Rational>> gens;
    for (const auto& g : m.generators) {
        std::vector<Rational> v;
        for (const auto& p : g) v.push_back(p.value());
        gens.push_back(v);
    }
    const auto reference = oracle::fermat_hodge_numbers({5, 5, 5, 5, 5}, gens);
    if (cy.at(Rational(1), Rational(1)) != 101 || cy.at(Rational(2), Rational(1)) != 1)
        o.fail("cy table " + table_str(cy));
    if (cy.entries() != reference) o.fail("differs from the Fermat state-space oracle");
    if (code != 0) o.fail("verify exited " + std::to_string(code));
    if (elapsed >= 300.0) o.fail("took " + std::to_string(elapsed) + " s");
    if (o.pass) {
        std::ostringstream os;
        os << "h11 = 101, h21 = 1, matches the Fermat oracle; verify exit 0; " << elapsed << " s";
        o.detail = os.str();
    }
    return o;
}

struct CorpusResult {
    Outcome properties;
    Outcome oracle;
};

CorpusResult criteria5and6() {
    CorpusResult res;
    const auto entries = corpus::generate(24, 20261016);
    if (entries.size() < 20) res.properties.fail("corpus has only " + std::to_string(entries.size()) + " models");
    std::size_t oracle_sectors = 0;
    for (const auto& e : entries) {
        const Analysis a = Analysis::build(e.model);
        auto fail = [&](Outcome& o, const std::string& what) { o.fail(e.name + ": " + what); };

        const VerificationReport v = verify_correspondence(a);
        if (!v.tables_equal) fail(res.properties, "(a) cy != lg");
        if (!(v.bundle_cy == v.bundle_lg)) fail(res.properties, "(b) bundle tables differ");
        const HodgeSummary h = hodge_report(v.cy, a.dimension());
        if (!h.duality_symmetric || !h.conjugation_symmetric) fail(res.properties, "(c) duality");

        // (d) f multisets on each ray against the sector's bundle degrees.
        std::map<std::pair<int, Phase>, const Sector*> by_ray;
        for (const auto& s : a.sectors) by_ray[{s.component, s.t}] = &s;
        for (const auto& comp : a.comps.components) {
            const DotDiagram d = order_and_f(build_diagram(a.model, comp));
            for (const auto& [t, ray] : rays(d)) {
                const Sector& s = *by_ray.at({comp.id, t});
                auto expect = [&](int count) {
                    std::vector<int> out;
                    for (int k = 0; k < count; ++k) {
                        const Rational f = Rational(k) + s.age_total - d.sum_a;
                        if (!f.is_integer()) return std::vector<int>{};
                        out.push_back(f.num().convert_to<int>());
                    }
                    return out;
                };
                if (ray.black_f != expect(s.n_fixed()) || ray.white_f != expect(s.r_fixed()))
                    fail(res.properties, "(d) ray f values");
            }
            const PairingCertificate cert = pair_dots(d);
            for (const auto& p : cert.pairs)
                if (dot_degree(d, p.black) != dot_degree(d, p.white)) fail(res.properties, "(d) pairing degree");
        }

        // (e) grading bridge, recomputed from the phases.
        for (const auto& s : a.sectors) {
            const auto [tot, x] = sector_ages(s);
            if (tot != x + Rational(a.model.r - s.r_fixed())) fail(res.properties, "(e) age identity");
        }

        // (f) two-prime agreement on every piece.
        for (const auto& b : a.blocks)
            for (const auto& p : b.pieces)
                if (p.rank != p.verify_rank || p.prime == p.verify_prime) fail(res.properties, "(f) prime ranks");

        // (g)
        if (!thom_shift_check(a).pass) fail(res.properties, "(g) Thom shift");

        // 6: hypersurface sectors against the product formula.
        for (std::size_t i = 0; i < a.sectors.size(); ++i) {
            const SectorModel& sm = a.sector_models[i];
            if (sm.kept.size() != 1 || sm.dtilde < 0) continue;
            const PrimitiveBlock& b = a.blocks[i];
            if (b.dims != hypersurface_dims_from_series(sm, a.comps)) fail(res.oracle, "equivariant series mismatch");
            // Characters trivial on the sector: the plain formula applies.
            bool trivial = true;
            for (const auto& g : a.comps.generators)
                for (int j : sm.x_vars) trivial = trivial && g.x[j].is_zero();
            if (trivial) {
                const int deg = sm.degrees.front();
                long long wsum = 0;
                for (int w : sm.weights) wsum += w;
                const auto series = milnor_hilbert_series(sm.weights, deg);
                for (int k = 0; k <= sm.dtilde; ++k) {
                    const long long at = static_cast<long long>(k + 1) * deg - wsum;
                    const BigInt ref = at >= 0 && at < static_cast<long long>(series.size()) ? series[at] : BigInt(0);
                    if (BigInt(b.dims[k]) != ref) fail(res.oracle, "product formula mismatch");
                }
            }
            ++oracle_sectors;
        }
    }
    if (res.properties.pass) {
        std::size_t nontrivial = 0;
        for (const auto& e : entries) nontrivial += e.group_order > 1 ? 1 : 0;
        res.properties.detail = std::to_string(entries.size()) + " models (" + std::to_string(nontrivial) +
                                " with nontrivial groups), properties (a)-(g) hold";
    }
    if (oracle_sectors == 0) res.oracle.fail("no hypersurface sectors in the corpus");
    if (res.oracle.pass) res.oracle.detail = std::to_string(oracle_sectors) + " hypersurface sectors agree";
    return res;
}

Outcome criterion7() {
    Outcome o;
    const ModelData m = load_model(path("singular.json"));
    const auto status = check_quasi_smooth(m, m.qs_bound(), m.options.prime);
    bool flagged = false;
    for (const auto& s : status) flagged = flagged || !s.verified;
    if (!flagged) o.fail("check_quasi_smooth verified every variable");
    const int code = run_quiet(Verb::verify, path("singular.json"));
    if (code != exit_code::invalid) o.fail("verify exited " + std::to_string(code));
    if (o.pass) o.detail = "quasi-smoothness unverified; verify exit 2";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<int, Outcome>> results;
    auto guarded = [&](int id, const std::function<Outcome()>& fn) {
        try {
            results.emplace_back(id, fn());
        } catch (const std::exception& e) {
            Outcome o;
            o.fail(std::string("exception: ") + e.what());
            results.emplace_back(id, o);
        }
    };
    guarded(1, criterion1);
    guarded(2, criterion2);
    guarded(3, criterion3);
    guarded(4, criterion4);
    try {
        CorpusResult c = criteria5and6();
        results.emplace_back(5, c.properties);
        results.emplace_back(6, c.oracle);
    } catch (const std::exception& e) {
        Outcome o;
        o.fail(std::string("exception: ") + e.what());
        results.emplace_back(5, o);
        results.emplace_back(6, o);
    }
    guarded(7, criterion7);

    bool all = true;
    for (const auto& [id, o] : results) {
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << "\n";
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
