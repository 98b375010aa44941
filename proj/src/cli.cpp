#include "lgcy/cli.hpp"

#include "lgcy/statespace.hpp"

#include "json.hpp"

#include <ostream>
#include <sstream>

namespace lgcy {

namespace {

using json = nlohmann::ordered_json;

std::string frac(const Rational& r) { return r.fraction_str(); }
std::string frac(const Phase& p) { return p.value().fraction_str(); }

std::string_view side_name(Side s) {
    switch (s) {
        case Side::cy: return "cy";
        case Side::lg: return "lg";
        case Side::all: break;
    }
    return "all";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(x + 1);
    return out;
}

std::string index_list(const std::vector<int>& v, char prefix) {
    std::vector<std::string> parts;
    for (int x : v) parts.push_back(prefix + std::to_string(x + 1));
    return "{" + join(parts, ",") + "}";
}

// ---------------------------------------------------------------- tables

json table_json(const BigradedTable& t, bool with_classes) {
    json out;
    json entries = json::array();
    for (const auto& [deg, h] : t.entries()) entries.push_back({{"p", frac(deg.p)}, {"q", frac(deg.q)}, {"h", h}});
    out["entries"] = std::move(entries);
    out["total"] = t.total();
    if (with_classes) {
        json classes = json::array();
        for (const auto& c : t.provenance()) {
            json item{{"sector", c.sector}, {"kind", to_string(c.kind)}, {"k", c.k},
                      {"p", frac(c.degree.p)}, {"q", frac(c.degree.q)}, {"multiplicity", c.multiplicity}};
            if (c.narrowness != Narrowness::unset) item["narrowness"] = to_string(c.narrowness);
            classes.push_back(std::move(item));
        }
        out["classes"] = std::move(classes);
    }
    return out;
}

void table_text(std::ostream& os, const std::string& title, const BigradedTable& t, bool with_classes) {
    os << title << " (total " << t.total() << ")\n";
    if (t.empty()) os << "  (empty)\n";
    for (const auto& [deg, h] : t.entries()) os << "  h^{" << deg.p.str() << "," << deg.q.str() << "} = " << h << "\n";
    if (!with_classes) return;
    os << "  classes:\n";
    for (const auto& c : t.provenance()) {
        os << "    sector " << c.sector << " " << to_string(c.kind) << " k=" << c.k << " at (" << c.degree.p.str()
           << "," << c.degree.q.str() << ") x" << c.multiplicity;
        if (c.narrowness != Narrowness::unset) os << " " << to_string(c.narrowness);
        os << "\n";
    }
}

// -------------------------------------------------------------- validation

json validation_json(const ValidationReport& v) {
    json checks = json::array();
    for (const auto& c : v.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"message", c.message}});
    return {{"pass", v.all_pass()}, {"checks", std::move(checks)}};
}

void validation_text(std::ostream& os, const ValidationReport& v) {
    for (const auto& c : v.checks) os << "  " << c.name << ": " << to_string(c.status) << " - " << c.message << "\n";
    os << "validation: " << (v.all_pass() ? "pass" : "fail") << "\n";
}

// ----------------------------------------------------------------- sectors

json sector_json(const Sector& s) {
    json theta = json::array();
    for (const auto& v : s.phases.x) theta.push_back(frac(v));
    json pi = json::array();
    for (const auto& v : s.phases.p) pi.push_back(frac(v));
    json phi = json::array();
    for (const auto& v : s.chi) phi.push_back(frac(v));
    return {{"id", s.id},           {"component", s.component},       {"t", frac(s.t)},
            {"theta", theta},       {"pi", pi},                       {"phi", phi},
            {"fix_x", one_based(s.fix_x)}, {"fix_p", one_based(s.fix_p)}, {"n", s.n_fixed()},
            {"r", s.r_fixed()},     {"dtilde", s.dtilde()},           {"age_total", frac(s.age_total)},
            {"age_x", frac(s.age_x)}};
}

void sector_text(std::ostream& os, const Sector& s) {
    os << "  sector " << s.id << ": component " << s.component << ", t=" << s.t.value().str()
       << ", n=" << s.n_fixed() << ", r=" << s.r_fixed() << ", D~=" << s.dtilde() << ", Fix_x=" << index_list(s.fix_x, 'x')
       << ", Fix_p=" << index_list(s.fix_p, 'p') << ", a_tot=" << s.age_total.str() << ", a_X=" << s.age_x.str()
       << "\n";
}

// -------------------------------------------------------------------- dots

json dot_json(const DotDiagram& d, const Dot& dot) {
    return {{"color", dot.black() ? "black" : "white"}, {dot.black() ? "j" : "i", dot.source + 1},
            {"t", frac(dot.t)}, {"f", dot.f}, {"degree", frac(dot_degree(d, dot))}};
}

json certificate_json(const PairingCertificate& cert) {
    json pairs = json::array();
    for (const auto& p : cert.pairs)
        pairs.push_back({{"component", cert.component},
                         {"black", {{"j", p.black.source + 1}, {"t", frac(p.black.t)}}},
                         {"white", {{"i", p.white.source + 1}, {"t", frac(p.white.t)}}},
                         {"f", p.f},
                         {"degree", frac(p.degree)}});
    return pairs;
}

json diagram_json(const Analysis& a, const DotDiagram& d, const PairingCertificate& cert) {
    json phases = json::array();
    for (const auto& v : a.comps.components[d.component].pure.x) phases.push_back(frac(v));
    json dots = json::array();
    for (const auto& dot : d.dots) dots.push_back(dot_json(d, dot));
    return {{"component", d.component}, {"a", phases}, {"sum_a", frac(d.sum_a)}, {"total", d.total},
            {"dots", dots}, {"certificate", certificate_json(cert)}};
}

std::string dot_label(const Dot& dot) {
    return dot.black() ? "black x" + std::to_string(dot.source + 1) : "white p" + std::to_string(dot.source + 1);
}

void diagram_text(std::ostream& os, const Analysis& a, const DotDiagram& d, const PairingCertificate& cert) {
    std::vector<std::string> phases;
    for (const auto& v : a.comps.components[d.component].pure.x) phases.push_back(v.value().str());
    os << "component " << d.component << " (a = " << join(phases, ",") << ", D = " << d.total << ")\n";
    os << "  traversal:";
    for (const auto& dot : d.dots) os << " " << (dot.black() ? 'B' : 'W') << dot.source + 1 << "@" << dot.t.value().str();
    os << "\n";
    std::map<Phase, std::vector<const Dot*>> by_ray;
    for (const auto& dot : d.dots) by_ray[dot.t].push_back(&dot);
    for (const auto& [t, dots] : by_ray) {
        os << "  ray t=" << t.value().str() << ":";
        for (const Dot* dot : dots) os << " " << dot_label(*dot) << " f=" << dot->f;
        os << "\n";
    }
    os << "  pairing:\n";
    for (const auto& p : cert.pairs)
        os << "    " << dot_label(p.black) << "@" << p.black.t.value().str() << " <-> " << dot_label(p.white) << "@"
           << p.white.t.value().str() << "  f=" << p.f << " degree " << p.degree.str() << "\n";
}

// ----------------------------------------------------------------- summary

json summary_json(const HodgeSummary& s) {
    json fractional = json::array();
    for (const auto& b : s.fractional) fractional.push_back({{"p", frac(b.p)}, {"q", frac(b.q)}});
    return {{"euler_characteristic", s.euler}, {"fractional_bidegrees", fractional},
            {"conjugation_symmetric", s.conjugation_symmetric}, {"duality_symmetric", s.duality_symmetric},
            {"total_dimension", s.total}};
}

void summary_text(std::ostream& os, const std::string& title, const HodgeSummary& s) {
    os << title << ": euler characteristic " << s.euler << ", total dimension " << s.total
       << ", h^{p,q}=h^{q,p} " << (s.conjugation_symmetric ? "yes" : "no") << ", h^{p,q}=h^{D-p,D-q} "
       << (s.duality_symmetric ? "yes" : "no");
    if (!s.fractional.empty()) {
        std::vector<std::string> parts;
        for (const auto& b : s.fractional) parts.push_back("(" + b.p.str() + "," + b.q.str() + ")");
        os << ", fractional bidegrees " << join(parts, " ");
    }
    os << "\n";
}

std::pair<long long, long long> narrow_broad(const BigradedTable& t) {
    long long narrow = 0;
    long long broad = 0;
    for (const auto& c : t.provenance()) (c.narrowness == Narrowness::narrow ? narrow : broad) += c.multiplicity;
    return {narrow, broad};
}

// --------------------------------------------------------------- dispatch

struct Context {
    const Command& cmd;
    std::ostream& out;
    std::ostream& err;
    bool json_out() const { return cmd.format == Format::json; }
    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

int cmd_validate(const Context& c, const ValidationReport& v) {
    if (c.json_out()) {
        json j{{"command", "validate"}};
        j.update(validation_json(v));
        c.emit(j);
    } else {
        validation_text(c.out, v);
    }
    return v.all_pass() ? exit_code::pass : exit_code::invalid;
}

int cmd_sectors(const Context& c, const Analysis& a) {
    const Side side = c.cmd.side.value_or(Side::all);
    std::vector<const Sector*> list;
    for (const auto& s : a.sectors)
        if (s.on_side(side)) list.push_back(&s);
    if (c.json_out()) {
        json arr = json::array();
        for (const Sector* s : list) arr.push_back(sector_json(*s));
        c.emit({{"command", "sectors"}, {"side", side_name(side)}, {"components", a.comps.size()},
                {"sectors", std::move(arr)}});
    } else {
        c.out << a.comps.size() << " component(s), " << list.size() << " sector(s) on side " << side_name(side)
              << "\n";
        for (const Sector* s : list) sector_text(c.out, *s);
    }
    return exit_code::pass;
}

int cmd_table(const Context& c, const Analysis& a, Verb verb) {
    const bool cy = verb == Verb::cy;
    BigradedTable t = cy ? assemble_cy(a) : classify_states(assemble_lg(a));
    const std::string name = cy ? "cy" : "lg";
    if (c.json_out()) {
        c.emit({{"command", name}, {"dimension", a.dimension()}, {"table", table_json(t, true)}});
    } else {
        table_text(c.out, cy ? "Chen-Ruan Hodge numbers of [X_W/G]" : "hybrid LG state space", t, true);
    }
    return exit_code::pass;
}

int cmd_bundles(const Context& c, const Analysis& a) {
    const BigradedTable cy = assemble_bundle_cr(a, Side::cy);
    const BigradedTable lg = assemble_bundle_cr(a, Side::lg);
    const Side side = c.cmd.side.value_or(Side::all);
    const bool equal = cy == lg;
    if (c.json_out()) {
        json j{{"command", "bundles"}};
        if (side != Side::lg) j["cy"] = table_json(cy, true);
        if (side != Side::cy) j["lg"] = table_json(lg, true);
        j["equal"] = equal;
        c.emit(j);
    } else {
        if (side != Side::lg) table_text(c.out, "H_CR([O_w(-d)/G])", cy, true);
        if (side != Side::cy) table_text(c.out, "H_CR([O_d(-w)/G])", lg, true);
        c.out << "bundle tables equal: " << (equal ? "yes" : "no") << "\n";
    }
    return equal ? exit_code::pass : exit_code::mismatch;
}

int cmd_pair(const Context& c, const Analysis& a) {
    json arr = json::array();
    for (const auto& comp : a.comps.components) {
        const DotDiagram d = order_and_f(build_diagram(a.model, comp));
        const PairingCertificate cert = pair_dots(d);
        if (c.json_out()) arr.push_back(diagram_json(a, d, cert));
        else diagram_text(c.out, a, d, cert);
    }
    if (c.json_out()) c.emit({{"command", "pair"}, {"components", std::move(arr)}});
    return exit_code::pass;
}

int cmd_verify(const Context& c, const Analysis& a) {
    const VerificationReport rep = verify_correspondence(a);
    if (c.json_out()) {
        json certs = json::array();
        for (const auto& cert : rep.certificates)
            for (auto& p : certificate_json(cert)) certs.push_back(std::move(p));
        c.emit({{"command", "verify"},
                {"pass", rep.pass()},
                {"verdicts",
                 {{"primitive_blocks_shared", rep.primitive_shared},
                  {"dot_certificate", rep.certificate_ok},
                  {"tables_equal", rep.tables_equal}}},
                {"cy", table_json(rep.cy, false)},
                {"lg", table_json(rep.lg, false)},
                {"bundle_cy", table_json(rep.bundle_cy, false)},
                {"bundle_lg", table_json(rep.bundle_lg, false)},
                {"counterexamples", rep.counterexamples},
                {"certificate", std::move(certs)}});
    } else {
        auto yn = [](bool b) { return b ? "pass" : "FAIL"; };
        c.out << "(a) primitive blocks shared: " << yn(rep.primitive_shared) << "\n";
        c.out << "(b) dot certificate: " << yn(rep.certificate_ok) << "\n";
        c.out << "(c) CY table = LG table: " << yn(rep.tables_equal) << "\n";
        table_text(c.out, "CY", rep.cy, false);
        table_text(c.out, "LG", rep.lg, false);
        table_text(c.out, "bundle CY", rep.bundle_cy, false);
        table_text(c.out, "bundle LG", rep.bundle_lg, false);
        std::size_t pairs = 0;
        for (const auto& cert : rep.certificates) pairs += cert.pairs.size();
        c.out << "certificate: " << pairs << " black/white pairs over " << rep.certificates.size()
              << " component(s)\n";
        for (const auto& e : rep.counterexamples) c.out << "counterexample: " << e << "\n";
        c.out << "verify: " << (rep.pass() ? "pass" : "FAIL") << "\n";
    }
    return rep.pass() ? exit_code::pass : exit_code::mismatch;
}

int cmd_report(const Context& c, const Analysis& a) {
    const int dim = a.dimension();
    const BigradedTable cy = assemble_cy(a);
    const BigradedTable lg = classify_states(assemble_lg(a));
    const HodgeSummary scy = hodge_report(cy, dim);
    const HodgeSummary slg = hodge_report(lg, dim);
    const auto [narrow, broad] = narrow_broad(lg);
    const ThomReport thom = thom_shift_check(a);
    const bool ok = thom.pass && scy.duality_symmetric && scy.conjugation_symmetric;
    if (c.json_out()) {
        json fibres = json::array();
        for (const auto& s : a.sectors) {
            if (s.n_fixed() < 1) continue;
            json dims = json::object();
            for (const auto& [k, h] : milnor_fiber_dims(a, s).dims) dims[std::to_string(k)] = h;
            fibres.push_back({{"sector", s.id}, {"dims", std::move(dims)}});
        }
        c.emit({{"command", "report"},
                {"dimension", dim},
                {"cy", summary_json(scy)},
                {"lg", summary_json(slg)},
                {"narrow", narrow},
                {"broad", broad},
                {"thom_shift", {{"pass", thom.pass}, {"mismatches", thom.mismatches}}},
                {"milnor_fibres", std::move(fibres)}});
    } else {
        c.out << "dimension D = " << dim << "\n";
        summary_text(c.out, "CY", scy);
        summary_text(c.out, "LG", slg);
        c.out << "LG states: " << narrow << " narrow, " << broad << " broad\n";
        c.out << "Thom shift check: " << (thom.pass ? "pass" : "FAIL") << "\n";
        for (const auto& m : thom.mismatches) c.out << "  " << m << "\n";
        for (const auto& s : a.sectors) {
            if (s.n_fixed() < 1) continue;
            std::vector<std::string> parts;
            for (const auto& [k, h] : milnor_fiber_dims(a, s).dims)
                parts.push_back("H^" + std::to_string(k) + "=" + std::to_string(h));
            c.out << "  Milnor fibre of sector " << s.id << ": " << (parts.empty() ? "0" : join(parts, " ")) << "\n";
        }
    }
    return ok ? exit_code::pass : exit_code::mismatch;
}

}  // namespace

std::optional<Verb> parse_verb(std::string_view name) {
    static const std::pair<std::string_view, Verb> table[] = {
        {"validate", Verb::validate}, {"sectors", Verb::sectors}, {"cy", Verb::cy},         {"lg", Verb::lg},
        {"bundles", Verb::bundles},   {"pair", Verb::pair},       {"verify", Verb::verify}, {"report", Verb::report}};
    for (const auto& [n, v] : table)
        if (n == name) return v;
    return std::nullopt;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    const Context c{cmd, out, err};
    ModelData m;
    try {
        m = load_model(cmd.input);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::parse_error;
    }
    if (cmd.prime) m.options.prime = *cmd.prime;
    if (cmd.verify_prime) m.options.verify_prime = *cmd.verify_prime;
    if (cmd.qs_bound) m.options.qs_bound = *cmd.qs_bound;
    if (cmd.jobs) m.options.jobs = *cmd.jobs;
    m.options.exact_ranks = cmd.exact;

    const ValidationReport v = validate(m);
    if (cmd.verb == Verb::validate) return cmd_validate(c, v);

    for (const auto& check : v.checks) {
        if (check.status == CheckStatus::fail) {
            err << "invalid model: " << check.name << ": " << check.message << "\n";
            return exit_code::invalid;
        }
    }
    if (const CheckResult* qs = v.find("quasi_smooth"); qs && qs->status != CheckStatus::pass) {
        if (cmd.verb == Verb::verify) {
            err << "refusing to verify: quasi-smoothness " << qs->message << "\n";
            return exit_code::invalid;
        }
        err << "warning: quasi-smoothness " << qs->message << "\n";
    }

    try {
        const Analysis a = Analysis::build(m);
        switch (cmd.verb) {
            case Verb::sectors: return cmd_sectors(c, a);
            case Verb::cy:
            case Verb::lg: return cmd_table(c, a, cmd.verb);
            case Verb::bundles: return cmd_bundles(c, a);
            case Verb::pair: return cmd_pair(c, a);
            case Verb::verify: return cmd_verify(c, a);
            case Verb::report: return cmd_report(c, a);
            case Verb::validate: break;
        }
    } catch (const NonFiniteGroup& e) {
        err << "invalid model: " << e.what() << "\n";
        return exit_code::invalid;
    } catch (const PrimeCollision& e) {
        err << "rank check failed: " << e.what() << "\n";
        return exit_code::mismatch;
    } catch (const PairingFailure& e) {
        err << "pairing failed: " << e.what() << "\n";
        return exit_code::mismatch;
    }
    return exit_code::pass;
}

}  // namespace lgcy
