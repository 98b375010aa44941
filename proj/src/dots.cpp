#include "lgcy/dots.hpp"

#include <algorithm>
#include <sstream>

namespace lgcy {

DotDiagram build_diagram(const ModelData& m, const Component& comp) {
    DotDiagram diag;
    diag.component = comp.id;
    for (int j = 0; j < m.n; ++j) {
        const Rational& a = comp.pure.x[j].value();
        diag.sum_a += a;
        diag.total += m.weights[j];
        for (int k = 0; k < m.weights[j]; ++k)
            diag.dots.push_back({DotColor::black, Phase((a + Rational(k)) / Rational(m.weights[j])), j, comp.id, 0});
    }
    for (int i = 0; i < m.r; ++i)
        for (int k = 0; k < m.degrees[i]; ++k)
            diag.dots.push_back({DotColor::white, Phase(Rational(k) / Rational(m.degrees[i])), i, comp.id, 0});
    return diag;
}

DotDiagram order_and_f(DotDiagram diag) {
    auto angle = [](const Dot& d) { return d.black() || !d.t.is_zero() ? d.t.value() : Rational(1); };
    std::sort(diag.dots.begin(), diag.dots.end(), [&](const Dot& a, const Dot& b) {
        const Rational ta = angle(a);
        const Rational tb = angle(b);
        if (ta != tb) return ta < tb;
        if (a.color != b.color) return !a.black();  // white sits just before the ray
        return a.black() ? a.source < b.source : a.source > b.source;
    });
    int v = 0;
    for (auto& d : diag.dots) {
        if (d.black()) {
            d.f = v++;
        } else {
            d.f = --v;
        }
    }
    if (v != 0) throw std::logic_error("dot counter does not close; the model is not balanced");
    diag.ordered = true;
    return diag;
}

PairingCertificate pair_dots(const DotDiagram& diag) {
    if (!diag.ordered) throw std::logic_error("pair_dots needs an ordered diagram");
    PairingCertificate cert;
    cert.component = diag.component;
    const std::size_t size = diag.dots.size();
    std::vector<bool> used(size, false);
    for (std::size_t b = 0; b < size; ++b) {
        const Dot& black = diag.dots[b];
        if (!black.black()) continue;
        bool found = false;
        for (std::size_t step = 1; step < size && !found; ++step) {
            const std::size_t w = (b + step) % size;
            const Dot& white = diag.dots[w];
            if (white.black() || used[w] || white.f != black.f) continue;
            used[w] = true;
            cert.pairs.push_back({black, white, black.f, dot_degree(diag, black)});
            found = true;
        }
        if (!found) {
            std::ostringstream os;
            os << "no white partner for black dot (j=" << black.source << ", t=" << black.t.value().str()
               << ", f=" << black.f << ") in component " << diag.component << "; diagram:";
            for (const auto& d : diag.dots)
                os << ' ' << (d.black() ? 'B' : 'W') << d.source << '@' << d.t.value().str() << ':' << d.f;
            throw PairingFailure(os.str());
        }
    }
    return cert;
}

Rational dot_degree(const DotDiagram& diag, const Dot& dot) { return diag.sum_a + Rational(dot.f); }

std::map<Phase, RayDots> rays(const DotDiagram& diag) {
    std::map<Phase, RayDots> out;
    for (const auto& d : diag.dots) (d.black() ? out[d.t].black_f : out[d.t].white_f).push_back(d.f);
    for (auto& [t, ray] : out) {
        std::sort(ray.black_f.begin(), ray.black_f.end());
        std::sort(ray.white_f.begin(), ray.white_f.end());
    }
    return out;
}

bool piecewise_linear_consistent(const DotDiagram& diag) {
    const std::size_t size = diag.dots.size();
    if (size == 0) return true;
    // Twice the extension's value at the two ends of a dot's window.
    auto right = [](const Dot& d) { return 2 * d.f + (d.black() ? 1 : -1); };
    auto left = [](const Dot& d) { return 2 * d.f + (d.black() ? -1 : 1); };
    for (std::size_t i = 0; i < size; ++i) {
        const Dot& a = diag.dots[i];
        const Dot& b = diag.dots[(i + 1) % size];
        if (right(a) != left(b)) return false;
    }
    return true;
}

bool levels_balanced(const DotDiagram& diag) {
    std::map<int, int> count;
    for (const auto& d : diag.dots) count[d.f] += d.black() ? 1 : -1;
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace lgcy
