#include "lgcy/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lgcy {

GroupElement GroupElement::operator*(const GroupElement& o) const {
    GroupElement out = *this;
    for (std::size_t j = 0; j < x.size(); ++j) out.x[j] = x[j] + o.x[j];
    for (std::size_t i = 0; i < p.size(); ++i) out.p[i] = p[i] + o.p[i];
    return out;
}

GroupElement GroupElement::inverse() const {
    GroupElement out = *this;
    for (auto& v : out.x) v = -v;
    for (auto& v : out.p) v = -v;
    return out;
}

GroupElement GroupElement::torus_shift(const Phase& t, const ModelData& m) const {
    GroupElement out = *this;
    for (std::size_t j = 0; j < x.size(); ++j) out.x[j] = x[j] - t * m.weights[j];
    for (std::size_t i = 0; i < p.size(); ++i) out.p[i] = p[i] + t * m.degrees[i];
    return out;
}

bool preserves_model(const GroupElement& g, const ModelData& m) {
    for (int i = 0; i < m.r; ++i) {
        for (const auto& [mono, c] : m.polynomials[i].terms()) {
            Phase total = g.p[i];
            for (int j = 0; j < m.n; ++j) total = total + g.x[j] * mono.x[j];
            if (!total.is_zero()) return false;
        }
    }
    return true;
}

GroupElement canonicalize(const GroupElement& g, const ModelData& m) {
    const int w1 = m.weights.front();
    std::optional<GroupElement> best;
    for (int k = 0; k < w1; ++k) {
        const Phase t((g.x.front().value() + Rational(k)) / Rational(w1));
        GroupElement shifted = g.torus_shift(t, m);
        if (!best || shifted < *best) best = std::move(shifted);
    }
    return *best;
}

ComponentSet enumerate_components(const ModelData& m, std::size_t cap) {
    ComponentSet out;
    for (const auto& gen : m.generators) out.generators.push_back({gen, std::vector<Phase>(m.r)});

    std::map<GroupElement, int> seen;
    std::deque<GroupElement> queue;
    auto visit = [&](const GroupElement& pure) {
        GroupElement canon = canonicalize(pure, m);
        if (seen.contains(canon)) return;
        if (seen.size() >= cap)
            throw NonFiniteGroup("component closure exceeded " + std::to_string(cap) +
                                 " elements; the symmetry group does not look finite");
        const int id = static_cast<int>(out.components.size());
        seen.emplace(canon, id);
        out.components.push_back({id, pure, std::move(canon)});
        queue.push_back(pure);
    };
    visit(GroupElement::identity(m.n, m.r));
    while (!queue.empty()) {
        const GroupElement g = queue.front();
        queue.pop_front();
        for (const auto& gen : out.generators) visit(g * gen);
    }
    return out;
}

bool Sector::on_side(Side side) const {
    switch (side) {
        case Side::cy: return n_fixed() >= 1;
        case Side::lg: return r_fixed() >= 1;
        case Side::all: return n_fixed() + r_fixed() >= 1;
    }
    return false;
}

Sector make_sector(const ModelData& m, const Component& comp, const Phase& t, int id) {
    Sector s;
    s.id = id;
    s.component = comp.id;
    s.t = t;
    s.phases = comp.pure.torus_shift(t, m);
    Rational x_sum;
    for (int j = 0; j < m.n; ++j) {
        x_sum += s.phases.x[j].value();
        if (s.phases.x[j].is_zero()) s.fix_x.push_back(j);
    }
    Rational p_sum;
    Rational chi_sum;
    for (int i = 0; i < m.r; ++i) {
        const Phase chi = -s.phases.p[i];
        s.chi.push_back(chi);
        p_sum += s.phases.p[i].value();
        chi_sum += chi.value();
        if (s.phases.p[i].is_zero()) s.fix_p.push_back(i);
    }
    s.age_total = x_sum + p_sum;
    s.age_x = x_sum - chi_sum;
    return s;
}

std::vector<Sector> enumerate_sectors(const ModelData& m, const ComponentSet& comps, Side side) {
    std::vector<Sector> all;
    for (const auto& comp : comps.components) {
        std::set<Phase> ts;
        for (int j = 0; j < m.n; ++j)
            for (int k = 0; k < m.weights[j]; ++k)
                ts.insert(Phase((comp.pure.x[j].value() + Rational(k)) / Rational(m.weights[j])));
        for (int i = 0; i < m.r; ++i)
            for (int k = 0; k < m.degrees[i]; ++k) ts.insert(Phase(Rational(k) / Rational(m.degrees[i])));
        for (const auto& t : ts) {
            Sector s = make_sector(m, comp, t, static_cast<int>(all.size()));
            if (!s.on_side(Side::all)) throw std::logic_error("candidate sector with no fixed coordinate");
            all.push_back(std::move(s));
        }
    }
    if (side == Side::all) return all;
    std::vector<Sector> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [side](const Sector& s) { return s.on_side(side); });
    return out;
}

std::pair<Rational, Rational> sector_ages(const Sector& s) {
    Rational total;
    Rational x_age;
    for (const auto& v : s.phases.x) {
        total += v.value();
        x_age += v.value();
    }
    for (const auto& v : s.phases.p) total += v.value();
    for (const auto& v : s.chi) x_age -= v.value();
    return {total, x_age};
}

SectorModel restrict_to_sector(const ModelData& m, const Sector& s) {
    SectorModel sm;
    sm.sector = s.id;
    sm.x_vars = s.fix_x;
    for (int j : s.fix_x) sm.weights.push_back(m.weights[j]);
    for (int i = 0; i < m.r; ++i) {
        if (!s.chi[i].is_zero()) continue;
        sm.kept.push_back(i);
        sm.degrees.push_back(m.degrees[i]);
        Polynomial restricted = m.polynomials[i].restrict_x(s.fix_x);
        sm.polynomials.push_back(std::move(restricted));
    }
    sm.dtilde = static_cast<int>(sm.x_vars.size()) - static_cast<int>(sm.kept.size()) - 1;
    return sm;
}

}  // namespace lgcy
