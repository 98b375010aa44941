#include "corpus.hpp"

#include "lgcy/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace corpus {

namespace {

using lgcy::Phase;
using lgcy::Rational;

std::vector<int> divisors(int g) {
    std::vector<int> out;
    for (int k = 1; k <= g; ++k)
        if (g % k == 0) out.push_back(k);
    return out;
}

}  // namespace

std::vector<Entry> generate(std::size_t count, std::uint32_t seed, const Limits& limits) {
    std::mt19937 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<Entry> out;
    std::set<std::string> seen;
    for (int attempt = 0; out.size() < count && attempt < 20000; ++attempt) {
        const int r = uniform(1, 3);
        std::vector<int> degrees;
        for (int i = 0; i < r; ++i) degrees.push_back(uniform(2, 8));
        const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
        if (total > limits.max_total) continue;
        int g = 0;
        for (int d : degrees) g = std::gcd(g, d);
        const auto divs = divisors(g);

        // Random weights dividing every degree, summing to the total.
        std::vector<int> weights;
        int left = total;
        while (left > 0 && static_cast<int>(weights.size()) < limits.max_n) {
            std::vector<int> options;
            for (int w : divs)
                if (w <= left) options.push_back(w);
            const int w = options[uniform(0, static_cast<int>(options.size()) - 1)];
            weights.push_back(w);
            left -= w;
        }
        if (left != 0) continue;
        const int n = static_cast<int>(weights.size());
        if (r >= n) continue;
        int gw = 0;
        for (int w : weights) gw = std::gcd(gw, w);
        if (gw != 1) continue;
        // A linear term lets a variable be eliminated; skip those.
        const int wmax = *std::max_element(weights.begin(), weights.end());
        if (std::any_of(degrees.begin(), degrees.end(), [&](int d) { return d < 2 * wmax; })) continue;
        std::sort(weights.begin(), weights.end());

        // Fermat-type polynomials with random nonzero coefficients.
        std::vector<std::string> polys;
        for (int i = 0; i < r; ++i) {
            std::ostringstream os;
            for (int j = 0; j < n; ++j) {
                if (j) os << " + ";
                os << uniform(1, 9) << "*x" << j + 1 << "^" << degrees[i] / weights[j];
            }
            polys.push_back(os.str());
        }

        // Random generators with theta_j in (1/g_j) Z, g_j = gcd_i(d_i / w_j).
        const int gen_count = uniform(0, 2);
        std::vector<std::vector<std::string>> gens;
        for (int k = 0; k < gen_count; ++k) {
            std::vector<std::string> gen;
            for (int j = 0; j < n; ++j) {
                int gj = 0;
                for (int d : degrees) gj = std::gcd(gj, d / weights[j]);
                gen.push_back(Rational(uniform(0, gj - 1), gj).str());
            }
            gens.push_back(std::move(gen));
        }

        std::ostringstream doc;
        doc << "{\"weights\": [";
        for (int j = 0; j < n; ++j) doc << (j ? "," : "") << weights[j];
        doc << "], \"degrees\": [";
        for (int i = 0; i < r; ++i) doc << (i ? "," : "") << degrees[i];
        doc << "], \"polynomials\": [";
        for (int i = 0; i < r; ++i) doc << (i ? "," : "") << '"' << polys[i] << '"';
        doc << "], \"group_generators\": [";
        for (std::size_t k = 0; k < gens.size(); ++k) {
            doc << (k ? "," : "") << "[";
            for (int j = 0; j < n; ++j) doc << (j ? "," : "") << '"' << gens[k][j] << '"';
            doc << "]";
        }
        doc << "], \"options\": {\"qs_bound\": " << limits.qs_bound << "}}";

        lgcy::ModelData m = lgcy::parse_input(doc.str());
        const auto comps = lgcy::enumerate_components(m);
        if (comps.size() > limits.max_group) continue;
        std::vector<std::string> phases;
        for (const auto& c : comps.components) {
            std::string v;
            for (const auto& x : c.pure.x) v += x.value().str() + ",";
            phases.push_back(v);
        }
        std::sort(phases.begin(), phases.end());
        std::ostringstream key;
        key << doc.str().substr(0, doc.str().find("\"polynomials\""));
        for (const auto& ph : phases) key << ph << ' ';
        if (!seen.insert(key.str()).second) continue;
        if (!lgcy::validate(m).all_pass()) continue;

        std::ostringstream name;
        name << "w(";
        for (int j = 0; j < n; ++j) name << (j ? "," : "") << weights[j];
        name << ")d(";
        for (int i = 0; i < r; ++i) name << (i ? "," : "") << degrees[i];
        name << ")|G|=" << comps.size() << "#" << out.size();
        out.push_back({name.str(), std::move(m), comps.size()});
    }
    return out;
}

}  // namespace corpus
