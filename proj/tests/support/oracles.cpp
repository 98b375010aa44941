#include "oracles.hpp"

#include <deque>
#include <functional>
#include <set>

namespace oracle {

std::vector<BigInt> truncated_geometric_power(int e, int n) {
    std::vector<BigInt> poly{1};
    for (int k = 0; k < n; ++k) {
        std::vector<BigInt> next(poly.size() + e - 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int s = 0; s < e; ++s) next[i + s] += poly[i];
        poly = std::move(next);
    }
    return poly;
}

BigInt ci_euler_characteristic(int N, const std::vector<int>& degrees) {
    const int dim = N - static_cast<int>(degrees.size());
    // Power series in H truncated at H^dim, integer coefficients throughout.
    std::vector<BigInt> c(dim + 1, 0);
    c[0] = 1;
    for (int k = 0; k < N + 1; ++k)
        for (int i = dim; i >= 1; --i) c[i] += c[i - 1];
    for (int d : degrees) {
        // Multiply by 1 / (1 + dH) = sum (-d)^m H^m.
        std::vector<BigInt> out(dim + 1, 0);
        for (int i = 0; i <= dim; ++i) {
            BigInt power = 1;
            for (int m = 0; i + m <= dim; ++m) {
                out[i + m] += c[i] * power;
                power *= -d;
            }
        }
        c = std::move(out);
    }
    BigInt product = 1;
    for (int d : degrees) product *= d;
    return c[dim] * product;
}

std::map<lgcy::Bidegree, long long> fermat_hodge_numbers(const std::vector<int>& exponents,
                                                         const std::vector<std::vector<Rational>>& generators) {
    const std::size_t n = exponents.size();
    using Elem = std::vector<Rational>;  // phases in [0,1)
    auto reduce = [](Rational x) {
        const Rational f(x.floor(), 1);
        return x - f;
    };
    auto mul = [&](const Elem& a, const Elem& b) {
        Elem out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = reduce(a[j] + b[j]);
        return out;
    };
    std::vector<Elem> gens = generators;
    Elem J(n);
    for (std::size_t j = 0; j < n; ++j) J[j] = Rational(1, exponents[j]);
    gens.push_back(J);

    std::set<Elem> group{Elem(n, Rational(0))};
    std::deque<Elem> queue{Elem(n, Rational(0))};
    while (!queue.empty()) {
        const Elem g = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            Elem h = mul(g, s);
            if (group.insert(h).second) queue.push_back(std::move(h));
        }
    }

    std::map<lgcy::Bidegree, long long> table;
    for (const auto& h : group) {
        std::vector<std::size_t> fixed;
        Rational age;
        for (std::size_t j = 0; j < n; ++j) {
            age += h[j];
            if (h[j].is_zero()) fixed.push_back(j);
        }
        std::vector<int> a(fixed.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == fixed.size()) {
                for (const auto& g : group) {
                    Rational phase;
                    for (std::size_t s = 0; s < fixed.size(); ++s) phase += Rational(a[s] + 1) * g[fixed[s]];
                    if (!reduce(phase).is_zero()) return;
                }
                Rational deg;
                for (std::size_t s = 0; s < fixed.size(); ++s) deg += Rational(a[s] + 1, exponents[fixed[s]]);
                const Rational nh(static_cast<long long>(fixed.size()));
                table[{nh - deg + age - Rational(1), deg + age - Rational(1)}] += 1;
                return;
            }
            for (int v = 0; v <= exponents[fixed[pos]] - 2; ++v) {
                a[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
    return table;
}

}  // namespace oracle
