#include "lgcy/jacobian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lgcy {

long long PrimitiveBlock::total() const { return std::accumulate(dims.begin(), dims.end(), 0LL); }

namespace {

/// Per-sector data shared by every graded piece.
class SectorAlgebra {
public:
    SectorAlgebra(const SectorModel& sm, const ComponentSet& comps)
        : sm_(sm), nx_(sm.x_vars.size()), np_(sm.kept.size()), tilde_(nx_, np_) {
        for (std::size_t i = 0; i < np_; ++i) {
            for (const auto& [mono, c] : sm.polynomials[i].terms()) {
                Monomial lifted{mono.x, std::vector<int>(np_, 0)};
                lifted.p[i] = 1;
                tilde_.add_term(lifted, c);
            }
        }
        for (std::size_t j = 0; j < nx_; ++j) {
            Polynomial d = tilde_.derivative_x(j);
            if (!d.is_zero()) derivatives_.push_back(std::move(d));
        }
        for (std::size_t i = 0; i < np_; ++i) {
            Polynomial d = tilde_.derivative_p(i);
            if (!d.is_zero()) derivatives_.push_back(std::move(d));
        }

        std::vector<std::vector<long long>> diffs;
        if (!tilde_.is_zero()) {
            const Monomial& first = tilde_.terms().begin()->first;
            for (const auto& [mono, c] : tilde_.terms()) {
                std::vector<long long> d;
                for (std::size_t j = 0; j < nx_; ++j) d.push_back(mono.x[j] - first.x[j]);
                for (std::size_t i = 0; i < np_; ++i) d.push_back(mono.p[i] - first.p[i]);
                if (std::any_of(d.begin(), d.end(), [](long long v) { return v != 0; })) diffs.push_back(std::move(d));
            }
        }
        reducer_ = LatticeReducer(diffs, nx_ + np_);

        // Generator characters on the sector's x-variables as integers mod N.
        BigInt common = 1;
        for (const auto& g : comps.generators)
            for (int j : sm.x_vars) common = lcm(common, g.x[j].value().den());
        modulus_ = common.convert_to<long long>();
        for (const auto& g : comps.generators) {
            std::vector<long long> c;
            for (int j : sm.x_vars) {
                const Rational& v = g.x[j].value();
                c.push_back((v.num() * (common / v.den())).convert_to<long long>());
            }
            characters_.push_back(std::move(c));
        }
    }

    std::size_t nx() const { return nx_; }
    std::size_t np() const { return np_; }
    const std::vector<Polynomial>& derivatives() const { return derivatives_; }

    bool generator_invariant(const std::vector<int>& a) const {
        for (const auto& c : characters_) {
            long long total = 0;
            for (std::size_t j = 0; j < nx_; ++j) total = (total + (a[j] + 1) * c[j]) % modulus_;
            if (total != 0) return false;
        }
        return true;
    }

    std::vector<Monomial> invariant_monomials(int k) const {
        std::vector<Monomial> out;
        long long weight_sum = 0;
        for (int w : sm_.weights) weight_sum += w;
        std::vector<int> b(np_, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i + 1 >= np_) {
                if (np_ > 0) b[np_ - 1] = left;
                else if (left != 0) return;
                long long target = -weight_sum;
                for (std::size_t q = 0; q < np_; ++q) target += static_cast<long long>(b[q] + 1) * sm_.degrees[q];
                for_each_monomial(sm_.weights, target, [&](const std::vector<int>& a) {
                    if (generator_invariant(a)) out.push_back({a, b});
                });
                return;
            }
            for (int v = left; v >= 0; --v) {
                b[i] = v;
                rec(i + 1, left - v);
            }
            b[i] = 0;
        };
        if (nx_ == 0 && np_ == 0) return out;
        rec(0, k);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<long long> key(const Monomial& m) const {
        std::vector<int> v(m.x);
        v.insert(v.end(), m.p.begin(), m.p.end());
        return reducer_.reduce(v);
    }

private:
    const SectorModel& sm_;
    std::size_t nx_;
    std::size_t np_;
    Polynomial tilde_;
    std::vector<Polynomial> derivatives_;
    LatticeReducer reducer_;
    long long modulus_ = 1;
    std::vector<std::vector<long long>> characters_;
};

/// One lattice block of a graded piece: its columns and the ideal generators
/// m * dW~ landing in it.
struct Block {
    std::map<Monomial, std::size_t> columns;
    std::vector<std::pair<std::size_t, Monomial>> rows;  // (derivative index, multiplier)
};

struct Piece {
    std::size_t monomials = 0;
    std::vector<Block> blocks;
};

Piece build_piece(const SectorAlgebra& alg, int k) {
    Piece piece;
    const auto monos = alg.invariant_monomials(k);
    piece.monomials = monos.size();
    std::map<std::vector<long long>, std::size_t> block_of_key;
    for (const auto& mono : monos) {
        auto [it, inserted] = block_of_key.try_emplace(alg.key(mono), piece.blocks.size());
        if (inserted) piece.blocks.emplace_back();
        auto& cols = piece.blocks[it->second].columns;
        cols.emplace(mono, cols.size());
    }
    const auto& derivs = alg.derivatives();
    for (auto& block : piece.blocks) {
        std::set<std::pair<std::size_t, Monomial>> seen;
        for (const auto& [col, idx] : block.columns) {
            for (std::size_t v = 0; v < derivs.size(); ++v) {
                for (const auto& [term, c] : derivs[v].terms()) {
                    if (!term.divides(col)) continue;
                    seen.emplace(v, col / term);
                }
            }
        }
        block.rows.assign(seen.begin(), seen.end());
    }
    return piece;
}

std::size_t piece_rank_mod(const SectorAlgebra& alg, const Piece& piece, std::uint64_t prime) {
    std::size_t rank = 0;
    const auto& derivs = alg.derivatives();
    for (const auto& block : piece.blocks) {
        FpRowSpace space(block.columns.size(), prime);
        for (const auto& [v, mult] : block.rows) {
            SparseRow row;
            for (const auto& [term, c] : derivs[v].terms()) {
                const auto it = block.columns.find(mult * term);
                if (it == block.columns.end())
                    throw std::logic_error("ideal generator leaves its character block");
                row.emplace_back(it->second, to_residue(c, prime));
            }
            space.insert(row);
            if (space.full()) break;
        }
        rank += space.rank();
    }
    return rank;
}

std::size_t piece_rank_exact(const SectorAlgebra& alg, const Piece& piece) {
    std::size_t rank = 0;
    const auto& derivs = alg.derivatives();
    for (const auto& block : piece.blocks) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& [v, mult] : block.rows) {
            std::vector<Rational> row(block.columns.size());
            for (const auto& [term, c] : derivs[v].terms()) row[block.columns.at(mult * term)] += c;
            rows.push_back(std::move(row));
        }
        rank += rational_rank(rows, block.columns.size());
    }
    return rank;
}

}  // namespace

std::vector<Monomial> enumerate_invariant_monomials(const SectorModel& sm, const ComponentSet& comps, int k) {
    return SectorAlgebra(sm, comps).invariant_monomials(k);
}

std::size_t ideal_piece_rank(const SectorModel& sm, const ComponentSet& comps, int k, std::uint64_t prime) {
    const SectorAlgebra alg(sm, comps);
    return piece_rank_mod(alg, build_piece(alg, k), prime);
}

std::size_t ideal_piece_rank_exact(const SectorModel& sm, const ComponentSet& comps, int k) {
    const SectorAlgebra alg(sm, comps);
    return piece_rank_exact(alg, build_piece(alg, k));
}

PrimitiveBlock primitive_hodge_dims(const SectorModel& sm, const ComponentSet& comps, const RankSettings& settings) {
    PrimitiveBlock block;
    block.sector = sm.sector;
    block.dtilde = sm.dtilde;
    if (sm.dtilde < 0) return block;
    const SectorAlgebra alg(sm, comps);
    for (int k = 0; k <= sm.dtilde; ++k) {
        const Piece piece = build_piece(alg, k);
        PieceRank pr;
        pr.k = k;
        pr.monomials = piece.monomials;
        pr.blocks = piece.blocks.size();
        if (settings.exact) {
            pr.rank = pr.verify_rank = piece_rank_exact(alg, piece);
        } else {
            std::uint64_t p = settings.prime;
            std::uint64_t q = settings.verify_prime;
            constexpr int kAttempts = 3;
            for (int attempt = 0;; ++attempt) {
                pr.prime = p;
                pr.verify_prime = q;
                pr.rank = piece_rank_mod(alg, piece, p);
                pr.verify_rank = piece_rank_mod(alg, piece, q);
                if (pr.rank == pr.verify_rank) break;
                if (attempt + 1 == kAttempts)
                    throw PrimeCollision("prime collision in sector " + std::to_string(sm.sector) + ", piece " +
                                         std::to_string(k) + ": ranks " + std::to_string(pr.rank) + " vs " +
                                         std::to_string(pr.verify_rank));
                p = previous_prime(std::min(p, q));
                q = previous_prime(p);
            }
        }
        block.dims.push_back(static_cast<long long>(pr.monomials) - static_cast<long long>(pr.rank));
        block.pieces.push_back(pr);
    }
    return block;
}

std::vector<BigInt> milnor_hilbert_series(const std::vector<int>& weights, int degree) {
    std::vector<BigInt> num{1};
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
        const int e = degree - w;
        if (e < 0) throw std::invalid_argument("degree below a weight: no Milnor algebra");
        std::vector<BigInt> next(num.size() + e, 0);
        for (std::size_t i = 0; i < num.size(); ++i) {
            next[i] += num[i];
            next[i + e] -= num[i];
        }
        num = std::move(next);
    }
    // Exact division by each (1 - t^w).
    for (int w : weights) {
        std::vector<BigInt> q(num.size(), 0);
        std::vector<BigInt> rem = num;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            if (rem[i] == 0) continue;
            q[i] = rem[i];
            if (i + w < rem.size()) rem[i + w] += rem[i];
            else throw std::invalid_argument("product is not a polynomial for these weights and degree");
            rem[i] = 0;
        }
        num = std::move(q);
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    if (num.empty()) num.push_back(0);
    return num;
}

std::map<std::pair<long long, CharacterVector>, BigInt> equivariant_milnor_series(
    const std::vector<int>& weights, int degree, const std::vector<CharacterVector>& characters, long long max_degree) {
    using Series = std::map<std::pair<long long, CharacterVector>, BigInt>;
    const std::size_t g = characters.empty() ? 0 : characters.front().size();
    auto add_chars = [](const CharacterVector& a, const CharacterVector& b, long long times) {
        CharacterVector out = a;
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i] * times;
        return out;
    };
    Series series;
    series[{0, CharacterVector(g)}] = 1;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const int w = weights[j];
        const CharacterVector& chi = characters[j];
        // Numerator factor 1 - t^{d - w} [chi_W - chi_j]; chi_W is trivial.
        Series after_num;
        for (const auto& [key, c] : series) {
            after_num[key] += c;
            const long long deg = key.first + degree - w;
            if (deg <= max_degree) after_num[{deg, add_chars(key.second, chi, -1)}] -= c;
        }
        // Denominator factor 1 / (1 - t^w [chi_j]) as a truncated geometric series.
        Series after_den;
        for (const auto& [key, c] : after_num) {
            if (c == 0) continue;
            for (long long m = 0; key.first + m * w <= max_degree; ++m)
                after_den[{key.first + m * w, add_chars(key.second, chi, m)}] += c;
        }
        series.clear();
        for (auto& [key, c] : after_den)
            if (c != 0) series.emplace(key, c);
    }
    return series;
}

std::vector<long long> hypersurface_dims_from_series(const SectorModel& sm, const ComponentSet& comps) {
    if (sm.kept.size() != 1) throw std::invalid_argument("not a hypersurface sector");
    if (sm.dtilde < 0) return {};
    std::vector<CharacterVector> chars;
    for (int j : sm.x_vars) {
        CharacterVector c;
        for (const auto& gen : comps.generators) c.push_back(gen.x[j]);
        chars.push_back(std::move(c));
    }
    CharacterVector target(comps.generators.size());
    for (const auto& c : chars)
        for (std::size_t g = 0; g < c.size(); ++g) target[g] = target[g] - c[g];
    const int d = sm.degrees.front();
    const long long wsum = std::accumulate(sm.weights.begin(), sm.weights.end(), 0LL);
    const long long top = static_cast<long long>(sm.dtilde + 1) * d - wsum;
    const auto series = equivariant_milnor_series(sm.weights, d, chars, top);
    std::vector<long long> dims;
    for (int k = 0; k <= sm.dtilde; ++k) {
        const long long deg = static_cast<long long>(k + 1) * d - wsum;
        const auto it = series.find({deg, target});
        dims.push_back(it == series.end() ? 0 : it->second.convert_to<long long>());
    }
    return dims;
}

}  // namespace lgcy
