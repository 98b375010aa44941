#include "lgcy/model.hpp"

#include "lgcy/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace lgcy {

using nlohmann::json;

// ---------------------------------------------------------------- monomials

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] > other.x[j]) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > other.p[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out = *this;
    for (std::size_t j = 0; j < x.size(); ++j) out.x[j] += o.x[j];
    for (std::size_t i = 0; i < p.size(); ++i) out.p[i] += o.p[i];
    return out;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial out = *this;
    for (std::size_t j = 0; j < x.size(); ++j) out.x[j] -= o.x[j];
    for (std::size_t i = 0; i < p.size(); ++i) out.p[i] -= o.p[i];
    return out;
}

int Monomial::p_degree() const { return std::accumulate(p.begin(), p.end(), 0); }

// -------------------------------------------------------------- polynomials

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::derivative_x(std::size_t j) const {
    Polynomial out(n_, r_);
    for (const auto& [mono, c] : terms_) {
        if (mono.x[j] == 0) continue;
        Monomial d = mono;
        d.x[j] -= 1;
        out.add_term(d, c * Rational(mono.x[j]));
    }
    return out;
}

Polynomial Polynomial::derivative_p(std::size_t i) const {
    Polynomial out(n_, r_);
    for (const auto& [mono, c] : terms_) {
        if (mono.p[i] == 0) continue;
        Monomial d = mono;
        d.p[i] -= 1;
        out.add_term(d, c * Rational(mono.p[i]));
    }
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(n_, r_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) out.add_term(a * b, ca * cb);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [mono, c] : o.terms_) out.add_term(mono, -c);
    return out;
}

Polynomial Polynomial::restrict_x(const std::vector<int>& keep) const {
    Polynomial out(keep.size(), 0);
    std::vector<bool> kept(n_, false);
    for (int j : keep) kept[j] = true;
    for (const auto& [mono, c] : terms_) {
        bool supported = true;
        for (std::size_t j = 0; j < n_; ++j)
            if (mono.x[j] != 0 && !kept[j]) supported = false;
        if (!supported) continue;
        Monomial m = Monomial::one(keep.size(), 0);
        for (std::size_t k = 0; k < keep.size(); ++k) m.x[k] = mono.x[keep[k]];
        out.add_term(m, c);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? "-" : "+");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.sign() < 0 ? -c : c;
        bool need_star = false;
        bool constant = std::all_of(mono.x.begin(), mono.x.end(), [](int e) { return e == 0; }) &&
                        std::all_of(mono.p.begin(), mono.p.end(), [](int e) { return e == 0; });
        if (a != Rational(1) || constant) {
            os << a.str();
            need_star = true;
        }
        auto factor = [&](char v, std::size_t idx, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << v << idx + 1;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        for (std::size_t i = 0; i < mono.p.size(); ++i) factor('p', i, mono.p[i]);
        for (std::size_t j = 0; j < mono.x.size(); ++j) factor('x', j, mono.x[j]);
    }
    return os.str();
}

// ------------------------------------------------------------------ parsing

ParseError::ParseError(std::string message, std::string context, int line, int column)
    : std::runtime_error(std::move(message)), context_(std::move(context)), line_(line), column_(column) {}

namespace {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, int n, std::string context)
        : text_(text), n_(n), context_(std::move(context)) {}

    Polynomial parse() {
        Polynomial poly(n_, 0);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        while (true) {
            auto [mono, c] = term();
            poly.add_term(mono, negative ? -c : c);
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail(std::string("expected '+' or '-', found '") + peek() + "'");
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        return poly;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        const int column = static_cast<int>(at) + 1;
        throw ParseError(context_ + ", column " + std::to_string(column) + ": " + what, context_, 1, column);
    }
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

    BigInt integer() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        BigInt v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    std::pair<Monomial, Rational> term() {
        Rational coef(1);
        Monomial mono = Monomial::one(n_, 0);
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            BigInt num = integer();
            BigInt den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                den = integer();
                if (den == 0) fail("zero denominator in coefficient", start);
            } else if (!at_end() && peek() == '.') {
                fail("non-rational coefficient", start);
            }
            coef = Rational(num, den);
            skip_ws();
            if (at_end() || peek() != '*') fail("a term needs at least one variable factor after its coefficient");
            ++pos_;
            skip_ws();
        }
        while (true) {
            factor(mono);
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            skip_ws();
        }
        return {mono, coef};
    }

    void factor(Monomial& mono) {
        const std::size_t start = pos_;
        if (at_end()) fail("expected a variable");
        if (peek() != 'x') {
            std::size_t end = pos_;
            while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
            if (end == pos_) fail(std::string("unexpected character '") + peek() + "'");
            if (std::isdigit(static_cast<unsigned char>(peek()))) fail("coefficient must precede the variables", start);
            fail("unknown variable \"" + std::string(text_.substr(pos_, end - pos_)) + "\"", start);
        }
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("variable index expected after 'x'", start);
        const BigInt idx = integer();
        if (idx < 1 || idx > n_)
            fail("variable index out of range: x" + idx.str() + " (valid: x1..x" + std::to_string(n_) + ")", start);
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const BigInt big = integer();
            if (big > 10000) fail("exponent too large", start);
            e = big.convert_to<int>();
        }
        mono.x[idx.convert_to<int>() - 1] += e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
    std::string context_;
};

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::vector<int> int_array(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", key, 0, 0);
    const json& a = doc.at(key);
    if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array", key, 0, 0);
    std::vector<int> out;
    for (const auto& v : a) {
        if (!v.is_number_integer())
            throw ParseError(std::string("field \"") + key + "\" must contain integers", key, 0, 0);
        const auto x = v.get<long long>();
        if (x < -1000000 || x > 1000000) throw ParseError(std::string("value out of range in \"") + key + "\"", key, 0, 0);
        out.push_back(static_cast<int>(x));
    }
    return out;
}

Phase parse_phase(const json& v, const std::string& context) {
    Rational x;
    try {
        if (v.is_string()) x = Rational::parse(v.get<std::string>());
        else if (v.is_number_integer()) x = Rational(v.get<long long>());
        else throw std::invalid_argument("expected a rational string");
    } catch (const std::invalid_argument& e) {
        throw ParseError(context + ": " + e.what(), context, 0, 0);
    }
    if (x < Rational(0) || x >= Rational(1))
        throw ParseError(context + ": phase " + x.str() + " is outside [0,1)", context, 0, 0);
    return Phase(x);
}

std::uint64_t parse_prime_option(const json& opts, const char* key, std::uint64_t fallback) {
    if (!opts.contains(key)) return fallback;
    const json& v = opts.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 3)
        throw ParseError(std::string("options.") + key + " must be an integer prime", key, 0, 0);
    return v.get<std::uint64_t>();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n, const std::string& context) {
    return PolynomialParser(text, n, context).parse();
}

ModelData parse_input(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             e.what(),
                         "document", line, column);
    }
    if (!doc.is_object()) throw ParseError("document must be an object", "document", 1, 1);

    ModelData m;
    m.weights = int_array(doc, "weights");
    m.degrees = int_array(doc, "degrees");
    m.n = static_cast<int>(m.weights.size());

    if (!doc.contains("polynomials") || !doc.at("polynomials").is_array())
        throw ParseError("missing array field \"polynomials\"", "polynomials", 0, 0);
    int idx = 0;
    for (const auto& p : doc.at("polynomials")) {
        const std::string context = "polynomials[" + std::to_string(idx++) + "]";
        if (!p.is_string()) throw ParseError(context + " must be a string", context, 0, 0);
        m.polynomials.push_back(parse_polynomial(p.get<std::string>(), m.n, context));
    }
    m.r = static_cast<int>(m.polynomials.size());
    // Lift W_i to the (x, p) variable space so every polynomial carries r p-slots.
    for (auto& poly : m.polynomials) {
        Polynomial lifted(m.n, m.r);
        for (const auto& [mono, c] : poly.terms()) lifted.add_term({mono.x, std::vector<int>(m.r, 0)}, c);
        poly = std::move(lifted);
    }

    if (doc.contains("group_generators")) {
        const json& gens = doc.at("group_generators");
        if (!gens.is_array()) throw ParseError("\"group_generators\" must be an array", "group_generators", 0, 0);
        int g = 0;
        for (const auto& gen : gens) {
            const std::string context = "group_generators[" + std::to_string(g++) + "]";
            if (!gen.is_array()) throw ParseError(context + " must be an array of phases", context, 0, 0);
            std::vector<Phase> phases;
            int k = 0;
            for (const auto& v : gen) phases.push_back(parse_phase(v, context + "[" + std::to_string(k++) + "]"));
            m.generators.push_back(std::move(phases));
        }
    }

    if (doc.contains("options")) {
        const json& opts = doc.at("options");
        if (!opts.is_object()) throw ParseError("\"options\" must be an object", "options", 0, 0);
        m.options.prime = parse_prime_option(opts, "prime", m.options.prime);
        m.options.verify_prime = parse_prime_option(opts, "verify_prime", m.options.verify_prime);
        if (opts.contains("qs_bound")) {
            const json& b = opts.at("qs_bound");
            if (!b.is_number_integer() || b.get<long long>() < 1 || b.get<long long>() > 100000)
                throw ParseError("options.qs_bound must be a positive integer", "qs_bound", 0, 0);
            m.options.qs_bound = b.get<int>();
        }
    }
    return m;
}

ModelData load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read input file \"" + path + "\"", path, 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

int ModelData::qs_bound() const {
    if (options.qs_bound) return *options.qs_bound;
    const int max_degree = degrees.empty() ? 1 : *std::max_element(degrees.begin(), degrees.end());
    return 3 * max_degree;
}

// --------------------------------------------------------------- validation

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::unverified: return "unverified";
    }
    return "?";
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::pass; });
}

const CheckResult* ValidationReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::pair<long long, long long> weighted_degree(const Monomial& mono, const ModelData& m) {
    long long xd = 0;
    for (std::size_t j = 0; j < mono.x.size(); ++j) xd += static_cast<long long>(mono.x[j]) * m.weights[j];
    return {xd, mono.p_degree()};
}

void for_each_monomial(const std::vector<int>& weights, long long degree,
                       const std::function<void(const std::vector<int>&)>& fn) {
    if (degree < 0) return;
    std::vector<int> e(weights.size(), 0);
    if (weights.empty()) {
        if (degree == 0) fn(e);
        return;
    }
    std::function<void(std::size_t, long long)> rec = [&](std::size_t j, long long left) {
        if (j + 1 == weights.size()) {
            if (left % weights[j] == 0) {
                e[j] = static_cast<int>(left / weights[j]);
                fn(e);
            }
            return;
        }
        for (long long a = left / weights[j]; a >= 0; --a) {
            e[j] = static_cast<int>(a);
            rec(j + 1, left - a * weights[j]);
        }
        e[j] = 0;
    };
    rec(0, degree);
}

namespace {

long long x_degree(const Monomial& mono, const std::vector<int>& weights) {
    long long d = 0;
    for (std::size_t j = 0; j < mono.x.size(); ++j) d += static_cast<long long>(mono.x[j]) * weights[j];
    return d;
}

/// Determinant of a square polynomial matrix by Laplace expansion along row 0.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& a, std::size_t n, std::size_t r) {
    const std::size_t k = a.size();
    if (k == 1) return a[0][0];
    Polynomial out(n, r);
    for (std::size_t c = 0; c < k; ++c) {
        if (a[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(a[i][j]);
            minor.push_back(std::move(row));
        }
        const Polynomial term = a[0][c] * determinant(minor, n, r);
        out = (c % 2 == 0) ? out + term : out - term;
    }
    return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct IdealGenerator {
    Polynomial poly;
    long long degree;
};

std::vector<IdealGenerator> singular_locus_ideal(const ModelData& m) {
    std::vector<IdealGenerator> gens;
    const auto n = static_cast<std::size_t>(m.n);
    const auto r = static_cast<std::size_t>(m.r);
    for (std::size_t i = 0; i < r; ++i)
        if (!m.polynomials[i].is_zero()) gens.push_back({m.polynomials[i], m.degrees[i]});
    std::vector<std::vector<Polynomial>> jac(r, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) jac[i][j] = m.polynomials[i].derivative_x(j);
    for_each_subset(n, r, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Polynomial>> sq(r);
        long long degree = 0;
        for (std::size_t i = 0; i < r; ++i) {
            degree += m.degrees[i];
            for (std::size_t c : cols) sq[i].push_back(jac[i][c]);
        }
        for (std::size_t c : cols) degree -= m.weights[c];
        Polynomial det = determinant(sq, n, r);
        if (!det.is_zero()) gens.push_back({std::move(det), degree});
    });
    return gens;
}

}  // namespace

std::vector<QuasiSmoothStatus> check_quasi_smooth(const ModelData& m, int bound, std::uint64_t prime) {
    const auto gens = singular_locus_ideal(m);
    const auto n = static_cast<std::size_t>(m.n);

    // Every generator is an eigenvector of the diagonal torus of its own
    // term differences, so each graded piece splits into lattice blocks.
    std::vector<std::vector<long long>> diffs;
    for (const auto& g : gens) {
        const auto& first = g.poly.terms().begin()->first;
        for (const auto& [mono, c] : g.poly.terms()) {
            std::vector<long long> d(n);
            bool nonzero = false;
            for (std::size_t j = 0; j < n; ++j) {
                d[j] = mono.x[j] - first.x[j];
                nonzero |= d[j] != 0;
            }
            if (nonzero) diffs.push_back(std::move(d));
        }
    }
    const LatticeReducer reducer(diffs, n);

    std::vector<QuasiSmoothStatus> out(n);
    parallel_for(n, m.options.jobs, [&](std::size_t j) {
        out[j] = {static_cast<int>(j), false, 0, bound};
        for (int power = 1; static_cast<long long>(power) * m.weights[j] <= bound; ++power) {
            const long long degree = static_cast<long long>(power) * m.weights[j];
            std::vector<int> target(n, 0);
            target[j] = power;
            const auto key = reducer.reduce(target);

            std::map<std::vector<int>, std::size_t> columns;
            std::vector<std::vector<std::pair<std::vector<int>, std::uint64_t>>> rows;
            for (const auto& g : gens) {
                const auto& lead = g.poly.terms().begin()->first.x;
                for_each_monomial(m.weights, degree - g.degree, [&](const std::vector<int>& e) {
                    std::vector<int> probe(n);
                    for (std::size_t k = 0; k < n; ++k) probe[k] = e[k] + lead[k];
                    if (reducer.reduce(probe) != key) return;
                    std::vector<std::pair<std::vector<int>, std::uint64_t>> row;
                    for (const auto& [mono, c] : g.poly.terms()) {
                        std::vector<int> prod(n);
                        for (std::size_t k = 0; k < n; ++k) prod[k] = e[k] + mono.x[k];
                        columns.try_emplace(prod, 0);
                        row.emplace_back(std::move(prod), to_residue(c, prime));
                    }
                    rows.push_back(std::move(row));
                });
            }
            if (!columns.contains(target)) continue;
            std::size_t next = 0;
            for (auto& [mono, index] : columns) index = next++;
            FpRowSpace space(columns.size(), prime);
            for (const auto& row : rows) {
                SparseRow sparse;
                for (const auto& [mono, c] : row) sparse.emplace_back(columns.at(mono), c);
                space.insert(sparse);
                if (space.full()) break;
            }
            if (space.contains({{columns.at(target), 1}})) {
                out[j].verified = true;
                out[j].exponent = power;
                return;
            }
        }
    });
    return out;
}

ValidationReport validate(const ModelData& m) {
    ValidationReport report;
    auto add = [&](std::string name, bool ok, std::string message) {
        report.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(message)});
    };

    const bool shape_ok = m.r >= 1 && m.r < m.n && m.degrees.size() == static_cast<std::size_t>(m.r);
    {
        std::ostringstream msg;
        msg << "n = " << m.n << ", r = " << m.r << ", " << m.degrees.size() << " degrees";
        if (m.r < 1) msg << "; at least one polynomial is required";
        if (m.r >= m.n) msg << "; need r < n";
        if (m.degrees.size() != static_cast<std::size_t>(m.r)) msg << "; degree count differs from polynomial count";
        add("shape", shape_ok, msg.str());
    }

    const bool weights_positive = !m.weights.empty() && std::all_of(m.weights.begin(), m.weights.end(), [](int w) { return w > 0; });
    int g = 0;
    for (int w : m.weights) g = std::gcd(g, w);
    const bool weights_ok = weights_positive && g == 1;
    add("weights", weights_ok,
        !weights_positive ? "weights must be positive integers" : "gcd of weights = " + std::to_string(g));

    const bool degrees_ok = std::all_of(m.degrees.begin(), m.degrees.end(), [](int d) { return d > 0; });
    add("degrees", degrees_ok, degrees_ok ? "all degrees positive" : "degrees must be positive integers");

    bool homogeneous = shape_ok && weights_positive && degrees_ok;
    std::string homogeneity_msg = "every monomial of W_i has weighted degree d_i";
    if (homogeneous) {
        for (int i = 0; i < m.r && homogeneous; ++i) {
            if (m.polynomials[i].is_zero()) {
                homogeneous = false;
                homogeneity_msg = "W_" + std::to_string(i + 1) + " is zero";
            }
            for (const auto& [mono, c] : m.polynomials[i].terms()) {
                const long long d = x_degree(mono, m.weights);
                if (d != m.degrees[i]) {
                    homogeneous = false;
                    homogeneity_msg = "W_" + std::to_string(i + 1) + " has a monomial of weighted degree " +
                                      std::to_string(d) + " != " + std::to_string(m.degrees[i]);
                    break;
                }
            }
        }
    } else {
        homogeneity_msg = "not checked (malformed weights or degrees)";
    }
    add("quasi_homogeneous", homogeneous, homogeneity_msg);

    const long long sw = std::accumulate(m.weights.begin(), m.weights.end(), 0LL);
    const long long sd = std::accumulate(m.degrees.begin(), m.degrees.end(), 0LL);
    add("calabi_yau", sw == sd,
        "sum of degrees = " + std::to_string(sd) + (sw == sd ? " = " : " != ") + "sum of weights = " + std::to_string(sw));

    bool gens_ok = true;
    std::string gens_msg = std::to_string(m.generators.size()) + " generator(s) preserve every W_i";
    for (std::size_t k = 0; k < m.generators.size() && gens_ok; ++k) {
        const auto& gen = m.generators[k];
        if (gen.size() != static_cast<std::size_t>(m.n)) {
            gens_ok = false;
            gens_msg = "generator " + std::to_string(k + 1) + " has " + std::to_string(gen.size()) + " phases, expected " +
                       std::to_string(m.n);
            break;
        }
        for (int i = 0; i < m.r && gens_ok; ++i) {
            for (const auto& [mono, c] : m.polynomials[i].terms()) {
                Phase total;
                for (int j = 0; j < m.n; ++j) total = total + gen[j] * mono.x[j];
                if (!total.is_zero()) {
                    gens_ok = false;
                    gens_msg = "generator " + std::to_string(k + 1) + " does not fix a monomial of W_" +
                               std::to_string(i + 1) + " (phase " + total.value().str() + ")";
                    break;
                }
            }
        }
    }
    add("generators", gens_ok, gens_msg);

    std::vector<std::vector<long long>> exps;
    for (const auto& poly : m.polynomials)
        for (const auto& [mono, c] : poly.terms()) exps.emplace_back(mono.x.begin(), mono.x.end());
    const std::size_t rank = exps.empty() ? 0 : integer_rank(IntMatrix::from_rows(exps, m.n));
    add("exponent_rank", rank == static_cast<std::size_t>(m.n),
        "exponent matrix rank " + std::to_string(rank) + " (need " + std::to_string(m.n) + ")");

    const bool primes_ok = is_prime(m.options.prime) && is_prime(m.options.verify_prime) &&
                           m.options.prime != m.options.verify_prime && m.options.prime < (1ULL << 31) &&
                           m.options.verify_prime < (1ULL << 31);
    std::string primes_msg = "working prime " + std::to_string(m.options.prime) + ", verification prime " +
                             std::to_string(m.options.verify_prime);
    BigInt largest = 0;
    for (const auto& poly : m.polynomials)
        for (const auto& [mono, c] : poly.terms()) {
            largest = std::max(largest, BigInt(abs(c.num())));
            largest = std::max(largest, c.den());
        }
    const bool characteristic_ok = 2 * largest < BigInt(std::min(m.options.prime, m.options.verify_prime));
    if (!primes_ok) primes_msg += " (both must be distinct primes below 2^31)";
    if (!characteristic_ok) primes_msg += " (a prime is not larger than twice the largest coefficient)";
    add("primes", primes_ok && characteristic_ok, primes_msg);

    if (report.all_pass()) {
        const int bound = m.qs_bound();
        const auto qs = check_quasi_smooth(m, bound, m.options.prime);
        std::ostringstream msg;
        bool all = true;
        for (const auto& s : qs) {
            if (!s.verified) {
                all = false;
                msg << "x" << s.variable + 1 << ": no power in the singular-locus ideal up to degree " << bound << "; ";
            }
        }
        if (all) {
            msg << "verified at bound " << bound << " (powers:";
            for (const auto& s : qs) msg << " x" << s.variable + 1 << "^" << s.exponent;
            msg << ")";
            report.checks.push_back({"quasi_smooth", CheckStatus::pass, msg.str()});
        } else {
            report.checks.push_back({"quasi_smooth", CheckStatus::unverified, "unverified at bound " + std::to_string(bound) + ": " + msg.str()});
        }
    } else {
        report.checks.push_back({"quasi_smooth", CheckStatus::unverified, "not checked (model failed earlier checks)"});
    }
    return report;
}

}  // namespace lgcy
