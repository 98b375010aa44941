#include "lgcy/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lgcy {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational \"" + std::string(whole) + "\"");
    BigInt v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("non-rational value \"" + std::string(whole) + "\"");
        v = v * 10 + (c - '0');
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(trim(s.substr(slash + 1)), text);
        if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational(negative ? BigInt(-num) : num, den);
}

BigInt Rational::floor() const {
    BigInt n = num();
    BigInt d = den();
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

std::string Rational::fraction_str() const { return num().str() + "/" + den().str(); }

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Phase::Phase(const Rational& x) : value_(x - Rational(x.floor(), 1)) {}

Phase frac_part(const Rational& x) { return Phase(x); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(boost::multiprecision::abs(a), boost::multiprecision::abs(b));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::size_t integer_rank(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(rank, c) * m.at(i, j) - m.at(i, c) * m.at(rank, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(rank, c);
        ++rank;
    }
    return rank;
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t i = 0; i < input.rows(); ++i) {
        std::vector<BigInt> r(input.cols());
        for (std::size_t j = 0; j < input.cols(); ++j) r[j] = input.at(i, j);
        rows.push_back(std::move(r));
    }
    const std::size_t cols = input.cols();
    std::size_t top = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        // Euclid on column c among rows[top..] until a single nonzero remains.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                const BigInt q = rows[i][c] / rows[top][c];
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[top][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (top < rows.size() && rows[top][c] != 0) {
            if (rows[top][c] < 0)
                for (auto& v : rows[top]) v = -v;
            pivot_cols.push_back(c);
            ++top;
        }
    }
    rows.resize(top);
    for (std::size_t k = 0; k < top; ++k) {
        const std::size_t c = pivot_cols[k];
        const BigInt& h = rows[k][c];
        for (std::size_t i = 0; i < k; ++i) {
            BigInt q = rows[i][c] / h;
            if (rows[i][c] - q * h < 0) q -= 1;
            if (q != 0)
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[k][j];
        }
    }
    IntMatrix out(top, cols);
    for (std::size_t i = 0; i < top; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = rows[i][j];
    return out;
}

LatticeReducer::LatticeReducer(const std::vector<std::vector<long long>>& generators, std::size_t dim)
    : dim_(dim) {
    if (generators.empty()) return;
    const IntMatrix hnf = hermite_normal_form(IntMatrix::from_rows(generators, dim));
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
        Pivot p;
        p.row.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) p.row[j] = hnf.at(i, j).convert_to<long long>();
        p.col = 0;
        while (p.row[p.col] == 0) ++p.col;
        p.value = p.row[p.col];
        pivots_.push_back(std::move(p));
    }
}

std::vector<long long> LatticeReducer::reduce(std::span<const int> v) const {
    std::vector<long long> out(v.begin(), v.end());
    for (const auto& p : pivots_) {
        long long q = out[p.col] / p.value;
        if (out[p.col] - q * p.value < 0) --q;
        if (q == 0) continue;
        for (std::size_t j = p.col; j < dim_; ++j) out[j] -= q * p.row[j];
    }
    return out;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t previous_prime(std::uint64_t p) {
    do {
        --p;
    } while (p >= 2 && !is_prime(p));
    return p;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % p);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    return result;
}

std::uint64_t to_residue(const Rational& x, std::uint64_t p) {
    const BigInt bp = p;
    BigInt n = x.num() % bp;
    if (n < 0) n += bp;
    const BigInt d = x.den() % bp;
    if (d == 0) throw PrimeCollision("prime " + std::to_string(p) + " divides a coefficient denominator");
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(n.convert_to<std::uint64_t>()) * mod_inverse(d.convert_to<std::uint64_t>(), p)) %
        p);
}

std::size_t fp_rank(FpMatrix m) {
    const std::uint64_t p = m.prime();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const std::uint64_t inv = mod_inverse(m.at(rank, c), p);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv % p;
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const std::uint64_t f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) + (p - f) * m.at(rank, j)) % p;
        }
        ++rank;
    }
    return rank;
}

FpRowSpace::FpRowSpace(std::size_t cols, std::uint64_t prime) : cols_(cols), prime_(prime), pivot_row_(cols) {}

std::vector<std::uint64_t> FpRowSpace::reduce(const SparseRow& row) const {
    std::vector<std::uint64_t> v(cols_, 0);
    for (const auto& [c, x] : row) v[c] = (v[c] + x) % prime_;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0 || !pivot_row_[c]) continue;
        const auto& b = basis_[*pivot_row_[c]];
        const std::uint64_t f = prime_ - v[c];
        for (std::size_t j = c; j < cols_; ++j)
            if (b[j] != 0) v[j] = (v[j] + f * b[j]) % prime_;
    }
    return v;
}

bool FpRowSpace::insert(const SparseRow& row) {
    if (full()) return false;
    auto v = reduce(row);
    const auto lead = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (lead == v.end()) return false;
    const std::size_t c = static_cast<std::size_t>(lead - v.begin());
    const std::uint64_t inv = mod_inverse(v[c], prime_);
    for (std::size_t j = c; j < cols_; ++j) v[j] = v[j] * inv % prime_;
    pivot_row_[c] = basis_.size();
    basis_.push_back(std::move(v));
    ++rank_;
    return true;
}

bool FpRowSpace::contains(const SparseRow& row) const {
    const auto v = reduce(row);
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BigInt scale = 1;
        for (const auto& x : rows[i]) scale = lcm(scale, x.den());
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j].num() * (scale / rows[i][j].den());
    }
    return integer_rank(std::move(m));
}

}  // namespace lgcy
