#pragma once

/// Exact arithmetic substrate: rationals, phases in Q/Z, integer lattices and
/// linear algebra over prime fields.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgcy {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "a", "-a", "a/b", "-a/b" (optional leading '+').
    static Rational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    BigInt floor() const;
    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    /// "3" for integers, "1/5" otherwise.
    std::string str() const;
    /// Always "num/den", e.g. "3/1".
    std::string fraction_str() const;
    double to_double() const { return value_.convert_to<double>(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    boost::multiprecision::cpp_rational value_;
};

/// An element of Q/Z, stored as its representative in [0, 1).
class Phase {
public:
    Phase() = default;
    explicit Phase(const Rational& x);

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    Phase operator+(const Phase& o) const { return Phase(value_ + o.value_); }
    Phase operator-(const Phase& o) const { return Phase(value_ - o.value_); }
    Phase operator-() const { return Phase(-value_); }
    Phase operator*(long long k) const { return Phase(value_ * Rational(k)); }

    friend bool operator==(const Phase&, const Phase&) = default;
    friend std::strong_ordering operator<=>(const Phase& a, const Phase& b) {
        return a.value_ <=> b.value_;
    }

private:
    Rational value_;
};

/// x - floor(x), as a phase.
Phase frac_part(const Rational& x);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t integer_rank(IntMatrix m);

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
/// Result has only nonzero rows, strictly increasing pivot columns, positive
/// pivots, and entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Canonical representatives of Z^n modulo a sublattice.
class LatticeReducer {
public:
    LatticeReducer() = default;
    LatticeReducer(const std::vector<std::vector<long long>>& generators, std::size_t dim);

    /// Two vectors reduce to the same output iff their difference lies in the lattice.
    std::vector<long long> reduce(std::span<const int> v) const;
    std::size_t dim() const { return dim_; }
    std::size_t lattice_rank() const { return pivots_.size(); }

private:
    struct Pivot {
        std::size_t col;
        long long value;
        std::vector<long long> row;
    };
    std::size_t dim_ = 0;
    std::vector<Pivot> pivots_;
};

bool is_prime(std::uint64_t p);
/// Largest prime strictly below `p`.
std::uint64_t previous_prime(std::uint64_t p);

inline constexpr std::uint64_t kDefaultPrime = 1000003;
inline constexpr std::uint64_t kDefaultVerifyPrime = 999983;

/// Thrown when the working and verification primes give different ranks.
class PrimeCollision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Residue of a rational modulo `p`. Throws if `p` divides the denominator.
std::uint64_t to_residue(const Rational& x, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t prime)
        : rows_(rows), cols_(cols), prime_(prime), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t prime() const { return prime_; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t prime_;
    std::vector<std::uint64_t> data_;
};

std::size_t fp_rank(FpMatrix m);

/// A sparse row: (column, residue) pairs with distinct columns.
using SparseRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

/// Incremental row echelon basis over F_p. Rows are inserted one at a time;
/// insertion stops paying once the basis spans every column.
class FpRowSpace {
public:
    FpRowSpace(std::size_t cols, std::uint64_t prime);

    /// Returns true if the row was independent of the current basis.
    bool insert(const SparseRow& row);
    bool contains(const SparseRow& row) const;
    std::size_t rank() const { return rank_; }
    std::size_t cols() const { return cols_; }
    bool full() const { return rank_ == cols_; }

private:
    std::vector<std::uint64_t> reduce(const SparseRow& row) const;

    std::size_t cols_;
    std::uint64_t prime_;
    std::size_t rank_ = 0;
    // pivot_row_[c] indexes basis_ for the row whose leading column is c.
    std::vector<std::optional<std::size_t>> pivot_row_;
    std::vector<std::vector<std::uint64_t>> basis_;
};

/// Rank over Q of a matrix with rational entries.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

}  // namespace lgcy
