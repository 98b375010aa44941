#pragma once

/// Problem instances: weights, degrees, defining polynomials and diagonal
/// symmetry generators, with parsing and validation.

#include "lgcy/exact.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lgcy {

/// x^a p^b. Exponent vectors have the lengths n and r of the owning model
/// (or of a sector's restricted variable lists).
struct Monomial {
    std::vector<int> x;
    std::vector<int> p;

    static Monomial one(std::size_t n, std::size_t r) { return {std::vector<int>(n, 0), std::vector<int>(r, 0)}; }
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    /// Quotient; requires divides(other).
    Monomial operator/(const Monomial& o) const;
    int p_degree() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(std::size_t n, std::size_t r) : n_(n), r_(r) {}

    std::size_t num_x() const { return n_; }
    std::size_t num_p() const { return r_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * mono, dropping the term if the coefficient cancels.
    void add_term(const Monomial& mono, const Rational& c);

    Polynomial derivative_x(std::size_t j) const;
    Polynomial derivative_p(std::size_t i) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;

    /// Keeps only terms supported on the listed x-variables and re-indexes
    /// them in that order. p-exponents must be zero.
    Polynomial restrict_x(const std::vector<int>& keep) const;

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    TermMap terms_;
};

struct ModelOptions {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t verify_prime = kDefaultVerifyPrime;
    std::optional<int> qs_bound;  // defaults to 3 * max degree
    bool exact_ranks = false;     // certify ranks over Q instead of two primes
    unsigned jobs = 0;            // 0: all cores
};

struct ModelData {
    int n = 0;
    int r = 0;
    std::vector<int> weights;
    std::vector<int> degrees;
    std::vector<Polynomial> polynomials;
    std::vector<std::vector<Phase>> generators;
    ModelOptions options;

    int qs_bound() const;
};

/// Input error carrying a position. For JSON syntax errors line/column refer to
/// the document; for polynomial grammar errors `context` names the string
/// (e.g. "polynomials[1]") and column is 1-based within it.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::string context, int line, int column);
    const std::string& context() const { return context_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string context_;
    int line_;
    int column_;
};

ModelData parse_input(std::string_view text);
ModelData load_model(const std::string& path);

/// Parses one polynomial over x1..xn. `context` is used in error messages.
Polynomial parse_polynomial(std::string_view text, int n, const std::string& context = "polynomial");

enum class CheckStatus { pass, fail, unverified };
std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string message;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    const CheckResult* find(std::string_view name) const;
};

struct QuasiSmoothStatus {
    int variable = 0;     // 0-based
    bool verified = false;
    int exponent = 0;     // N with x_j^N in the ideal, when verified
    int bound = 0;
};

/// Bounded search for powers x_j^N (weighted degree N*w_j <= bound) in the
/// ideal generated by the W_i and the maximal minors of the Jacobian matrix.
std::vector<QuasiSmoothStatus> check_quasi_smooth(const ModelData& m, int bound, std::uint64_t prime);

/// Runs every structural check; quasi-smoothness runs only when the model is
/// otherwise well formed.
ValidationReport validate(const ModelData& m);

/// (sum_j a_j w_j, sum_i b_i).
std::pair<long long, long long> weighted_degree(const Monomial& mono, const ModelData& m);

/// Calls fn(exponents) for every exponent vector with sum_j e_j * weights[j] == degree,
/// in lexicographically descending order of the exponent vector.
void for_each_monomial(const std::vector<int>& weights, long long degree,
                       const std::function<void(const std::vector<int>&)>& fn);

}  // namespace lgcy
