#ifndef ORBIZETA_POLYNOMIAL_HPP
#define ORBIZETA_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "orbizeta/ff.hpp"

namespace orbizeta {

using Exponents = std::vector<unsigned>;

/// Multivariate polynomial with integer coefficients over an ordered list of
/// named variables.  Terms are kept in a map keyed by exponent tuple, so
/// there are never duplicate monomials; zero coefficients are pruned.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

    static IntPolynomial constant(std::vector<std::string> variables, const BigInt& c);
    static IntPolynomial variable(std::vector<std::string> variables, const std::string& name);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t num_vars() const { return variables_.size(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * monomial(exps); exps must have num_vars() entries.
    void add_term(const BigInt& c, const Exponents& exps);

    /// Same polynomial over a different variable list; every variable that
    /// occurs with a nonzero exponent must be present in `variables`.
    IntPolynomial rebased(const std::vector<std::string>& variables) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    IntPolynomial operator-() const;
    IntPolynomial pow(unsigned n) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Text in the grammar accepted by parse_polynomial, e.g. "x*y - z^3".
    std::string to_string() const;

private:
    void require_same_vars(const IntPolynomial& o) const;

    std::vector<std::string> variables_;
    std::map<Exponents, BigInt> terms_;
};

}  // namespace orbizeta

#endif
