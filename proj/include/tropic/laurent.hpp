#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tropic {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Exponents are machine words; every arithmetic step on them is checked.
using Exponent = std::int64_t;
using ExponentVector = std::vector<Exponent>;

/// Raised by parse() with the byte offset of the offending token.
class ParseError : public std::runtime_error
{
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Exponent arithmetic left the range of Exponent.
class ExponentOverflow : public std::overflow_error
{
  public:
    using std::overflow_error::overflow_error;
};

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/**
 * A Laurent polynomial with rational coefficients in an explicitly ordered
 * list of variables.
 *
 * Terms are kept in a map keyed by exponent vector (lexicographic order).
 * No stored coefficient is zero, so the zero polynomial is the empty map.
 * Two polynomials only combine when their variable lists are identical.
 */
class LaurentPolynomial
{
  public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit LaurentPolynomial(std::vector<std::string> variables);
    LaurentPolynomial(std::vector<std::string> variables, TermMap terms);

    static LaurentPolynomial constant(std::vector<std::string> variables, const Rational& c);
    static LaurentPolynomial monomial(std::vector<std::string> variables, ExponentVector exponents,
                                      const Rational& c = 1);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t num_variables() const noexcept { return variables_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    Rational coefficient(const ExponentVector& exponents) const;

    /// Index of a variable by name; throws std::out_of_range if absent.
    std::size_t variable_index(std::string_view name) const;

    bool operator==(const LaurentPolynomial&) const = default;

  private:
    std::vector<std::string> variables_;
    TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial subtract(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial negate(const LaurentPolynomial& f);
LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g);
LaurentPolynomial scale(const LaurentPolynomial& f, const Rational& c);

inline LaurentPolynomial operator+(const LaurentPolynomial& f, const LaurentPolynomial& g) { return add(f, g); }
inline LaurentPolynomial operator-(const LaurentPolynomial& f, const LaurentPolynomial& g) { return subtract(f, g); }
inline LaurentPolynomial operator-(const LaurentPolynomial& f) { return negate(f); }
inline LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) { return mul(f, g); }

/// Exponent vectors occurring with nonzero coefficient, in lexicographic order.
std::vector<ExponentVector> support(const LaurentPolynomial& f);

/// Multiply by X^shift.
LaurentPolynomial shift(const LaurentPolynomial& f, const ExponentVector& shift);

/// x_i -> -x_i.
LaurentPolynomial negate_variable(const LaurentPolynomial& f, std::size_t index);

/**
 * Replace every variable x_i by a fresh variable X_i with X_i = x_i^2, i.e.
 * halve all exponents. Throws std::domain_error if any exponent is odd.
 */
LaurentPolynomial substitute_square(const LaurentPolynomial& f, std::vector<std::string> new_variables);

/// Multiply by the unique unit (+-1 times a monomial) that moves the
/// lexicographically least support point to the origin with a positive
/// coefficient there. Zero maps to zero.
LaurentPolynomial unit_normal(const LaurentPolynomial& f);

/**
 * Parse text in the grammar
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := INT ['/' INT] | VAR ['^' SINT] | '(' expr ')'
 *   SINT   := ['-'] INT
 *
 * over the given variable order. Whitespace is ignored.
 */
LaurentPolynomial parse(std::string_view text, const std::vector<std::string>& variables);

/// Render in graded-lexicographic order (highest total degree first). The
/// output is accepted by parse() and parses back to the same polynomial.
std::string render(const LaurentPolynomial& f);

/// A polynomial paired with a positive multiplicity.
struct Factor
{
    LaurentPolynomial polynomial;
    unsigned multiplicity = 1;

    bool operator==(const Factor&) const = default;
};

/**
 * Product of factors, each stored in unit-normal form. Adding a factor that
 * equals an existing one up to a unit raises that factor's multiplicity.
 */
class FactorList
{
  public:
    explicit FactorList(std::vector<std::string> variables);

    void add(const LaurentPolynomial& f, unsigned multiplicity = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }

    /// Same factors with every multiplicity set to one.
    FactorList squarefree() const;

    /// Expanded product (the empty list expands to 1).
    LaurentPolynomial expand() const;

    /// Equality of the factor multisets, ignoring order.
    bool same_factors(const FactorList& other) const;

  private:
    std::vector<std::string> variables_;
    std::vector<Factor> factors_;
};

} // namespace tropic
