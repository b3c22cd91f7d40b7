#pragma once

// Random Laurent polynomials for property tests.

#include <random>
#include <string>
#include <vector>

#include "tropic/laurent.hpp"

namespace tropic::testing {

inline std::vector<std::string> variable_names(std::size_t m)
{
    static const char* names[] = {"x", "y", "z", "w"};
    return std::vector<std::string>(names, names + m);
}

struct RandomPolySpec
{
    std::size_t vars = 2;
    int max_terms = 6;
    int exponent_bound = 4;
    int coefficient_bound = 5;
};

/// A nonzero polynomial with between 1 and max_terms terms.
inline LaurentPolynomial random_polynomial(std::mt19937_64& rng, const RandomPolySpec& spec)
{
    std::uniform_int_distribution<int> terms(1, spec.max_terms);
    std::uniform_int_distribution<Exponent> exponent(-spec.exponent_bound, spec.exponent_bound);
    std::uniform_int_distribution<int> coefficient(1, spec.coefficient_bound);
    std::bernoulli_distribution negative(0.5);

    LaurentPolynomial::TermMap map;
    int n = terms(rng);
    while (static_cast<int>(map.size()) < n)
    {
        ExponentVector e(spec.vars);
        for (auto& x : e)
            x = exponent(rng);
        int c = coefficient(rng);
        map.emplace(std::move(e), Rational(negative(rng) ? -c : c));
    }
    return LaurentPolynomial(variable_names(spec.vars), std::move(map));
}

} // namespace tropic::testing
