#include "tropic/knots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tropic/slopes.hpp"
#include "tropic/sphdual.hpp"

namespace tropic::knots {

namespace {

const std::vector<std::string> ml{"m", "l"};
const std::vector<std::string> ML{"M", "L"};

LaurentPolynomial binomial(const std::vector<std::string>& vars, Exponent pq, int sign)
{
    // l * m^pq + sign over (m, l), or the same shape over (M, L).
    LaurentPolynomial f = LaurentPolynomial::monomial(vars, {pq, 1});
    return add(f, LaurentPolynomial::constant(vars, sign));
}

} // namespace

TorusKnotParams::TorusKnotParams(std::int64_t p, std::int64_t q)
{
    if (p == INT64_MIN || q == INT64_MIN)
        throw std::invalid_argument("torus knot parameters out of range");
    p_ = p < 0 ? -p : p;
    q_ = q < 0 ? -q : q;
    if (p_ < 2 || q_ < 2)
        throw std::invalid_argument("torus knot needs |p|, |q| >= 2");
    if (std::gcd(p_, q_) != 1)
        throw std::invalid_argument("torus knot needs gcd(p, q) = 1");
    checked_mul(p_, q_);
}

FactorList a_polynomial(const TorusKnotParams& k)
{
    FactorList out(ml);
    out.add(binomial(ml, 0, -1));
    out.add(binomial(ml, k.pq(), 1));
    if (k.p() != 2 && k.q() != 2)
        out.add(binomial(ml, k.pq(), -1));
    return out;
}

FactorList a_bar_polynomial(const TorusKnotParams& k)
{
    FactorList out(ML);
    out.add(binomial(ML, 0, -1));
    out.add(binomial(ML, k.pq(), -1));
    return out;
}

bool verify_psl2_relation(const TorusKnotParams& k)
{
    FactorList product(ML);
    const std::size_t l = 1;
    const auto a = a_polynomial(k);
    for (const auto& f : a.factors())
    {
        auto paired = mul(f.polynomial, negate_variable(f.polynomial, l));
        product.add(substitute_square(paired, ML), f.multiplicity);
    }
    return product.squarefree().same_factors(a_bar_polynomial(k));
}

std::set<std::string> detected_slopes(const TorusKnotParams& k, int height)
{
    auto dual = sphdual::spherical_dual(a_polynomial(k).expand());
    std::set<std::string> out;
    for (const auto& c : slopes::detect_boundary_coordinates(dual, height))
        out.insert(slopes::slope_of(c));
    return out;
}

std::vector<std::pair<int, int>> torus_knot_corpus(int max_q)
{
    std::vector<std::pair<int, int>> out;
    for (int q = 3; q <= max_q; ++q)
        for (int p = 2; p < q; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tropic::knots
