#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropic/laurent.hpp"

namespace tropic::knots {

/// (p,q) torus knot, normalized to p, q > 0. The mirror (signs differing)
/// is identified with it.
class TorusKnotParams
{
  public:
    /// Throws std::invalid_argument unless |p|, |q| >= 2 and gcd(p, q) = 1.
    TorusKnotParams(std::int64_t p, std::int64_t q);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t pq() const noexcept { return p_ * q_; }

  private:
    std::int64_t p_, q_;
};

/// SL2 A-polynomial over (m, l): (l-1)(l m^pq + 1), times (l m^pq - 1)
/// unless p or q is 2.
FactorList a_polynomial(const TorusKnotParams& k);

/// PSL2 A-polynomial over (M, L): (L-1)(L M^pq - 1).
FactorList a_bar_polynomial(const TorusKnotParams& k);

/// Expands A(l,m) A(-l,m) factorwise, substitutes L = l^2, M = m^2, drops
/// repeated factors and compares with a_bar_polynomial.
bool verify_psl2_relation(const TorusKnotParams& k);

/// Slopes ("p/q" strings) of the boundary coordinates detected by the dual
/// of the expanded A-polynomial.
std::set<std::string> detected_slopes(const TorusKnotParams& k, int height);

/// Coprime (p, q) with 2 <= p < q <= max_q.
std::vector<std::pair<int, int>> torus_knot_corpus(int max_q = 7);

} // namespace tropic::knots
