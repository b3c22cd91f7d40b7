#include "tropic/exactgeom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tropic::exactgeom {

namespace {

std::int64_t abs_checked(std::int64_t v)
{
    if (v == INT64_MIN)
        throw std::overflow_error("row entry out of range");
    return v < 0 ? -v : v;
}

IntRow negated(const IntRow& row)
{
    IntRow out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
    {
        abs_checked(row[i]);
        out[i] = -row[i];
    }
    return out;
}

bool is_zero_row(const IntRow& row)
{
    return std::all_of(row.begin(), row.end(), [](auto v) { return v == 0; });
}

void sort_unique(std::vector<IntRow>& rows)
{
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

template <class T>
Rational dot(const std::vector<T>& a, const RationalVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += Rational(a[i]) * b[i];
    return s;
}

} // namespace

IntRow make_primitive(IntRow row)
{
    std::int64_t g = 0;
    for (auto v : row)
        g = std::gcd(g, abs_checked(v));
    if (g > 1)
        for (auto& v : row)
            v /= g;
    return row;
}

RationalVector to_rational(std::span<const std::int64_t> row)
{
    RationalVector out;
    out.reserve(row.size());
    for (auto v : row)
        out.emplace_back(v);
    return out;
}

IntRow primitive_integer_vector(const RationalVector& v)
{
    Integer lcm = 1;
    for (const auto& x : v)
        lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(x)));
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : v)
    {
        Integer n = boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, n);
        ints.push_back(n);
    }
    if (g == 0)
        throw std::invalid_argument("primitive_integer_vector: zero vector");
    IntRow out;
    for (auto& n : ints)
    {
        Integer q = n / g;
        if (q > INT64_MAX || q < -INT64_MAX)
            throw std::overflow_error("primitive vector entry exceeds 64 bits");
        out.push_back(q.convert_to<std::int64_t>());
    }
    return out;
}

// ---------------------------------------------------------------------------
// LinearSystem

LinearSystem::LinearSystem(std::size_t dim, std::vector<IntRow> equalities, std::vector<IntRow> inequalities)
    : dim_(dim)
{
    auto check = [dim](const IntRow& r) {
        if (r.size() != dim)
            throw std::invalid_argument("row length does not match ambient dimension");
    };
    for (auto& r : equalities)
    {
        check(r);
        r = make_primitive(std::move(r));
        if (is_zero_row(r))
            continue;
        auto lead = std::find_if(r.begin(), r.end(), [](auto v) { return v != 0; });
        if (*lead < 0)
            r = negated(r);
        equalities_.push_back(std::move(r));
    }
    std::vector<IntRow> ineq;
    for (auto& r : inequalities)
    {
        check(r);
        r = make_primitive(std::move(r));
        if (!is_zero_row(r))
            ineq.push_back(std::move(r));
    }
    sort_unique(ineq);
    for (const auto& r : ineq)
    {
        auto neg = negated(r);
        if (std::binary_search(ineq.begin(), ineq.end(), neg))
        {
            auto lead = std::find_if(r.begin(), r.end(), [](auto v) { return v != 0; });
            equalities_.push_back(*lead > 0 ? r : neg);
        }
        else
        {
            inequalities_.push_back(r);
        }
    }
    sort_unique(equalities_);
    sort_unique(inequalities_);
}

bool LinearSystem::satisfied_by(std::span<const std::int64_t> point) const
{
    auto dot_int = [&](const IntRow& row) {
        __int128 s = 0;
        for (std::size_t i = 0; i < dim_; ++i)
            s += static_cast<__int128>(row[i]) * point[i];
        return s;
    };
    for (const auto& r : equalities_)
        if (dot_int(r) != 0)
            return false;
    for (const auto& r : inequalities_)
        if (dot_int(r) < 0)
            return false;
    return true;
}

bool LinearSystem::satisfied_by(const RationalVector& point) const
{
    for (const auto& r : equalities_)
        if (dot(r, point) != 0)
            return false;
    for (const auto& r : inequalities_)
        if (dot(r, point) < 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact linear algebra

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col)
    {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r)
        {
            if (r == row || m[r][col] == 0)
                continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix rows, std::size_t dim)
{
    return rref(rows, dim).size();
}

RationalMatrix kernel_basis(const RationalMatrix& rows, std::size_t dim)
{
    RationalMatrix m = rows;
    auto pivots = rref(m, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    RationalMatrix basis;
    for (std::size_t free = 0; free < dim; ++free)
    {
        if (is_pivot[free])
            continue;
        RationalVector v(dim, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Phase I simplex
//
// Chvatal's dictionary form. Structural variables u, v >= 0 with x = u - v,
// auxiliary variable x0, and one slack per constraint:
//
//     slack_i = -rhs_i + row_i . (u - v) + x0 >= 0,      maximize -x0.

namespace {

struct Dictionary
{
    // basic_i = constant_i + sum_j coeff[i][j] * nonbasic_j
    std::vector<int> basic, nonbasic;
    RationalMatrix coeff;
    RationalVector constant;
    RationalVector objective; // over nonbasic
    Rational objective_constant = 0;

    void pivot(std::size_t leave, std::size_t enter)
    {
        const std::size_t cols = nonbasic.size();
        Rational inv = 1 / coeff[leave][enter];
        // Solve row `leave` for the entering variable.
        RationalVector row(cols);
        for (std::size_t j = 0; j < cols; ++j)
            row[j] = j == enter ? inv : -coeff[leave][j] * inv;
        Rational row_constant = -constant[leave] * inv;

        auto substitute = [&](RationalVector& target, Rational& target_constant) {
            Rational d = target[enter];
            if (d == 0)
                return;
            target_constant += d * row_constant;
            for (std::size_t j = 0; j < cols; ++j)
            {
                if (j == enter)
                    target[j] = d * row[j];
                else if (row[j] != 0)
                    target[j] += d * row[j];
            }
        };
        for (std::size_t i = 0; i < basic.size(); ++i)
            if (i != leave)
                substitute(coeff[i], constant[i]);
        substitute(objective, objective_constant);
        coeff[leave] = std::move(row);
        constant[leave] = std::move(row_constant);
        std::swap(basic[leave], nonbasic[enter]);
    }
};

} // namespace

std::optional<RationalVector> find_feasible(const RationalMatrix& rows, const RationalVector& rhs, std::size_t dim)
{
    if (rows.size() != rhs.size())
        throw std::invalid_argument("find_feasible: row/rhs count mismatch");
    if (std::all_of(rhs.begin(), rhs.end(), [](const Rational& h) { return h <= 0; }))
        return RationalVector(dim, Rational(0));

    const std::size_t n = 2 * dim;
    const int aux = static_cast<int>(n);
    Dictionary d;
    for (std::size_t j = 0; j <= n; ++j)
        d.nonbasic.push_back(static_cast<int>(j));
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        d.basic.push_back(static_cast<int>(n + 1 + i));
        RationalVector c(n + 1);
        for (std::size_t k = 0; k < dim; ++k)
        {
            c[k] = rows[i][k];
            c[dim + k] = -rows[i][k];
        }
        c[n] = 1;
        d.coeff.push_back(std::move(c));
        d.constant.push_back(-rhs[i]);
    }
    d.objective.assign(n + 1, Rational(0));
    d.objective[n] = -1;

    // Bring x0 in on the most violated row.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < d.constant.size(); ++i)
        if (d.constant[i] < d.constant[worst])
            worst = i;
    d.pivot(worst, n);

    for (;;)
    {
        // Bland: lowest-labelled improving nonbasic variable.
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < d.nonbasic.size(); ++j)
            if (d.objective[j] > 0 && (!enter || d.nonbasic[j] < d.nonbasic[*enter]))
                enter = j;
        if (!enter)
            break;
        std::optional<std::size_t> leave;
        Rational best;
        for (std::size_t i = 0; i < d.basic.size(); ++i)
        {
            const Rational& a = d.coeff[i][*enter];
            if (a >= 0)
                continue;
            Rational ratio = d.constant[i] / -a;
            if (!leave || ratio < best || (ratio == best && d.basic[i] < d.basic[*leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        if (!leave)
            throw std::logic_error("find_feasible: unbounded auxiliary problem");
        d.pivot(*leave, *enter);
        if (d.objective_constant == 0)
            break;
    }
    if (d.objective_constant != 0)
        return std::nullopt;

    RationalVector values(n, Rational(0));
    for (std::size_t i = 0; i < d.basic.size(); ++i)
        if (d.basic[i] < aux)
            values[static_cast<std::size_t>(d.basic[i])] = d.constant[i];
    RationalVector x(dim);
    for (std::size_t k = 0; k < dim; ++k)
        x[k] = values[k] - values[dim + k];
    return x;
}

// ---------------------------------------------------------------------------
// Cone analysis

namespace {

struct Reduced
{
    RationalMatrix basis;              // columns of the kernel of the equalities
    RationalMatrix rows;               // inequality rows in kernel coordinates
};

Reduced reduce_to_kernel(const LinearSystem& s)
{
    RationalMatrix eq;
    for (const auto& r : s.equalities())
        eq.push_back(to_rational(r));
    Reduced red;
    red.basis = kernel_basis(eq, s.dim());
    for (const auto& r : s.inequalities())
    {
        RationalVector reduced(red.basis.size());
        for (std::size_t k = 0; k < red.basis.size(); ++k)
            reduced[k] = dot(r, red.basis[k]);
        red.rows.push_back(std::move(reduced));
    }
    return red;
}

RationalVector lift(const Reduced& red, const RationalVector& t, std::size_t dim)
{
    RationalVector x(dim, Rational(0));
    for (std::size_t k = 0; k < red.basis.size(); ++k)
        if (t[k] != 0)
            for (std::size_t i = 0; i < dim; ++i)
                x[i] += t[k] * red.basis[k][i];
    return x;
}

bool all_zero(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace

ConeAnalysis analyze_cone(const LinearSystem& system)
{
    const std::size_t m = system.dim();
    const std::size_t rows = system.inequalities().size();
    ConeAnalysis out;
    out.implicit_equality.assign(rows, false);

    Reduced red = reduce_to_kernel(system);
    const std::size_t k = red.basis.size();
    if (k == 0)
    {
        out.implicit_equality.assign(rows, true);
        return out;
    }

    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i < rows; ++i)
    {
        if (all_zero(red.rows[i]))
            out.implicit_equality[i] = true;
        else
            unknown.push_back(i);
    }

    RationalVector accumulated(k, Rational(0));
    bool any_strict = false;
    while (!unknown.empty())
    {
        RationalMatrix lp_rows = red.rows;
        RationalVector rhs(rows, Rational(0));
        RationalVector target(k, Rational(0));
        for (auto i : unknown)
            for (std::size_t c = 0; c < k; ++c)
                target[c] += red.rows[i][c];
        lp_rows.push_back(std::move(target));
        rhs.push_back(1);

        auto point = find_feasible(lp_rows, rhs, k);
        if (!point)
        {
            for (auto i : unknown)
                out.implicit_equality[i] = true;
            break;
        }
        std::vector<std::size_t> still_unknown;
        for (auto i : unknown)
        {
            Rational v = 0;
            for (std::size_t c = 0; c < k; ++c)
                v += red.rows[i][c] * (*point)[c];
            if (v > 0)
                any_strict = true;
            else
                still_unknown.push_back(i);
        }
        for (std::size_t c = 0; c < k; ++c)
            accumulated[c] += (*point)[c];
        unknown = std::move(still_unknown);
    }

    RationalMatrix implicit_rows;
    for (std::size_t i = 0; i < rows; ++i)
        if (out.implicit_equality[i])
            implicit_rows.push_back(red.rows[i]);
    out.dimension = static_cast<int>(k - rank(implicit_rows, k));
    if (out.dimension == 0)
        return out;

    if (!any_strict)
    {
        // The cone is a linear subspace; any nonzero point is relatively interior.
        auto sub = kernel_basis(implicit_rows, k);
        accumulated.assign(k, Rational(0));
        for (const auto& b : sub)
            for (std::size_t c = 0; c < k; ++c)
                accumulated[c] += b[c];
    }
    out.interior_point = lift(red, accumulated, m);
    return out;
}

int cone_dimension(const LinearSystem& system)
{
    return analyze_cone(system).dimension;
}

std::optional<RationalVector> interior_point(const LinearSystem& system)
{
    return analyze_cone(system).interior_point;
}

LinearSystem intersect(const LinearSystem& a, const LinearSystem& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("intersect: ambient dimensions differ");
    auto eq = a.equalities();
    eq.insert(eq.end(), b.equalities().begin(), b.equalities().end());
    auto ineq = a.inequalities();
    ineq.insert(ineq.end(), b.inequalities().begin(), b.inequalities().end());
    return LinearSystem(a.dim(), std::move(eq), std::move(ineq));
}

LinearSystem promote_implicit_equalities(const LinearSystem& system, const ConeAnalysis& analysis)
{
    auto eq = system.equalities();
    std::vector<IntRow> ineq;
    for (std::size_t i = 0; i < system.inequalities().size(); ++i)
    {
        if (analysis.implicit_equality[i])
            eq.push_back(system.inequalities()[i]);
        else
            ineq.push_back(system.inequalities()[i]);
    }
    return LinearSystem(system.dim(), std::move(eq), std::move(ineq));
}

bool cone_contains(const LinearSystem& outer, const LinearSystem& inner)
{
    if (outer.dim() != inner.dim())
        throw std::invalid_argument("cone_contains: ambient dimensions differ");
    Reduced red = reduce_to_kernel(inner);
    const std::size_t k = red.basis.size();
    if (k == 0)
        return true;

    // inner is inside {row >= 0} iff inner and {row <= -1} is infeasible.
    auto escapes = [&](const IntRow& row, int sign) {
        RationalMatrix lp_rows = red.rows;
        RationalVector rhs(lp_rows.size(), Rational(0));
        RationalVector r(k);
        for (std::size_t c = 0; c < k; ++c)
            r[c] = -sign * dot(row, red.basis[c]);
        if (all_zero(r))
            return false;
        lp_rows.push_back(std::move(r));
        rhs.push_back(1);
        return find_feasible(lp_rows, rhs, k).has_value();
    };
    for (const auto& row : outer.equalities())
        if (escapes(row, 1) || escapes(row, -1))
            return false;
    for (const auto& row : outer.inequalities())
        if (escapes(row, 1))
            return false;
    return true;
}

} // namespace tropic::exactgeom
