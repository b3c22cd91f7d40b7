#include "tropic/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace tropic {

Exponent checked_add(Exponent a, Exponent b)
{
    Exponent r;
    if (__builtin_add_overflow(a, b, &r))
        throw ExponentOverflow("exponent overflow in addition");
    return r;
}

Exponent checked_mul(Exponent a, Exponent b)
{
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ExponentOverflow("exponent overflow in multiplication");
    return r;
}

namespace {

void validate_variables(const std::vector<std::string>& variables)
{
    std::unordered_set<std::string> seen;
    for (const auto& v : variables)
    {
        if (v.empty())
            throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
}

void require_same_variables(const LaurentPolynomial& f, const LaurentPolynomial& g)
{
    if (f.variables() != g.variables())
        throw std::invalid_argument("polynomials are over different variable lists");
}

} // namespace

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables)
    : variables_(std::move(variables))
{
    validate_variables(variables_);
}

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables, TermMap terms)
    : variables_(std::move(variables))
{
    validate_variables(variables_);
    for (auto& [e, c] : terms)
    {
        if (e.size() != variables_.size())
            throw std::invalid_argument("exponent vector length does not match variable count");
        if (c != 0)
            terms_.emplace(e, std::move(c));
    }
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<std::string> variables, const Rational& c)
{
    ExponentVector zero(variables.size(), 0);
    return monomial(std::move(variables), std::move(zero), c);
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> variables, ExponentVector exponents,
                                              const Rational& c)
{
    TermMap t;
    t.emplace(std::move(exponents), c);
    return LaurentPolynomial(std::move(variables), std::move(t));
}

Rational LaurentPolynomial::coefficient(const ExponentVector& exponents) const
{
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t LaurentPolynomial::variable_index(std::string_view name) const
{
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end())
        throw std::out_of_range("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - variables_.begin());
}

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g)
{
    require_same_variables(f, g);
    auto terms = f.terms();
    for (const auto& [e, c] : g.terms())
    {
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted)
        {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }
    return LaurentPolynomial(f.variables(), std::move(terms));
}

LaurentPolynomial negate(const LaurentPolynomial& f)
{
    auto terms = f.terms();
    for (auto& [e, c] : terms)
        c = -c;
    return LaurentPolynomial(f.variables(), std::move(terms));
}

LaurentPolynomial subtract(const LaurentPolynomial& f, const LaurentPolynomial& g)
{
    return add(f, negate(g));
}

LaurentPolynomial scale(const LaurentPolynomial& f, const Rational& c)
{
    if (c == 0)
        return LaurentPolynomial(f.variables());
    auto terms = f.terms();
    for (auto& [e, a] : terms)
        a *= c;
    return LaurentPolynomial(f.variables(), std::move(terms));
}

LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g)
{
    require_same_variables(f, g);
    LaurentPolynomial::TermMap terms;
    const std::size_t n = f.num_variables();
    ExponentVector e(n);
    for (const auto& [ef, cf] : f.terms())
    {
        for (const auto& [eg, cg] : g.terms())
        {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = checked_add(ef[i], eg[i]);
            auto [it, inserted] = terms.emplace(e, cf * cg);
            if (!inserted)
                it->second += cf * cg;
        }
    }
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    return LaurentPolynomial(f.variables(), std::move(terms));
}

std::vector<ExponentVector> support(const LaurentPolynomial& f)
{
    std::vector<ExponentVector> s;
    s.reserve(f.num_terms());
    for (const auto& [e, c] : f.terms())
        s.push_back(e);
    return s;
}

LaurentPolynomial shift(const LaurentPolynomial& f, const ExponentVector& by)
{
    if (by.size() != f.num_variables())
        throw std::invalid_argument("shift length does not match variable count");
    LaurentPolynomial::TermMap terms;
    for (const auto& [e, c] : f.terms())
    {
        ExponentVector s(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            s[i] = checked_add(e[i], by[i]);
        terms.emplace(std::move(s), c);
    }
    return LaurentPolynomial(f.variables(), std::move(terms));
}

LaurentPolynomial negate_variable(const LaurentPolynomial& f, std::size_t index)
{
    if (index >= f.num_variables())
        throw std::out_of_range("variable index out of range");
    auto terms = f.terms();
    for (auto& [e, c] : terms)
        if (e[index] % 2 != 0)
            c = -c;
    return LaurentPolynomial(f.variables(), std::move(terms));
}

LaurentPolynomial substitute_square(const LaurentPolynomial& f, std::vector<std::string> new_variables)
{
    if (new_variables.size() != f.num_variables())
        throw std::invalid_argument("substitute_square: variable count mismatch");
    LaurentPolynomial::TermMap terms;
    for (const auto& [e, c] : f.terms())
    {
        ExponentVector half(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            if (e[i] % 2 != 0)
                throw std::domain_error("substitute_square: odd exponent of '" + f.variables()[i] + "'");
            half[i] = e[i] / 2;
        }
        terms.emplace(std::move(half), c);
    }
    return LaurentPolynomial(std::move(new_variables), std::move(terms));
}

LaurentPolynomial unit_normal(const LaurentPolynomial& f)
{
    if (f.is_zero())
        return f;
    const auto& [least, c] = *f.terms().begin();
    ExponentVector back(least.size());
    for (std::size_t i = 0; i < least.size(); ++i)
        back[i] = checked_mul(least[i], -1);
    auto g = shift(f, back);
    return c < 0 ? negate(g) : g;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser
{
  public:
    Parser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), variables_(variables) {}

    LaurentPolynomial run()
    {
        auto f = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

  private:
    std::string_view text_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what, pos_);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c)
        {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    LaurentPolynomial expr()
    {
        bool negative = accept('-');
        auto f = term();
        if (negative)
            f = negate(f);
        for (;;)
        {
            if (accept('+'))
                f = add(f, term());
            else if (accept('-'))
                f = subtract(f, term());
            else
                return f;
        }
    }

    LaurentPolynomial term()
    {
        auto f = factor();
        while (accept('*'))
            f = mul(f, factor());
        return f;
    }

    std::string_view digits()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return text_.substr(start, pos_ - start);
    }

    Exponent signed_exponent()
    {
        bool negative = accept('-');
        skip_space();
        std::size_t start = pos_;
        auto d = digits();
        Exponent value = 0;
        auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
        if (ec != std::errc() || ptr != d.data() + d.size())
        {
            pos_ = start;
            fail("exponent overflow");
        }
        return negative ? -value : value;
    }

    LaurentPolynomial factor()
    {
        char c = peek();
        if (c == '(')
        {
            ++pos_;
            auto f = expr();
            if (!accept(')'))
                fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
        {
            Rational value{Integer(std::string(digits()))};
            if (accept('/'))
            {
                std::size_t at = pos_;
                Integer den{std::string(digits())};
                if (den == 0)
                {
                    pos_ = at;
                    fail("zero denominator");
                }
                value /= Rational(den);
            }
            return LaurentPolynomial::constant(variables_, value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
        {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto it = std::find(variables_.begin(), variables_.end(), name);
            if (it == variables_.end())
            {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            ExponentVector e(variables_.size(), 0);
            e[static_cast<std::size_t>(it - variables_.begin())] = accept('^') ? signed_exponent() : 1;
            return LaurentPolynomial::monomial(variables_, std::move(e));
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

Integer total_degree(const ExponentVector& e)
{
    Integer d = 0;
    for (auto x : e)
        d += x;
    return d;
}

std::string render_rational(const Rational& r)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

} // namespace

LaurentPolynomial parse(std::string_view text, const std::vector<std::string>& variables)
{
    validate_variables(variables);
    return Parser(text, variables).run();
}

std::string render(const LaurentPolynomial& f)
{
    if (f.is_zero())
        return "0";
    std::vector<std::pair<ExponentVector, Rational>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        auto da = total_degree(a.first), db = total_degree(b.first);
        if (da != db)
            return da > db;
        return a.first > b.first;
    });

    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms)
    {
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            if (e[i] == 0)
                continue;
            if (!monomial.empty())
                monomial += '*';
            monomial += f.variables()[i];
            if (e[i] != 1)
                monomial += '^' + std::to_string(e[i]);
        }
        Rational magnitude = abs(c);
        std::string body;
        if (monomial.empty())
            body = render_rational(magnitude);
        else if (magnitude == 1)
            body = monomial;
        else
            body = render_rational(magnitude) + '*' + monomial;

        if (first)
            out += (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factor lists

FactorList::FactorList(std::vector<std::string> variables) : variables_(std::move(variables))
{
    validate_variables(variables_);
}

void FactorList::add(const LaurentPolynomial& f, unsigned multiplicity)
{
    if (f.variables() != variables_)
        throw std::invalid_argument("factor is over a different variable list");
    if (f.is_zero())
        throw std::invalid_argument("zero factor");
    if (multiplicity == 0)
        throw std::invalid_argument("factor multiplicity must be positive");
    auto normal = unit_normal(f);
    for (auto& existing : factors_)
    {
        if (existing.polynomial == normal)
        {
            existing.multiplicity += multiplicity;
            return;
        }
    }
    factors_.push_back({std::move(normal), multiplicity});
}

FactorList FactorList::squarefree() const
{
    FactorList out(variables_);
    for (const auto& f : factors_)
        out.factors_.push_back({f.polynomial, 1});
    return out;
}

LaurentPolynomial FactorList::expand() const
{
    auto product = LaurentPolynomial::constant(variables_, 1);
    for (const auto& f : factors_)
        for (unsigned k = 0; k < f.multiplicity; ++k)
            product = mul(product, f.polynomial);
    return product;
}

bool FactorList::same_factors(const FactorList& other) const
{
    if (variables_ != other.variables_ || factors_.size() != other.factors_.size())
        return false;
    auto key = [](const Factor& f) { return std::make_pair(f.polynomial.terms(), f.multiplicity); };
    std::vector<std::pair<LaurentPolynomial::TermMap, unsigned>> a, b;
    for (const auto& f : factors_)
        a.push_back(key(f));
    for (const auto& f : other.factors_)
        b.push_back(key(f));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace tropic
