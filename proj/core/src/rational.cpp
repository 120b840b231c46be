#include "covrad/rational.hpp"

#include "covrad/errors.hpp"

#include <cctype>

namespace covrad {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw UsageError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text)
{
    // Validate by hand; mpq_set_str is lenient about whitespace and bases.
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };

    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text))
            throw UsageError("malformed rational: '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw UsageError("malformed rational: '" + text + "'");
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& x)
{
    return x.get_str();
}

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

template <typename Vec>
std::string vec_to_string(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += to_string(v[i]);
    }
    out += ")";
    return out;
}

} // namespace

std::string to_string(const RatVec& v)
{
    return vec_to_string(v);
}

std::string to_string(const IntVec& v)
{
    return vec_to_string(v);
}

Integer floor_rat(const Rational& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Integer ceil_rat(const Rational& x)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Integer round_nearest(const Rational& x)
{
    // floor((2 num + den) / (2 den))
    Integer num2 = 2 * x.get_num() + x.get_den();
    Integer den2 = 2 * x.get_den();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    return q;
}

int lex_cmp(const RatVec& a, const RatVec& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

int lex_cmp(const IntVec& a, const IntVec& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

int colex_cmp(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

} // namespace covrad
