#pragma once

#include <effint/errors.hpp>

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace effint {

using Rational = mpq_class;
using Integer = mpz_class;

/// Reduced "p/q" form; integers keep the "/1" so the format is uniform.
inline std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return PreconditionError("malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw bad();
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace effint
