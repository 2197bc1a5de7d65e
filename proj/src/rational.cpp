#include "wassoc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wassoc {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-')
        num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string pretty_rational(const Rational& q)
{
    return q.get_str();
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Vec zero_vec(std::size_t n)
{
    return Vec(n, Rational(0));
}

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

Vec& axpy(Vec& y, const Rational& a, const Vec& x)
{
    if (a == 0)
        return y;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            y[i] += a * x[i];
    return y;
}

Vec operator+(const Vec& a, const Vec& b)
{
    Vec r = a;
    return axpy(r, Rational(1), b);
}

Vec operator-(const Vec& a, const Vec& b)
{
    Vec r = a;
    return axpy(r, Rational(-1), b);
}

Vec operator*(const Rational& s, const Vec& v)
{
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

}  // namespace wassoc
