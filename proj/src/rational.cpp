#include "tvb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tvb {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool is_integer_literal(const std::string& s) {
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(const std::string& s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("bad rational: " + s);
    std::string t = s;
    bool negative = t[0] == '-';
    if (t[0] == '+' || t[0] == '-') t = t.substr(1);
    t.erase(0, std::min(t.find_first_not_of('0'), t.size() - 1));
    BigInt v(t);
    return negative ? -v : v;
}

Rational parse_decimal(const std::string& s) {
    std::size_t epos = s.find_first_of("eE");
    std::string mantissa = s.substr(0, epos);
    long long exp10 = 0;
    if (epos != std::string::npos) {
        std::string e = s.substr(epos + 1);
        if (e.empty() || !is_integer_literal(e)) throw std::invalid_argument("bad rational: " + s);
        exp10 = std::stoll(e);
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
        negative = mantissa[0] == '-';
        mantissa = mantissa.substr(1);
    }
    std::size_t dot = mantissa.find('.');
    std::string digits = dot == std::string::npos
                             ? mantissa
                             : mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    if (digits.empty()) throw std::invalid_argument("bad rational: " + s);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad rational: " + s);
    if (dot != std::string::npos) exp10 -= static_cast<long long>(mantissa.size() - dot - 1);
    // cpp_int reads a leading 0 as an octal prefix
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational r{BigInt(digits)};
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
        r *= scale;
    else
        r /= scale;
    return negative ? -r : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_integer(strip(s.substr(0, slash)));
        BigInt den = parse_integer(strip(s.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    if (s.find('.') != std::string::npos || s.find_first_of("eE") != std::string::npos)
        return parse_decimal(s);
    return Rational(parse_integer(s));
}

std::string format_rational(const Rational& value) {
    std::string num = boost::multiprecision::numerator(value).str();
    BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num;
    return num + "/" + den.str();
}

double rational_to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace tvb
