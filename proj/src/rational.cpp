#include "equichar/rational.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace equichar {

bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

Integer as_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw std::domain_error("rational " + rational_to_string(q) + " is not an integer");
    }
    return boost::multiprecision::numerator(q);
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string rational_to_string(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (!is_integer(q)) {
        s += "/" + boost::multiprecision::denominator(q).str();
    }
    return s;
}

long mod_positive(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mod_inverse(long a, long m) {
    a = mod_positive(a, m);
    long t = 0, new_t = 1, r = m, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) {
        throw std::domain_error("mod_inverse: arguments not coprime");
    }
    return mod_positive(t, m);
}

long gcd_long(long a, long b) {
    return std::gcd(a, b);
}

long lcm_long(long a, long b) {
    return std::lcm(a, b);
}

}  // namespace equichar
