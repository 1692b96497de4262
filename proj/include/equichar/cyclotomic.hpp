#pragma once

#include "equichar/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace equichar {

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial, index = degree,
// length phi(m) + 1, monic.
const std::vector<Integer>& cyclotomic_polynomial(long m);

// Exact element of Q(zeta_m), stored as a polynomial in zeta_m reduced
// modulo the m-th cyclotomic polynomial. The coefficient map holds only
// nonzero coefficients, keyed by exponent < phi(m), so equality at a fixed
// order is map equality. Mixed-order arithmetic coerces to the lcm order;
// operator== is order-independent. Values are immutable.
class Cyclotomic {
public:
    Cyclotomic() : order_(1) {}
    Cyclotomic(const Rational& q);
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

    // zeta_m ^ k (k taken mod m); m >= 1.
    static Cyclotomic root_of_unity(long m, long k);

    long order() const { return order_; }
    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    Rational to_rational() const;  // throws if not rational

    // Field automorphism zeta_m -> zeta_m^k; requires gcd(k, m) = 1.
    Cyclotomic galois(long k) const;

    // Image in Q(zeta_M); requires order() | M.
    Cyclotomic raised_to_order(long target) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic inverse() const;  // throws on zero

    bool operator==(const Cyclotomic& other) const;
    bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

    // Literal grammar: term (('+'|'-') term)* with
    // term := rational | rational '*' zpow | zpow, zpow := 'z(' m ')' ['^' k].
    static Cyclotomic parse(const std::string& text);
    std::string str() const;

private:
    Cyclotomic(long order, std::vector<Rational> dense);

    std::vector<Rational> dense() const;  // length phi(order_)

    long order_;
    std::map<long, Rational> coeffs_;
};

}  // namespace equichar
