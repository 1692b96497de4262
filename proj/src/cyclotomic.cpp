#include "equichar/cyclotomic.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace equichar {

namespace {

using Poly = std::vector<Rational>;  // index = degree

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// Euclidean division; returns quotient, leaves remainder in a.
Poly poly_divmod(Poly& a, const Poly& b) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= c * b[i];
        }
        trim(a);
    }
    return q;
}

struct PhiCache {
    std::mutex mtx;
    std::unordered_map<long, std::vector<Integer>> polys;
};

PhiCache& phi_cache() {
    static PhiCache cache;
    return cache;
}

std::vector<Integer> compute_cyclotomic(long m,
                                        std::unordered_map<long, std::vector<Integer>>& memo);

const std::vector<Integer>& cyclotomic_locked(long m,
                                              std::unordered_map<long, std::vector<Integer>>& memo) {
    auto it = memo.find(m);
    if (it == memo.end()) {
        it = memo.emplace(m, compute_cyclotomic(m, memo)).first;
    }
    return it->second;
}

std::vector<Integer> compute_cyclotomic(long m,
                                        std::unordered_map<long, std::vector<Integer>>& memo) {
    if (m == 1) return {Integer(-1), Integer(1)};  // x - 1
    // (x^m - 1) / prod_{d | m, d < m} Phi_d, exact integer polynomial division.
    Poly num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& phi_d = cyclotomic_locked(d, memo);
        Poly div(phi_d.size());
        for (size_t i = 0; i < phi_d.size(); ++i) div[i] = Rational(phi_d[i]);
        Poly rem = num;
        Poly q = poly_divmod(rem, div);
        if (!rem.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
        num = q;
    }
    std::vector<Integer> out(num.size());
    for (size_t i = 0; i < num.size(); ++i) out[i] = as_integer(num[i]);
    return out;
}

Poly phi_as_poly(long m) {
    const auto& c = cyclotomic_polynomial(m);
    Poly p(c.size());
    for (size_t i = 0; i < c.size(); ++i) p[i] = Rational(c[i]);
    return p;
}

// Reduce an arbitrary polynomial in zeta_m modulo Phi_m.
Poly reduce_mod_phi(Poly p, long m) {
    Poly phi = phi_as_poly(m);
    poly_divmod(p, phi);
    return p;
}

}  // namespace

long euler_phi(long m) {
    if (m < 1) throw std::domain_error("euler_phi: order must be positive");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(long m) {
    if (m < 1) throw std::domain_error("cyclotomic_polynomial: order must be positive");
    auto& cache = phi_cache();
    std::lock_guard<std::mutex> lock(cache.mtx);
    return cyclotomic_locked(m, cache.polys);
}

Cyclotomic::Cyclotomic(const Rational& q) : order_(1) {
    if (q != 0) coeffs_[0] = q;
}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> dense) : order_(order) {
    for (size_t i = 0; i < dense.size(); ++i) {
        if (dense[i] != 0) coeffs_[static_cast<long>(i)] = std::move(dense[i]);
    }
}

std::vector<Rational> Cyclotomic::dense() const {
    std::vector<Rational> d(static_cast<size_t>(euler_phi(order_)), Rational(0));
    for (const auto& [e, c] : coeffs_) d[static_cast<size_t>(e)] = c;
    return d;
}

Cyclotomic Cyclotomic::root_of_unity(long m, long k) {
    if (m < 1) throw std::domain_error("root_of_unity: order must be positive");
    k = mod_positive(k, m);
    Poly p(static_cast<size_t>(k) + 1, Rational(0));
    p[static_cast<size_t>(k)] = 1;
    return Cyclotomic(m, reduce_mod_phi(std::move(p), m));
}

bool Cyclotomic::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) {
        throw std::domain_error("cyclotomic value " + str() + " is not rational");
    }
    return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::raised_to_order(long target) const {
    if (target % order_ != 0) {
        throw std::domain_error("raised_to_order: current order must divide target");
    }
    if (target == order_) return *this;
    long stretch = target / order_;
    Poly p;
    for (const auto& [e, c] : coeffs_) {
        size_t idx = static_cast<size_t>(e * stretch);
        if (p.size() <= idx) p.resize(idx + 1, Rational(0));
        p[idx] = c;
    }
    return Cyclotomic(target, reduce_mod_phi(std::move(p), target));
}

Cyclotomic Cyclotomic::galois(long k) const {
    long m = order_;
    k = mod_positive(k, m);
    if (gcd_long(k == 0 ? m : k, m) != 1) {
        throw std::domain_error("galois: exponent not coprime to order " + std::to_string(m));
    }
    Poly p;
    for (const auto& [e, c] : coeffs_) {
        size_t idx = static_cast<size_t>(mod_positive(e * k, m));
        if (p.size() <= idx) p.resize(idx + 1, Rational(0));
        p[idx] += c;
    }
    return Cyclotomic(m, reduce_mod_phi(std::move(p), m));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r;
    r.order_ = order_;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm_long(a.order_, b.order_);
    Cyclotomic x = a.raised_to_order(m);
    Cyclotomic y = b.raised_to_order(m);
    for (const auto& [e, c] : y.coeffs_) {
        auto it = x.coeffs_.find(e);
        if (it == x.coeffs_.end()) {
            x.coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) x.coeffs_.erase(it);
        }
    }
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm_long(a.order_, b.order_);
    Poly pa = a.raised_to_order(m).dense();
    Poly pb = b.raised_to_order(m).dense();
    trim(pa);
    trim(pb);
    return Cyclotomic(m, reduce_mod_phi(poly_mul(pa, pb), m));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    // Extended Euclid of the representing polynomial with Phi_m. Phi_m is
    // irreducible, so the gcd is a nonzero constant.
    long m = order_;
    Poly r0 = phi_as_poly(m);
    Poly r1 = dense();
    trim(r1);
    Poly s0 = {};            // coefficient of *this in r0
    Poly s1 = {Rational(1)}; // coefficient of *this in r1
    while (r1.size() > 1) {
        Poly rem = r0;
        Poly q = poly_divmod(rem, r1);
        Poly s2_sub = poly_mul(q, s1);
        Poly s2 = s0;
        if (s2.size() < s2_sub.size()) s2.resize(s2_sub.size(), Rational(0));
        for (size_t i = 0; i < s2_sub.size(); ++i) s2[i] -= s2_sub[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: gcd degenerated");
    Rational g = r1[0];
    for (auto& c : s1) c /= g;
    return Cyclotomic(m, reduce_mod_phi(std::move(s1), m));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    long m = lcm_long(a.order_, b.order_);
    return a.raised_to_order(m) * b.raised_to_order(m).inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
    if (order_ == other.order_) return coeffs_ == other.coeffs_;
    long m = lcm_long(order_, other.order_);
    return raised_to_order(m).coeffs_ == other.raised_to_order(m).coeffs_;
}

namespace {

struct LiteralParser {
    const std::string& s;
    size_t pos = 0;

    explicit LiteralParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bad cyclotomic literal '" + s + "' at position " +
                                    std::to_string(pos) + ": " + why);
    }

    long parse_long() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Rational parse_rational_token() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected rational");
        std::string num = s.substr(start, pos - start);
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            return parse_rational(num + "/" + s.substr(dstart, pos - dstart));
        }
        return parse_rational(num);
    }

    // 'z(' m ')' ['^' k]
    Cyclotomic parse_zeta() {
        ++pos;  // 'z'
        if (!eat('(')) fail("expected '(' after z");
        long m = parse_long();
        if (m < 1) fail("root-of-unity order must be positive");
        if (!eat(')')) fail("expected ')'");
        long k = 1;
        if (eat('^')) k = parse_long();
        return Cyclotomic::root_of_unity(m, k);
    }

    Cyclotomic parse_term() {
        skip_ws();
        // sign attached directly to a z-term, e.g. "-z(8)^3"
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            bool minus = s[pos] == '-';
            size_t look = pos + 1;
            while (look < s.size() && std::isspace(static_cast<unsigned char>(s[look]))) ++look;
            if (look < s.size() && s[look] == 'z') {
                pos = look;
                Cyclotomic v = parse_zeta();
                return minus ? -v : v;
            }
        }
        if (pos < s.size() && s[pos] == 'z') return parse_zeta();
        Rational coeff = parse_rational_token();
        skip_ws();
        if (eat('*')) {
            skip_ws();
            if (pos >= s.size() || s[pos] != 'z') fail("expected z(...) after '*'");
            return Cyclotomic(coeff) * parse_zeta();
        }
        return Cyclotomic(coeff);
    }

    Cyclotomic parse_expr() {
        Cyclotomic acc = parse_term();
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (s[pos] == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                fail("unexpected trailing input");
            }
        }
        return acc;
    }
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) {
    LiteralParser p(text);
    p.skip_ws();
    if (p.pos >= text.size()) throw std::invalid_argument("empty cyclotomic literal");
    return p.parse_expr();
}

std::string Cyclotomic::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << rational_to_string(mag);
        } else {
            if (mag != 1) out << rational_to_string(mag) << "*";
            out << "z(" << order_ << ")";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace equichar
