#include "gbl/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gbl {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

int degree(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (p[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return Poly{Rational(0)};
    Poly out(static_cast<std::size_t>(da + db + 1), Rational(0));
    for (int i = 0; i <= da; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j <= db; ++j)
            out[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return out;
}

// in-place remainder of a modulo monic b
void poly_mod_monic(Poly& a, const Poly& b) {
    int db = degree(b);
    for (int da = degree(a); da >= db && da >= 0; da = degree(a)) {
        Rational lead = a[static_cast<std::size_t>(da)];
        int shift = da - db;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(j + shift)] -= lead * b[static_cast<std::size_t>(j)];
    }
}

// exact quotient a / b for monic b dividing a exactly
Poly poly_div_exact(Poly a, const Poly& b) {
    int db = degree(b);
    int da = degree(a);
    if (da < db) {
        require(degree(a) == -1, "invalid-input", "inexact polynomial division");
        return Poly{Rational(0)};
    }
    Poly q(static_cast<std::size_t>(da - db + 1), Rational(0));
    for (int d = da; d >= db; d = degree(a)) {
        if (d < db) break;
        Rational lead = a[static_cast<std::size_t>(d)];
        int shift = d - db;
        q[static_cast<std::size_t>(shift)] = lead;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(j + shift)] -= lead * b[static_cast<std::size_t>(j)];
    }
    require(degree(a) == -1, "invalid-input", "inexact polynomial division");
    return q;
}

// extended euclid: returns (g, u) with u*a = g (mod m), g = gcd(a, m) made monic
std::pair<Poly, Poly> poly_half_gcd(Poly a, Poly m) {
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly u0{Rational(0)}, u1{Rational(1)};
    while (degree(r1) >= 0) {
        // divide r0 by r1
        Poly r = r0;
        int d1 = degree(r1);
        Rational lead1 = r1[static_cast<std::size_t>(d1)];
        Poly q(static_cast<std::size_t>(std::max(degree(r0) - d1 + 1, 1)), Rational(0));
        for (int d = degree(r); d >= d1; d = degree(r)) {
            Rational c = r[static_cast<std::size_t>(d)] / lead1;
            int shift = d - d1;
            q[static_cast<std::size_t>(shift)] += c;
            for (int j = 0; j <= d1; ++j)
                r[static_cast<std::size_t>(j + shift)] -= c * r1[static_cast<std::size_t>(j)];
        }
        Poly u = u0;
        {
            Poly qu = poly_mul(q, u1);
            if (u.size() < qu.size()) u.resize(qu.size(), Rational(0));
            for (std::size_t i = 0; i < qu.size(); ++i) u[i] -= qu[i];
        }
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u);
    }
    int dg = degree(r0);
    require(dg >= 0, "invalid-input", "gcd of zero polynomials");
    Rational lead = r0[static_cast<std::size_t>(dg)];
    for (auto& c : r0) c /= lead;
    for (auto& c : u0) c /= lead;
    return {r0, u0};
}

bool is_perfect_square_int(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

std::map<int, Poly>& phi_cache() {
    static std::map<int, Poly> cache;
    return cache;
}
std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

const Poly& phi_poly(int order) {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto& cache = phi_cache();
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    std::function<const Poly&(int)> get = [&](int n) -> const Poly& {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        Poly f(static_cast<std::size_t>(n + 1), Rational(0));
        f[0] = Rational(-1);
        f[static_cast<std::size_t>(n)] = Rational(1);
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            f = poly_div_exact(std::move(f), get(d));
        }
        return cache.emplace(n, std::move(f)).first->second;
    };
    return get(order);
}

// Gauss sum g = sum_j w^(j^2) reduced mod Phi_M; equals sqrt(M) for M = 1 mod 4.
const Poly& gauss_sum_poly(int order) {
    static std::map<int, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    Poly g(static_cast<std::size_t>(order), Rational(0));
    for (long j = 0; j < order; ++j)
        g[static_cast<std::size_t>((j * j) % order)] += 1;
    poly_mod_monic(g, phi_poly(order));
    g.resize(static_cast<std::size_t>(order), Rational(0));
    // exactness guard: g^2 must reduce to the constant M
    Poly sq = poly_mul(g, g);
    poly_mod_monic(sq, phi_poly(order));
    bool ok = degree(sq) <= 0 && (degree(sq) == -1 ? false : sq[0] == order);
    require(ok, "invalid-input", "Gauss sum identity failed for order " + std::to_string(order));
    return cache.emplace(order, std::move(g)).first->second;
}

}  // namespace

bool exact_sqrt(const Rational& q, Rational& out) {
    if (q < 0) return false;
    Integer num_root, den_root;
    if (!is_perfect_square_int(numerator(q), num_root)) return false;
    if (!is_perfect_square_int(denominator(q), den_root)) return false;
    out = Rational(num_root, den_root);
    return true;
}

Cyclotomic::Cyclotomic(int order) : order_(order), k_(0) {
    require(order >= 1, "invalid-modulus", "cyclotomic order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(order), Rational(0));
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, int order) {
    Cyclotomic c(order);
    c.coeffs_[0] = q;
    return c;
}

Cyclotomic Cyclotomic::root_power(int order, long power) {
    Cyclotomic c(order);
    long p = ((power % order) + order) % order;
    c.coeffs_[static_cast<std::size_t>(p)] = 1;
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::inv_sqrt_order(int order, int k) {
    require(k >= 0, "invalid-input", "negative sqrt power");
    Cyclotomic c(order);
    c.coeffs_[0] = 1;
    c.k_ = k;
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::sqrt_order(int order) {
    // sqrt(M) = M / sqrt(M)
    Cyclotomic c(order);
    c.coeffs_[0] = order;
    c.k_ = 1;
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::make(int order, std::vector<Rational> coeffs, int sqrt_power) {
    require(sqrt_power >= 0, "invalid-input", "negative sqrt power");
    Cyclotomic c(order);
    require(coeffs.size() <= static_cast<std::size_t>(order), "invalid-input",
            "coefficient vector longer than order");
    std::copy(coeffs.begin(), coeffs.end(), c.coeffs_.begin());
    c.k_ = sqrt_power;
    c.canonicalize();
    return c;
}

void Cyclotomic::canonicalize() {
    poly_mod_monic(coeffs_, phi_poly(order_));
    coeffs_.resize(static_cast<std::size_t>(order_), Rational(0));
    if (is_zero()) { k_ = 0; return; }
    if (k_ >= 2) {
        Rational scale = 1;
        Rational m(order_);
        for (; k_ >= 2; k_ -= 2) scale *= m;
        for (auto& c : coeffs_) c /= scale;
    }
    if (k_ == 1) {
        Integer root;
        if (is_perfect_square_int(Integer(order_), root)) {
            Rational r(root);
            for (auto& c : coeffs_) c /= r;
            k_ = 0;
        } else if (order_ % 4 == 1) {
            // P/sqrt(M) = P*g/M with g the Gauss sum (= sqrt(M) for M = 1 mod 4)
            Poly prod = poly_mul(coeffs_, gauss_sum_poly(order_));
            poly_mod_monic(prod, phi_poly(order_));
            prod.resize(static_cast<std::size_t>(order_), Rational(0));
            Rational m(order_);
            for (auto& c : prod) c /= m;
            coeffs_ = std::move(prod);
            k_ = 0;
        }
    }
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    if (k_ != 0) return false;
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    require(is_rational(), "invalid-input", "value is not rational: " + str());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out(order_);
    out.k_ = k_;
    for (int j = 0; j < order_; ++j) {
        if (coeffs_[static_cast<std::size_t>(j)] == 0) continue;
        int p = (order_ - j) % order_;
        out.coeffs_[static_cast<std::size_t>(p)] += coeffs_[static_cast<std::size_t>(j)];
    }
    out.canonicalize();
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    require(!is_zero(), "invalid-input", "division by zero");
    auto [g, u] = poly_half_gcd(coeffs_, phi_poly(order_));
    require(degree(g) == 0, "invalid-input", "non-invertible cyclotomic element");
    poly_mod_monic(u, phi_poly(order_));
    Cyclotomic out(order_);
    u.resize(static_cast<std::size_t>(order_), Rational(0));
    out.coeffs_ = std::move(u);
    // (P / sqrt(M)^k)^-1 = P^-1 * sqrt(M)^k = P^-1 * M^k / sqrt(M)^k
    if (k_ == 1) {
        for (auto& c : out.coeffs_) c *= order_;
        out.k_ = 1;
    }
    out.canonicalize();
    return out;
}

Cyclotomic Cyclotomic::promoted(int target_order) const {
    if (target_order == order_) return *this;
    require(target_order % order_ == 0, "invalid-input",
            "cannot promote order " + std::to_string(order_) + " to " + std::to_string(target_order));
    require(k_ == 0, "incompatible-radicals",
            "cannot promote a sqrt-scaled value across cyclotomic orders");
    Cyclotomic out(target_order);
    int stride = target_order / order_;
    for (int j = 0; j < order_; ++j)
        out.coeffs_[static_cast<std::size_t>(j * stride)] = coeffs_[static_cast<std::size_t>(j)];
    out.canonicalize();
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (order_ != rhs.order_) {
        int target = lcm_int(order_, rhs.order_);
        *this = promoted(target);
        return *this += rhs.promoted(target);
    }
    Cyclotomic other = rhs;
    if (k_ != other.k_) {
        // canonical k is in {0,1}; bring the lower-k side up by sqrt(M)^2 = M
        // only when that preserves the value -- it does not, so this is a
        // genuine representation gap.
        if (is_zero()) { *this = other; return *this; }
        if (other.is_zero()) return *this;
        fail("incompatible-radicals",
             "sum of sqrt(" + std::to_string(order_) + ")-scaled and unscaled values "
             "is not representable");
    }
    for (int j = 0; j < order_; ++j)
        coeffs_[static_cast<std::size_t>(j)] += other.coeffs_[static_cast<std::size_t>(j)];
    canonicalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    return *this += -rhs;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (order_ != rhs.order_) {
        int target = lcm_int(order_, rhs.order_);
        *this = promoted(target);
        return *this *= rhs.promoted(target);
    }
    Poly prod = poly_mul(coeffs_, rhs.coeffs_);
    poly_mod_monic(prod, phi_poly(order_));
    prod.resize(static_cast<std::size_t>(order_), Rational(0));
    coeffs_ = std::move(prod);
    k_ += rhs.k_;
    canonicalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
    if (order_ != rhs.order_) {
        int target = lcm_int(order_, rhs.order_);
        *this = promoted(target);
        return *this /= rhs.promoted(target);
    }
    return *this *= rhs.inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_) {
        if (k_ != 0 || rhs.k_ != 0) return false;
        int target = lcm_int(order_, rhs.order_);
        return promoted(target) == rhs.promoted(target);
    }
    return k_ == rhs.k_ && coeffs_ == rhs.coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 6.283185307179586476925287;
    // Horner evaluation at w = exp(2*pi*i/M)
    std::complex<double> w = std::polar(1.0, tau / order_);
    for (int j = order_ - 1; j >= 0; --j)
        acc = acc * w + std::complex<double>(to_double(coeffs_[static_cast<std::size_t>(j)]), 0.0);
    if (k_ > 0) acc /= std::pow(std::sqrt(static_cast<double>(order_)), k_);
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "cyc(" << order_ << ";" << k_ << ";";
    for (int j = 0; j < order_; ++j) {
        if (j) os << ",";
        os << rational_str(coeffs_[static_cast<std::size_t>(j)]);
    }
    os << ")";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    auto bad = [&]() -> void { fail("invalid-input", "malformed cyclotomic literal '" + text + "'"); };
    if (text.size() < 8 || text.substr(0, 4) != "cyc(" || text.back() != ')') bad();
    std::string body = text.substr(4, text.size() - 5);
    std::size_t p1 = body.find(';');
    std::size_t p2 = body.find(';', p1 == std::string::npos ? 0 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) bad();
    int order = 0, k = 0;
    try {
        order = std::stoi(body.substr(0, p1));
        k = std::stoi(body.substr(p1 + 1, p2 - p1 - 1));
    } catch (const std::exception&) { bad(); }
    require(order >= 1, "invalid-input", "bad order in cyclotomic literal");
    std::vector<Rational> coeffs;
    std::string rest = body.substr(p2 + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        std::size_t comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        coeffs.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (coeffs.size() != static_cast<std::size_t>(order)) bad();
    return make(order, std::move(coeffs), k);
}

std::string Cyclotomic::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream poly;
    bool first = true;
    int terms = 0;
    for (int j = 0; j < order_; ++j) {
        const Rational& c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        ++terms;
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string sign = c < 0 ? "-" : "+";
        if (first) {
            if (c < 0) poly << "-";
            first = false;
        } else {
            poly << " " << sign << " ";
        }
        bool unit = mag == 1;
        if (j == 0) {
            poly << rational_str(mag);
        } else {
            if (!unit) poly << rational_str(mag) << "*";
            poly << "w";
            if (j > 1) poly << "^" << j;
        }
    }
    std::string body = poly.str();
    if (k_ == 0) return body;
    std::string denom = "sqrt" + std::to_string(order_) + (k_ > 1 ? "^" + std::to_string(k_) : "");
    if (terms > 1) return "(" + body + ")/" + denom;
    return body + "/" + denom;
}

const std::vector<Rational>& cyclotomic_polynomial(int order) {
    require(order >= 1, "invalid-modulus", "cyclotomic order must be >= 1");
    return phi_poly(order);
}

}  // namespace gbl
