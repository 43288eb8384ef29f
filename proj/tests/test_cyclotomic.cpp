#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "gbl/cyclotomic.hpp"
#include "gbl/error.hpp"

using gbl::Cyclotomic;
using gbl::Rational;

namespace {

// Independent float evaluation: sum c_j exp(2*pi*i*j/M) / sqrt(M)^k.
std::complex<double> eval_float(const Cyclotomic& x) {
    std::complex<double> acc{0.0, 0.0};
    const double two_pi = 2.0 * std::acos(-1.0);
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        double c = gbl::to_double(x.coeffs()[j]);
        double ang = two_pi * static_cast<double>(j) / x.order();
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc / std::pow(std::sqrt(static_cast<double>(x.order())), x.sqrt_power());
}

Cyclotomic random_value(std::mt19937_64& rng, int order, bool allow_sqrt) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    for (auto& q : c) q = Rational(num(rng), den(rng));
    int k = allow_sqrt && (rng() & 1) ? 1 : 0;
    return Cyclotomic::make(order, std::move(c), k);
}

}  // namespace

TEST_CASE("primitive root identities") {
    auto w = Cyclotomic::root_power(3, 1);
    auto w2 = Cyclotomic::root_power(3, 2);
    CHECK(Cyclotomic::one(3) + w + w2 == Cyclotomic::zero(3));
    CHECK(w * w == w2);
    CHECK(w * w2 == Cyclotomic::one(3));
    CHECK(Cyclotomic::root_power(3, 3).is_one());
    CHECK(Cyclotomic::root_power(3, -1) == w2);
    CHECK(Cyclotomic::root_power(2, 1) == Cyclotomic::from_int(-1));
    CHECK(Cyclotomic::root_power(4, 1) * Cyclotomic::root_power(4, 1) ==
          Cyclotomic::from_int(-1, 4));
}

TEST_CASE("rational embedding and detection") {
    auto half = Cyclotomic::from_rational(Rational(1, 2), 6);
    CHECK(half.is_rational());
    CHECK(half.rational_value() == Rational(1, 2));
    CHECK((half + half).is_one());
    auto w = Cyclotomic::root_power(5, 1);
    CHECK_FALSE(w.is_rational());
    // w^5 = 1 collapses back to a rational.
    CHECK((w * w * w * w * w).is_rational());
}

TEST_CASE("square roots of the order") {
    SUBCASE("perfect squares absorb completely") {
        auto r4 = Cyclotomic::sqrt_order(4);
        CHECK(r4.sqrt_power() == 0);
        CHECK(r4 == Cyclotomic::from_int(2, 4));
        auto r9 = Cyclotomic::sqrt_order(9);
        CHECK(r9 == Cyclotomic::from_int(3, 9));
    }
    SUBCASE("order 3 keeps an explicit radical") {
        auto r3 = Cyclotomic::sqrt_order(3);
        CHECK(r3.sqrt_power() == 1);
        CHECK(r3 * r3 == Cyclotomic::from_int(3, 3));
        CHECK(r3 * Cyclotomic::inv_sqrt_order(3, 1) == Cyclotomic::one(3));
    }
    SUBCASE("order 5 folds via the Gauss sum") {
        auto r5 = Cyclotomic::sqrt_order(5);
        CHECK(r5.sqrt_power() == 0);  // sqrt(5) lies inside Q(zeta_5)
        CHECK(r5 * r5 == Cyclotomic::from_int(5, 5));
        // g = sum_j w^(j^2) = 1 + 2w + 2w^4 -> reduced mod Phi_5.
        std::complex<double> g = r5.to_complex();
        CHECK(std::abs(g.real() - std::sqrt(5.0)) < 1e-12);
        CHECK(std::abs(g.imag()) < 1e-12);
    }
    SUBCASE("inverse powers") {
        auto x = Cyclotomic::inv_sqrt_order(3, 2);
        CHECK(x == Cyclotomic::from_rational(Rational(1, 3), 3));
        auto y = Cyclotomic::inv_sqrt_order(3, 1);
        CHECK(y * y == Cyclotomic::from_rational(Rational(1, 3), 3));
    }
}

TEST_CASE("mismatched radicals refuse to add") {
    auto plain = Cyclotomic::one(3);
    auto radical = Cyclotomic::inv_sqrt_order(3, 1);
    CHECK_THROWS_AS(plain + radical, gbl::Error);
    try {
        auto bad = plain + radical;
        (void)bad;
    } catch (const gbl::Error& e) {
        CHECK(e.code() == "incompatible-radicals");
    }
    // Adding zero is always allowed regardless of the radical tag.
    CHECK(Cyclotomic::zero(1) + radical == radical);
    CHECK(radical + Cyclotomic::zero(3) == radical);
    CHECK(radical - radical == Cyclotomic::zero(3));
}

TEST_CASE("cross-order promotion") {
    auto a = Cyclotomic::root_power(2, 1);  // -1
    auto b = Cyclotomic::root_power(3, 1);
    auto prod = a * b;
    CHECK(prod == Cyclotomic::root_power(6, 5));  // -w_3 = w_6^5
    auto sum = Cyclotomic::one(2) + b + b * b;  // 1 + w + w^2 = 0
    CHECK(sum.is_zero());
    CHECK(b.promoted(6) == Cyclotomic::root_power(6, 2));
}

TEST_CASE("field inverse") {
    std::mt19937_64 rng(0xC0FFEEuLL);
    for (int order : {1, 2, 3, 4, 5, 6, 8, 12}) {
        for (int rep = 0; rep < 20; ++rep) {
            auto x = random_value(rng, order, order == 3);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == Cyclotomic::one(order));
        }
    }
    CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), gbl::Error);
    // Division routes through the same path.
    auto w = Cyclotomic::root_power(3, 1);
    CHECK(Cyclotomic::one(3) / w == w.conj());
}

TEST_CASE("conjugation") {
    auto w = Cyclotomic::root_power(7, 3);
    CHECK(w.conj() == Cyclotomic::root_power(7, -3));
    CHECK((w * w.conj()).is_one());
    auto r3 = Cyclotomic::sqrt_order(3);
    CHECK(r3.conj() == r3);  // sqrt(3) is real
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 25; ++rep) {
        auto x = random_value(rng, 12, false);
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("string round trip") {
    std::mt19937_64 rng(0xABCDuLL);
    for (int order : {1, 2, 3, 4, 5, 6, 9, 12}) {
        for (int rep = 0; rep < 40; ++rep) {
            auto x = random_value(rng, order, order % 4 == 3);
            auto y = Cyclotomic::parse(x.str());
            CHECK(x == y);
            CHECK(x.str() == y.str());
        }
    }
    // Parsing canonicalizes: -2w^2 folds to 2 + 2w below the top degree.
    auto v = Cyclotomic::parse("cyc(3;1;1/3,0,-2)");
    CHECK(v.order() == 3);
    CHECK(v.sqrt_power() == 1);
    CHECK(v.coeffs()[0] == Rational(7, 3));
    CHECK(v.coeffs()[1] == Rational(2));
    CHECK(v.coeffs()[2] == Rational(0));
    CHECK_THROWS_AS(Cyclotomic::parse("cyc(3;1/3)"), gbl::Error);
    CHECK_THROWS_AS(Cyclotomic::parse("nonsense"), gbl::Error);
}

TEST_CASE("float agreement") {
    std::mt19937_64 rng(2024);
    for (int order : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
        for (int rep = 0; rep < 30; ++rep) {
            auto x = random_value(rng, order, order % 4 == 3);
            auto y = random_value(rng, order, order % 4 == 3);
            auto direct = (x * y).to_complex();
            auto indirect = eval_float(x) * eval_float(y);
            CHECK(std::abs(direct - indirect) < 1e-12);
            CHECK(std::abs(x.to_complex() - eval_float(x)) < 1e-13);
        }
    }
}

TEST_CASE("canonical reduction collapses high powers") {
    // Both sides below are constructed differently but must compare equal
    // and print identically.
    std::vector<Rational> raw(6, Rational(0));
    raw[5] = Rational(1);
    auto via_make = Cyclotomic::make(6, raw, 0);
    auto via_root = Cyclotomic::root_power(6, 5);
    CHECK(via_make == via_root);
    CHECK(via_make.str() == via_root.str());
    // 1 + w^3 = 0 at order 6 (w^3 = -1).
    auto z = Cyclotomic::one(6) + Cyclotomic::root_power(6, 3);
    CHECK(z.is_zero());
    CHECK(z.sqrt_power() == 0);
}

TEST_CASE("pretty printer stays consistent with the value") {
    CHECK(Cyclotomic::zero(3).pretty() == "0");
    CHECK(Cyclotomic::one(5).pretty() == "1");
    auto w = Cyclotomic::root_power(3, 1);
    CHECK(w.pretty().find('w') != std::string::npos);
    auto r = Cyclotomic::inv_sqrt_order(3, 1);
    CHECK(r.pretty().find("sqrt3") != std::string::npos);
}

TEST_CASE("cyclotomic polynomial table") {
    // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1.
    auto& p1 = gbl::cyclotomic_polynomial(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == Rational(-1));
    auto& p2 = gbl::cyclotomic_polynomial(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == Rational(1));
    auto& p4 = gbl::cyclotomic_polynomial(4);
    REQUIRE(p4.size() == 3);
    CHECK(p4[0] == Rational(1));
    CHECK(p4[1] == Rational(0));
    auto& p6 = gbl::cyclotomic_polynomial(6);
    REQUIRE(p6.size() == 3);
    CHECK(p6[0] == Rational(1));
    CHECK(p6[1] == Rational(-1));
    auto& p12 = gbl::cyclotomic_polynomial(12);
    CHECK(p12.size() == 5);  // degree phi(12) = 4
}
