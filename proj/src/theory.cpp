#include "gbl/theory.hpp"

#include <cctype>
#include <sstream>

#include "gbl/error.hpp"

namespace gbl {

AnyonLabel::AnyonLabel(int e_power, int m_power, int modulus) : n(modulus) {
    require(modulus >= 1, "invalid-modulus", "anyon modulus must be >= 1");
    a1 = ((e_power % n) + n) % n;
    a2 = ((m_power % n) + n) % n;
}

bool AnyonLabel::operator<(const AnyonLabel& o) const {
    require(n == o.n, "theory-mismatch", "comparing anyons of different moduli");
    if (a1 != o.a1) return a1 < o.a1;
    return a2 < o.a2;
}

std::string AnyonLabel::str() const {
    if (is_vacuum()) return "1";
    std::string s;
    if (a1 > 0) {
        s += "e";
        if (a1 > 1) s += std::to_string(a1);
    }
    if (a2 > 0) {
        s += "m";
        if (a2 > 1) s += std::to_string(a2);
    }
    return s;
}

AnyonLabel AnyonLabel::parse(const std::string& text, int modulus) {
    require(!text.empty(), "invalid-input", "empty anyon label");
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        int a1 = 0, a2 = 0;
        char comma = 0;
        is >> a1 >> comma >> a2;
        require(!is.fail() && comma == ',', "invalid-input", "malformed anyon pair '" + text + "'");
        return AnyonLabel(a1, a2, modulus);
    }
    if (text == "1") return AnyonLabel(0, 0, modulus);
    std::size_t pos = 0;
    int a1 = 0, a2 = 0;
    auto read_power = [&](char symbol, int& out) {
        if (pos >= text.size() || text[pos] != symbol) return;
        ++pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            out = v;
        } else {
            out = 1;
        }
    };
    read_power('e', a1);
    read_power('m', a2);
    require(pos == text.size() && (a1 > 0 || a2 > 0), "invalid-input",
            "malformed anyon label '" + text + "'");
    return AnyonLabel(a1, a2, modulus);
}

AnyonLabel fuse(const AnyonLabel& a, const AnyonLabel& b) {
    require(a.n == b.n, "theory-mismatch", "fusing anyons of different moduli");
    return AnyonLabel(a.a1 + b.a1, a.a2 + b.a2, a.n);
}

Cyclotomic TheoryData::theta(const AnyonLabel& a) const {
    require(a.n == n, "theory-mismatch", "anyon belongs to a different theory");
    return omega_power(static_cast<long>(a.a1) * a.a2);
}

Cyclotomic TheoryData::s_entry(const AnyonLabel& a, const AnyonLabel& b) const {
    require(a.n == n && b.n == n, "theory-mismatch", "anyon belongs to a different theory");
    return omega_power(-(static_cast<long>(a.a2) * b.a1 + static_cast<long>(a.a1) * b.a2));
}

Cyclotomic TheoryData::r_symbol(const AnyonLabel& a, const AnyonLabel& b) const {
    require(a.n == n && b.n == n, "theory-mismatch", "anyon belongs to a different theory");
    return omega_power(static_cast<long>(a.a2) * b.a1);
}

Cyclotomic TheoryData::monodromy(const AnyonLabel& a, const AnyonLabel& b) const {
    return r_symbol(a, b) * r_symbol(b, a);
}

Cyclotomic TheoryData::f_symbol(const AnyonLabel& a, const AnyonLabel& b, const AnyonLabel& c,
                                const AnyonLabel& d, const AnyonLabel& e, const AnyonLabel& f) const {
    FKey key{{a.index(), b.index(), c.index(), d.index(), e.index(), f.index()}};
    auto it = f_overrides.find(key);
    if (it != f_overrides.end()) return it->second;
    return Cyclotomic::one(n);
}

TheoryData build_theory(int n) {
    require(n >= 2, "invalid-modulus", "theory modulus must be >= 2, got " + std::to_string(n));
    TheoryData th;
    th.n = n;
    th.global_dimension = n;
    th.labels.reserve(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2) th.labels.emplace_back(a1, a2, n);
    int dim = n * n;
    th.s = CycMatrix(dim, dim, n);
    th.t = CycMatrix(dim, dim, n);
    for (int i = 0; i < dim; ++i) {
        const AnyonLabel& a = th.labels[static_cast<std::size_t>(i)];
        th.t.at(i, i) = th.theta(a);
        for (int j = 0; j < dim; ++j)
            th.s.at(i, j) = th.s_entry(a, th.labels[static_cast<std::size_t>(j)]);
    }
    return th;
}

ModularReport verify_modular_relations(const TheoryData& th) {
    return verify_modular_relations(th.n, th.s, th.t);
}

ModularReport verify_modular_relations(int n, const CycMatrix& s, const CycMatrix& t) {
    ModularReport rep;
    int dim = s.rows();
    Cyclotomic inv_d = Cyclotomic::from_rational(Rational(1, n), n);
    CycMatrix s_norm = s.scaled(inv_d);

    rep.s_symmetric = true;
    for (int i = 0; i < dim && rep.s_symmetric; ++i)
        for (int j = 0; j < dim; ++j)
            if (s.at(i, j) != s.at(j, i)) { rep.s_symmetric = false; break; }

    rep.s_unitary = s_norm.is_unitary();

    // (S/D)^2 must be the charge-conjugation permutation in the lex label order.
    CycMatrix s2 = s_norm * s_norm;
    rep.charge_conjugation = true;
    for (int i = 0; i < dim && rep.charge_conjugation; ++i) {
        AnyonLabel a(i / n, i % n, n);
        int dual_index = a.dual().index();
        for (int j = 0; j < dim; ++j) {
            bool want_one = (j == dual_index);
            const Cyclotomic& x = s2.at(i, j);
            if (want_one ? !x.is_one() : !x.is_zero()) { rep.charge_conjugation = false; break; }
        }
    }

    CycMatrix st = s_norm * t;
    CycMatrix lhs = st * st * st;
    rep.st_relation = s2.proportional_to(lhs, &rep.st_scalar);

    rep.vacuum_column = true;
    for (int j = 0; j < dim; ++j)
        if (!s.at(0, j).is_one()) { rep.vacuum_column = false; break; }

    return rep;
}

}  // namespace gbl
