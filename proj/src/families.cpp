#include "piped/families.hpp"

#include <stdexcept>

namespace piped {

namespace {

#include "families_expanded.inc"

using P = BivariatePoly;

// Shorthand for the recurring factor shapes: quadratics a*n^2 + b*mn + c*m^2,
// linear combinations a*n + b*m, and the degree-4 cofactors of d1/d2.
P quad(long n2, long mn, long m2) {
    return P{{2, 0, m2}, {1, 1, mn}, {0, 2, n2}};
}
P lin(long n, long m) {
    return P{{1, 0, m}, {0, 1, n}};
}
P quart(long n4, long mn3, long m2n2, long m3n, long m4) {
    return P{{4, 0, m4}, {3, 1, m3n}, {2, 2, m2n2}, {1, 3, mn3}, {0, 4, n4}};
}

SignedForm form(const char* name, int fam_index, int form_index, long constant,
                std::vector<P> factors) {
    return SignedForm{name, constant, std::move(factors),
                      P(kExpandedForms[fam_index][form_index])};
}

ParamFamily make_p1() {
    const P f1 = quad(1, 0, -2);    // n^2 - 2m^2
    const P f2 = quad(1, 2, 2);     // n^2 + 2mn + 2m^2
    const P f3 = quad(1, 4, 2);     // n^2 + 4mn + 2m^2
    return ParamFamily{
        FamilyId::P1,
        {
            form("x", 0, 0, 4, {f1, f2, f3}),
            form("y", 0, 1, 3, {f1, f2, f3}),
            form("z", 0, 2, 16, {lin(0, 1), lin(1, 0), lin(1, 1), lin(1, 2), f2}),
            form("a", 0, 3, 5, {f1, f2, f3}),
            form("b", 0, 4, 4, {f2, f2, f2}),
            form("c1", 0, 5, 1, {f3, quad(1, 4, 6), quad(3, 4, 2)}),
            form("c2", 0, 6, 1, {f1, quad(1, 0, 2), quad(3, 8, 6)}),
            form("d1", 0, 7, 1, {f3, quart(5, 16, 28, 32, 20)}),
            form("d2", 0, 8, 1, {f1, quart(5, 24, 52, 48, 20)}),
        },
    };
}

ParamFamily make_p2() {
    const P f1 = quad(1, -4, -4);   // n^2 - 4mn - 4m^2
    const P f2 = quad(5, 8, 4);     // 5n^2 + 8mn + 4m^2
    const P f3 = quad(7, 12, 4);    // 7n^2 + 12mn + 4m^2
    return ParamFamily{
        FamilyId::P2,
        {
            form("x", 1, 0, 4, {f1, f2, f3}),
            form("y", 1, 1, 3, {f1, f2, f3}),
            form("z", 1, 2, 32, {lin(1, 0), lin(1, 1), lin(1, 2), lin(3, 2), f2}),
            form("a", 1, 3, 5, {f1, f2, f3}),
            form("b", 1, 4, 4, {f2, f2, f2}),
            form("c1", 1, 5, 1, {f3, quad(9, 20, 12), quad(11, 12, 4)}),
            form("c2", 1, 6, 1, {f1, quad(3, 4, 4), quad(17, 28, 12)}),
            form("d1", 1, 7, 1, {f3, quart(101, 312, 424, 288, 80)}),
            form("d2", 1, 8, 1, {f1, quart(149, 488, 616, 352, 80)}),
        },
    };
}

ParamFamily make_p3() {
    const P f1 = quad(7, -8, -16);  // 7n^2 - 8mn - 16m^2
    const P f2 = quad(13, 24, 16);  // 13n^2 + 24mn + 16m^2
    const P f3 = quad(17, 40, 16);  // 17n^2 + 40mn + 16m^2
    return ParamFamily{
        FamilyId::P3,
        {
            form("x", 2, 0, 4, {f1, f2, f3}),
            form("y", 2, 1, 3, {f1, f2, f3}),
            form("z", 2, 2, 32, {lin(1, 0), lin(1, 4), lin(3, 4), lin(5, 4), f2}),
            form("a", 2, 3, 5, {f1, f2, f3}),
            form("b", 2, 4, 4, {f2, f2, f2}),
            form("c1", 2, 5, 1, {f3, quad(19, 56, 48), quad(33, 40, 16)}),
            form("c2", 2, 6, 1, {f1, quad(9, 8, 16), quad(43, 88, 48)}),
            form("d1", 2, 7, 1, {f3, quart(725, 2384, 3808, 3328, 1280)}),
            form("d2", 2, 8, 1, {f1, quart(965, 3856, 6112, 4352, 1280)}),
        },
    };
}

ParamFamily make_p4() {
    const P f1 = quad(7, -12, -18);  // 7n^2 - 12mn - 18m^2
    const P f2 = quad(17, 30, 18);   // 17n^2 + 30mn + 18m^2
    const P f3 = quad(23, 48, 18);   // 23n^2 + 48mn + 18m^2
    return ParamFamily{
        FamilyId::P4,
        {
            form("x", 3, 0, 4, {f1, f2, f3}),
            form("y", 3, 1, 3, {f1, f2, f3}),
            form("z", 3, 2, 48, {lin(1, 0), lin(1, 3), lin(4, 3), lin(5, 6), f2}),
            form("a", 3, 3, 5, {f1, f2, f3}),
            form("b", 3, 4, 4, {f2, f2, f2}),
            form("c1", 3, 5, 9, {quad(3, 8, 6), f3, quad(41, 48, 18)}),
            form("c2", 3, 6, 3, {f1, quad(11, 12, 18), quad(19, 36, 18)}),
            form("d1", 3, 7, 1, {f3, quart(1205, 3912, 5940, 4752, 1620)}),
            form("d2", 3, 8, 1, {f1, quart(1685, 6288, 9180, 6048, 1620)}),
        },
    };
}

}  // namespace

std::string to_string(FamilyId id) {
    switch (id) {
        case FamilyId::P1: return "P1";
        case FamilyId::P2: return "P2";
        case FamilyId::P3: return "P3";
        case FamilyId::P4: return "P4";
    }
    return "?";
}

FamilyId family_from_string(const std::string& name) {
    if (name == "P1") return FamilyId::P1;
    if (name == "P2") return FamilyId::P2;
    if (name == "P3") return FamilyId::P3;
    if (name == "P4") return FamilyId::P4;
    throw std::invalid_argument("unknown family: " + name);
}

BivariatePoly SignedForm::product() const {
    BivariatePoly out = BivariatePoly::constant(constant);
    for (const BivariatePoly& f : factors) out = out * f;
    return out;
}

const ParamFamily& family(FamilyId id) {
    static const ParamFamily p1 = make_p1();
    static const ParamFamily p2 = make_p2();
    static const ParamFamily p3 = make_p3();
    static const ParamFamily p4 = make_p4();
    switch (id) {
        case FamilyId::P1: return p1;
        case FamilyId::P2: return p2;
        case FamilyId::P3: return p3;
        case FamilyId::P4: return p4;
    }
    throw std::invalid_argument("unknown family id");
}

MonoclinicPiped evaluate(FamilyId id, const BigInt& m, const BigInt& n) {
    if (m == 0 && n == 0) throw std::invalid_argument("degenerate parameter point");
    const ParamFamily& fam = family(id);
    std::array<BigInt, 9> vals;
    for (size_t i = 0; i < 9; ++i) {
        const SignedForm& f = fam.forms[i];
        BigInt v = f.constant;
        for (const BivariatePoly& factor : f.factors) v *= factor.eval(m, n);
        vals[i] = abs(v);
    }
    return MonoclinicPiped{vals[0], vals[1], vals[2], vals[3], vals[4],
                           vals[5], vals[6], vals[7], vals[8]};
}

IdentityReport verify_identities(const ParamFamily& fam) {
    auto sq = [](const BivariatePoly& p) { return p * p; };
    const BivariatePoly x = fam.x().expanded, y = fam.y().expanded, z = fam.z().expanded;
    const BivariatePoly a = fam.a().expanded, b = fam.b().expanded;
    const BivariatePoly c1 = fam.c1().expanded, c2 = fam.c2().expanded;
    const BivariatePoly d1 = fam.d1().expanded, d2 = fam.d2().expanded;
    std::array<BivariatePoly, 7> residuals = {
        sq(x) + sq(y) - sq(a),
        sq(x) + sq(z) - sq(b),
        sq(x) + sq(c1) - sq(d1),
        sq(x) + sq(c2) - sq(d2),
        sq(y) * 2 + sq(z) * 2 - sq(c1) - sq(c2),
        sq(y) * 2 + sq(b) * 2 - sq(d1) - sq(d2),
        sq(a) * 2 + sq(z) * 2 - sq(d1) - sq(d2),
    };
    IdentityReport report;
    report.id = fam.id;
    for (size_t i = 0; i < 7; ++i) {
        report.passes[i] = residuals[i].is_zero();
        report.residuals[i] = std::move(residuals[i]);
    }
    return report;
}

IdentityReport verify_identities(FamilyId id) { return verify_identities(family(id)); }

bool ratio_345_check(const ParamFamily& fam) {
    const BivariatePoly& x = fam.x().expanded;
    return x * 3 == fam.y().expanded * 4 && fam.a().expanded * 4 == x * 5;
}

bool ratio_345_check(FamilyId id) { return ratio_345_check(family(id)); }

}  // namespace piped
