#include "piped/piped_core.hpp"

#include <stdexcept>

namespace piped {

EquationReport verify_equations(const MonoclinicPiped& p) {
    BigInt x2 = p.x * p.x, y2 = p.y * p.y, z2 = p.z * p.z;
    BigInt a2 = p.a * p.a, b2 = p.b * p.b;
    BigInt c12 = p.c1 * p.c1, c22 = p.c2 * p.c2;
    BigInt d12 = p.d1 * p.d1, d22 = p.d2 * p.d2;
    return {
        x2 + y2 == a2,
        x2 + z2 == b2,
        x2 + c12 == d12,
        x2 + c22 == d22,
        2 * y2 + 2 * z2 == c12 + c22,
        2 * y2 + 2 * b2 == d12 + d22,
        2 * a2 + 2 * z2 == d12 + d22,
    };
}

bool all_equations_pass(const EquationReport& report) {
    for (bool ok : report) {
        if (!ok) return false;
    }
    return true;
}

bool is_realizable(const MonoclinicPiped& p) {
    if (!all_equations_pass(verify_equations(p))) return false;
    if (p.x <= 0 || p.y <= 0 || p.z <= 0) return false;
    BigInt diff = p.y - p.z;
    BigInt sum = p.y + p.z;
    BigInt c12 = p.c1 * p.c1;
    if (!(diff * diff < c12 && c12 < sum * sum)) return false;
    return p.c1 != p.c2;
}

std::pair<MonoclinicPiped, BigInt> primitive_reduce(const MonoclinicPiped& p) {
    std::vector<BigInt> vals;
    vals.reserve(9);
    for (const BigInt* f : p.fields()) vals.push_back(*f);
    BigInt g = gcd_many(vals);
    if (g == 0) throw std::domain_error("zero piped has no primitive form");
    MonoclinicPiped out{p.x / g, p.y / g, p.z / g, p.a / g, p.b / g,
                        p.c1 / g, p.c2 / g, p.d1 / g, p.d2 / g};
    return {out, g};
}

MonoclinicPiped canonicalize(const MonoclinicPiped& p) {
    MonoclinicPiped out = p;
    if (out.y > out.z) {
        std::swap(out.y, out.z);
        std::swap(out.a, out.b);
    }
    if (out.c1 > out.c2) {
        std::swap(out.c1, out.c2);
        std::swap(out.d1, out.d2);
    }
    return out;
}

}  // namespace piped
