#pragma once

#include <array>
#include <utility>

#include "piped/exactmath.hpp"

namespace piped {

// The nine lengths of a bi-orthogonal monoclinic parallelepiped: edges
// x, y, z; rectangle-face diagonals a (over x,y) and b (over x,z);
// parallelogram-face diagonals c1, c2; body diagonals d1, d2. The pairing
// (c1,d1) / (c2,d2) is semantic: swapping c1 and c2 must swap d1 and d2.
struct MonoclinicPiped {
    BigInt x, y, z, a, b, c1, c2, d1, d2;

    bool operator==(const MonoclinicPiped&) const = default;

    std::array<const BigInt*, 9> fields() const {
        return {&x, &y, &z, &a, &b, &c1, &c2, &d1, &d2};
    }
};

// One flag per defining equation, in order:
//   (1) x^2 + y^2 = a^2          (2) x^2 + z^2 = b^2
//   (3) x^2 + c1^2 = d1^2        (4) x^2 + c2^2 = d2^2
//   (5) 2y^2 + 2z^2 = c1^2 + c2^2
//   (6) 2y^2 + 2b^2 = d1^2 + d2^2
//   (7) 2a^2 + 2z^2 = d1^2 + d2^2
using EquationReport = std::array<bool, 7>;

EquationReport verify_equations(const MonoclinicPiped& p);
bool all_equations_pass(const EquationReport& report);

// True iff the solid actually exists: all seven equations hold, the edges
// are strictly positive, the (y,z) cross-section is a genuine parallelogram
// ((y-z)^2 < c1^2 < (y+z)^2), and it is not a rectangle (c1 != c2).
bool is_realizable(const MonoclinicPiped& p);

// Divide out the content. Throws std::domain_error on the all-zero tuple.
std::pair<MonoclinicPiped, BigInt> primitive_reduce(const MonoclinicPiped& p);

// Apply the two symmetry swaps so that y <= z and c1 <= c2; ties are left
// alone. The resulting tuple satisfies the same EquationReport.
MonoclinicPiped canonicalize(const MonoclinicPiped& p);

}  // namespace piped
