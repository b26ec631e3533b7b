#pragma once

#include <optional>
#include <string>
#include <vector>

#include "piped/exactmath.hpp"
#include "piped/families.hpp"

namespace piped {

enum class Classification { Valid, OutOfRange, DegenerateParameter, UndefinedRatio };

std::string to_string(Classification c);

// One endpoint of an open interval of ratios m/n. Quartic-root endpoints
// carry the radicand quartic, the stored decimal approximation, and the
// expected sign of the quartic strictly inside the adjacent interval; the
// decimal anchors a +/-1e-6 bracket that self_check certifies.
struct RangeBound {
    enum class Kind { Rational, QuarticRoot, PlusInfinity, MinusInfinity };

    Kind kind = Kind::Rational;
    Rational value;          // Rational bounds only.
    UnivariatePoly quartic;  // QuarticRoot bounds only.
    std::string approx;      // Decimal string, QuarticRoot bounds only.
    int inside_sign = 0;     // Sign of quartic on the interval side of the root.

    static RangeBound rational(long num, long den);
    static RangeBound quartic_root(const UnivariatePoly& q, const char* approx,
                                   int inside_sign);
    static RangeBound plus_infinity();
    static RangeBound minus_infinity();
};

struct RangeInterval {
    RangeBound lower;
    RangeBound upper;
    Rational witness;  // A rational strictly inside, used by self_check.
};

struct RangeSpec {
    FamilyId id;
    std::vector<RangeInterval> intervals;
};

const RangeSpec& range_spec(FamilyId id);

// Exact membership of m/n in the family's open intervals. No floating point
// anywhere: rational endpoints compare exactly, quartic endpoints resolve by
// sign tests against the certified bracket. Throws std::invalid_argument
// when n = 0.
bool contains(FamilyId id, const BigInt& m, const BigInt& n);

Classification classify(FamilyId id, const BigInt& m, const BigInt& n);

// Half-width of the certified bracket around each stored decimal anchor.
Rational bound_bracket_halfwidth();

// Bisect q on [lo, hi] (sign change required) until the interval is narrower
// than tol; returns the midpoint of the final interval.
Rational bisect_root(const UnivariatePoly& q, Rational lo, Rational hi,
                     const Rational& tol);

struct SelfCheckAnchor {
    FamilyId id;
    std::string approx;     // Stored decimal anchor for the bound.
    Rational bisected;      // Root re-derived by exact bisection to 1e-10.
    Rational error;         // |bisected - approx|, exact.
};

struct SelfCheckReport {
    bool ok = true;
    std::vector<std::string> failures;  // family/bound/stage descriptions
    std::vector<SelfCheckAnchor> anchors;
};

// For every quartic bound of the spec: (i) certify a sign change across
// the +/-1e-6 bracket, oriented so the interval side carries inside_sign;
// (ii) confirm inside_sign at the interval's rational witness; (iii) bisect
// to 1e-10 and compare with the stored decimal anchor to 1e-9.
SelfCheckReport self_check(const RangeSpec& spec);
SelfCheckReport self_check(FamilyId id);

}  // namespace piped
