#include "piped/validity.hpp"

#include <sstream>
#include <stdexcept>

namespace piped {

namespace {

// Quartic in descending coefficient order: c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0.
UnivariatePoly quartic(long c4, long c3, long c2, long c1, long c0) {
    return UnivariatePoly(c0, c1, c2, c3, c4);
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

RangeInterval interval(RangeBound lower, RangeBound upper, long wit_num, long wit_den) {
    return RangeInterval{std::move(lower), std::move(upper), make_rational(wit_num, wit_den)};
}

RangeSpec make_spec_p1() {
    RangeSpec spec{FamilyId::P1, {}};
    // 0 < m/n < r1, r2 < m/n < +inf; r2 = 1/(2 r1), decided through the
    // t = 1/(2s) companion quartic so its root sits at r2 directly.
    spec.intervals.push_back(interval(
        RangeBound::rational(0, 1),
        RangeBound::quartic_root(quartic(12, 24, 16, 4, -3), "0.28126795021", -1),
        1, 4));
    spec.intervals.push_back(interval(
        RangeBound::quartic_root(quartic(-12, 8, 16, 12, 3), "1.77766432195", -1),
        RangeBound::plus_infinity(), 2, 1));
    // r3 < m/n < -1/2, -1 < m/n < r4
    spec.intervals.push_back(interval(
        RangeBound::quartic_root(quartic(12, 56, 80, 52, 13), "-0.60976156477", 1),
        RangeBound::rational(-1, 2), -11, 20));
    spec.intervals.push_back(interval(
        RangeBound::rational(-1, 1),
        RangeBound::quartic_root(quartic(52, 104, 80, 28, 3), "-0.81999264776", 1),
        -9, 10));
    return spec;
}

RangeSpec make_spec_p2() {
    RangeSpec spec{FamilyId::P2, {}};
    spec.intervals.push_back(interval(
        RangeBound::quartic_root(quartic(48, 64, -40, -112, -53), "1.27766432195", 1),
        RangeBound::plus_infinity(), 2, 1));
    spec.intervals.push_back(interval(
        RangeBound::rational(-1, 2),
        RangeBound::quartic_root(quartic(48, 192, 280, 176, 27), "-0.21873204978", -1),
        -3, 10));
    spec.intervals.push_back(interval(
        RangeBound::rational(-3, 2),
        RangeBound::quartic_root(quartic(208, 832, 1256, 848, 213), "-1.31999264776", 1),
        -7, 5));
    return spec;
}

RangeSpec make_spec_p3() {
    RangeSpec spec{FamilyId::P3, {}};
    spec.intervals.push_back(interval(
        RangeBound::rational(0, 1),
        RangeBound::quartic_root(quartic(768, 2304, 2464, 1104, -37), "0.0312679502117", -1),
        1, 50));
    spec.intervals.push_back(interval(
        RangeBound::quartic_root(quartic(768, 256, -1120, -1328, -453), "1.52766432195", 1),
        RangeBound::plus_infinity(), 2, 1));
    spec.intervals.push_back(interval(
        RangeBound::rational(-1, 4), RangeBound::rational(0, 1), -1, 5));
    spec.intervals.push_back(interval(
        RangeBound::rational(-5, 4), RangeBound::rational(-3, 4), -1, 1));
    return spec;
}

RangeSpec make_spec_p4() {
    RangeSpec spec{FamilyId::P4, {}};
    spec.intervals.push_back(interval(
        RangeBound::quartic_root(quartic(324, 216, -432, -636, -241), "1.44433098861", 1),
        RangeBound::plus_infinity(), 2, 1));
    // The r2 radicand vanishes at +0.0520653..., the bound itself is the
    // negated value; stored with the variable reflected so the root sits at
    // the stored decimal anchor.
    spec.intervals.push_back(interval(
        RangeBound::rational(-1, 3),
        RangeBound::quartic_root(quartic(324, 1080, 1296, 660, 31), "-0.052065383121", -1),
        -1, 5));
    spec.intervals.push_back(interval(
        RangeBound::quartic_root(quartic(108, 648, 1296, 1132, 373), "-0.94309489810", 1),
        RangeBound::rational(-5, 6), -9, 10));
    spec.intervals.push_back(interval(
        RangeBound::rational(-4, 3),
        RangeBound::quartic_root(quartic(4212, 14040, 17712, 10020, 2083), "-1.15332598109", 1),
        -6, 5));
    return spec;
}

// "t strictly above this lower bound" / "t strictly below this upper bound".
// For quartic bounds, outside the certified bracket the decimal anchor
// decides; inside it the sign test does.
bool above_lower(const Rational& t, const RangeBound& b) {
    switch (b.kind) {
        case RangeBound::Kind::MinusInfinity: return true;
        case RangeBound::Kind::PlusInfinity: return false;
        case RangeBound::Kind::Rational: return t > b.value;
        case RangeBound::Kind::QuarticRoot: break;
    }
    Rational anchor = rational_from_decimal(b.approx);
    Rational eps = bound_bracket_halfwidth();
    if (t >= anchor + eps) return true;
    if (t <= anchor - eps) return false;
    return b.quartic.sign_at(t) == b.inside_sign;
}

bool below_upper(const Rational& t, const RangeBound& b) {
    switch (b.kind) {
        case RangeBound::Kind::PlusInfinity: return true;
        case RangeBound::Kind::MinusInfinity: return false;
        case RangeBound::Kind::Rational: return t < b.value;
        case RangeBound::Kind::QuarticRoot: break;
    }
    Rational anchor = rational_from_decimal(b.approx);
    Rational eps = bound_bracket_halfwidth();
    if (t <= anchor - eps) return true;
    if (t >= anchor + eps) return false;
    return b.quartic.sign_at(t) == b.inside_sign;
}

void check_quartic_bound(FamilyId id, const RangeInterval& iv, const RangeBound& b,
                         bool is_upper, SelfCheckReport& report) {
    std::ostringstream tag;
    tag << to_string(id) << " bound " << b.approx;
    Rational anchor = rational_from_decimal(b.approx);
    Rational eps = bound_bracket_halfwidth();
    Rational lo = anchor - eps;
    Rational hi = anchor + eps;
    int s_lo = b.quartic.sign_at(lo);
    int s_hi = b.quartic.sign_at(hi);
    int s_inside = is_upper ? s_lo : s_hi;
    int s_outside = is_upper ? s_hi : s_lo;
    if (s_inside != b.inside_sign || s_outside != -b.inside_sign) {
        report.ok = false;
        report.failures.push_back(tag.str() + ": stage (i) bracket sign change failed");
    }
    if (b.quartic.sign_at(iv.witness) != b.inside_sign) {
        report.ok = false;
        report.failures.push_back(tag.str() + ": stage (ii) witness sign failed");
    }
    if (s_lo != s_hi && s_lo != 0 && s_hi != 0) {
        Rational tol(BigInt(1), BigInt("10000000000"));  // 1e-10
        Rational root = bisect_root(b.quartic, lo, hi, tol);
        Rational err = abs(root - anchor);
        Rational limit(BigInt(1), BigInt("1000000000"));  // 1e-9
        report.anchors.push_back(SelfCheckAnchor{id, b.approx, root, err});
        if (err > limit) {
            report.ok = false;
            report.failures.push_back(tag.str() + ": stage (iii) bisected root disagrees with decimal");
        }
    } else {
        report.ok = false;
        report.failures.push_back(tag.str() + ": stage (iii) skipped, no bracket");
    }
}

}  // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Valid: return "Valid";
        case Classification::OutOfRange: return "OutOfRange";
        case Classification::DegenerateParameter: return "DegenerateParameter";
        case Classification::UndefinedRatio: return "UndefinedRatio";
    }
    return "?";
}

RangeBound RangeBound::rational(long num, long den) {
    RangeBound b;
    b.kind = Kind::Rational;
    b.value = make_rational(num, den);
    return b;
}

RangeBound RangeBound::quartic_root(const UnivariatePoly& q, const char* approx,
                                    int inside_sign) {
    RangeBound b;
    b.kind = Kind::QuarticRoot;
    b.quartic = q;
    b.approx = approx;
    b.inside_sign = inside_sign;
    return b;
}

RangeBound RangeBound::plus_infinity() {
    RangeBound b;
    b.kind = Kind::PlusInfinity;
    return b;
}

RangeBound RangeBound::minus_infinity() {
    RangeBound b;
    b.kind = Kind::MinusInfinity;
    return b;
}

const RangeSpec& range_spec(FamilyId id) {
    static const RangeSpec p1 = make_spec_p1();
    static const RangeSpec p2 = make_spec_p2();
    static const RangeSpec p3 = make_spec_p3();
    static const RangeSpec p4 = make_spec_p4();
    switch (id) {
        case FamilyId::P1: return p1;
        case FamilyId::P2: return p2;
        case FamilyId::P3: return p3;
        case FamilyId::P4: return p4;
    }
    throw std::invalid_argument("unknown family id");
}

Rational bound_bracket_halfwidth() {
    return Rational(1, 1000000);
}

bool contains(FamilyId id, const BigInt& m, const BigInt& n) {
    if (n == 0) throw std::invalid_argument("ratio undefined");
    Rational t(m, n);
    t.canonicalize();
    for (const RangeInterval& iv : range_spec(id).intervals) {
        if (above_lower(t, iv.lower) && below_upper(t, iv.upper)) return true;
    }
    return false;
}

Classification classify(FamilyId id, const BigInt& m, const BigInt& n) {
    if (n == 0) return Classification::UndefinedRatio;
    // A vanishing linear factor of z collapses the solid to a slab.
    for (const BivariatePoly& factor : family(id).z().factors) {
        if (factor.total_degree() == 1 && factor.eval(m, n) == 0) {
            return Classification::DegenerateParameter;
        }
    }
    return contains(id, m, n) ? Classification::Valid : Classification::OutOfRange;
}

Rational bisect_root(const UnivariatePoly& q, Rational lo, Rational hi,
                     const Rational& tol) {
    int s_lo = q.sign_at(lo);
    int s_hi = q.sign_at(hi);
    if (s_lo == 0) return lo;
    if (s_hi == 0) return hi;
    if (s_lo == s_hi) throw std::invalid_argument("bisect_root: no sign change");
    while (hi - lo >= tol) {
        Rational mid = (lo + hi) / 2;
        int s = q.sign_at(mid);
        if (s == 0) return mid;
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

SelfCheckReport self_check(const RangeSpec& spec) {
    SelfCheckReport report;
    for (const RangeInterval& iv : spec.intervals) {
        if (iv.lower.kind == RangeBound::Kind::QuarticRoot) {
            check_quartic_bound(spec.id, iv, iv.lower, /*is_upper=*/false, report);
        }
        if (iv.upper.kind == RangeBound::Kind::QuarticRoot) {
            check_quartic_bound(spec.id, iv, iv.upper, /*is_upper=*/true, report);
        }
    }
    return report;
}

SelfCheckReport self_check(FamilyId id) { return self_check(range_spec(id)); }

}  // namespace piped
