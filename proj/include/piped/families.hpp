#pragma once

#include <array>
#include <string>
#include <vector>

#include "piped/exactmath.hpp"
#include "piped/piped_core.hpp"

namespace piped {

enum class FamilyId { P1, P2, P3, P4 };

constexpr std::array<FamilyId, 4> kAllFamilies = {FamilyId::P1, FamilyId::P2,
                                                  FamilyId::P3, FamilyId::P4};

std::string to_string(FamilyId id);
// Throws std::invalid_argument on anything but "P1".."P4".
FamilyId family_from_string(const std::string& name);

// One signed length formula: an integer constant times a factor list, plus
// the expanded coefficient map. The factor list is the transcription; the
// expanded map is an independently produced table, and the two are checked
// against each other in the tests.
struct SignedForm {
    const char* name;
    long constant;
    std::vector<BivariatePoly> factors;
    BivariatePoly expanded;

    // constant * product of factors, via exact polynomial multiplication.
    BivariatePoly product() const;
};

// A parametrization family: nine homogeneous degree-6 forms in (m, n), in
// field order x, y, z, a, b, c1, c2, d1, d2.
struct ParamFamily {
    FamilyId id;
    std::array<SignedForm, 9> forms;

    const SignedForm& x() const { return forms[0]; }
    const SignedForm& y() const { return forms[1]; }
    const SignedForm& z() const { return forms[2]; }
    const SignedForm& a() const { return forms[3]; }
    const SignedForm& b() const { return forms[4]; }
    const SignedForm& c1() const { return forms[5]; }
    const SignedForm& c2() const { return forms[6]; }
    const SignedForm& d1() const { return forms[7]; }
    const SignedForm& d2() const { return forms[8]; }
};

const ParamFamily& family(FamilyId id);

// |form(m, n)| for each of the nine forms. Throws std::invalid_argument at
// (0, 0); validity of the ratio m/n is a separate question (see validity).
MonoclinicPiped evaluate(FamilyId id, const BigInt& m, const BigInt& n);

struct IdentityReport {
    FamilyId id;
    std::array<bool, 7> passes;
    // Nonzero only where the corresponding equation fails.
    std::array<BivariatePoly, 7> residuals;

    bool all_pass() const {
        for (bool ok : passes) {
            if (!ok) return false;
        }
        return true;
    }
};

// Checks Eqs. (1)-(7) as polynomial identities over the expanded forms.
// Absolute values are irrelevant because every occurrence is squared.
IdentityReport verify_identities(const ParamFamily& fam);
IdentityReport verify_identities(FamilyId id);

// True iff 3x = 4y and 4a = 5x as polynomial identities, i.e. x : y : a is
// 4 : 3 : 5 throughout the family.
bool ratio_345_check(const ParamFamily& fam);
bool ratio_345_check(FamilyId id);

}  // namespace piped
