#pragma once

#include <optional>
#include <string>
#include <vector>

#include "piped/families.hpp"
#include "piped/piped_core.hpp"
#include "piped/validity.hpp"

namespace piped {

// Provenance record for one piped, from a family scan or the brute-force
// enumeration. primitive = canonicalize(primitive_reduce(raw)).
struct CatalogEntry {
    std::string source;  // "P1".."P4" or "bruteforce"
    bool has_params = false;
    BigInt m, n;
    MonoclinicPiped raw;
    MonoclinicPiped primitive;
    BigInt content;
};

CatalogEntry make_entry(const std::string& source, const MonoclinicPiped& raw);
CatalogEntry make_entry(FamilyId id, const BigInt& m, const BigInt& n);

// Scan coprime (m, n), |m| <= height, 1 <= n <= height (n < 0 is redundant
// by the (-m,-n) symmetry), keeping classify == Valid. Entries are ordered
// by (n, m) ascending and deduplicated by primitive tuple, keeping the last
// occurrence. Output is byte-identical regardless of thread count.
std::vector<CatalogEntry> scan_family(FamilyId id, long height);
// Single-threaded reference used to cross-check the parallel kernel.
std::vector<CatalogEntry> scan_family_serial(FamilyId id, long height);

// Exhaustive enumeration over x <= x_max via divisor decomposition of x^2.
// Output ordered by x ascending, deduplicated keeping the first occurrence,
// so smaller bounds yield a prefix of larger ones.
std::vector<CatalogEntry> brute_force(long x_max);
std::vector<CatalogEntry> brute_force_serial(long x_max);

// Targeted completion for a single edge value x.
std::vector<CatalogEntry> brute_force_at(long x);

struct CoverageReport {
    struct Match {
        MonoclinicPiped primitive;
        std::string source;
        BigInt m, n;
    };
    std::vector<Match> matched;
    std::vector<MonoclinicPiped> unmatched;
};

// Match oracle entries against scan entries by exact equality of primitive
// canonical tuples. Throws std::invalid_argument if any entry is not
// primitive and canonical.
CoverageReport coverage(const std::vector<CatalogEntry>& oracle,
                        const std::vector<CatalogEntry>& scans);

}  // namespace piped
