#include "piped/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace piped {

namespace {

std::string primitive_key(const MonoclinicPiped& p) {
    std::string key;
    for (const BigInt* f : p.fields()) {
        key += f->get_str();
        key += ':';
    }
    return key;
}

// Keep the last occurrence of each primitive tuple, preserving entry order.
std::vector<CatalogEntry> dedup_keep_last(std::vector<CatalogEntry> entries) {
    std::unordered_map<std::string, size_t> last;
    for (size_t i = 0; i < entries.size(); ++i) last[primitive_key(entries[i].primitive)] = i;
    std::vector<CatalogEntry> out;
    out.reserve(last.size());
    for (size_t i = 0; i < entries.size(); ++i) {
        if (last[primitive_key(entries[i].primitive)] == i) out.push_back(std::move(entries[i]));
    }
    return out;
}

std::vector<CatalogEntry> dedup_keep_first(std::vector<CatalogEntry> entries) {
    std::unordered_map<std::string, bool> seen;
    std::vector<CatalogEntry> out;
    for (auto& e : entries) {
        if (!seen.emplace(primitive_key(e.primitive), true).second) continue;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> scan_row(FamilyId id, long n, long height) {
    std::vector<CatalogEntry> row;
    BigInt nn(n);
    for (long m = -height; m <= height; ++m) {
        BigInt mm(m);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), nn.get_mpz_t());
        if (g != 1) continue;
        if (classify(id, mm, nn) != Classification::Valid) continue;
        row.push_back(make_entry(id, mm, nn));
    }
    return row;
}

std::vector<CatalogEntry> merge_rows(std::vector<std::vector<CatalogEntry>>& rows) {
    std::vector<CatalogEntry> all;
    for (auto& row : rows) {
        for (auto& e : row) all.push_back(std::move(e));
    }
    return all;
}

// Legs paired with x: all y > 0 with x^2 + y^2 a perfect square, found from
// factorizations x^2 = r*s, r < s, r = s (mod 2), as y = (s-r)/2.
struct Leg {
    long long len;
    long long hyp;
};

std::vector<Leg> legs_of(long long x) {
    std::vector<Leg> out;
    long long x2 = x * x;
    for (long long r = 1; r * r <= x2; ++r) {
        if (x2 % r != 0) continue;
        long long s = x2 / r;
        if (s <= r || (s - r) % 2 != 0) continue;
        out.push_back(Leg{(s - r) / 2, (s + r) / 2});
    }
    std::sort(out.begin(), out.end(), [](const Leg& a, const Leg& b) { return a.len < b.len; });
    return out;
}

std::vector<CatalogEntry> brute_force_one(long long x) {
    std::vector<CatalogEntry> out;
    const std::vector<Leg> legs = legs_of(x);
    std::map<long long, long long> hyp;
    for (const Leg& l : legs) hyp[l.len] = l.hyp;
    const BigInt bx(static_cast<long>(x));
    for (const Leg& ly : legs) {
        for (const Leg& lz : legs) {
            const long long y = ly.len, z = lz.len;
            const long long lo = std::llabs(y - z), hi = y + z;
            // c1 must itself be a leg with x (Eq. x^2 + c1^2 = d1^2).
            for (const Leg& lc : legs) {
                const long long c1 = lc.len;
                if (c1 <= lo) continue;
                if (c1 >= hi) break;
                const BigInt by(static_cast<long>(y)), bz(static_cast<long>(z)),
                    bc1(static_cast<long>(c1));
                BigInt c2sq = 2 * by * by + 2 * bz * bz - bc1 * bc1;
                if (c2sq <= 0 || mpz_perfect_square_p(c2sq.get_mpz_t()) == 0) continue;
                BigInt c2;
                mpz_sqrt(c2.get_mpz_t(), c2sq.get_mpz_t());
                if (c2 == bc1) continue;
                auto it = hyp.find(c2.get_si());
                if (it == hyp.end()) continue;
                MonoclinicPiped p{bx,
                                  BigInt(static_cast<long>(y)),
                                  BigInt(static_cast<long>(z)),
                                  BigInt(static_cast<long>(ly.hyp)),
                                  BigInt(static_cast<long>(lz.hyp)),
                                  BigInt(static_cast<long>(c1)),
                                  c2,
                                  BigInt(static_cast<long>(lc.hyp)),
                                  BigInt(static_cast<long>(it->second))};
                if (!all_equations_pass(verify_equations(p)) || !is_realizable(p)) continue;
                out.push_back(make_entry("bruteforce", p));
            }
        }
    }
    return out;
}

}  // namespace

CatalogEntry make_entry(const std::string& source, const MonoclinicPiped& raw) {
    CatalogEntry e;
    e.source = source;
    e.raw = raw;
    auto [reduced, content] = primitive_reduce(raw);
    e.primitive = canonicalize(reduced);
    e.content = content;
    return e;
}

CatalogEntry make_entry(FamilyId id, const BigInt& m, const BigInt& n) {
    CatalogEntry e = make_entry(to_string(id), evaluate(id, m, n));
    e.has_params = true;
    e.m = m;
    e.n = n;
    return e;
}

std::vector<CatalogEntry> scan_family_serial(FamilyId id, long height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    std::vector<std::vector<CatalogEntry>> rows(static_cast<size_t>(height));
    for (long n = 1; n <= height; ++n) rows[static_cast<size_t>(n - 1)] = scan_row(id, n, height);
    return dedup_keep_last(merge_rows(rows));
}

std::vector<CatalogEntry> scan_family(FamilyId id, long height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    std::vector<std::vector<CatalogEntry>> rows(static_cast<size_t>(height));
#pragma omp parallel for schedule(dynamic)
    for (long n = 1; n <= height; ++n) {
        rows[static_cast<size_t>(n - 1)] = scan_row(id, n, height);
    }
    // Rows merge in n order regardless of which thread computed them.
    return dedup_keep_last(merge_rows(rows));
}

std::vector<CatalogEntry> brute_force_serial(long x_max) {
    if (x_max < 1) throw std::invalid_argument("x_max must be >= 1");
    std::vector<std::vector<CatalogEntry>> per_x(static_cast<size_t>(x_max));
    for (long x = 1; x <= x_max; ++x) per_x[static_cast<size_t>(x - 1)] = brute_force_one(x);
    return dedup_keep_first(merge_rows(per_x));
}

std::vector<CatalogEntry> brute_force(long x_max) {
    if (x_max < 1) throw std::invalid_argument("x_max must be >= 1");
    std::vector<std::vector<CatalogEntry>> per_x(static_cast<size_t>(x_max));
#pragma omp parallel for schedule(dynamic)
    for (long x = 1; x <= x_max; ++x) {
        per_x[static_cast<size_t>(x - 1)] = brute_force_one(x);
    }
    return dedup_keep_first(merge_rows(per_x));
}

std::vector<CatalogEntry> brute_force_at(long x) {
    if (x < 1) throw std::invalid_argument("x must be >= 1");
    return dedup_keep_first(brute_force_one(x));
}

CoverageReport coverage(const std::vector<CatalogEntry>& oracle,
                        const std::vector<CatalogEntry>& scans) {
    auto require_canonical_primitive = [](const CatalogEntry& e) {
        std::vector<BigInt> vals;
        for (const BigInt* f : e.primitive.fields()) vals.push_back(*f);
        if (gcd_many(vals) != 1) throw std::invalid_argument("entry is not primitive");
        if (e.primitive != canonicalize(e.primitive)) {
            throw std::invalid_argument("entry is not canonical");
        }
    };
    for (const auto& e : oracle) require_canonical_primitive(e);
    for (const auto& e : scans) require_canonical_primitive(e);

    std::unordered_map<std::string, const CatalogEntry*> by_key;
    for (const auto& e : scans) by_key.emplace(primitive_key(e.primitive), &e);

    CoverageReport report;
    for (const auto& e : oracle) {
        auto it = by_key.find(primitive_key(e.primitive));
        if (it == by_key.end()) {
            report.unmatched.push_back(e.primitive);
        } else {
            const CatalogEntry* s = it->second;
            report.matched.push_back(
                CoverageReport::Match{e.primitive, s->source, s->m, s->n});
        }
    }
    return report;
}

}  // namespace piped
