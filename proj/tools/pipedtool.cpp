// Command-line front end: generate, verify, scan, and cross-check
// monoclinic Diophantine parallelepipeds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "piped/catalog.hpp"
#include "piped/exactmath.hpp"
#include "piped/families.hpp"
#include "piped/piped_core.hpp"
#include "piped/search.hpp"
#include "piped/validity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace piped;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

BigInt parse_big(const std::string& text) {
    size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("malformed integer: " + text);
    for (size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("malformed integer: " + text);
        }
    }
    return bigint_from_string(text[0] == '+' ? text.substr(1) : text);
}

void print_record(std::ostream& os, const CatalogEntry& e, CatalogFormat format) {
    if (format == CatalogFormat::Csv) os << csv_header() << '\n';
    os << serialize_entry(e, format) << '\n';
}

int run_gen(const std::string& fam_name, const std::string& m_text,
            const std::string& n_text, bool force, CatalogFormat format) {
    FamilyId id = family_from_string(fam_name);
    BigInt m = parse_big(m_text);
    BigInt n = parse_big(n_text);
    if (n == 0 && !force) {
        std::cerr << "gen: n must be nonzero (pass --force to override)\n";
        return kExitUsage;
    }
    if (m == 0 && n == 0) {
        std::cerr << "gen: (0, 0) is a degenerate parameter point\n";
        return kExitUsage;
    }
    CatalogEntry entry = make_entry(id, m, n);
    print_record(std::cout, entry, format);
    Classification cls = classify(id, m, n);
    std::cerr << "classification: " << to_string(cls) << '\n';
    return cls == Classification::Valid ? kExitOk : kExitNegative;
}

int run_identities(const std::string& fam_filter) {
    std::vector<FamilyId> ids;
    if (fam_filter.empty()) {
        ids.assign(kAllFamilies.begin(), kAllFamilies.end());
    } else {
        ids.push_back(family_from_string(fam_filter));
    }
    int passed = 0, total = 0;
    std::cout << "family eq1 eq2 eq3 eq4 eq5 eq6 eq7 ratio345\n";
    bool all_ok = true;
    for (FamilyId id : ids) {
        IdentityReport report = verify_identities(id);
        bool ratio = ratio_345_check(id);
        std::cout << to_string(id);
        for (size_t i = 0; i < 7; ++i) {
            std::cout << (report.passes[i] ? " pass" : " FAIL");
            ++total;
            if (report.passes[i]) ++passed;
            if (!report.passes[i]) {
                all_ok = false;
                std::cerr << to_string(id) << " equation " << (i + 1)
                          << " residual: " << report.residuals[i].to_string() << '\n';
            }
        }
        std::cout << (ratio ? " pass" : " FAIL") << '\n';
        ++total;
        if (ratio) ++passed;
        all_ok = all_ok && ratio;
    }
    std::cerr << passed << "/" << total << " pass\n";
    return all_ok ? kExitOk : kExitNegative;
}

std::string bound_text(const RangeBound& b) {
    switch (b.kind) {
        case RangeBound::Kind::PlusInfinity: return "+inf";
        case RangeBound::Kind::MinusInfinity: return "-inf";
        case RangeBound::Kind::Rational: return b.value.get_str();
        case RangeBound::Kind::QuarticRoot: return "root ~ " + b.approx;
    }
    return "?";
}

int run_ranges(const std::string& fam_name, const std::vector<std::string>& point) {
    FamilyId id = family_from_string(fam_name);
    if (!point.empty()) {
        if (point.size() != 2) {
            std::cerr << "ranges: expected family [m n]\n";
            return kExitUsage;
        }
        BigInt m = parse_big(point[0]);
        BigInt n = parse_big(point[1]);
        Classification cls = classify(id, m, n);
        std::cout << to_string(cls) << '\n';
        return cls == Classification::Valid ? kExitOk : kExitNegative;
    }
    const RangeSpec& spec = range_spec(id);
    for (const RangeInterval& iv : spec.intervals) {
        std::cout << "(" << bound_text(iv.lower) << ", " << bound_text(iv.upper) << ")\n";
    }
    SelfCheckReport report = self_check(id);
    for (const auto& failure : report.failures) std::cerr << failure << '\n';
    std::cerr << "self_check: " << (report.ok ? "pass" : "FAIL") << " ("
              << report.anchors.size() << " quartic bounds)\n";
    return report.ok ? kExitOk : kExitNegative;
}

int write_entries(const std::string& out_path, const std::vector<CatalogEntry>& entries,
                  CatalogFormat format) {
    if (out_path.empty()) {
        write_catalog(std::cout, entries, format);
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open for writing: " << out_path << '\n';
        return kExitUsage;
    }
    write_catalog(out, entries, format);
    if (!out) {
        std::cerr << "write failed: " << out_path << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int run_scan(const std::string& fam_name, long height, const std::string& out_path,
             CatalogFormat format) {
    std::vector<FamilyId> ids;
    if (fam_name == "all") {
        ids.assign(kAllFamilies.begin(), kAllFamilies.end());
    } else {
        ids.push_back(family_from_string(fam_name));
    }
    std::vector<CatalogEntry> entries;
    long pairs = 0;
    for (FamilyId id : ids) {
        auto part = scan_family(id, height);
        for (auto& e : part) entries.push_back(std::move(e));
    }
    // Coprime pairs tried per family: n in [1, H], m in [-H, H].
    for (long n = 1; n <= height; ++n) {
        for (long m = -height; m <= height; ++m) {
            if (std::gcd(std::abs(m), n) == 1) ++pairs;
        }
    }
    int rc = write_entries(out_path, entries, format);
    if (rc == kExitOk) {
        std::cerr << "pairs tried: " << pairs * static_cast<long>(ids.size())
                  << ", valid entries: " << entries.size() << '\n';
    }
    return rc;
}

int verify_one(const MonoclinicPiped& p) {
    EquationReport report = verify_equations(p);
    static const char* kLabels[7] = {
        "x^2+y^2=a^2",   "x^2+z^2=b^2",         "x^2+c1^2=d1^2",
        "x^2+c2^2=d2^2", "2y^2+2z^2=c1^2+c2^2", "2y^2+2b^2=d1^2+d2^2",
        "2a^2+2z^2=d1^2+d2^2"};
    for (size_t i = 0; i < 7; ++i) {
        std::cout << "eq" << (i + 1) << " " << kLabels[i] << ": "
                  << (report[i] ? "pass" : "FAIL") << '\n';
    }
    bool realizable = is_realizable(p);
    std::cout << "realizable: " << (realizable ? "yes" : "no") << '\n';
    return all_equations_pass(report) && realizable ? kExitOk : kExitNegative;
}

int run_verify(const std::vector<std::string>& nums, const std::string& in_path,
               CatalogFormat format) {
    if (!in_path.empty()) {
        std::ifstream in(in_path, std::ios::binary);
        if (!in) {
            std::cerr << "cannot open: " << in_path << '\n';
            return kExitUsage;
        }
        auto entries = parse_catalog(in, format);
        int rc = kExitOk;
        for (const auto& e : entries) rc = std::max(rc, verify_one(e.raw));
        return rc;
    }
    if (nums.size() != 9) {
        std::cerr << "verify: expected nine nonnegative integers\n";
        return kExitUsage;
    }
    MonoclinicPiped p;
    std::array<BigInt*, 9> fields = {&p.x, &p.y, &p.z, &p.a, &p.b,
                                     &p.c1, &p.c2, &p.d1, &p.d2};
    for (size_t i = 0; i < 9; ++i) {
        *fields[i] = parse_big(nums[i]);
        if (*fields[i] < 0) {
            std::cerr << "verify: lengths must be nonnegative\n";
            return kExitUsage;
        }
    }
    return verify_one(p);
}

int run_search(long x_max, long at, const std::string& out_path, CatalogFormat format) {
    std::vector<CatalogEntry> entries;
    if (at > 0) {
        entries = brute_force_at(at);
    } else {
        entries = brute_force(x_max);
    }
    int rc = write_entries(out_path, entries, format);
    if (rc == kExitOk) std::cerr << entries.size() << " found\n";
    return rc;
}

int run_coverage(const std::string& oracle_path, const std::string& scan_path,
                 CatalogFormat format) {
    auto load = [&](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open: " + path);
        return parse_catalog(in, format);
    };
    auto oracle = load(oracle_path);
    auto scans = load(scan_path);
    CoverageReport report = coverage(oracle, scans);
    for (const auto& m : report.matched) {
        std::cout << "matched " << m.primitive.x.get_str() << " <- " << m.source;
        if (!m.source.empty() && m.source != "bruteforce") {
            std::cout << " (" << m.m.get_str() << ", " << m.n.get_str() << ")";
        }
        std::cout << '\n';
    }
    std::cout << report.matched.size() << " matched, " << report.unmatched.size()
              << " unmatched\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monoclinic Diophantine parallelepiped toolkit"};
    app.require_subcommand(1);

    std::string format_name = "jsonl";
    int threads = 0;
    app.add_option("--format", format_name, "record format")->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--threads", threads, "worker threads for scan/search (0 = default)");

    auto* gen = app.add_subcommand("gen", "evaluate one parametrization point");
    std::string gen_family, gen_m, gen_n;
    bool gen_force = false;
    gen->add_option("family", gen_family)->required();
    gen->add_option("m", gen_m)->required();
    gen->add_option("n", gen_n)->required();
    gen->add_flag("--force", gen_force, "allow n = 0");

    auto* identities = app.add_subcommand("identities", "verify the defining equations symbolically");
    std::string id_family;
    identities->add_option("--family", id_family);

    auto* ranges = app.add_subcommand("ranges", "print or test validity ranges");
    std::string rng_family;
    std::vector<std::string> rng_point;
    ranges->add_option("family", rng_family)->required();
    ranges->add_option("point", rng_point)->expected(0, 2);

    auto* scan = app.add_subcommand("scan", "scan a family over coprime (m, n)");
    std::string scan_family_name, scan_out;
    long scan_height = 0;
    scan->add_option("family", scan_family_name)->required();
    scan->add_option("--height", scan_height)->required()->check(CLI::PositiveNumber);
    scan->add_option("--out", scan_out);

    auto* verify = app.add_subcommand("verify", "check nine lengths against the equations");
    std::vector<std::string> verify_nums;
    std::string verify_in;
    verify->add_option("lengths", verify_nums)->expected(0, 9);
    verify->add_option("--in", verify_in, "verify every record in a catalog file");

    auto* search = app.add_subcommand("search", "brute-force enumeration oracle");
    long search_x_max = 0, search_at = 0;
    std::string search_out;
    search->add_option("--x-max", search_x_max)->check(CLI::PositiveNumber);
    search->add_option("--at", search_at, "targeted completion for one x")->check(CLI::PositiveNumber);
    search->add_option("--out", search_out);

    auto* cover = app.add_subcommand("coverage", "match an oracle catalog against scans");
    std::string cov_oracle, cov_scan;
    cover->add_option("--oracle", cov_oracle)->required();
    cover->add_option("--scan", cov_scan)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        CatalogFormat format = format_from_string(format_name);
        if (gen->parsed()) return run_gen(gen_family, gen_m, gen_n, gen_force, format);
        if (identities->parsed()) return run_identities(id_family);
        if (ranges->parsed()) return run_ranges(rng_family, rng_point);
        if (scan->parsed()) return run_scan(scan_family_name, scan_height, scan_out, format);
        if (verify->parsed()) return run_verify(verify_nums, verify_in, format);
        if (search->parsed()) {
            if (search_x_max <= 0 && search_at <= 0) {
                std::cerr << "search: --x-max or --at is required\n";
                return kExitUsage;
            }
            return run_search(search_x_max, search_at, search_out, format);
        }
        if (cover->parsed()) return run_coverage(cov_oracle, cov_scan, format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
