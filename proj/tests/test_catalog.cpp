#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "piped/catalog.hpp"

using namespace piped;

namespace {

std::vector<CatalogEntry> sample_entries() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make_entry(FamilyId::P1, BigInt(1), BigInt(4)));
    entries.push_back(make_entry(FamilyId::P2, BigInt(2), BigInt(1)));
    for (auto& e : brute_force_at(6188)) entries.push_back(std::move(e));
    return entries;
}

std::string dump(const std::vector<CatalogEntry>& entries, CatalogFormat format) {
    std::ostringstream os;
    write_catalog(os, entries, format);
    return os.str();
}

}  // namespace

TEST_CASE("format_from_string") {
    CHECK(format_from_string("jsonl") == CatalogFormat::Jsonl);
    CHECK(format_from_string("csv") == CatalogFormat::Csv);
    CHECK_THROWS_AS(format_from_string("xml"), std::invalid_argument);
}

TEST_CASE("jsonl serialization of the fixture entry") {
    CatalogEntry e = make_entry(FamilyId::P1, BigInt(1), BigInt(4));
    std::string line = serialize_entry(e, CatalogFormat::Jsonl);
    CHECK(line.find("\"family\":\"P1\"") != std::string::npos);
    CHECK(line.find("\"m\":\"1\"") != std::string::npos);
    CHECK(line.find("\"n\":\"4\"") != std::string::npos);
    CHECK(line.find("\"x\":\"49504\"") != std::string::npos);
    CHECK(line.find("\"content\":\"8\"") != std::string::npos);
    CHECK(line.find("\"primitive_x\":\"6188\"") != std::string::npos);
    // Canonical primitive has c1 <= c2.
    CHECK(line.find("\"primitive_c1\":\"2709\"") != std::string::npos);
    CHECK(line.find("\"primitive_c2\":\"10659\"") != std::string::npos);
}

TEST_CASE("bruteforce entries serialize null parameters") {
    auto entries = brute_force_at(6188);
    REQUIRE(entries.size() == 1);
    std::string line = serialize_entry(entries[0], CatalogFormat::Jsonl);
    CHECK(line.find("\"family\":\"bruteforce\"") != std::string::npos);
    CHECK(line.find("\"m\":null") != std::string::npos);
    CHECK(line.find("\"n\":null") != std::string::npos);
    std::string csv = serialize_entry(entries[0], CatalogFormat::Csv);
    CHECK(csv.substr(0, 12) == "bruteforce,,");
}

TEST_CASE("csv header matches the fixed key order") {
    CHECK(csv_header() ==
          "family,m,n,x,y,z,a,b,c1,c2,d1,d2,content,"
          "primitive_x,primitive_y,primitive_z,primitive_a,primitive_b,"
          "primitive_c1,primitive_c2,primitive_d1,primitive_d2");
}

TEST_CASE("parse then re-serialize is byte-identical") {
    auto entries = sample_entries();
    for (CatalogFormat format : {CatalogFormat::Jsonl, CatalogFormat::Csv}) {
        std::string first = dump(entries, format);
        std::istringstream is(first);
        auto parsed = parse_catalog(is, format);
        REQUIRE(parsed.size() == entries.size());
        std::string second = dump(parsed, format);
        CHECK(first == second);
    }
}

TEST_CASE("parsed entries preserve values exactly") {
    auto entries = sample_entries();
    std::istringstream is(dump(entries, CatalogFormat::Jsonl));
    auto parsed = parse_catalog(is, CatalogFormat::Jsonl);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0].source == "P1");
    CHECK(parsed[0].has_params);
    CHECK(parsed[0].m == 1);
    CHECK(parsed[0].n == 4);
    CHECK(parsed[0].raw == entries[0].raw);
    CHECK(parsed[0].primitive == entries[0].primitive);
    CHECK(parsed[0].content == 8);
    CHECK_FALSE(parsed[2].has_params);
    CHECK(parsed[2].primitive == entries[2].primitive);
}

TEST_CASE("parse errors name the offending line") {
    std::string good = serialize_entry(sample_entries()[0], CatalogFormat::Jsonl);
    std::istringstream is(good + "\n{not json\n");
    try {
        parse_catalog(is, CatalogFormat::Jsonl);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& ex) {
        CHECK(std::string(ex.what()).find("line 2") != std::string::npos);
    }

    std::istringstream csv_is(csv_header() + "\nP1,1\n");
    try {
        parse_catalog(csv_is, CatalogFormat::Csv);
        FAIL("expected a parse error");
    } catch (const std::runtime_error& ex) {
        CHECK(std::string(ex.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("empty catalogs round-trip") {
    for (CatalogFormat format : {CatalogFormat::Jsonl, CatalogFormat::Csv}) {
        std::istringstream is(dump({}, format));
        CHECK(parse_catalog(is, format).empty());
    }
}
