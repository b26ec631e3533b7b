#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "piped/search.hpp"

namespace piped {

enum class CatalogFormat { Jsonl, Csv };

CatalogFormat format_from_string(const std::string& name);

// One flat record per line, integers as decimal strings (degree-6 values
// overflow 64-bit consumers at modest heights). Key order is fixed so that
// re-serialization is byte-identical.
std::string serialize_entry(const CatalogEntry& entry, CatalogFormat format);
std::string csv_header();

void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries,
                   CatalogFormat format);

// Throws std::runtime_error naming the 1-based line number on parse failure.
std::vector<CatalogEntry> parse_catalog(std::istream& is, CatalogFormat format);

}  // namespace piped
