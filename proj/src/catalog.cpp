#include "piped/catalog.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace piped {

namespace {

constexpr std::array<const char*, 22> kKeys = {
    "family", "m", "n", "x", "y", "z", "a", "b", "c1", "c2", "d1", "d2",
    "content", "primitive_x", "primitive_y", "primitive_z", "primitive_a",
    "primitive_b", "primitive_c1", "primitive_c2", "primitive_d1", "primitive_d2"};

std::array<std::string, 22> entry_values(const CatalogEntry& e) {
    std::array<std::string, 22> v;
    v[0] = e.source;
    v[1] = e.has_params ? e.m.get_str() : "";
    v[2] = e.has_params ? e.n.get_str() : "";
    auto raw = e.raw.fields();
    for (size_t i = 0; i < 9; ++i) v[3 + i] = raw[i]->get_str();
    v[12] = e.content.get_str();
    auto prim = e.primitive.fields();
    for (size_t i = 0; i < 9; ++i) v[13 + i] = prim[i]->get_str();
    return v;
}

BigInt parse_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("malformed integer: " + text);
    for (size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("malformed integer: " + text);
        }
    }
    return bigint_from_string(text);
}

CatalogEntry entry_from_values(const std::array<std::string, 22>& v) {
    CatalogEntry e;
    e.source = v[0];
    if (e.source.empty()) throw std::invalid_argument("missing family");
    e.has_params = !v[1].empty() || !v[2].empty();
    if (e.has_params) {
        e.m = parse_int(v[1]);
        e.n = parse_int(v[2]);
    }
    std::array<BigInt*, 9> raw = {&e.raw.x,  &e.raw.y,  &e.raw.z,
                                  &e.raw.a,  &e.raw.b,  &e.raw.c1,
                                  &e.raw.c2, &e.raw.d1, &e.raw.d2};
    for (size_t i = 0; i < 9; ++i) *raw[i] = parse_int(v[3 + i]);
    e.content = parse_int(v[12]);
    std::array<BigInt*, 9> prim = {&e.primitive.x,  &e.primitive.y,  &e.primitive.z,
                                   &e.primitive.a,  &e.primitive.b,  &e.primitive.c1,
                                   &e.primitive.c2, &e.primitive.d1, &e.primitive.d2};
    for (size_t i = 0; i < 9; ++i) *prim[i] = parse_int(v[13 + i]);
    return e;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

CatalogFormat format_from_string(const std::string& name) {
    if (name == "jsonl") return CatalogFormat::Jsonl;
    if (name == "csv") return CatalogFormat::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

std::string csv_header() {
    std::string out;
    for (size_t i = 0; i < kKeys.size(); ++i) {
        if (i) out += ',';
        out += kKeys[i];
    }
    return out;
}

std::string serialize_entry(const CatalogEntry& entry, CatalogFormat format) {
    auto values = entry_values(entry);
    std::string out;
    if (format == CatalogFormat::Csv) {
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) out += ',';
            out += values[i];
        }
        return out;
    }
    out += '{';
    for (size_t i = 0; i < kKeys.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += kKeys[i];
        out += "\":";
        if ((i == 1 || i == 2) && values[i].empty()) {
            out += "null";
        } else {
            out += '"';
            out += values[i];
            out += '"';
        }
    }
    out += '}';
    return out;
}

void write_catalog(std::ostream& os, const std::vector<CatalogEntry>& entries,
                   CatalogFormat format) {
    if (format == CatalogFormat::Csv) os << csv_header() << '\n';
    for (const auto& e : entries) os << serialize_entry(e, format) << '\n';
}

std::vector<CatalogEntry> parse_catalog(std::istream& is, CatalogFormat format) {
    std::vector<CatalogEntry> out;
    std::string line;
    size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            std::array<std::string, 22> values;
            if (format == CatalogFormat::Csv) {
                if (!saw_header) {
                    saw_header = true;
                    if (line != csv_header()) throw std::invalid_argument("bad csv header");
                    continue;
                }
                auto fields = split_csv(line);
                if (fields.size() != kKeys.size()) {
                    throw std::invalid_argument("wrong field count");
                }
                for (size_t i = 0; i < values.size(); ++i) values[i] = fields[i];
            } else {
                nlohmann::json obj = nlohmann::json::parse(line);
                if (!obj.is_object()) throw std::invalid_argument("record is not an object");
                for (size_t i = 0; i < kKeys.size(); ++i) {
                    if (!obj.contains(kKeys[i])) {
                        throw std::invalid_argument(std::string("missing key ") + kKeys[i]);
                    }
                    const auto& val = obj.at(kKeys[i]);
                    if (val.is_null()) {
                        values[i].clear();
                    } else if (val.is_string()) {
                        values[i] = val.get<std::string>();
                    } else {
                        throw std::invalid_argument(std::string("key ") + kKeys[i] +
                                                    " is not a string");
                    }
                }
            }
            out.push_back(entry_from_values(values));
        } catch (const std::exception& ex) {
            std::ostringstream msg;
            msg << "catalog parse error at line " << lineno << ": " << ex.what();
            throw std::runtime_error(msg.str());
        }
    }
    return out;
}

}  // namespace piped
