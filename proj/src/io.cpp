#include "liecohom/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace liecohom::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const char* what) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
    }
}

void require_format(const json& obj, const char* what) {
    if (!obj.contains("format")) throw ParseError(std::string(what) + ": missing required \"format\" field");
    if (!obj["format"].is_number_integer() || obj["format"].get<int>() != kFormatVersion)
        throw ParseError(std::string(what) + ": unsupported format version");
}

std::vector<long> int_array(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array of integers");
    std::vector<long> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected an array of integers");
        out.push_back(v.get<long>());
    }
    return out;
}

LieRingDocument document_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("lie ring document: expected a JSON object");
    reject_unknown_keys(j, {"format", "orders", "bracket"}, "lie ring document");
    require_format(j, "lie ring document");
    if (!j.contains("orders")) throw ParseError("lie ring document: missing \"orders\"");
    LieRingDocument doc;
    doc.orders = int_array(j["orders"], "orders");
    for (std::size_t i = 0; i < doc.orders.size(); ++i)
        if (doc.orders[i] < 1) {
            std::ostringstream os;
            os << "orders[" << i << "] must be >= 1, got " << doc.orders[i];
            throw ParseError(os.str());
        }
    const std::size_t n = doc.orders.size();
    if (j.contains("bracket")) {
        if (!j["bracket"].is_object()) throw ParseError("bracket: expected an object");
        for (const auto& [key, value] : j["bracket"].items()) {
            std::size_t comma = key.find(',');
            std::size_t i = 0, jj = 0;
            bool ok = comma != std::string::npos;
            if (ok) {
                try {
                    i = std::stoul(key.substr(0, comma));
                    jj = std::stoul(key.substr(comma + 1));
                } catch (...) {
                    ok = false;
                }
            }
            if (!ok) throw ParseError("bracket key \"" + key + "\" is not of the form \"i,j\"");
            if (i < 1 || jj <= i || jj > n)
                throw ParseError("bracket key \"" + key + "\" out of range (need 1 <= i < j <= " +
                                 std::to_string(n) + ")");
            auto coeffs = int_array(value, "bracket value");
            if (coeffs.size() != n)
                throw ParseError("bracket value for \"" + key + "\" has " + std::to_string(coeffs.size()) +
                                 " coefficients, expected " + std::to_string(n));
            doc.bracket[{i - 1, jj - 1}] = std::move(coeffs);
        }
    }
    return doc;
}

json document_to_json_obj(const LieRingDocument& doc) {
    json j;
    j["format"] = kFormatVersion;
    j["orders"] = doc.orders;
    json b = json::object();
    for (const auto& [key, coeffs] : doc.bracket) {
        std::string k = std::to_string(key.first + 1) + "," + std::to_string(key.second + 1);
        b[k] = coeffs;
    }
    j["bracket"] = std::move(b);
    return j;
}

}  // namespace

LieRingDocument parse_liering(const std::string& text) { return document_from_json(parse_json(text)); }

std::string liering_to_json(const LieRingDocument& doc) { return document_to_json_obj(doc).dump(2) + "\n"; }

LieRingPtr ring_from_document(const LieRingDocument& doc) {
    std::vector<Int> moduli;
    moduli.reserve(doc.orders.size());
    for (long m : doc.orders) moduli.emplace_back(m);
    LieRing::ScMap sc;
    for (const auto& [key, coeffs] : doc.bracket) {
        std::vector<Int> v;
        v.reserve(coeffs.size());
        for (long c : coeffs) v.emplace_back(c);
        sc[key] = std::move(v);
    }
    return LieRing::make(std::move(moduli), sc);
}

LieRingDocument document_from_ring(const LieRing& ring) {
    LieRingDocument doc;
    for (const Int& m : ring.additive()->moduli()) doc.orders.push_back(to_ll_checked(m));
    for (const auto& [i, j] : ring.nonzero_pairs()) {
        std::vector<long> coeffs;
        for (const Int& c : ring.sc(i, j).coeffs) coeffs.push_back(to_ll_checked(c));
        doc.bracket[{i, j}] = std::move(coeffs);
    }
    return doc;
}

CocycleDocument parse_cocycle(const std::string& text, const std::string& base_dir) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("cocycle document: expected a JSON object");
    reject_unknown_keys(j, {"format", "lie", "coeff", "f", "g"}, "cocycle document");
    require_format(j, "cocycle document");
    for (const char* k : {"lie", "coeff", "f", "g"})
        if (!j.contains(k)) throw ParseError(std::string("cocycle document: missing \"") + k + "\"");

    CocycleDocument doc;
    if (j["lie"].is_string()) {
        std::filesystem::path p = j["lie"].get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        doc.lie = parse_liering(read_file(p.string()));
    } else {
        doc.lie = document_from_json(j["lie"]);
    }
    doc.coeff = int_array(j["coeff"], "coeff");
    for (long m : doc.coeff)
        if (m < 1) throw ParseError("coeff moduli must be >= 1");

    long order = 1;
    for (long m : doc.lie.orders) order *= m;
    auto read_table = [&](const char* name) {
        const json& t = j[name];
        if (!t.is_array() || t.size() != static_cast<std::size_t>(order * order))
            throw ParseError(std::string(name) + ": expected " + std::to_string(order * order) +
                             " row-major entries");
        std::vector<std::vector<long>> out;
        for (const auto& row : t) {
            auto v = int_array(row, name);
            if (v.size() != doc.coeff.size())
                throw ParseError(std::string(name) + ": entry length does not match the coefficient rank");
            out.push_back(std::move(v));
        }
        return out;
    };
    doc.f = read_table("f");
    doc.g = read_table("g");
    return doc;
}

std::string cocycle_to_json(const CocycleDocument& doc) {
    json j;
    j["format"] = kFormatVersion;
    j["lie"] = document_to_json_obj(doc.lie);
    j["coeff"] = doc.coeff;
    j["f"] = doc.f;
    j["g"] = doc.g;
    return j.dump(2) + "\n";
}

Cocycle cocycle_from_document(const CocycleDocument& doc, std::size_t guard) {
    LieRingPtr l = ring_from_document(doc.lie);
    std::vector<Int> amod;
    for (long m : doc.coeff) amod.emplace_back(m);
    GroupPtr a = FinAbGroup::make(std::move(amod));
    Cocycle c{l, a, {}, {}};
    auto fill = [&](const std::vector<std::vector<long>>& table, std::vector<GroupElement>& out) {
        out.reserve(table.size());
        for (const auto& row : table) {
            std::vector<Int> v;
            v.reserve(row.size());
            for (long x : row) v.emplace_back(x);
            out.push_back(element(a, std::move(v)));
        }
    };
    fill(doc.f, c.f);
    fill(doc.g, c.g);
    (void)guard;
    return c;
}

CocycleDocument document_from_cocycle(const Cocycle& c) {
    CocycleDocument doc;
    doc.lie = document_from_ring(*c.l);
    for (const Int& m : c.a->moduli()) doc.coeff.push_back(to_ll_checked(m));
    auto fill = [&](const std::vector<GroupElement>& table, std::vector<std::vector<long>>& out) {
        for (const auto& e : table) {
            std::vector<long> row;
            for (const Int& x : e.coeffs) row.push_back(to_ll_checked(x));
            out.push_back(std::move(row));
        }
    };
    fill(c.f, doc.f);
    fill(c.g, doc.g);
    return doc;
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << h;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace liecohom::io
