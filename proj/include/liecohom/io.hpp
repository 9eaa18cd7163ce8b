#pragma once

#include "liecohom/cohomology.hpp"
#include "liecohom/liering.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liecohom::io {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

/// Parse or validation failure with a human-readable, position-annotated
/// message where available.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// In-memory form of a Lie ring file: orders plus a sparse bracket table
/// keyed by 0-based generator pairs i < j (files use 1-based "i,j" keys).
struct LieRingDocument {
    std::vector<long> orders;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<long>> bracket;
};

LieRingDocument parse_liering(const std::string& text);
std::string liering_to_json(const LieRingDocument& doc);
LieRingPtr ring_from_document(const LieRingDocument& doc);
LieRingDocument document_from_ring(const LieRing& ring);

/// Cocycle file: an embedded (or referenced) ring document, the coefficient
/// moduli, and the two |L| x |L| tables in row-major enumeration order.
struct CocycleDocument {
    LieRingDocument lie;
    std::vector<long> coeff;
    std::vector<std::vector<long>> f;  // |L|^2 rows, each of length |coeff|
    std::vector<std::vector<long>> g;
};

/// base_dir resolves a relative "lie" path reference.
CocycleDocument parse_cocycle(const std::string& text, const std::string& base_dir = ".");
std::string cocycle_to_json(const CocycleDocument& doc);
Cocycle cocycle_from_document(const CocycleDocument& doc, std::size_t guard = 1u << 12);
CocycleDocument document_from_cocycle(const Cocycle& c);

/// FNV-1a digest of raw bytes, as "fnv1a:<hex>"; used for input echoes.
std::string digest(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace liecohom::io
