#pragma once

#include <string>
#include <vector>

namespace ansatzforge {

enum class VqaClass { VQE, QAOA, QML };

std::string to_string(VqaClass c);

/// Registry row for one ansatz family: identity, classification, the
/// machine-readable description, and pointers for further reading.
struct CatalogEntry {
    std::string family;       // registry key, e.g. "HEA"
    std::string display_name; // e.g. "Hardware-Efficient Ansatz (HEA)"
    VqaClass vqa_class;
    std::string description;
    std::string intent;
    std::string applicability;
    std::vector<std::string> references; // citation keys
    std::vector<std::string> extensions; // related variants (metadata only)
    std::string config_schema;           // blueprint config JSON shape
};

/// All ten families, grouped VQE then QAOA then QML.
const std::vector<CatalogEntry>& catalog_list();

/// Lookup by family key (case-insensitive). Throws LookupError carrying the
/// valid names.
const CatalogEntry& catalog_show(const std::string& family);

} // namespace ansatzforge
