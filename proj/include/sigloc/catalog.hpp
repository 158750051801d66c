#pragma once

#include <optional>

#include "sigloc/model.hpp"

namespace sigloc {

/// A built-in example manifold with hand-checkable expected values; the
/// expected block and its provenance notes live inside the ManifoldData.
struct CatalogEntry {
    ManifoldData data;
};

/// The built-in entries, in a fixed order:
///   cp1_rotation, cp2_linear, cp2_with_fixed_cp1, s2xs2_diagonal, free_action.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry* find_catalog_entry(const std::string& name);

struct CatalogCheck {
    std::string entry;
    std::string check;
    bool pass = false;
    std::string detail;
};

struct CatalogReport {
    std::vector<CatalogCheck> checks;
    int mismatches = 0;
    bool all_pass() const { return mismatches == 0; }
};

/// Runs validation, the signature in every mode, the prime decision, both
/// vanishing checks, and the twisted series against each entry's expected
/// values. Throws std::invalid_argument for an unknown entry name.
CatalogReport run_catalog(const std::optional<std::string>& filter = std::nullopt);

}  // namespace sigloc
