#pragma once

#include <functional>
#include <string>
#include <vector>

#include "riordan/array.hpp"

namespace riordan {

// A frozen integer sequence attached to a named array, used as a regression
// gate. `tag` names the quantity the digits describe; `note` says what the
// digits are (closed form, OEIS id, or how they were produced).
struct Reference {
    std::string tag;
    std::vector<long> values;
    std::string note;
};

// A named array: a generator producing it at any requested order, plus the
// reference sequences pinned against it.
struct CatalogEntry {
    std::string name;
    std::string description; // closed form of (g, x*ft)
    std::function<RiordanArray(int)> generator;
    std::vector<Reference> references;
};

// Names in stable listing order. The first five are the published example
// arrays exercised throughout the test suite; "identity" is the group
// identity (1, x), included so degenerate paths stay reachable by name.
const std::vector<std::string>& catalog_names();

// Full entry for a name.  Unknown name -> LookupError.
const CatalogEntry& catalog_entry(const std::string& name);

// The named array generated at exactly `order` certified coefficients.
// Unknown name -> LookupError; order < 1 -> UsageError.
RiordanArray get(const std::string& name, int order);

// The frozen reference sequences for a name.  Unknown name -> LookupError.
const std::vector<Reference>& references(const std::string& name);

} // namespace riordan
