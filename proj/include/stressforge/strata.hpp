#pragma once

#include <map>

#include "stressforge/model.hpp"

namespace stressforge {

/// Map from stratum dimension to stratum count.
struct StrataTable {
    std::map<int, long> by_dimension;

    friend bool operator==(const StrataTable& a, const StrataTable& b) = default;
};

/// One degeneracy type contributing to the census. The key encodes the
/// coincidence multiplicities and the number of original points on each
/// forced line, e.g. "c[2];l[4]" for four points in a line two of which
/// coincide.
struct CensusBullet {
    int dimension = 0;
    std::string type_key;
    std::string label;
    long count = 0;
};

struct CensusReport {
    int n = 0;
    StrataTable table;
    std::vector<CensusBullet> bullets;
};

/// Stratification census for the complete graph on n <= 5 vertices.
/// Degeneracy descriptors (coincidence partition plus collinearity
/// structure) are enumerated, realizability-checked by exact sample
/// construction, and weighted by the connected-component count of their
/// reduced parameter space. For n = 5 the codimension 0 and 1 rows come
/// from the fibered Lambda5 census.
CensusReport strata_table(int n);

} // namespace stressforge
