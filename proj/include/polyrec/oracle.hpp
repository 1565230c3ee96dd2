// oracle.hpp -- exhaustive enumeration of Sigma_2^n grouped by M(s) or C(s).
// Ground truth for every class, count and codebook; exact or it refuses.

#pragma once

#include <unordered_map>
#include <vector>

#include "polyrec/bits.hpp"

namespace polyrec {

struct ClassPartition {
    int n = 0;
    /// Disjoint classes covering Sigma_2^n, each sorted, ordered by their
    /// smallest member.
    std::vector<std::vector<BinaryString>> classes;
    /// string text -> index into classes.
    std::unordered_map<std::string, int> index;

    const std::vector<BinaryString>& class_of(const BinaryString& s) const;
    long long max_class_size() const;
};

struct OracleLimits {
    int ps_cap = 16;
    int full_cap = 14;
};

/// Partition by equality of the prefix-suffix composition multiset.
ClassPartition partition_by_ps_multiset(int n, int threads = 1, OracleLimits limits = {});
/// Partition by equality of the full composition multiset.
ClassPartition partition_by_full_multiset(int n, int threads = 1, OracleLimits limits = {});

/// Strings whose M-class is a singleton or a reversal pair. Sorted.
std::vector<BinaryString> oracle_unique_set(int n);
long long oracle_max_class(int n);

}  // namespace polyrec
