#ifndef COBCALC_PARTITION_HPP
#define COBCALC_PARTITION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cobcalc {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition has weight 0. Partitions index Chern numbers,
/// symmetric-function bases and generator monomials throughout.
class Partition {
public:
    Partition() = default;

    /// Sorts the parts weakly decreasing; throws std::invalid_argument
    /// on a part <= 0.
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// "[3,1]"; the empty partition renders as "[]".
    std::string str() const;

    bool operator==(const Partition&) const = default;

    /// Canonical order: parts compared componentwise, missing parts count
    /// as 0, larger part first. Within a fixed weight this is the
    /// reverse-lexicographic order (4) < (3,1) < (2,2) < ...
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Comparator placing partitions in canonical order (std::map key order).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a < b; }
};

/// All partitions of n in canonical order; size is the partition number
/// pi(n). n must be >= 0.
std::vector<Partition> enumerate_partitions(int n);

/// Multiset union of the parts; weights add.
Partition partition_union(const Partition& mu, const Partition& nu);

/// All ordered pairs (mu, nu) with partition_union(mu, nu) == lambda,
/// one entry per distinct pair, ordered by mu in canonical order.
/// The number of pairs is the product of (multiplicity + 1) over the
/// distinct part values of lambda.
std::vector<std::pair<Partition, Partition>> m_splittings(const Partition& lambda);

/// Parses the str() form "[3,1]". Throws std::invalid_argument.
Partition parse_partition(std::string_view s);

}  // namespace cobcalc

#endif
