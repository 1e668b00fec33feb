#pragma once

#include <map>
#include <string>
#include <vector>

namespace clp {

/* Which partitions a measure family charges. */
enum class SupportConstraint {
    ALL,
    ODD_PARTS_EVEN_MULT,   // every odd part occurs an even number of times
    EVEN_PARTS_EVEN_MULT,  // every even part occurs an even number of times
};

/* Integer partition: non-increasing positive parts.  The empty partition is
 * Partition{}. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /* "3,1,1"; "-" denotes the empty partition. */
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return size_; }      // |lambda|, sum of parts
    int length() const { return static_cast<int>(parts_.size()); }

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/* Canonical enumeration order: by |lambda|, then lexicographically
 * descending parts within a size. */
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

struct PartitionStats {
    int size = 0;              // |lambda|
    int length = 0;            // number of parts
    int odd_parts = 0;         // o(lambda), parts of odd size counted with multiplicity
    long n_stat = 0;           // n(lambda) = sum_i C(lambda'_i, 2)
    long dual_square_sum = 0;  // sum_i (lambda'_i)^2
    std::map<int, int> mult;   // part size -> multiplicity
};

Partition conjugate(const Partition& p);
PartitionStats partition_stats(const Partition& p);
bool satisfies(const Partition& p, SupportConstraint c);

/* All partitions of size <= max_size meeting the constraint, in canonical
 * order. */
std::vector<Partition> enumerate_partitions(SupportConstraint c, int max_size);

/* Partitions of exactly `size`, in canonical order. */
std::vector<Partition> enumerate_partitions_exact(SupportConstraint c, int size);

}  // namespace clp
