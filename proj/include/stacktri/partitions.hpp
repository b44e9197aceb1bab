#pragma once

// Integer partitions, their even/odd classification, the counts P, P0, P1,
// the Hardy-Ramanujan estimate, and the cycle-type permutation pi_p.

#include <cstdint>
#include <functional>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace stacktri {

enum class Parity { even, odd };

std::string to_string(Parity p);

/// Weakly increasing sequence of positive integers.
class Partition {
public:
    /// Throws std::invalid_argument on an empty, non-positive or decreasing
    /// sequence.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t size() const { return parts_.size(); }
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Permutation of {1, ..., n}; images()[i-1] is the image of i.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }
    std::size_t cycle_count() const;
    Parity parity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Even iff the number of even parts is even.
Parity parity(const Partition& p);

/// Partitions of n in lexicographic order. Throws on n < 1.
std::vector<Partition> enumerate_partitions(int n);
/// Same order, without materializing the list.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

struct PartitionCounts {
    std::uint64_t total = 0;
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
};

/// Exact counts by enumeration.
PartitionCounts counts(int n);

/// P(n) from Euler's pentagonal-number recurrence.
std::uint64_t partition_count_pentagonal(int n);

inline const double hardy_ramanujan_c1 = 1.0 / (4.0 * std::numbers::sqrt3);
inline const double hardy_ramanujan_c2 = std::numbers::pi * std::sqrt(2.0 / 3.0);

/// (c1 / n) exp(c2 sqrt(n)).
double hardy_ramanujan(int n);

/// Product of the cycles (s_{j-1}+1, ..., s_j) over the partial sums s_j.
Permutation pi_p(const Partition& p);

/// (p_1, ..., p_k) -> (1, p_1, ..., p_k); preserves parity.
Partition prepend_one(const Partition& p);
/// (p_1, ..., p_k) -> (p_1, ..., p_k + 1); flips parity.
Partition increment_largest(const Partition& p);

}  // namespace stacktri
