#include "stacktri/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stacktri {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition has no parts");
    if (parts_.front() < 1) throw std::invalid_argument("partition parts must be positive");
    if (!std::is_sorted(parts_.begin(), parts_.end()))
        throw std::invalid_argument("partition parts must be weakly increasing");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ')';
    return out.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > size() || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

std::size_t Permutation::cycle_count() const {
    std::vector<bool> seen(images_.size() + 1, false);
    std::size_t cycles = 0;
    for (int start = 1; start <= size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (int x = start; !seen[x]; x = (*this)(x)) seen[x] = true;
    }
    return cycles;
}

Parity Permutation::parity() const {
    return (static_cast<std::size_t>(size()) - cycle_count()) % 2 == 0 ? Parity::even : Parity::odd;
}

Parity parity(const Partition& p) {
    auto even_parts = std::count_if(p.parts().begin(), p.parts().end(),
                                    [](int x) { return x % 2 == 0; });
    return even_parts % 2 == 0 ? Parity::even : Parity::odd;
}

namespace {

void extend(int remaining, int min_part, std::vector<int>& current,
            const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (int part = min_part; part <= remaining; ++part) {
        // a part smaller than what is left must leave room for parts >= itself
        if (part != remaining && remaining - part < part) continue;
        current.push_back(part);
        extend(remaining - part, part, current, visit);
        current.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 1) throw std::invalid_argument("partitions need n >= 1");
    std::vector<int> current;
    extend(n, 1, current, visit);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

PartitionCounts counts(int n) {
    PartitionCounts c;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        auto even_parts = std::count_if(parts.begin(), parts.end(), [](int x) { return x % 2 == 0; });
        ++c.total;
        ++(even_parts % 2 == 0 ? c.even : c.odd);
    });
    return c;
}

std::uint64_t partition_count_pentagonal(int n) {
    if (n < 0) return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t sum = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            sum += sign * p[m - g1];
            int g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) sum += sign * p[m - g2];
        }
        p[m] = sum;
    }
    return static_cast<std::uint64_t>(p[n]);
}

double hardy_ramanujan(int n) {
    if (n < 1) throw std::invalid_argument("hardy_ramanujan needs n >= 1");
    return hardy_ramanujan_c1 / n * std::exp(hardy_ramanujan_c2 * std::sqrt(static_cast<double>(n)));
}

Permutation pi_p(const Partition& p) {
    std::vector<int> images(p.n());
    int start = 0;
    for (int part : p.parts()) {
        for (int i = 1; i <= part; ++i) {
            int x = start + i;
            images[x - 1] = (i == part) ? start + 1 : x + 1;
        }
        start += part;
    }
    return Permutation(std::move(images));
}

Partition prepend_one(const Partition& p) {
    std::vector<int> parts{1};
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    return Partition(std::move(parts));
}

Partition increment_largest(const Partition& p) {
    std::vector<int> parts = p.parts();
    ++parts.back();
    return Partition(std::move(parts));
}

}  // namespace stacktri
