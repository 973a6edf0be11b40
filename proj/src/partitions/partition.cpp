#include "quatgrad/partitions/partition.hpp"

#include <stdexcept>

namespace quatgrad::partitions {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::odd_count() const {
    int c = 0;
    for (int p : parts_) c += p % 2;
    return c;
}

int Partition::multiplicity(int part) const {
    int c = 0;
    for (int p : parts_) c += (p == part);
    return c;
}

bool Partition::is_zero_orbit() const {
    for (int p : parts_)
        if (p != 1) return false;
    return true;
}

bool Partition::admissible_so() const {
    for (int p : parts_)
        if (p % 2 == 0 && multiplicity(p) % 2 != 0) return false;
    return true;
}

bool Partition::admissible_sp() const {
    for (int p : parts_)
        if (p % 2 == 1 && multiplicity(p) % 2 != 0) return false;
    return true;
}

Partition Partition::doubled() const {
    std::vector<int> d;
    d.reserve(2 * parts_.size());
    for (int p : parts_) {
        d.push_back(p);
        d.push_back(p);
    }
    return Partition(std::move(d));
}

Partition Partition::tail() const {
    if (parts_.empty()) return Partition();
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const {
    std::string s = "(";
    std::size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!first) s += ",";
        s += std::to_string(parts_[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        first = false;
        i = j;
    }
    return s + ")";
}

namespace {
void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        generate(remaining - p, p, current, out);
        current.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> current;
    generate(n, n, current, out);
    return out;
}

Partition hook(int first, int n) {
    if (first < 1 || first > n) throw std::invalid_argument("hook: need 1 <= first <= n");
    std::vector<int> parts{first};
    for (int i = first; i < n; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

}  // namespace quatgrad::partitions
