#pragma once

#include <compare>
#include <string>
#include <vector>

namespace quatgrad::partitions {

// A weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    std::size_t length() const { return parts_.size(); }
    int odd_count() const;
    int multiplicity(int part) const;
    bool is_zero_orbit() const;  // all parts equal to 1

    // Every even part has even multiplicity.
    bool admissible_so() const;
    // Every odd part has even multiplicity.
    bool admissible_sp() const;

    // Each part p replaced by (p, p).
    Partition doubled() const;
    // Parts after the first; the empty partition when there is only one.
    Partition tail() const;

    // "(3,1^2)" style.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n, lexicographically descending ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

Partition hook(int first, int n);  // (first, 1^{n-first})

}  // namespace quatgrad::partitions
