#ifndef ROBIN_MEMBERSHIP_HPP_
#define ROBIN_MEMBERSHIP_HPP_

#include <unordered_map>
#include <vector>

namespace robin {

/// Per-node community assignment in canonical form: community ids are the
/// contiguous range 0..K-1, numbered by first appearance. Construction
/// canonicalizes, so any integer labeling is accepted.
class Membership {
public:
    Membership() = default;

    explicit Membership(const std::vector<int>& raw_labels) {
        assignment_.reserve(raw_labels.size());
        std::unordered_map<int, int> canonical;
        canonical.reserve(raw_labels.size());
        for (int raw : raw_labels) {
            const auto [it, inserted] =
                canonical.emplace(raw, static_cast<int>(canonical.size()));
            assignment_.push_back(it->second);
        }
        community_count_ = static_cast<int>(canonical.size());
    }

    int size() const noexcept { return static_cast<int>(assignment_.size()); }
    int community_count() const noexcept { return community_count_; }
    int operator[](int node) const { return assignment_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& assignment() const noexcept { return assignment_; }

    friend bool operator==(const Membership& a, const Membership& b) {
        return a.assignment_ == b.assignment_;
    }

private:
    std::vector<int> assignment_;
    int community_count_ = 0;
};

}  // namespace robin

#endif  // ROBIN_MEMBERSHIP_HPP_
