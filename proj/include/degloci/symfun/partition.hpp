#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "degloci/core/errors.hpp"

namespace degloci
{

// Weakly decreasing positive parts; trailing zeros are dropped on
// construction. The empty partition stands for s_0 = 1.
class Partition
{
public:
    Partition() = default;

    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i] > parts_[i - 1]) {
                throw error("partition parts must be weakly decreasing");
            }
            if (parts_[i] == 0) {
                throw error("partition has an interior zero part");
            }
        }
    }

    // (k, k-1, ..., 1)
    static Partition staircase(unsigned k)
    {
        std::vector<unsigned> p;
        for (unsigned i = k; i >= 1; --i) {
            p.push_back(i);
        }
        return Partition(std::move(p));
    }

    const std::vector<unsigned> &parts() const
    {
        return parts_;
    }

    std::size_t length() const
    {
        return parts_.size();
    }

    unsigned size() const
    {
        return std::accumulate(parts_.begin(), parts_.end(), 0u);
    }

    unsigned part(std::size_t i) const
    {
        return i < parts_.size() ? parts_[i] : 0u;
    }

    bool empty() const
    {
        return parts_.empty();
    }

    Partition conjugate() const
    {
        std::vector<unsigned> c(part(0), 0);
        for (unsigned p : parts_) {
            for (unsigned j = 0; j < p; ++j) {
                ++c[j];
            }
        }
        return Partition(std::move(c));
    }

    // "21", "0" for the empty partition, "(10,2)" once any part has two digits.
    std::string label() const
    {
        if (parts_.empty()) {
            return "0";
        }
        const bool wide = parts_.front() >= 10;
        std::string s = wide ? "(" : "";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (wide && i > 0) {
                s += ",";
            }
            s += std::to_string(parts_[i]);
        }
        return wide ? s + ")" : s;
    }

    friend bool operator==(const Partition &, const Partition &) = default;

    // Size first, then lexicographically larger partitions first, so that a
    // degree block reads s3, s21, s111.
    friend bool operator<(const Partition &a, const Partition &b)
    {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
    }

private:
    std::vector<unsigned> parts_;
};

// All partitions of d with at most max_len parts (and parts at most
// max_part), in the Partition ordering.
inline std::vector<Partition> partitions_of(unsigned d, std::size_t max_len = ~std::size_t{0}, unsigned max_part = ~0u)
{
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() >= max_len) {
            return;
        }
        for (unsigned p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(d, max_part);
    return out;
}

} // namespace degloci
