#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degloci/core/errors.hpp"

namespace degloci
{

// Monomials are packed into a 64-bit key:
//
//   byte 7      total degree
//   byte 6-i    exponent of variable i   (i = 0..6)
//
// so that comparing keys as unsigned integers is exactly the graded
// lexicographic order with variable 0 largest. Multiplying monomials is key
// addition, which is carry-free as long as the total degree stays <= 255.
using Key = std::uint64_t;

inline constexpr std::size_t max_vars = 7;
inline constexpr unsigned max_total_degree = 255;

namespace key
{

constexpr unsigned shift(std::size_t var)
{
    return 8u * static_cast<unsigned>(6 - var);
}

constexpr unsigned degree(Key k)
{
    return static_cast<unsigned>(k >> 56);
}

constexpr unsigned exponent(Key k, std::size_t var)
{
    return static_cast<unsigned>((k >> shift(var)) & 0xffu);
}

constexpr Key unit(std::size_t var)
{
    return (Key{1} << 56) | (Key{1} << shift(var));
}

constexpr Key degree_floor(unsigned d)
{
    return Key{d} << 56;
}

inline Key from_exponents(std::span<const unsigned> exps)
{
    if (exps.size() > max_vars) {
        throw out_of_scope("monomial has more than 7 variables");
    }
    unsigned total = 0;
    Key k = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        total += exps[i];
        if (total > max_total_degree) {
            throw degree_overflow("monomial total degree exceeds 255");
        }
        k |= Key{exps[i]} << shift(i);
    }
    return k | (Key{total} << 56);
}

inline std::vector<unsigned> to_exponents(Key k, std::size_t nvars)
{
    std::vector<unsigned> e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        e[i] = exponent(k, i);
    }
    return e;
}

constexpr bool divides(Key d, Key k)
{
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (exponent(d, i) > exponent(k, i)) {
            return false;
        }
    }
    return true;
}

// Exponent of `var` set to zero; total degree adjusted.
constexpr Key drop_var(Key k, std::size_t var)
{
    const unsigned e = exponent(k, var);
    return k - (Key{e} << shift(var)) - (Key{e} << 56);
}

} // namespace key

// Ordered, duplicate-free list of variable names shared by polynomials.
class VarSet
{
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names))
    {
        if (names_.size() > max_vars) {
            throw out_of_scope("at most 7 variables are supported, got " + std::to_string(names_.size()));
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            for (std::size_t j = i + 1; j < names_.size(); ++j) {
                if (names_[i] == names_[j]) {
                    throw error("duplicate variable name '" + names_[i] + "'");
                }
            }
        }
    }

    std::size_t size() const
    {
        return names_.size();
    }

    const std::string &name(std::size_t i) const
    {
        return names_.at(i);
    }

    const std::vector<std::string> &names() const
    {
        return names_;
    }

    std::optional<std::size_t> index_of(const std::string &name) const
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - names_.begin());
    }

    friend bool operator==(const VarSet &, const VarSet &) = default;

private:
    std::vector<std::string> names_;
};

using Vars = std::shared_ptr<const VarSet>;

inline Vars make_vars(std::vector<std::string> names)
{
    return std::make_shared<const VarSet>(std::move(names));
}

inline bool same_vars(const Vars &a, const Vars &b)
{
    return a == b || (a && b && *a == *b);
}

// a1..an followed by any extra names.
inline Vars alpha_vars(unsigned n, const std::vector<std::string> &extra = {})
{
    std::vector<std::string> names;
    names.reserve(n + extra.size());
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("a" + std::to_string(i));
    }
    names.insert(names.end(), extra.begin(), extra.end());
    return make_vars(std::move(names));
}

inline Vars chern_vars(unsigned n)
{
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("c" + std::to_string(i));
    }
    return make_vars(std::move(names));
}

inline Vars single_var(const std::string &name)
{
    return make_vars({name});
}

} // namespace degloci
