#pragma once

#include <span>
#include <vector>

#include "chirpcrypt/types.hpp"

namespace chirpcrypt::chaos {

/// Iterates x_{i+1} = mu * x_i * (1 - x_i) from params.x0, drops the first
/// params.discard iterates, and returns the next `count` values.
/// Every returned value lies in (0,1).
std::vector<double> logistic_sequence(const LogisticParams& params, std::size_t count);

/// Stable ascending argsort: index[j] is the position in seq of the j-th
/// smallest value, ties broken by original position.
Permutation permutation_from_sequence(std::span<const double> seq);

/// Returns q with q[p[i]] = i for all i.
Permutation invert_permutation(const Permutation& p);

/// out[j] = v[p[j]].
template <typename T>
std::vector<T> apply_permutation(std::span<const T> v, const Permutation& p) {
    if (v.size() != p.size())
        throw std::invalid_argument("apply_permutation: length mismatch");
    std::vector<T> out(v.size());
    for (std::size_t j = 0; j < p.size(); ++j) out[j] = v[p.index[j]];
    return out;
}

template <typename T>
std::vector<T> apply_permutation(const std::vector<T>& v, const Permutation& p) {
    return apply_permutation(std::span<const T>(v), p);
}

}  // namespace chirpcrypt::chaos
