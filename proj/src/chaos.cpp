#include "chirpcrypt/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chirpcrypt {

void LogisticParams::validate() const {
    if (!(x0 > 0.0 && x0 < 1.0))
        throw std::invalid_argument("LogisticParams: x0 must lie in (0,1)");
    if (!(mu >= kMuChaoticMin && mu <= kMuChaoticMax))
        throw std::invalid_argument("LogisticParams: mu must lie in [3.5699456, 4]");
    if (discard < 0)
        throw std::invalid_argument("LogisticParams: discard must be non-negative");
}

void ChirpRates::validate() const {
    if (!std::isfinite(beta_x) || !std::isfinite(beta_y))
        throw std::invalid_argument("ChirpRates: rates must be finite");
}

namespace chaos {

std::vector<double> logistic_sequence(const LogisticParams& params, std::size_t count) {
    params.validate();
    if (count < 1) throw std::invalid_argument("logistic_sequence: count must be >= 1");

    double x = params.x0;
    for (long i = 0; i < params.discard; ++i) x = params.mu * x * (1.0 - x);

    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        x = params.mu * x * (1.0 - x);
        out[i] = x;
    }
    return out;
}

Permutation permutation_from_sequence(std::span<const double> seq) {
    if (seq.empty()) throw std::invalid_argument("permutation_from_sequence: empty sequence");
    Permutation p;
    p.index.resize(seq.size());
    std::iota(p.index.begin(), p.index.end(), std::size_t{0});
    std::stable_sort(p.index.begin(), p.index.end(),
                     [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
    return p;
}

Permutation invert_permutation(const Permutation& p) {
    Permutation q;
    q.index.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q.index[p.index[i]] = i;
    return q;
}

}  // namespace chaos
}  // namespace chirpcrypt
