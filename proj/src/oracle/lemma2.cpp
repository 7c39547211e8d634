#include "tlea/oracle/lemma2.hpp"

#include <bit>
#include <cstdint>

namespace tlea::oracle {

long double lemma2_bruteforce(int n, int a) {
    detail::check_improvement_domain(n, a);
    if (n > 14) {
        throw std::invalid_argument("lemma2_bruteforce: n > 14 is too expensive to enumerate");
    }
    // Positions [0, a) hold the zeros of X.
    const std::uint32_t zero_mask = (1U << a) - 1U;
    const long double p = 1.0L / static_cast<long double>(n);
    std::vector<long double> weight(static_cast<std::size_t>(n) + 1);
    for (int f = 0; f <= n; ++f) {
        weight[static_cast<std::size_t>(f)] = std::pow(p, f) * std::pow(1.0L - p, n - f);
    }
    long double gain_one = 0.0L;
    long double gain_positive = 0.0L;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const int gained = std::popcount(mask & zero_mask);
        const int lost = std::popcount(mask & ~zero_mask);
        const int gain = gained - lost;
        if (gain <= 0) {
            continue;
        }
        const long double w = weight[static_cast<std::size_t>(gained + lost)];
        gain_positive += w;
        if (gain == 1) {
            gain_one += w;
        }
    }
    return gain_one / gain_positive;
}

}  // namespace tlea::oracle
