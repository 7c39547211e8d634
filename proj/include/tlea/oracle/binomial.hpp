#ifndef TLEA_ORACLE_BINOMIAL_HPP
#define TLEA_ORACLE_BINOMIAL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tlea::oracle {

/// Which arithmetic route a combinatorial evaluator takes.
enum class Precision {
    Direct,    ///< Pascal-table coefficients and plain powers
    LogSpace,  ///< lgamma coefficients, log-sum-exp accumulation
};

/// Row-packed Pascal triangle up to row max_n.
template <class Scalar>
class PascalTable {
public:
    explicit PascalTable(std::size_t max_n) : max_n_(max_n), values_((max_n + 1) * (max_n + 2) / 2) {
        for (std::size_t n = 0; n <= max_n_; ++n) {
            Scalar* row = &values_[offset(n)];
            row[0] = Scalar(1);
            row[n] = Scalar(1);
            if (n >= 2) {
                const Scalar* prev = &values_[offset(n - 1)];
                for (std::size_t k = 1; k < n; ++k) {
                    row[k] = prev[k - 1] + prev[k];
                }
            }
        }
    }

    std::size_t max_n() const noexcept { return max_n_; }

    /// C(n, k); zero when k > n.
    Scalar operator()(std::size_t n, std::size_t k) const {
        if (n > max_n_) {
            throw std::out_of_range("PascalTable: row beyond table");
        }
        return k > n ? Scalar(0) : values_[offset(n) + k];
    }

private:
    static constexpr std::size_t offset(std::size_t n) noexcept { return n * (n + 1) / 2; }

    std::size_t max_n_;
    std::vector<Scalar> values_;
};

template <class Scalar>
Scalar log_binomial(Scalar n, Scalar k) {
    using std::lgamma;
    return lgamma(n + Scalar(1)) - lgamma(k + Scalar(1)) - lgamma(n - k + Scalar(1));
}

/// Binomial(trials, p) probability masses, by the ratio recurrence.
template <class Scalar>
std::vector<Scalar> binomial_pmf(std::size_t trials, Scalar p) {
    using std::pow;
    std::vector<Scalar> pmf(trials + 1, Scalar(0));
    if (p <= Scalar(0)) {
        pmf[0] = Scalar(1);
        return pmf;
    }
    if (p >= Scalar(1)) {
        pmf[trials] = Scalar(1);
        return pmf;
    }
    const Scalar odds = p / (Scalar(1) - p);
    pmf[0] = pow(Scalar(1) - p, static_cast<Scalar>(trials));
    for (std::size_t i = 0; i < trials; ++i) {
        pmf[i + 1] = pmf[i] * static_cast<Scalar>(trials - i) / static_cast<Scalar>(i + 1) * odds;
    }
    return pmf;
}

}  // namespace tlea::oracle

#endif  // TLEA_ORACLE_BINOMIAL_HPP
