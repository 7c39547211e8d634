#ifndef TLEA_ORACLE_LEMMA2_HPP
#define TLEA_ORACLE_LEMMA2_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tlea/oracle/binomial.hpp"

namespace tlea::oracle {

namespace detail {

inline void check_improvement_domain(int n, int a) {
    if (n < 2) {
        throw std::invalid_argument("improvement probability: n must be at least 2");
    }
    if (a < 1 || a > n) {
        throw std::invalid_argument("improvement probability: zero count a must lie in [1, n]");
    }
}

template <class Scalar>
Scalar log_sum_exp(const std::vector<Scalar>& terms) {
    using std::exp;
    using std::log;
    if (terms.empty()) {
        return -std::numeric_limits<Scalar>::infinity();
    }
    const Scalar peak = *std::max_element(terms.begin(), terms.end());
    Scalar sum(0);
    for (Scalar t : terms) {
        sum += exp(t - peak);
    }
    return peak + log(sum);
}

}  // namespace detail

/// Probability masses of one step of standard bit mutation (rate 1/n) applied
/// to a string with `a` zeros: gain is the change in the number of ones.
/// Returns {Pr[gain = 1], Pr[gain > 0]} from the closed-form double sums
///   Pr[gain = 1] = sum_i C(a,i) C(n-a,i-1) n^{-(2i-1)} (1-1/n)^{n-2i+1}
///   Pr[gain > 0] = sum_i sum_{j<i} C(a,i) C(n-a,j) n^{-(i+j)} (1-1/n)^{n-i-j}.
template <class Scalar = long double>
std::pair<Scalar, Scalar> improvement_masses(int n, int a, Precision precision = Precision::Direct) {
    using std::exp;
    using std::log;
    using std::pow;
    detail::check_improvement_domain(n, a);
    const int b = n - a;  // ones
    const Scalar nn = static_cast<Scalar>(n);
    const Scalar keep = Scalar(1) - Scalar(1) / nn;

    if (precision == Precision::Direct) {
        const PascalTable<Scalar> binom(static_cast<std::size_t>(n));
        Scalar single(0);
        Scalar positive(0);
        for (int i = 1; i <= a; ++i) {
            const Scalar ca = binom(a, i);
            if (i - 1 <= b) {
                single += ca * binom(b, i - 1) * pow(nn, -(2 * i - 1)) * pow(keep, n - 2 * i + 1);
            }
            for (int j = 0; j <= std::min(i - 1, b); ++j) {
                positive += ca * binom(b, j) * pow(nn, -(i + j)) * pow(keep, n - i - j);
            }
        }
        return {single, positive};
    }

    const Scalar log_n = log(nn);
    const Scalar log_keep = log(keep);
    std::vector<Scalar> single_terms;
    std::vector<Scalar> positive_terms;
    for (int i = 1; i <= a; ++i) {
        const Scalar la = log_binomial<Scalar>(a, i);
        if (i - 1 <= b) {
            single_terms.push_back(la + log_binomial<Scalar>(b, i - 1) - Scalar(2 * i - 1) * log_n +
                                   Scalar(n - 2 * i + 1) * log_keep);
        }
        for (int j = 0; j <= std::min(i - 1, b); ++j) {
            positive_terms.push_back(la + log_binomial<Scalar>(b, j) - Scalar(i + j) * log_n +
                                     Scalar(n - i - j) * log_keep);
        }
    }
    return {exp(detail::log_sum_exp(single_terms)), exp(detail::log_sum_exp(positive_terms))};
}

/// Pr[|Y| - |X| = 1 | |Y| > |X|] for standard bit mutation of a string X with
/// `a` zeros, evaluated from the closed-form ratio of double sums.
template <class Scalar = long double>
Scalar lemma2_exact(int n, int a, Precision precision = Precision::Direct) {
    const auto [single, positive] = improvement_masses<Scalar>(n, a, precision);
    return single / positive;
}

/// 1 - e a / n, the lower bound the conditional probability beats.
template <class Scalar = long double>
Scalar lemma2_lower_bound(int n, int a) {
    detail::check_improvement_domain(n, a);
    return Scalar(1) - std::numbers::e_v<Scalar> * Scalar(a) / Scalar(n);
}

/// Same conditional probability by enumerating all 2^n mutation masks of the
/// string 0^a 1^(n-a). Independent of the closed form. Rejects n > 14.
long double lemma2_bruteforce(int n, int a);

}  // namespace tlea::oracle

#endif  // TLEA_ORACLE_LEMMA2_HPP
