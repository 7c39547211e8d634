#include "tlea/oracle/markov.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseLU>

#include "tlea/oracle/binomial.hpp"

namespace tlea::oracle {

namespace {

constexpr std::size_t kMaxFullN = 10;
constexpr std::size_t kMaxLumpedN = 1000;

void check_full_n(std::size_t n) {
    if (n < 2 || n > kMaxFullN) {
        throw std::invalid_argument("full chain: n must lie in [2, 10]");
    }
}

void check_lumped_n(std::size_t n) {
    if (n < 2 || n > kMaxLumpedN) {
        throw std::invalid_argument("lumped chain: n must lie in [2, 1000]");
    }
}

void check_options(const ChainOptions& options) {
    if (!(options.tie_acceptance > 0.0 && options.tie_acceptance <= 1.0)) {
        throw std::invalid_argument("chain options: tie_acceptance must lie in (0, 1]");
    }
}

int class_column(StateClass c) {
    switch (c) {
    case StateClass::Optimum:
        return kOptimum;
    case StateClass::EventI:
        return kEventI;
    case StateClass::EventII:
        return kEventII;
    case StateClass::Transient:
        break;
    }
    return -1;
}

/// Adds the effect of one offspring outcome to a row: the move happens on a
/// strict improvement, with probability tie on a tie, never otherwise.
template <class Row, class Scalar>
void apply_selection(Row& row, std::size_t from, std::size_t to, Scalar prob, int incumbent, int candidate,
                     Scalar tie) {
    if (candidate > incumbent) {
        row[to] += prob;
    } else if (candidate == incumbent) {
        row[to] += tie * prob;
        row[from] += (Scalar(1) - tie) * prob;
    } else {
        row[from] += prob;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Full chain

std::size_t full_state_count(std::size_t n) {
    check_full_n(n);
    return std::size_t{1} << (n + 1);
}

std::size_t full_state_index(bool stored_first_bit, const BitString& current) {
    const std::size_t n = current.size();
    check_full_n(n);
    return (stored_first_bit ? (std::size_t{1} << n) : 0) + static_cast<std::size_t>(current.words()[0]);
}

StateClass full_state_class(std::size_t n, std::size_t index) {
    const std::size_t all = (std::size_t{1} << n) - 1;
    const bool b = (index >> n) != 0;
    const std::size_t x = index & all;
    const bool x1 = (x & 1U) != 0;
    if (!b && x == all) {
        return StateClass::Optimum;
    }
    if (!b && x1) {
        return StateClass::EventI;
    }
    if (b && x == all) {
        return StateClass::EventII;
    }
    return StateClass::Transient;
}

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> full_kernel(std::size_t n, MutationKind kind,
                                                                  const ChainOptions& options) {
    check_options(options);
    const std::size_t count = full_state_count(n);
    const std::size_t strings = std::size_t{1} << n;
    const int ni = static_cast<int>(n);
    const Scalar tie = static_cast<Scalar>(options.tie_acceptance);
    const Scalar p = Scalar(1) / Scalar(n);

    // Probability of a particular mask by its number of flipped positions.
    std::vector<Scalar> mask_prob(n + 1, Scalar(0));
    if (kind == MutationKind::Bitwise) {
        for (std::size_t f = 0; f <= n; ++f) {
            mask_prob[f] = std::pow(p, static_cast<Scalar>(f)) * std::pow(Scalar(1) - p, static_cast<Scalar>(n - f));
        }
    } else {
        mask_prob[1] = p;
    }

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(count, count);
    for (std::size_t s = 0; s < count; ++s) {
        const bool b = (s >> n) != 0;
        const std::size_t x = s & (strings - 1);
        const bool x1 = (x & 1U) != 0;
        const int incumbent = std::popcount(x) - (b ? ni : 0);
        auto row = kernel.row(s);
        for (std::size_t mask = 0; mask < strings; ++mask) {
            const Scalar prob = mask_prob[static_cast<std::size_t>(std::popcount(mask))];
            if (prob == Scalar(0)) {
                continue;
            }
            const std::size_t y = x ^ mask;
            const int candidate = std::popcount(y) - (x1 ? ni : 0);
            const std::size_t target = (x1 ? strings : 0) + y;
            apply_selection(row, s, target, prob, incumbent, candidate, tie);
        }
    }
    return kernel;
}

template <class Scalar>
AbsorptionResult<Scalar> markov_full_absorption(std::size_t n, MutationKind kind, const ChainOptions& options) {
    using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Dense kernel = full_kernel<Scalar>(n, kind, options);
    const std::size_t count = static_cast<std::size_t>(kernel.rows());

    std::vector<int> column(count);
    std::vector<std::size_t> transient;
    std::vector<std::ptrdiff_t> position(count, -1);
    for (std::size_t s = 0; s < count; ++s) {
        column[s] = class_column(full_state_class(n, s));
        if (column[s] < 0) {
            position[s] = static_cast<std::ptrdiff_t>(transient.size());
            transient.push_back(s);
        }
    }

    const auto t = static_cast<Eigen::Index>(transient.size());
    Dense system = Dense::Identity(t, t);
    Dense rhs = Dense::Zero(t, 3);
    for (Eigen::Index i = 0; i < t; ++i) {
        const std::size_t s = transient[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < count; ++j) {
            const Scalar pij = kernel(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j));
            if (pij == Scalar(0)) {
                continue;
            }
            if (position[j] >= 0) {
                system(i, position[j]) -= pij;
            } else {
                rhs(i, column[j]) += pij;
            }
        }
    }
    const Dense solved = system.partialPivLu().solve(rhs);

    AbsorptionResult<Scalar> result;
    result.solver_residual = (system * solved - rhs).cwiseAbs().maxCoeff();
    result.probabilities = AbsorptionResult<Scalar>::Matrix::Zero(static_cast<Eigen::Index>(count), 3);
    for (std::size_t s = 0; s < count; ++s) {
        const auto r = static_cast<Eigen::Index>(s);
        if (position[s] >= 0) {
            result.probabilities.row(r) = solved.row(position[s]);
        } else {
            result.probabilities(r, column[s]) = Scalar(1);
        }
    }
    result.residual = AbsorptionResult<Scalar>::Vector::Ones(static_cast<Eigen::Index>(count)) -
                      result.probabilities.rowwise().sum();
    result.uniform_start = result.probabilities.colwise().mean();
    return result;
}

// ---------------------------------------------------------------------------
// Lumped chain

std::size_t lumped_state_count(std::size_t n) {
    check_lumped_n(n);
    return 4 * n;
}

std::size_t lumped_state_index(std::size_t n, const LumpedState& s) {
    if (s.ones_after_first >= n) {
        throw std::out_of_range("lumped_state_index: ones_after_first must be < n");
    }
    const std::size_t block = (s.stored_first_bit ? 2U : 0U) + (s.first_bit ? 1U : 0U);
    return block * n + s.ones_after_first;
}

LumpedState lumped_state(std::size_t n, std::size_t index) {
    const std::size_t block = index / n;
    return LumpedState{(block & 2U) != 0, (block & 1U) != 0, index % n};
}

StateClass lumped_state_class(std::size_t n, const LumpedState& s) {
    const bool rest_full = s.ones_after_first == n - 1;
    if (!s.stored_first_bit && s.first_bit) {
        return rest_full ? StateClass::Optimum : StateClass::EventI;
    }
    if (s.stored_first_bit && s.first_bit && rest_full) {
        return StateClass::EventII;
    }
    return StateClass::Transient;
}

template <class Scalar>
Eigen::SparseMatrix<Scalar, Eigen::RowMajor> lumped_kernel(std::size_t n, MutationKind kind,
                                                           const ChainOptions& options) {
    check_options(options);
    const std::size_t count = lumped_state_count(n);
    const int ni = static_cast<int>(n);
    const Scalar tie = static_cast<Scalar>(options.tie_acceptance);
    const Scalar p = Scalar(1) / Scalar(n);

    std::vector<Eigen::Triplet<Scalar>> triplets;
    std::vector<Scalar> row(count);
    std::vector<Scalar> rest(n);  // distribution of the new k
    for (std::size_t s = 0; s < count; ++s) {
        const LumpedState st = lumped_state(n, s);
        const std::size_t k = st.ones_after_first;
        const std::size_t zeros = n - 1 - k;
        const int incumbent = (st.first_bit ? 1 : 0) + static_cast<int>(k) - (st.stored_first_bit ? ni : 0);
        std::fill(row.begin(), row.end(), Scalar(0));

        // Each offspring outcome: (first bit flipped?, new k, probability).
        auto emit = [&](bool flip_first, std::size_t new_k, Scalar prob) {
            const bool y1 = st.first_bit != flip_first;
            const int candidate = (y1 ? 1 : 0) + static_cast<int>(new_k) - (st.first_bit ? ni : 0);
            const std::size_t target = lumped_state_index(n, LumpedState{st.first_bit, y1, new_k});
            apply_selection(row, s, target, prob, incumbent, candidate, tie);
        };

        if (kind == MutationKind::OneBit) {
            emit(true, k, p);
            if (k > 0) {
                emit(false, k - 1, Scalar(k) * p);
            }
            if (zeros > 0) {
                emit(false, k + 1, Scalar(zeros) * p);
            }
        } else {
            const std::vector<Scalar> lose = binomial_pmf<Scalar>(k, p);
            const std::vector<Scalar> gain = binomial_pmf<Scalar>(zeros, p);
            std::fill(rest.begin(), rest.end(), Scalar(0));
            for (std::size_t i = 0; i <= k; ++i) {
                if (lose[i] == Scalar(0)) {
                    continue;
                }
                for (std::size_t j = 0; j <= zeros; ++j) {
                    rest[k - i + j] += lose[i] * gain[j];
                }
            }
            for (std::size_t nk = 0; nk < n; ++nk) {
                if (rest[nk] == Scalar(0)) {
                    continue;
                }
                emit(true, nk, p * rest[nk]);
                emit(false, nk, (Scalar(1) - p) * rest[nk]);
            }
        }
        for (std::size_t j = 0; j < count; ++j) {
            if (row[j] != Scalar(0)) {
                triplets.emplace_back(static_cast<int>(s), static_cast<int>(j), row[j]);
            }
        }
    }
    Eigen::SparseMatrix<Scalar, Eigen::RowMajor> kernel(static_cast<Eigen::Index>(count),
                                                        static_cast<Eigen::Index>(count));
    kernel.setFromTriplets(triplets.begin(), triplets.end());
    return kernel;
}

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lumped_uniform_start(std::size_t n) {
    const std::size_t count = lumped_state_count(n);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> start(static_cast<Eigen::Index>(count));
    const Scalar log_half = std::log(Scalar(0.5));
    for (std::size_t s = 0; s < count; ++s) {
        const LumpedState st = lumped_state(n, s);
        const Scalar log_w = log_binomial<Scalar>(Scalar(n - 1), Scalar(st.ones_after_first)) +
                             Scalar(n + 1) * log_half;
        start(static_cast<Eigen::Index>(s)) = std::exp(log_w);
    }
    return start;
}

template <class Scalar>
AbsorptionResult<Scalar> markov_lumped_absorption(std::size_t n, MutationKind kind, const ChainOptions& options) {
    using Sparse = Eigen::SparseMatrix<Scalar>;
    using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const auto kernel = lumped_kernel<Scalar>(n, kind, options);
    const std::size_t count = static_cast<std::size_t>(kernel.rows());

    std::vector<int> column(count);
    std::vector<std::ptrdiff_t> position(count, -1);
    std::vector<std::size_t> transient;
    for (std::size_t s = 0; s < count; ++s) {
        column[s] = class_column(lumped_state_class(n, lumped_state(n, s)));
        if (column[s] < 0) {
            position[s] = static_cast<std::ptrdiff_t>(transient.size());
            transient.push_back(s);
        }
    }

    const auto t = static_cast<Eigen::Index>(transient.size());
    std::vector<Eigen::Triplet<Scalar>> triplets;
    Dense rhs = Dense::Zero(t, 3);
    for (Eigen::Index i = 0; i < t; ++i) {
        const auto s = static_cast<Eigen::Index>(transient[static_cast<std::size_t>(i)]);
        triplets.emplace_back(static_cast<int>(i), static_cast<int>(i), Scalar(1));
        for (typename Eigen::SparseMatrix<Scalar, Eigen::RowMajor>::InnerIterator it(kernel, s); it; ++it) {
            const auto j = static_cast<std::size_t>(it.col());
            if (position[j] >= 0) {
                triplets.emplace_back(static_cast<int>(i), static_cast<int>(position[j]), -it.value());
            } else {
                rhs(i, column[j]) += it.value();
            }
        }
    }
    Sparse system(t, t);
    system.setFromTriplets(triplets.begin(), triplets.end());

    Eigen::SparseLU<Sparse, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(system);
    lu.factorize(system);
    if (lu.info() != Eigen::Success) {
        throw std::runtime_error("markov_lumped_absorption: factorization failed");
    }
    Dense solved = lu.solve(rhs);
    // One step of iterative refinement.
    const Dense correction = lu.solve(Dense(rhs - system * solved));
    solved += correction;

    AbsorptionResult<Scalar> result;
    result.solver_residual = Dense(system * solved - rhs).cwiseAbs().maxCoeff();
    result.probabilities = AbsorptionResult<Scalar>::Matrix::Zero(static_cast<Eigen::Index>(count), 3);
    for (std::size_t s = 0; s < count; ++s) {
        const auto r = static_cast<Eigen::Index>(s);
        if (position[s] >= 0) {
            result.probabilities.row(r) = solved.row(position[s]);
        } else {
            result.probabilities(r, column[s]) = Scalar(1);
        }
    }
    result.residual = AbsorptionResult<Scalar>::Vector::Ones(static_cast<Eigen::Index>(count)) -
                      result.probabilities.rowwise().sum();
    result.uniform_start = lumped_uniform_start<Scalar>(n).transpose() * result.probabilities;
    return result;
}

#define TLEA_INSTANTIATE_MARKOV(Scalar)                                                                         \
    template Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> full_kernel<Scalar>(std::size_t, MutationKind, \
                                                                                       const ChainOptions&);      \
    template AbsorptionResult<Scalar> markov_full_absorption<Scalar>(std::size_t, MutationKind,                  \
                                                                     const ChainOptions&);                        \
    template Eigen::SparseMatrix<Scalar, Eigen::RowMajor> lumped_kernel<Scalar>(std::size_t, MutationKind,        \
                                                                                const ChainOptions&);             \
    template Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lumped_uniform_start<Scalar>(std::size_t);                 \
    template AbsorptionResult<Scalar> markov_lumped_absorption<Scalar>(std::size_t, MutationKind,                \
                                                                       const ChainOptions&);

TLEA_INSTANTIATE_MARKOV(double)
TLEA_INSTANTIATE_MARKOV(long double)

#undef TLEA_INSTANTIATE_MARKOV

}  // namespace tlea::oracle
