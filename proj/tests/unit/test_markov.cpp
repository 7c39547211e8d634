#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "tlea/algorithms.hpp"
#include "tlea/oracle/markov.hpp"

using namespace tlea;
using namespace tlea::oracle;

namespace {

using Dense = std::vector<std::vector<double>>;

// Transition matrix written straight from the acceptance rule, with a single
// individual and every mutation mask enumerated.
Dense reference_kernel(std::size_t n, MutationKind kind) {
    const std::size_t strings = std::size_t{1} << n;
    const std::size_t states = 2 * strings;
    Dense P(states, std::vector<double>(states, 0.0));
    const double p = 1.0 / static_cast<double>(n);
    for (std::size_t s = 0; s < states; ++s) {
        const int b = s >= strings ? 1 : 0;
        const std::size_t x = s % strings;
        const int x1 = static_cast<int>(x & 1U);
        const int f = std::popcount(x) - static_cast<int>(n) * b;
        for (std::size_t mask = 0; mask < strings; ++mask) {
            const int flips = std::popcount(mask);
            double w = 0.0;
            if (kind == MutationKind::OneBit) {
                w = flips == 1 ? p : 0.0;
            } else {
                w = std::pow(p, flips) * std::pow(1 - p, static_cast<int>(n) - flips);
            }
            if (w == 0.0) {
                continue;
            }
            const std::size_t y = x ^ mask;
            const int fy = std::popcount(y) - static_cast<int>(n) * x1;
            const std::size_t t = static_cast<std::size_t>(x1) * strings + y;
            if (fy >= f) {
                P[s][t] += w;
            } else {
                P[s][s] += w;
            }
        }
    }
    return P;
}

/// Probability of sitting in an absorbing class after many steps from each
/// state, by repeated squaring of the kernel.
Dense power_absorption(std::size_t n, MutationKind kind) {
    Dense P = reference_kernel(n, kind);
    const std::size_t N = P.size();
    for (int it = 0; it < 40; ++it) {
        Dense Q(N, std::vector<double>(N, 0.0));
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                if (P[i][k] == 0.0) {
                    continue;
                }
                for (std::size_t j = 0; j < N; ++j) {
                    Q[i][j] += P[i][k] * P[k][j];
                }
            }
        }
        P.swap(Q);
    }
    const std::size_t strings = std::size_t{1} << n;
    Dense out(N, std::vector<double>(3, 0.0));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            const StateClass c = full_state_class(n, j);
            if (c == StateClass::Optimum) {
                out[i][0] += P[i][j];
            } else if (c == StateClass::EventI) {
                out[i][1] += P[i][j];
            } else if (c == StateClass::EventII) {
                out[i][2] += P[i][j];
            }
        }
    }
    (void)strings;
    return out;
}

}  // namespace

TEST_CASE("state classes") {
    const std::size_t n = 3;
    CHECK(full_state_class(n, full_state_index(false, BitString::from_string("111"))) == StateClass::Optimum);
    CHECK(full_state_class(n, full_state_index(false, BitString::from_string("101"))) == StateClass::EventI);
    CHECK(full_state_class(n, full_state_index(true, BitString::from_string("111"))) == StateClass::EventII);
    CHECK(full_state_class(n, full_state_index(true, BitString::from_string("101"))) == StateClass::Transient);
    CHECK(full_state_class(n, full_state_index(false, BitString::from_string("011"))) == StateClass::Transient);

    CHECK(lumped_state_class(4, {false, true, 3}) == StateClass::Optimum);
    CHECK(lumped_state_class(4, {false, true, 1}) == StateClass::EventI);
    CHECK(lumped_state_class(4, {true, true, 3}) == StateClass::EventII);
    CHECK(lumped_state_class(4, {true, false, 3}) == StateClass::Transient);
    for (std::size_t i = 0; i < lumped_state_count(5); ++i) {
        CHECK(lumped_state_index(5, lumped_state(5, i)) == i);
    }
}

TEST_CASE("full kernel equals the reference construction") {
    for (std::size_t n : {2, 3, 5}) {
        for (MutationKind kind : {MutationKind::OneBit, MutationKind::Bitwise}) {
            const auto K = full_kernel<double>(n, kind);
            const Dense R = reference_kernel(n, kind);
            double worst = 0;
            for (std::size_t i = 0; i < R.size(); ++i) {
                for (std::size_t j = 0; j < R.size(); ++j) {
                    worst = std::max(worst, std::abs(K(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) - R[i][j]));
                }
            }
            CHECK(worst < 1e-15);
            CHECK((K.rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("absorption probabilities agree with repeated squaring") {
    for (std::size_t n : {2, 3, 4}) {
        for (MutationKind kind : {MutationKind::OneBit, MutationKind::Bitwise}) {
            const auto exact = markov_full_absorption<double>(n, kind);
            const Dense power = power_absorption(n, kind);
            for (std::size_t s = 0; s < power.size(); ++s) {
                for (int c = 0; c < 3; ++c) {
                    REQUIRE(exact.probabilities(static_cast<Eigen::Index>(s), c) ==
                            doctest::Approx(power[s][static_cast<std::size_t>(c)]).epsilon(1e-9));
                }
            }
        }
    }
    // n = 2 one-bit, worked by hand: 17/32 of uniform starts fail.
    CHECK(markov_full_absorption<double>(2, MutationKind::OneBit).failure_probability() ==
          doctest::Approx(17.0 / 32.0).epsilon(1e-14));
}

TEST_CASE("absorption rows are distributions") {
    const auto r = markov_full_absorption<double>(6, MutationKind::Bitwise);
    CHECK(r.residual.cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(r.uniform_start.sum() - 1.0) < 1e-10);
    CHECK(r.solver_residual < 1e-10);
    CHECK(r.probabilities.minCoeff() > -1e-12);
    for (std::size_t s = 0; s < full_state_count(6); ++s) {
        const StateClass c = full_state_class(6, s);
        if (c != StateClass::Transient) {
            const int col = c == StateClass::Optimum ? kOptimum : c == StateClass::EventI ? kEventI : kEventII;
            CHECK(r.probabilities(static_cast<Eigen::Index>(s), col) == 1.0);
        }
    }
    const auto l = markov_lumped_absorption<double>(300, MutationKind::Bitwise);
    CHECK(l.residual.cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(l.uniform_start.sum() - 1.0) < 1e-10);
}

TEST_CASE("lumped kernel is stochastic and lumped start is a distribution") {
    for (std::size_t n : {2, 7, 50}) {
        for (MutationKind kind : {MutationKind::OneBit, MutationKind::Bitwise}) {
            const auto K = lumped_kernel<double>(n, kind);
            Eigen::VectorXd sums = K * Eigen::VectorXd::Ones(K.cols());
            CHECK((sums.array() - 1.0).abs().maxCoeff() < 1e-12);
        }
        CHECK(lumped_uniform_start<double>(n).sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("lumped chain matches the full chain") {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (MutationKind kind : {MutationKind::OneBit, MutationKind::Bitwise}) {
            const auto full = markov_full_absorption<double>(n, kind);
            const auto lumped = markov_lumped_absorption<double>(n, kind);
            const std::size_t strings = std::size_t{1} << n;
            for (std::size_t s = 0; s < full_state_count(n); ++s) {
                const std::size_t x = s % strings;
                const LumpedState ls{s >= strings, (x & 1U) != 0, static_cast<std::size_t>(std::popcount(x >> 1))};
                const auto li = static_cast<Eigen::Index>(lumped_state_index(n, ls));
                REQUIRE((full.probabilities.row(static_cast<Eigen::Index>(s)) - lumped.probabilities.row(li))
                            .cwiseAbs()
                            .maxCoeff() < 1e-10);
            }
            CHECK((full.uniform_start - lumped.uniform_start).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("kernel rows match simulated steps") {
    const std::size_t n = 5;
    const int steps = 100000;
    for (MutationKind kind : {MutationKind::OneBit, MutationKind::Bitwise}) {
        const auto K = full_kernel<double>(n, kind);
        const TimePair start{false, BitString::from_string("01011")};
        const std::size_t from = full_state_index(start.prev_first_bit, start.current);
        std::vector<int> hits(full_state_count(n), 0);
        RandomStream rng(31, static_cast<std::uint64_t>(kind));
        for (int i = 0; i < steps; ++i) {
            Alg1State s{start, 0, kind};
            alg1_advance(s, rng);
            ++hits[full_state_index(s.pair.prev_first_bit, s.pair.current)];
        }
        for (std::size_t j = 0; j < hits.size(); ++j) {
            const double p = K(static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(j));
            const double f = hits[j] / static_cast<double>(steps);
            REQUIRE(std::abs(f - p) <= 5 * std::sqrt(p * (1 - p) / steps) + 1e-12);
        }
    }
}

TEST_CASE("tie acceptance below one") {
    const auto half = markov_lumped_absorption<double>(8, MutationKind::Bitwise, {0.5});
    const auto full = markov_full_absorption<double>(8, MutationKind::Bitwise, {0.5});
    CHECK((half.uniform_start - full.uniform_start).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(half.success_probability() > markov_lumped_absorption<double>(8, MutationKind::Bitwise).success_probability());
}

TEST_CASE("argument checks") {
    CHECK_THROWS(markov_full_absorption<double>(11, MutationKind::Bitwise));
    CHECK_THROWS(markov_full_absorption<double>(1, MutationKind::Bitwise));
    CHECK_THROWS(markov_lumped_absorption<double>(1, MutationKind::Bitwise));
    CHECK_THROWS(markov_lumped_absorption<double>(1001, MutationKind::Bitwise));
    CHECK_THROWS(markov_lumped_absorption<double>(5, MutationKind::Bitwise, {0.0}));
    CHECK_THROWS(lumped_state_index(4, {false, false, 4}));
}
