#include "tlea/fitness.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tlea {

namespace {
const double kInvE = std::exp(-1.0);
}

TimeLinkageFunction::TimeLinkageFunction(std::size_t window, std::size_t dimension)
    : window_(window), dimension_(dimension) {
    if (dimension == 0) {
        throw std::invalid_argument("TimeLinkageFunction: dimension must be at least 1");
    }
}

double TimeLinkageFunction::evaluate(std::span<const BitString> solutions) const {
    if (solutions.size() != window_ + 1) {
        throw std::invalid_argument("TimeLinkageFunction::evaluate: expected window + 1 solutions");
    }
    for (const auto& x : solutions) {
        if (x.size() != dimension_) {
            throw std::invalid_argument("TimeLinkageFunction::evaluate: dimension mismatch");
        }
    }
    double total = 0.0;
    for (std::size_t t = 0; t <= window_; ++t) {
        total += component(t, solutions.first(t + 1));
    }
    return total;
}

double OneMax01Function::component(std::size_t t, std::span<const BitString> upto) const {
    const BitString& x = upto[t];
    if (t == 0) {
        return x.first() ? -static_cast<double>(dimension()) : 0.0;
    }
    return static_cast<double>(x.ones());
}

OnlineHistory::OnlineHistory(std::vector<BitString> solutions) {
    for (auto& x : solutions) {
        push(std::move(x));
    }
}

void OnlineHistory::push(BitString x) {
    if (!solutions_.empty() && x.size() != solutions_.front().size()) {
        throw std::invalid_argument("OnlineHistory::push: dimension mismatch");
    }
    solutions_.push_back(std::move(x));
}

std::size_t OnlineHistory::time() const {
    if (solutions_.empty()) {
        throw std::logic_error("OnlineHistory::time: empty history");
    }
    return solutions_.size() - 1;
}

std::size_t OnlineHistory::dimension() const {
    if (solutions_.empty()) {
        throw std::logic_error("OnlineHistory::dimension: empty history");
    }
    return solutions_.front().size();
}

double online_residual(const OnlineHistory& history) {
    const std::size_t t = history.time();
    const auto xs = history.solutions();
    double sum = 0.0;
    for (std::size_t tau = 2; tau <= t; ++tau) {
        if (xs[tau - 2].first()) {
            sum += std::exp(-static_cast<double>(t - tau + 1));
        }
    }
    return sum;
}

double online_objective(const OnlineHistory& history) {
    if (history.empty() || history.time() < 2) {
        throw std::invalid_argument("online_objective: requires t >= 2");
    }
    const std::size_t t = history.time();
    const auto xs = history.solutions();
    return online_residual(history) + static_cast<double>(onemax01(xs[t - 1].first(), xs[t]));
}

void OnlineResidual::advance(bool first_bit_two_back) noexcept {
    value_ = kInvE * (value_ + (first_bit_two_back ? 1.0 : 0.0));
}

}  // namespace tlea
