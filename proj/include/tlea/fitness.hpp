#ifndef TLEA_FITNESS_HPP
#define TLEA_FITNESS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "tlea/bitstring.hpp"

namespace tlea {

/// Stored first bit of the previous accepted solution together with the
/// current solution. This is the whole fitness-relevant state of the single
/// individual algorithm and of one slot of the population algorithm.
struct TimePair {
    bool prev_first_bit;
    BitString current;

    std::size_t dimension() const noexcept { return current.size(); }
};

/// OneMax of the current string minus n times the previous first bit.
/// Range [-n, n].
inline int onemax01(bool prev_first_bit, const BitString& current) noexcept {
    const int n = static_cast<int>(current.size());
    return static_cast<int>(current.ones()) - (prev_first_bit ? n : 0);
}

inline int onemax01(const TimePair& pair) noexcept {
    return onemax01(pair.prev_first_bit, pair.current);
}

/// True iff the stored first bit is 0 and the current string is all ones.
inline bool is_optimum(const TimePair& pair) noexcept {
    return !pair.prev_first_bit && pair.current.all_ones();
}

/// Objective that depends on a window of `window()` historical solutions plus
/// the current one, written as a sum of per-step components
///   h(x^{t0}, ..., x^{t0+l}) = sum_t h_t(x^{t0+t}; x^{t0}, ..., x^{t0+t-1}).
class TimeLinkageFunction {
public:
    TimeLinkageFunction(std::size_t window, std::size_t dimension);
    virtual ~TimeLinkageFunction() = default;

    std::size_t window() const noexcept { return window_; }
    std::size_t dimension() const noexcept { return dimension_; }

    /// `solutions` holds exactly window()+1 strings, oldest first.
    double evaluate(std::span<const BitString> solutions) const;

protected:
    /// Component t, given solutions[0..t] (solutions[t] is the one scored).
    virtual double component(std::size_t t, std::span<const BitString> upto) const = 0;

private:
    std::size_t window_;
    std::size_t dimension_;
};

/// The window-1 instance: h_0 = -n * x_1^{t0}, h_1 = |x^{t0+1}|.
class OneMax01Function final : public TimeLinkageFunction {
public:
    explicit OneMax01Function(std::size_t dimension) : TimeLinkageFunction(1, dimension) {}

protected:
    double component(std::size_t t, std::span<const BitString> upto) const override;
};

/// Sequence of accepted solutions x^0, x^1, ..., x^t of the online problem.
class OnlineHistory {
public:
    OnlineHistory() = default;
    explicit OnlineHistory(std::vector<BitString> solutions);

    void push(BitString x);

    bool empty() const noexcept { return solutions_.empty(); }
    /// Current time t; the history holds t+1 solutions. Requires !empty().
    std::size_t time() const;
    std::size_t dimension() const;
    std::span<const BitString> solutions() const noexcept { return solutions_; }

private:
    std::vector<BitString> solutions_;
};

/// Discounted contribution of first bits x_1^0 .. x_1^{t-2} at time t,
/// sum_{tau=2}^{t} e^{-t+tau-1} x_1^{tau-2}. Lies in [0, 1/(e-1)].
double online_residual(const OnlineHistory& history);

/// Online objective at time t: residual plus onemax01 of the last two steps.
/// Requires t >= 2.
double online_objective(const OnlineHistory& history);

/// Incremental form of online_residual: R_t = e^{-1} (R_{t-1} + x_1^{t-2}).
class OnlineResidual {
public:
    /// Advances from t-1 to t given the first bit of x^{t-2}.
    void advance(bool first_bit_two_back) noexcept;
    double value() const noexcept { return value_; }

private:
    double value_ = 0.0;
};

}  // namespace tlea

#endif  // TLEA_FITNESS_HPP
