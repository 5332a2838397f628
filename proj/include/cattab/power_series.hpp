#pragma once

#include "cattab/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace cattab {

// Truncated formal power series with exact integer coefficients. Every
// operation truncates to the shorter operand, so identities checked through
// this type are coefficient-exact up to the stated order.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    }

    static PowerSeries monomial(int order, int degree, Integer scale = 1) {
        PowerSeries s(order);
        if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(scale);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Integer& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    void set_coeff(int i, Integer value) {
        coeffs_.at(static_cast<std::size_t>(i)) = std::move(value);
    }

    bool is_zero() const {
        for (const Integer& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // Division by x; requires a vanishing constant term. The result keeps the
    // same order with an unknown top coefficient, so it is truncated one lower.
    PowerSeries shifted_down() const {
        if (coeffs_[0] != 0) throw std::invalid_argument("shifted_down: constant term nonzero");
        PowerSeries out(order() - 1);
        for (int i = 0; i < static_cast<int>(coeffs_.size()) - 1; ++i)
            out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i) + 1];
        return out;
    }

    PowerSeries truncated(int order) const {
        PowerSeries out(order);
        for (int i = 0; i <= order && i <= this->order(); ++i)
            out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
        return out;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i)
            out.coeffs_[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
        return out;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i)
            out.coeffs_[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries out(std::min(a.order(), b.order()));
        const int n = out.order();
        for (int i = 0; i <= std::min(a.order(), n); ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = 0; j <= std::min(b.order(), n - i); ++j) {
                out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return out;
    }

    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<Integer> coeffs_;
};

}  // namespace cattab
