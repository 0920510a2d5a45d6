#ifndef PERIODS_NUMKERNEL_TRUNC_SERIES_HPP
#define PERIODS_NUMKERNEL_TRUNC_SERIES_HPP

#include "periods/numkernel/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace periods {

// Truncated Laurent series sum_{k >= val} c_k z^k + O(z^order).
// Coefficients of degree >= order are unknown; asking for one is an OrderError.
template <class T>
class TruncSeries {
public:
    TruncSeries() = default;
    // Exact zero known through `order`.
    explicit TruncSeries(int order) : order_(order) {}
    TruncSeries(int val, std::vector<T> coeffs, int order) : val_(val), c_(std::move(coeffs)), order_(order)
    {
        normalize();
    }
    static TruncSeries monomial(const T& c, int degree, int order)
    {
        return TruncSeries(degree, std::vector<T>{c}, order);
    }

    int order() const { return order_; }
    // Valuation of the stored part (first non-zero known coefficient).
    int val() const { return val_; }
    bool is_zero_known() const { return c_.empty(); }

    T coeff(int k) const
    {
        if (k >= order_)
            throw OrderError("coefficient z^" + std::to_string(k) + " beyond truncation order " +
                             std::to_string(order_));
        int i = k - val_;
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(i)];
    }

    TruncSeries derivative() const
    {
        std::vector<T> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * T(val_ + static_cast<int>(i));
        return TruncSeries(val_ - 1, std::move(v), order_ - 1);
    }

    // Antiderivative with zero constant term; a non-zero z^-1 term is a DomainError.
    TruncSeries antiderivative() const
    {
        std::vector<T> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int k = val_ + static_cast<int>(i);
            if (k == -1) {
                if (c_[i] != T(0)) throw DomainError("antiderivative of a series with a residue");
                continue;
            }
            v[i] = c_[i] / T(k + 1);
        }
        return TruncSeries(val_ + 1, std::move(v), order_ + 1);
    }

    // 1/s; needs a known non-zero leading coefficient.
    TruncSeries inverse() const
    {
        if (c_.empty()) throw OrderError("inverse of a series with no known non-zero term");
        const int rel = order_ - val_;
        std::vector<T> inv(static_cast<std::size_t>(rel));
        const T lead = c_[0];
        inv[0] = T(1) / lead;
        for (int n = 1; n < rel; ++n) {
            T s(0);
            for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k)
                s += c_[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
            inv[static_cast<std::size_t>(n)] = -s / lead;
        }
        return TruncSeries(-val_, std::move(inv), -val_ + rel);
    }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        int order = std::min(order_, o.order_);
        if (c_.empty() && o.c_.empty()) {
            order_ = order;
            return *this;
        }
        int lo = c_.empty() ? o.val_ : (o.c_.empty() ? val_ : std::min(val_, o.val_));
        std::vector<T> v(static_cast<std::size_t>(std::max(order - lo, 0)));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int k = val_ + static_cast<int>(i);
            if (k < order) v[static_cast<std::size_t>(k - lo)] += c_[i];
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            int k = o.val_ + static_cast<int>(i);
            if (k < order) v[static_cast<std::size_t>(k - lo)] += o.c_[i];
        }
        *this = TruncSeries(lo, std::move(v), order);
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& o) { return *this += -o; }

    TruncSeries& operator*=(const TruncSeries& o)
    {
        if (c_.empty() || o.c_.empty()) {
            // Known zero times something: order follows the known valuations.
            int order = std::min(order_ + (o.c_.empty() ? o.order_ : o.val_),
                                 o.order_ + (c_.empty() ? order_ : val_));
            *this = TruncSeries(order);
            return *this;
        }
        int val = val_ + o.val_;
        int order = std::min(order_ + o.val_, o.order_ + val_);
        std::vector<T> v(static_cast<std::size_t>(std::max(order - val, 0)));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            for (std::size_t j = 0; j < o.c_.size() && i + j < v.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        *this = TruncSeries(val, std::move(v), order);
        return *this;
    }

    TruncSeries& operator*=(const T& s)
    {
        for (auto& c : c_) c *= s;
        normalize();
        return *this;
    }

    TruncSeries operator-() const
    {
        TruncSeries r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
    friend TruncSeries operator*(const T& s, TruncSeries a) { return a *= s; }

    TruncSeries pow(int n) const
    {
        if (n < 0) return inverse().pow(-n);
        TruncSeries r = monomial(T(1), 0, order_ - val_);
        TruncSeries b = *this;
        while (n > 0) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n > 0) b *= b;
        }
        return r;
    }

private:
    // Drop unknown terms and zero ends, keep val at the first non-zero term.
    void normalize()
    {
        if (static_cast<int>(c_.size()) > order_ - val_) c_.resize(static_cast<std::size_t>(std::max(order_ - val_, 0)));
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == T(0)) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<int>(lead);
        }
        if (c_.empty()) val_ = order_;
    }

    int val_ = 0;
    std::vector<T> c_;
    int order_ = 0;
};

} // namespace periods

#endif
