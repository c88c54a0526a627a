#pragma once

#include <algorithm>

#include "seidel/rational.hpp"

namespace seidel {

// Closed rational interval for exact interval arithmetic.
struct QInterval {
    Rat lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
    static QInterval point(const Rat& x) { return QInterval(x, x); }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-() const { return {-hi, -lo}; }
    QInterval operator-(const QInterval& o) const { return *this + (-o); }

    QInterval operator*(const QInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
};

}  // namespace seidel
