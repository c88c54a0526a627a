#pragma once

#include <string>
#include <string_view>

#include "seidel/rational.hpp"

namespace seidel {

// Element a + b*sqrt(D) of a real quadratic field, with exact comparisons.
// D is a square-free integer >= 2, or 0 for purely rational values.  Two
// values interoperate only when their radicands agree or one side is
// rational; mixing distinct radicands is an error.
class QuadNum {
  public:
    QuadNum() = default;
    QuadNum(const Rat& r) : rat_(r) {}
    QuadNum(const Int& n) : rat_(n) {}
    QuadNum(long n) : rat_(n) {}
    QuadNum(const Rat& rational_part, const Rat& surd_part, unsigned long radicand);

    const Rat& rational_part() const { return rat_; }
    const Rat& surd_part() const { return surd_; }
    unsigned long radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    // Exact sign in {-1, 0, +1}; never approximates.
    int sign() const;

    QuadNum operator-() const;
    QuadNum conjugate() const;  // a - b*sqrt(D)
    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);

    Int floor() const;
    Int ceil() const;

    std::string str() const;
    // Accepts e.g. "7", "-5/2", "10-sqrt(5)", "11/592+7/6512*sqrt(33)".
    static QuadNum parse(std::string_view s);

  private:
    Rat rat_;
    Rat surd_;
    unsigned long d_ = 0;

    static unsigned long common_radicand(const QuadNum& a, const QuadNum& b);
    void normalize();
};

inline QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
inline QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
inline QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
inline QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }

inline int quad_sign(const QuadNum& x) { return x.sign(); }

inline bool operator==(const QuadNum& a, const QuadNum& b) { return (a - b).sign() == 0; }
inline bool operator!=(const QuadNum& a, const QuadNum& b) { return (a - b).sign() != 0; }
inline bool operator<(const QuadNum& a, const QuadNum& b) { return (a - b).sign() < 0; }
inline bool operator<=(const QuadNum& a, const QuadNum& b) { return (a - b).sign() <= 0; }
inline bool operator>(const QuadNum& a, const QuadNum& b) { return (a - b).sign() > 0; }
inline bool operator>=(const QuadNum& a, const QuadNum& b) { return (a - b).sign() >= 0; }

}  // namespace seidel
