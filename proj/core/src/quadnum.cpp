#include "seidel/quadnum.hpp"

#include <cctype>
#include <stdexcept>

#include "seidel/numthy.hpp"

namespace seidel {

QuadNum::QuadNum(const Rat& rational_part, const Rat& surd_part, unsigned long radicand)
    : rat_(rational_part), surd_(surd_part), d_(radicand) {
    if (d_ == 1) {
        rat_ += surd_;
        surd_ = 0;
        d_ = 0;
        return;
    }
    if (sgn(surd_) == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0) throw std::invalid_argument("QuadNum: nonzero surd part with radicand 0");
    if (!is_squarefree(Int(d_)))
        throw std::invalid_argument("QuadNum: radicand must be square-free");
}

void QuadNum::normalize() {
    if (sgn(surd_) == 0) d_ = 0;
}

unsigned long QuadNum::common_radicand(const QuadNum& a, const QuadNum& b) {
    if (a.d_ == 0) return b.d_;
    if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
    throw std::invalid_argument("QuadNum: mixed radicands " + std::to_string(a.d_) +
                                " and " + std::to_string(b.d_));
}

int QuadNum::sign() const {
    const int sa = sgn(rat_), sb = sgn(surd_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |a| with |b|*sqrt(D) via a^2 vs b^2 D.
    Rat diff = rat_ * rat_ - surd_ * surd_ * Rat(static_cast<long>(d_));
    int t = sgn(diff);
    return sa > 0 ? t : -t;
}

QuadNum QuadNum::operator-() const {
    QuadNum r = *this;
    r.rat_ = -r.rat_;
    r.surd_ = -r.surd_;
    return r;
}

QuadNum QuadNum::conjugate() const {
    QuadNum r = *this;
    r.surd_ = -r.surd_;
    return r;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    d_ = common_radicand(*this, o);
    rat_ += o.rat_;
    surd_ += o.surd_;
    normalize();
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    d_ = common_radicand(*this, o);
    rat_ -= o.rat_;
    surd_ -= o.surd_;
    normalize();
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    unsigned long d = common_radicand(*this, o);
    Rat D(static_cast<long>(d));
    Rat nr = rat_ * o.rat_ + surd_ * o.surd_ * D;
    Rat ns = rat_ * o.surd_ + surd_ * o.rat_;
    rat_ = nr;
    surd_ = ns;
    d_ = d;
    normalize();
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
    if (o.sign() == 0) throw std::invalid_argument("QuadNum: division by zero");
    unsigned long d = common_radicand(*this, o);
    Rat D(static_cast<long>(d));
    Rat norm = o.rat_ * o.rat_ - o.surd_ * o.surd_ * D;
    // norm is nonzero: sqrt(D) is irrational for square-free D >= 2.
    QuadNum inv;
    inv.rat_ = o.rat_ / norm;
    inv.surd_ = -o.surd_ / norm;
    inv.d_ = d;
    inv.normalize();
    return *this *= inv;
}

Int QuadNum::floor() const {
    if (is_rational()) return floor_rat(rat_);
    // Estimate sqrt(D) to ~2^-32 and fix up with exact sign checks.
    const unsigned long scale_bits = 32;
    Int scaled = Int(d_) << (2 * scale_bits);
    Rat approx_sqrt = make_rat(isqrt(scaled), Int(1) << scale_bits);
    Int k = floor_rat(rat_ + surd_ * approx_sqrt);
    while ((*this - QuadNum(Rat(k + 1))).sign() >= 0) ++k;
    while ((*this - QuadNum(Rat(k))).sign() < 0) --k;
    return k;
}

Int QuadNum::ceil() const { return -(-*this).floor(); }

namespace {

std::string rat_str(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool peek_word(std::string_view w) {
        skip_ws();
        return s.substr(pos, w.size()) == w;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("QuadNum::parse: expected integer");
        return Int(std::string(s.substr(start, pos - start)));
    }
    Rat rational() {
        Int num = integer();
        if (eat('/')) return make_rat(num, integer());
        return Rat(num);
    }
    unsigned long sqrt_radicand() {
        // at "sqrt(".
        pos += 4;
        if (!eat('(')) throw std::invalid_argument("QuadNum::parse: expected '('");
        Int d = integer();
        if (!eat(')')) throw std::invalid_argument("QuadNum::parse: expected ')'");
        return d.get_ui();
    }
};

}  // namespace

std::string QuadNum::str() const {
    if (is_rational()) return rat_str(rat_);
    std::string out;
    bool have_rat = sgn(rat_) != 0;
    if (have_rat) out = rat_str(rat_);
    Rat c = surd_;
    if (sgn(c) < 0) {
        out += "-";
        c = -c;
    } else if (have_rat) {
        out += "+";
    }
    if (c != 1) out += rat_str(c) + "*";
    out += "sqrt(" + std::to_string(d_) + ")";
    return out;
}

QuadNum QuadNum::parse(std::string_view sv) {
    Parser p{sv};
    Rat rat = 0, surd = 0;
    unsigned long d = 0;
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= p.s.size()) break;
        int sign = 1;
        if (p.eat('+')) {
            sign = 1;
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("QuadNum::parse: expected '+' or '-'");
        }
        first = false;
        p.skip_ws();
        if (p.peek_word("sqrt")) {
            unsigned long rad = p.sqrt_radicand();
            if (d != 0 && d != rad) throw std::invalid_argument("QuadNum::parse: mixed radicands");
            d = rad;
            surd += Rat(sign);
        } else if (p.peek_digit()) {
            Rat coef = p.rational();
            p.skip_ws();
            if (p.eat('*')) {
                if (!p.peek_word("sqrt"))
                    throw std::invalid_argument("QuadNum::parse: expected sqrt after '*'");
                unsigned long rad = p.sqrt_radicand();
                if (d != 0 && d != rad)
                    throw std::invalid_argument("QuadNum::parse: mixed radicands");
                d = rad;
                surd += Rat(sign) * coef;
            } else {
                rat += Rat(sign) * coef;
            }
        } else {
            throw std::invalid_argument("QuadNum::parse: unexpected character in \"" +
                                        std::string(sv) + "\"");
        }
    }
    if (first) throw std::invalid_argument("QuadNum::parse: empty input");
    if (sgn(surd) == 0) return QuadNum(rat);
    return QuadNum(rat, surd, d);
}

}  // namespace seidel
