#include "qgi/quaternion.hpp"

#include <cctype>
#include <sstream>

namespace qgi {

Rational parse_rational(const std::string& text) {
    // Grammar: [+-]? digits ( '/' digits )? with nonzero denominator.
    const auto fail = [&](const char* why) -> Rational {
        throw ParseError("bad rational \"" + text + "\": " + why);
    };
    if (text.empty()) fail("empty");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) fail("missing numerator digits");
    if (pos < text.size()) {
        if (text[pos] != '/') fail("unexpected character");
        ++pos;
        std::size_t den_digits = 0;
        bool den_nonzero = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] != '0') den_nonzero = true;
            ++pos;
            ++den_digits;
        }
        if (den_digits == 0) fail("missing denominator digits");
        if (pos != text.size()) fail("trailing characters");
        if (!den_nonzero) fail("zero denominator");
    }
    Rational value;
    const std::string digits_only = text[0] == '+' ? text.substr(1) : text;
    if (value.set_str(digits_only, 10) != 0) fail("not a rational");
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

void Quaternion::canonicalize_components() {
    for (Rational* part : {&w_, &x_, &y_, &z_}) {
        if (sgn(part->get_den()) == 0)
            throw DivisionByZero("quaternion component with zero denominator");
        part->canonicalize();
    }
}

bool Quaternion::is_zero() const {
    return sgn(w_) == 0 && sgn(x_) == 0 && sgn(y_) == 0 && sgn(z_) == 0;
}

bool Quaternion::is_real() const {
    return sgn(x_) == 0 && sgn(y_) == 0 && sgn(z_) == 0;
}

bool Quaternion::is_complex() const {
    return sgn(y_) == 0 && sgn(z_) == 0;
}

Quaternion Quaternion::conjugate() const {
    return {w_, -x_, -y_, -z_};
}

Rational Quaternion::norm2() const {
    Rational n = w_ * w_;
    n += x_ * x_;
    n += y_ * y_;
    n += z_ * z_;
    return n;
}

Quaternion Quaternion::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero quaternion");
    const Rational n = norm2();
    return {w_ / n, -x_ / n, -y_ / n, -z_ / n};
}

Quaternion Quaternion::operator-() const {
    return {-w_, -x_, -y_, -z_};
}

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
    w_ += rhs.w_;
    x_ += rhs.x_;
    y_ += rhs.y_;
    z_ += rhs.z_;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
    w_ -= rhs.w_;
    x_ -= rhs.x_;
    y_ -= rhs.y_;
    z_ -= rhs.z_;
    return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& rhs) {
    // Hamilton product. Operand order matters everywhere downstream, so the
    // factor order here is the one fixed point of the whole library.
    Rational w = w_ * rhs.w_ - x_ * rhs.x_ - y_ * rhs.y_ - z_ * rhs.z_;
    Rational x = w_ * rhs.x_ + x_ * rhs.w_ + y_ * rhs.z_ - z_ * rhs.y_;
    Rational y = w_ * rhs.y_ - x_ * rhs.z_ + y_ * rhs.w_ + z_ * rhs.x_;
    Rational z = w_ * rhs.z_ + x_ * rhs.y_ - y_ * rhs.x_ + z_ * rhs.w_;
    w_ = std::move(w);
    x_ = std::move(x);
    y_ = std::move(y);
    z_ = std::move(z);
    return *this;
}

Quaternion Quaternion::operator*(const Rational& scalar) const {
    return {w_ * scalar, x_ * scalar, y_ * scalar, z_ * scalar};
}

Quaternion Quaternion::operator/(const Rational& scalar) const {
    if (sgn(scalar) == 0) throw DivisionByZero("division of quaternion by zero scalar");
    return {w_ / scalar, x_ / scalar, y_ / scalar, z_ / scalar};
}

std::string Quaternion::str() const {
    static const char* units[4] = {"", "i", "j", "k"};
    const Rational* parts[4] = {&w_, &x_, &y_, &z_};
    std::ostringstream out;
    bool first = true;
    for (int t = 0; t < 4; ++t) {
        const Rational& c = *parts[t];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (t == 0 || mag != 1) out << mag.get_str();
        out << units[t];
    }
    if (first) out << "0";
    return out.str();
}

} // namespace qgi
