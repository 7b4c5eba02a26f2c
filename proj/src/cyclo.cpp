#include "hnl/cyclo.hpp"

#include <cmath>
#include <cstdlib>

namespace hnl {

std::string rational_to_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

std::complex<double> Cyclo::to_complex() const {
    static const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    double ra = boost::rational_cast<double>(a);
    double rb = boost::rational_cast<double>(b);
    return {ra - 0.5 * rb, half_sqrt3 * rb};
}

std::string Cyclo::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (a != Rational(0)) s = rational_to_string(a);
    if (b != Rational(0)) {
        if (!s.empty() && b > Rational(0)) s += "+";
        if (b == Rational(-1)) s += "-";
        else if (b != Rational(1)) s += rational_to_string(b);
        s += "w";
    }
    return s;
}

}  // namespace hnl
