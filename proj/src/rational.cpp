#include "deltacert/rational.hpp"

#include <cctype>
#include <ostream>

namespace deltacert {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw RationalError("empty string is not a rational");
    auto check_int = [&](const std::string& part, const char* role) {
        if (part.empty()) throw RationalError(std::string("rational with empty ") + role + ": '" + s + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw RationalError("rational with bare sign: '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw RationalError("malformed rational: '" + s + "'");
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s, "numerator");
        return Rational(mpq_class(mpz_class(s), 1));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (den.find('/') != std::string::npos) throw RationalError("malformed rational: '" + s + "'");
    check_int(num, "numerator");
    check_int(den, "denominator");
    mpz_class d(den);
    if (d == 0) throw RationalError("rational with zero denominator: '" + s + "'");
    return Rational(mpz_class(num), d);
}

std::string Rational::str_frac() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str() const {
    return is_integer() ? v_.get_num().get_str() : str_frac();
}

std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.str();
}

} // namespace deltacert
