#include "gcx/rational.hpp"

#include <cctype>

namespace gcx {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed coefficient '" + text + "'");
    mpz_class num_z(num), den_z(den);
    if (den_z == 0) throw ParseError("zero denominator in coefficient '" + text + "'");
    Rational r{num_z, den_z};
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace gcx
