#include "pivotseq/rational.hpp"

#include "pivotseq/errors.hpp"

namespace pivotseq {

std::string to_string(const Rational& value) {
    return value.str();
}

Rational parse_rational(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw ParseError("empty rational literal");
    }
    const auto last = text.find_last_not_of(" \t\r\n");
    const std::string body = text.substr(first, last - first + 1);

    const auto slash = body.find('/');
    Integer num;
    Integer den;
    try {
        if (slash == std::string::npos) {
            num = Integer(body);
            den = 1;
        } else {
            num = Integer(body.substr(0, slash));
            den = Integer(body.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal: \"" + text + "\"");
    }
    if (den == 0) {
        throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    }
    // The two-integer constructor canonicalizes (sign and gcd); the string
    // constructor of the underlying type does not, so it is never used on
    // the p/q form directly.
    return Rational(num, den);
}

} // namespace pivotseq
