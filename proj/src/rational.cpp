#include "nilorb/rational.hpp"

#include <string>

#include "nilorb/errors.hpp"

namespace nilorb {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw InputError("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw InputError("malformed rational literal: " + s);
    Integer n(num[0] == '+' ? num.substr(1) : num);
    Integer d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw InputError("zero denominator: " + s);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace nilorb
