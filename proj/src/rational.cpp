#include <connprob/rational.hpp>

#include <cctype>

namespace connprob {

std::string to_decimal(const Rational& r, int digits) {
    if (digits < 0) throw DomainError("decimal digits must be >= 0");
    const bool negative = r < 0;
    Rational a = negative ? Rational(-r) : r;
    // round(|r| * 10^digits), half away from zero
    Integer scale = int_pow(Integer(10), static_cast<unsigned long>(digits));
    Integer num = a.get_num() * scale * 2 + a.get_den();  // 2*scaled + 1 denominator
    Integer q = num / (a.get_den() * 2);
    std::string s = q.get_str();
    if (digits == 0) return (negative && q != 0 ? "-" : "") + s;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (negative && q != 0) s.insert(0, "-");
    return s;
}

Integer parse_integer(const std::string& s) {
    std::string t = s;
    // strip surrounding whitespace
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("empty integer literal");
    t = t.substr(b, e - b + 1);
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ValidationError("bad integer literal '" + s + "'");
    for (size_t j = i; j < t.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(t[j])))
            throw ValidationError("bad integer literal '" + s + "'");
    return Integer(t);
}

}  // namespace connprob
