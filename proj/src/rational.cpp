#include "qlie/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qlie {

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    std::string num_s(num);
    if (num_s[0] == '+') {
        num_s.erase(0, 1);
    }
    mpz_class n(num_s, 10);
    mpz_class d{std::string(den), 10};
    if (d == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace qlie
