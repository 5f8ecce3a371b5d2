#include "hplane/rational.hpp"

#include <cctype>

namespace hplane {

Rational Rational::from_string(const std::string& text) {
    auto bad = [&](const char* why) {
        throw std::invalid_argument("Rational: cannot parse \"" + text + "\": " + why);
    };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) bad("expected digits");
    // explicit base 10: the auto-detecting mpz constructor reads "09" as bad octal
    mpz_class num(text.substr(0, i), 10);
    if (i == text.size()) return Rational(std::move(num), mpz_class(1));
    if (text[i] != '/') bad("unexpected character");
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) bad("expected positive denominator");
    mpz_class den(text.substr(den_begin), 10);
    if (den == 0) bad("zero denominator");
    return Rational(std::move(num), std::move(den));
}

}  // namespace hplane
