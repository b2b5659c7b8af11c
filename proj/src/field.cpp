#include "tvb/field.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tvb {

Field Field::gf(int p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be at least 2");
    for (int f = 2; f * f <= p; ++f)
        if (p % f == 0) throw std::invalid_argument("GF(p) needs a prime p");
    return Field{Kind::prime, p};
}

std::string Field::name() const {
    return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

std::optional<Field> parse_field(const std::string& token) {
    std::string t;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(std::tolower(static_cast<unsigned char>(c)));
    if (t == "q" || t == "rationals") return Field::rationals();
    for (const std::string& prefix : {std::string("gf("), std::string("gf"), std::string("f")}) {
        if (t.rfind(prefix, 0) == 0) {
            std::string digits = t.substr(prefix.size());
            if (!digits.empty() && digits.back() == ')') digits.pop_back();
            if (!digits.empty() &&
                std::all_of(digits.begin(), digits.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                try {
                    return Field::gf(std::stoi(digits));
                } catch (const std::exception&) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<Field> default_fields() { return {Field::rationals(), Field::gf(2)}; }

std::vector<Field> all_fields() {
    return {Field::rationals(), Field::gf(2), Field::gf(3), Field::gf(5)};
}

}  // namespace tvb
