// Coefficient field descriptors: the rationals or a prime field GF(p).

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tvb {

struct Field {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    int p = 0;

    static Field rationals() { return Field{Kind::rationals, 0}; }
    static Field gf(int p);

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind == b.kind && a.p == b.p;
    }
};

/// Accepts "q"/"Q" for the rationals and "gf2"/"GF(3)"/"f5"-style prime
/// field tokens. Empty optional on anything else.
std::optional<Field> parse_field(const std::string& token);

std::vector<Field> default_fields();  // Q, GF(2)
std::vector<Field> all_fields();      // Q, GF(2), GF(3), GF(5)

}  // namespace tvb
