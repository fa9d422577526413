#include "hadstar/rational.hpp"

#include <cctype>

namespace hadstar {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat rat_parse(std::string_view text, const std::string& where) {
    auto fail = [&](const std::string& why) -> Rat {
        std::string loc = where.empty() ? std::string() : where + ": ";
        throw InputError(loc + "bad rational '" + std::string(text) + "' (" + why + ")");
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer_literal(num) || !is_integer_literal(den))
        return fail("expected 'p' or 'p/q' with integer p, q");
    Int n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return fail("zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

void make_primitive(std::vector<Rat>& v) {
    Int den_lcm = 1;
    bool any = false;
    for (const Rat& x : v) {
        if (x != 0) {
            any = true;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        }
    }
    if (!any) return;
    Int content = 0;
    for (Rat& x : v) {
        x *= den_lcm;  // now an integer
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
    }
    int lead = 0;
    for (const Rat& x : v) {
        if (x != 0) {
            lead = rat_sign(x);
            break;
        }
    }
    if (lead < 0) content = -content;
    for (Rat& x : v) {
        x /= content;
        x.canonicalize();
    }
}

std::vector<Rat> primitive(std::vector<Rat> v) {
    make_primitive(v);
    return v;
}

}  // namespace hadstar
