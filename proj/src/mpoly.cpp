#include "framix/mpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace framix {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && s[i] == ' ') ++i;
    }
};

[[noreturn]] void fail(const Cursor& c, const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(c.i) + ": " + what);
}

long parse_int(Cursor& c) {
    size_t start = c.i;
    if (!c.done() && (c.peek() == '-' || c.peek() == '+')) ++c.i;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
    if (c.i == start || (c.i == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start])))) fail(c, "expected integer");
    return std::stol(c.s.substr(start, c.i - start));
}

Rational parse_rat(Cursor& c) {
    long num = parse_int(c);
    if (!c.done() && c.peek() == '/') {
        ++c.i;
        long den = parse_int(c);
        return Rational(num) / Rational(den);
    }
    return Rational(num);
}

// one product of factors: [rational] {* var[^int]} or bare var[^int]
void parse_term(Cursor& c, bool negate, QSEPoly& out) {
    Rational coef(1);
    QSEPoly::Exps exps{0, 0, 0};
    bool first_factor = true;
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        char ch = c.peek();
        if (first_factor && (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-')) {
            coef = parse_rat(c);
        } else if (ch == 'q' || ch == 's' || ch == 'E') {
            ++c.i;
            int slot = ch == 'q' ? 0 : ch == 's' ? 1 : 2;
            int e = 1;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                e = static_cast<int>(parse_int(c));
            }
            exps[slot] += e;
        } else {
            fail(c, std::string("unexpected character '") + ch + "'");
        }
        first_factor = false;
        c.skip_ws();
        if (!c.done() && c.peek() == '*') {
            ++c.i;
            continue;
        }
        break;
    }
    if (first_factor) fail(c, "empty term");
    out.add_term(exps, negate ? -coef : coef);
}

}  // namespace

QSEPoly parse_qse(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) fail(c, "empty input");
    QSEPoly out;
    if (text == "0") return out;
    bool negate = false;
    if (c.peek() == '-') {
        negate = true;
        ++c.i;
    }
    for (;;) {
        parse_term(c, negate, out);
        c.skip_ws();
        if (c.done()) break;
        char op = c.peek();
        if (op != '+' && op != '-') fail(c, "expected '+' or '-' between terms");
        negate = op == '-';
        ++c.i;
        c.skip_ws();
    }
    return out;
}

std::string latex_qse(const QSEPoly& p) {
    if (p.is_zero_poly()) return "0";
    static const char* names[3] = {"q", "s", "E"};
    std::vector<std::pair<QSEPoly::Exps, Rational>> sorted(p.terms().begin(), p.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::array<int, 3>{a.first[1], a.first[2], a.first[0]} <
               std::array<int, 3>{b.first[1], b.first[2], b.first[0]};
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Rational a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string cs;
        if (boost::multiprecision::denominator(a) == 1) {
            cs = boost::multiprecision::numerator(a).str();
        } else {
            cs = "\\frac{" + boost::multiprecision::numerator(a).str() + "}{" +
                 boost::multiprecision::denominator(a).str() + "}";
        }
        bool any = e[0] != 0 || e[1] != 0 || e[2] != 0;
        if (!any) {
            out << cs;
        } else {
            if (cs != "1") out << cs << " ";
            for (int i : {0, 1, 2}) {
                if (e[i] == 0) continue;
                out << names[i];
                if (e[i] != 1) out << "^{" << e[i] << "}";
            }
        }
    }
    return out.str();
}

}  // namespace framix
