#include "polybounds/format.hpp"

#include <stdexcept>

namespace polybounds {

namespace {

std::string term_magnitude(long e, const BigRational& q_abs) {
    if (e == 0) return q_abs.to_string();
    const std::string power = "pi^" + std::to_string(e);
    if (q_abs == BigRational(1)) return power;
    return q_abs.to_string() + "*" + power;
}

// One term of the grammar: [rational]['*']['pi'['^'exp]].
void parse_term(const std::string& tok, bool negative, PiConstant& out) {
    if (tok.empty()) throw std::invalid_argument("parse_exact: empty term");

    BigRational q(1);
    long e = 0;
    std::string rest = tok;

    const size_t pi_pos = rest.find("pi");
    if (pi_pos != std::string::npos) {
        std::string head = rest.substr(0, pi_pos);
        std::string tail = rest.substr(pi_pos + 2);
        if (!head.empty()) {
            if (head.back() == '*') head.pop_back();
            if (head.empty()) throw std::invalid_argument("parse_exact: bad term '" + tok + "'");
            q = BigRational::from_string(head);
        }
        if (tail.empty()) {
            e = 1;
        } else {
            if (tail[0] != '^') throw std::invalid_argument("parse_exact: bad pi power in '" + tok + "'");
            size_t used = 0;
            e = std::stol(tail.substr(1), &used);
            if (used != tail.size() - 1)
                throw std::invalid_argument("parse_exact: bad pi exponent in '" + tok + "'");
        }
    } else {
        q = BigRational::from_string(rest);
    }
    if (negative) q = -q;
    out += PiConstant::pi_power(e, q);
}

}  // namespace

std::string to_exact_string(const PiConstant& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, q] : c.terms()) {
        const bool neg = q.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_magnitude(e, q.abs());
    }
    return out;
}

PiConstant parse_exact(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_exact: empty input");
    if (s == "0") return PiConstant();

    PiConstant out;
    size_t pos = 0;
    bool negative = false;
    if (s[0] == '-') {
        negative = true;
        pos = 1;
    }
    while (pos < s.size()) {
        size_t next_plus = s.find(" + ", pos);
        size_t next_minus = s.find(" - ", pos);
        size_t next = std::min(next_plus, next_minus);
        parse_term(s.substr(pos, next == std::string::npos ? next : next - pos), negative, out);
        if (next == std::string::npos) break;
        negative = next == next_minus;
        pos = next + 3;
        if (pos >= s.size()) throw std::invalid_argument("parse_exact: dangling operator in '" + s + "'");
    }
    return out;
}

std::string to_decimal_string(const PiConstant& c, mpfr_prec_t precision, size_t digits) {
    return pi_eval(c, precision).to_string(digits);
}

}  // namespace polybounds
