#include "unav/rational.hpp"

#include "unav/errors.hpp"

#include <cctype>
#include <cstddef>

namespace unav {

const Rat& euler_lo() {
    static const Rat value(BigInt("271828182845904523536028747135266249"),
                           ipow(BigInt(10), 35));
    return value;
}

const Rat& euler_hi() {
    static const Rat value(BigInt("271828182845904523536028747135266250"),
                           ipow(BigInt(10), 35));
    return value;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Digits-only payload after an optional leading '-' has been stripped.
Rat parse_unsigned_body(const std::string& body, const std::string& original) {
    std::size_t slash = body.find('/');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw FormatError(0, 0, "malformed rational '" + original + "'");
        }
        BigInt d(den);
        if (d == 0) throw FormatError(0, 0, "zero denominator in '" + original + "'");
        return Rat(BigInt(num), d);
    }
    std::size_t dot = body.find('.');
    if (dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) {
            throw FormatError(0, 0, "malformed rational '" + original + "'");
        }
        BigInt scale = ipow(BigInt(10), static_cast<unsigned>(frac.size()));
        return Rat(BigInt(whole) * scale + BigInt(frac.empty() ? "0" : frac), scale);
    }
    if (!all_digits(body)) {
        throw FormatError(0, 0, "malformed rational '" + original + "'");
    }
    return Rat(BigInt(body));
}

}  // namespace

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw FormatError(0, 0, "empty rational");
    bool negative = text[0] == '-';
    Rat value = parse_unsigned_body(negative ? text.substr(1) : text, text);
    return negative ? -value : value;
}

std::string format_rat(const Rat& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

BigInt floor_rat(const Rat& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

BigInt ceil_rat(const Rat& value) {
    return -floor_rat(-value);
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw UnavError("rat_pow: zero base with negative exponent");
        return 1 / rat_pow(base, -exp);
    }
    Rat result(1);
    Rat b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt result(1);
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0) throw UnavError("binomial: negative n");
    if (n < k) return BigInt(0);
    BigInt result(1);
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - (i - 1);
        result /= i;
    }
    return result;
}

BigInt ceil_scaled_exp_ratio(const Rat& alpha, unsigned k, const BigInt& b) {
    Rat lo = rat_pow(alpha / euler_hi(), static_cast<long>(k)) * b;
    Rat hi = rat_pow(alpha / euler_lo(), static_cast<long>(k)) * b;
    BigInt clo = ceil_rat(lo);
    BigInt chi = ceil_rat(hi);
    if (clo != chi) {
        throw UnavError("Euler enclosure too coarse for ceil((alpha/e)^k*b) with alpha=" +
                        format_rat(alpha) + " k=" + std::to_string(k));
    }
    return clo;
}

bool int_at_least_scaled_e_pow(const BigInt& value, const Rat& coeff, unsigned k) {
    return Rat(value) >= coeff * rat_pow(euler_hi(), static_cast<long>(k));
}

bool drc_inequality_holds(const Rat& delta, const BigInt& size_b,
                          const BigInt& size_a, unsigned r, unsigned s,
                          const BigInt& m, const BigInt& a) {
    if (size_a <= 0) return false;
    Rat gain = Rat(size_b) * rat_pow(delta / euler_hi(), static_cast<long>(r));
    Rat loss = Rat(ipow(size_b, s) * ipow(m, r), ipow(size_a, r));
    return gain - loss >= Rat(a);
}

}  // namespace unav
