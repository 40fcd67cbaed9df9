#include "cofil/ring.hpp"

#include "cofil/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace cofil {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int floor_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += boost::multiprecision::abs(m);
    return r;
}

} // namespace

Ring Ring::zp(unsigned p) {
    if (!is_prime(p))
        throw InvalidModulus("zp modulus " + std::to_string(p) + " is not prime");
    return Ring(RingTag::Zp, p);
}

Rat Ring::normalize(const Rat& v) const {
    switch (tag_) {
    case RingTag::Q:
        return v; // cpp_rational is always in lowest terms
    case RingTag::Z:
        if (denominator(v) != 1)
            throw RingMismatch("value " + v.str() + " is not an integer");
        return v;
    case RingTag::Zp: {
        Int p(p_);
        Int den = denominator(v);
        Int den_mod = floor_mod(den, p);
        if (den_mod == 0)
            throw RingMismatch("denominator of " + v.str() + " vanishes mod " +
                               std::to_string(p_));
        Int num = floor_mod(numerator(v), p);
        return Rat(floor_mod(num * mod_inverse(den_mod, p), p));
    }
    }
    return v;
}

Rat Ring::add(const Rat& a, const Rat& b) const {
    Rat r = a + b;
    return tag_ == RingTag::Zp ? normalize(r) : r;
}

Rat Ring::sub(const Rat& a, const Rat& b) const {
    Rat r = a - b;
    return tag_ == RingTag::Zp ? normalize(r) : r;
}

Rat Ring::mul(const Rat& a, const Rat& b) const {
    Rat r = a * b;
    return tag_ == RingTag::Zp ? normalize(r) : r;
}

Rat Ring::neg(const Rat& a) const {
    return tag_ == RingTag::Zp ? normalize(-a) : Rat(-a);
}

bool Ring::divides(const Rat& a, const Rat& b) const {
    if (a == 0) return b == 0;
    if (is_field()) return true;
    return numerator(b) % numerator(a) == 0;
}

Rat Ring::exact_div(const Rat& a, const Rat& b) const {
    if (b == 0) throw Error("division by zero");
    if (tag_ == RingTag::Zp) return mul(a, Rat(mod_inverse(numerator(normalize(b)), Int(p_))));
    if (tag_ == RingTag::Q) return a / b;
    if (!divides(b, a))
        throw Error("exact_div: " + b.str() + " does not divide " + a.str());
    return Rat(numerator(a) / numerator(b));
}

std::pair<Rat, Rat> Ring::euclid_div(const Rat& a, const Rat& b) const {
    if (b == 0) throw Error("euclid_div by zero");
    if (is_field()) return {exact_div(a, b), Rat(0)};
    Int q, r;
    boost::multiprecision::divide_qr(numerator(a), numerator(b), q, r);
    if (r < 0) { // make the remainder nonnegative
        if (numerator(b) > 0) { q -= 1; r += numerator(b); }
        else                  { q += 1; r -= numerator(b); }
    }
    return {Rat(q), Rat(r)};
}

bool Ring::is_unit(const Rat& a) const {
    if (is_field()) return a != 0 && normalize(a) != 0;
    return a == 1 || a == -1;
}

std::string Ring::name() const {
    switch (tag_) {
    case RingTag::Z: return "z";
    case RingTag::Q: return "q";
    case RingTag::Zp: return "zp:" + std::to_string(p_);
    }
    return "?";
}

Ring Ring::parse(const std::string& text) {
    if (text == "z" || text == "Z") return z();
    if (text == "q" || text == "Q") return q();
    if (text.rfind("zp:", 0) == 0 || text.rfind("Zp:", 0) == 0) {
        unsigned long p = 0;
        try {
            p = std::stoul(text.substr(3));
        } catch (const std::exception&) {
            throw Error("cannot parse ring '" + text + "'");
        }
        return zp(static_cast<unsigned>(p));
    }
    throw Error("cannot parse ring '" + text + "' (expected z, q, or zp:<p>)");
}

Int mod_inverse(const Int& a, const Int& m) {
    // extended Euclid on (a mod m, m)
    Int old_r = floor_mod(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
    }
    if (old_r != 1)
        throw Error("no inverse of " + a.str() + " mod " + m.str());
    return floor_mod(old_s, m);
}

} // namespace cofil
