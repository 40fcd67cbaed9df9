#ifndef COFIL_RING_HPP
#define COFIL_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace cofil {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingTag { Z, Q, Zp };

/// Exact coefficient ring: the integers, the rationals, or a prime field.
/// Elements are carried as exact rationals. Z and Zp values always have
/// denominator 1, and Zp residues are normalized into [0, p). Arithmetic
/// never touches floating point.
class Ring {
public:
    static Ring z() { return Ring(RingTag::Z, 0); }
    static Ring q() { return Ring(RingTag::Q, 0); }
    static Ring zp(unsigned p); // InvalidModulus unless p is prime

    RingTag tag() const { return tag_; }
    unsigned modulus() const { return p_; }
    bool is_field() const { return tag_ != RingTag::Z; }

    bool operator==(const Ring&) const = default;

    /// Canonical representative of v in this ring. Rejects values outside
    /// the ring (a proper fraction over Z, a fraction with denominator
    /// divisible by p over Zp).
    Rat normalize(const Rat& v) const;

    Rat add(const Rat& a, const Rat& b) const;
    Rat sub(const Rat& a, const Rat& b) const;
    Rat mul(const Rat& a, const Rat& b) const;
    Rat neg(const Rat& a) const;

    bool divides(const Rat& a, const Rat& b) const; // a | b
    Rat exact_div(const Rat& a, const Rat& b) const;
    /// a = q*b + r. Over Z this is floor division with 0 <= r < |b|;
    /// over a field the remainder is zero.
    std::pair<Rat, Rat> euclid_div(const Rat& a, const Rat& b) const;
    bool is_unit(const Rat& a) const;

    std::string name() const; // "z", "q", "zp:5"
    static Ring parse(const std::string& text);

private:
    Ring(RingTag tag, unsigned p) : tag_(tag), p_(p) {}

    RingTag tag_;
    unsigned p_;
};

/// Multiplicative inverse of a modulo m (m > 1, gcd(a, m) = 1).
Int mod_inverse(const Int& a, const Int& m);

} // namespace cofil

#endif
