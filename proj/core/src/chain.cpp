#include "cofil/chain.hpp"

#include "cofil/errors.hpp"

namespace cofil {

Chain Chain::unit(Ring ring, const Simplex& s) {
    Chain c(ring, s.dim());
    c.add_term(s, 1);
    return c;
}

Rat Chain::coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Chain::add_term(const Simplex& s, const Rat& coeff) {
    if (s.dim() != dim_)
        throw DimensionMismatch("term " + s.to_string() + " has dimension " +
                                std::to_string(s.dim()) + ", chain has " +
                                std::to_string(dim_));
    Rat v = ring_.normalize(coeff);
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(s, v);
    if (!inserted) {
        it->second = ring_.add(it->second, v);
        if (it->second == 0) terms_.erase(it);
    }
}

std::string Chain::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, coeff] : terms_) {
        if (coeff > 0) out += '+';
        if (coeff == -1) out += '-';
        else if (coeff != 1) out += coeff.str();
        out += s.to_string();
        out += ' ';
    }
    out.pop_back();
    return out;
}

Chain boundary(const Chain& c) {
    if (c.dim() < 1) return Chain(c.ring(), c.dim() - 1);
    Chain out(c.ring(), c.dim() - 1);
    for (const auto& [s, coeff] : c.terms()) {
        Rat sign = 1;
        for (std::size_t i = 0; i < s.vertices().size(); ++i) {
            out.add_term(s.face_dropping(i), c.ring().mul(sign, coeff));
            sign = -sign;
        }
    }
    return out;
}

Simplex leading_simplex(const Chain& c, const OrderedComplex& order) {
    if (c.is_zero()) throw ZeroChain("leading simplex of the zero chain");
    const Simplex* lead = nullptr;
    std::size_t lead_rank = 0;
    for (const auto& [s, coeff] : c.terms()) {
        std::size_t r = order.rank(s);
        if (!lead || r > lead_rank) {
            lead = &s;
            lead_rank = r;
        }
    }
    return *lead;
}

Chain chain_add(const Chain& a, const Chain& b) {
    if (a.ring() != b.ring())
        throw RingMismatch("adding chains over different rings");
    if (a.dim() != b.dim())
        throw DimensionMismatch("adding chains of different dimensions");
    Chain out = a;
    for (const auto& [s, coeff] : b.terms()) out.add_term(s, coeff);
    return out;
}

Chain chain_scale(const Chain& c, const Rat& lambda) {
    Chain out(c.ring(), c.dim());
    Rat l = c.ring().normalize(lambda);
    for (const auto& [s, coeff] : c.terms())
        out.add_term(s, c.ring().mul(coeff, l));
    return out;
}

Chain chain_negate(const Chain& c) { return chain_scale(c, -1); }

} // namespace cofil
