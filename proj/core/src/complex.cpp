#include "cofil/complex.hpp"

#include "cofil/errors.hpp"

#include <algorithm>

namespace cofil {

// ----- Simplex --------------------------------------------------------------

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty())
        throw DuplicateVertexInSimplex("simplex needs at least one vertex");
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw DuplicateVertexInSimplex("repeated vertex in simplex " + to_string());
}

Simplex Simplex::collapsed(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Simplex s;
    s.verts_ = std::move(vertices);
    return s;
}

Simplex Simplex::face_dropping(std::size_t i) const {
    Simplex s;
    s.verts_ = verts_;
    s.verts_.erase(s.verts_.begin() + static_cast<std::ptrdiff_t>(i));
    return s;
}

std::vector<Simplex> Simplex::proper_faces() const {
    std::vector<Simplex> faces;
    const std::size_t n = verts_.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) f.verts_.push_back(verts_[i]);
        faces.push_back(std::move(f));
    }
    return faces;
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(),
                         verts_.end());
}

std::string Simplex::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(verts_[i]);
    }
    return out + "]";
}

bool default_order_less(const Simplex& a, const Simplex& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
}

// ----- OrderedComplex -------------------------------------------------------

OrderedComplex OrderedComplex::adopt_sorted(std::vector<Simplex> sorted) {
    OrderedComplex x;
    x.simplices_ = std::move(sorted);
    for (std::size_t i = 0; i < x.simplices_.size(); ++i) {
        if (!x.rank_.emplace(x.simplices_[i], i).second)
            throw InvalidSimplicialOrder("simplex " + x.simplices_[i].to_string() +
                                         " listed twice");
    }
    return x;
}

OrderedComplex OrderedComplex::from_simplices(const std::vector<Simplex>& generators) {
    std::set<Simplex> closed;
    for (const Simplex& g : generators) {
        closed.insert(g);
        for (Simplex f : g.proper_faces()) closed.insert(std::move(f));
    }
    std::vector<Simplex> sorted(closed.begin(), closed.end());
    std::sort(sorted.begin(), sorted.end(), default_order_less);
    return adopt_sorted(std::move(sorted));
}

OrderedComplex OrderedComplex::from_ordered(std::vector<Simplex> ordered) {
    OrderedComplex x = adopt_sorted(std::move(ordered));
    for (const Simplex& s : x.simplices_) {
        if (s.dim() == 0) continue;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(s.dim()); ++i) {
            Simplex f = s.face_dropping(i);
            auto it = x.rank_.find(f);
            if (it == x.rank_.end())
                throw NotASubcomplex("face " + f.to_string() + " of " + s.to_string() +
                                     " is missing");
            if (it->second > x.rank_.at(s))
                throw InvalidSimplicialOrder("face " + f.to_string() +
                                             " ordered after its coface " + s.to_string());
        }
    }
    return x;
}

int OrderedComplex::dim() const {
    int d = -1;
    for (const Simplex& s : simplices_) d = std::max(d, s.dim());
    return d;
}

std::size_t OrderedComplex::rank(const Simplex& s) const {
    auto it = rank_.find(s);
    if (it == rank_.end())
        throw NotASubcomplex("simplex " + s.to_string() + " is not in the complex");
    return it->second;
}

Cmp OrderedComplex::compare(const Simplex& a, const Simplex& b) const {
    std::size_t ra = rank(a), rb = rank(b);
    if (ra < rb) return Cmp::LT;
    if (ra > rb) return Cmp::GT;
    return Cmp::EQ;
}

std::vector<Simplex> OrderedComplex::simplices_of_dim(int n) const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
        if (s.dim() == n) out.push_back(s);
    return out;
}

std::vector<int> OrderedComplex::vertex_ids() const {
    std::vector<int> out;
    for (const Simplex& s : simplices_)
        if (s.dim() == 0) out.push_back(s.vertex(0));
    std::sort(out.begin(), out.end());
    return out;
}

OrderedComplex OrderedComplex::skeleton(int n) const {
    std::vector<Simplex> kept;
    for (const Simplex& s : simplices_)
        if (s.dim() <= n) kept.push_back(s);
    return adopt_sorted(std::move(kept));
}

OrderedComplex OrderedComplex::subcomplex(const std::set<Simplex>& members) const {
    std::vector<Simplex> kept;
    for (const Simplex& s : simplices_)
        if (members.count(s)) kept.push_back(s);
    if (kept.size() != members.size())
        throw NotASubcomplex("members contain simplices outside the host complex");
    OrderedComplex sub = adopt_sorted(std::move(kept));
    for (const Simplex& s : sub.simplices_) {
        if (s.dim() == 0) continue;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(s.dim()); ++i) {
            Simplex f = s.face_dropping(i);
            if (!sub.contains(f))
                throw NotASubcomplex("member set drops face " + f.to_string() + " of " +
                                     s.to_string());
        }
    }
    return sub;
}

bool OrderedComplex::is_subcomplex_of(const OrderedComplex& other) const {
    for (const Simplex& s : simplices_)
        if (!other.contains(s)) return false;
    return true;
}

// ----- free operations ------------------------------------------------------

OrderedComplex n_difference(const OrderedComplex& x, const OrderedComplex& a, int n) {
    if (!a.is_subcomplex_of(x))
        throw NotASubcomplex("n_difference: second argument is not a subcomplex");
    std::vector<Simplex> kept;
    for (const Simplex& s : x.simplices()) {
        if (s.dim() < n) kept.push_back(s);
        else if (s.dim() == n && !a.contains(s)) kept.push_back(s);
    }
    std::set<Simplex> members(kept.begin(), kept.end());
    return x.subcomplex(members);
}

Cmp lex_compare(const std::set<Simplex>& a, const std::set<Simplex>& b,
                const OrderedComplex& host) {
    const Simplex* best = nullptr;
    std::size_t best_rank = 0;
    bool best_in_a = false;
    auto scan = [&](const std::set<Simplex>& from, const std::set<Simplex>& other,
                    bool from_is_a) {
        for (const Simplex& s : from) {
            if (other.count(s)) continue;
            std::size_t r = host.rank(s);
            if (!best || r < best_rank) {
                best = &s;
                best_rank = r;
                best_in_a = from_is_a;
            }
        }
    };
    scan(a, b, true);
    scan(b, a, false);
    if (!best) return Cmp::EQ;
    return best_in_a ? Cmp::LT : Cmp::GT;
}

// ----- SimplicialMap --------------------------------------------------------

SimplicialMap::SimplicialMap(std::map<int, int> vertex_map, const OrderedComplex& x,
                             const OrderedComplex& y)
    : vmap_(std::move(vertex_map)) {
    for (int v : x.vertex_ids())
        if (!vmap_.count(v))
            throw VertexNotInDomain("vertex " + std::to_string(v) + " has no image");
    for (const Simplex& s : x.simplices()) {
        Simplex image = apply(s);
        if (!y.contains(image))
            throw Error("image " + image.to_string() + " of " + s.to_string() +
                        " is not a simplex of the codomain");
    }
}

int SimplicialMap::apply_vertex(int v) const {
    auto it = vmap_.find(v);
    if (it == vmap_.end())
        throw VertexNotInDomain("vertex " + std::to_string(v) + " not in domain");
    return it->second;
}

Simplex SimplicialMap::apply(const Simplex& s) const {
    std::vector<int> image;
    image.reserve(s.vertices().size());
    for (int v : s.vertices()) image.push_back(apply_vertex(v));
    return Simplex::collapsed(std::move(image));
}

} // namespace cofil
