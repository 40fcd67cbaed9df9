#include "cofil/poset.hpp"

#include "cofil/errors.hpp"

#include <algorithm>
#include <queue>

namespace cofil {

GradeIdx Poset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw UnknownElement("unknown poset element '" + id + "'");
    return it->second;
}

void Poset::index_elements() {
    for (GradeIdx i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], i).second)
            throw Error("duplicate poset element '" + elements_[i] + "'");
    }
}

void Poset::close_and_check() {
    const std::size_t n = size();
    for (GradeIdx i = 0; i < n; ++i) leq_[i * n + i] = 1;
    // Warshall
    for (GradeIdx k = 0; k < n; ++k)
        for (GradeIdx i = 0; i < n; ++i) {
            if (!leq_[i * n + k]) continue;
            for (GradeIdx j = 0; j < n; ++j)
                if (leq_[k * n + j]) leq_[i * n + j] = 1;
        }
    for (GradeIdx i = 0; i < n; ++i)
        for (GradeIdx j = i + 1; j < n; ++j)
            if (leq_[i * n + j] && leq_[j * n + i])
                throw CycleInRelation("closure relates " + elements_[i] + " <= " +
                                      elements_[j] + " <= " + elements_[i]);
}

void Poset::compute_covers() {
    const std::size_t n = size();
    covers_.clear();
    for (GradeIdx a = 0; a < n; ++a)
        for (GradeIdx b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool direct = true;
            for (GradeIdx c = 0; c < n && direct; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
            if (direct) covers_.emplace_back(a, b);
        }
}

void Poset::compute_linear_extension() {
    // Kahn's algorithm, always taking the smallest declaration index next.
    const std::size_t n = size();
    std::vector<std::size_t> preds(n, 0);
    for (auto& [a, b] : covers_) ++preds[b];
    std::priority_queue<GradeIdx, std::vector<GradeIdx>, std::greater<>> ready;
    for (GradeIdx i = 0; i < n; ++i)
        if (preds[i] == 0) ready.push(i);
    linear_ext_.clear();
    while (!ready.empty()) {
        GradeIdx a = ready.top();
        ready.pop();
        linear_ext_.push_back(a);
        for (auto& [x, y] : covers_)
            if (x == a && --preds[y] == 0) ready.push(y);
    }
}

Poset Poset::from_covers(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    Poset p;
    p.elements_ = elements;
    p.index_elements();
    const std::size_t n = p.size();
    p.leq_.assign(n * n, 0);
    for (auto& [a, b] : covers) {
        GradeIdx ia = p.index_of(a);
        GradeIdx ib = p.index_of(b);
        p.leq_[ia * n + ib] = 1;
    }
    p.close_and_check();
    p.compute_covers();
    p.compute_linear_extension();
    return p;
}

Poset Poset::grid(const std::vector<std::size_t>& extents) {
    if (extents.empty()) throw EmptyExtent("grid poset needs at least one extent");
    for (std::size_t e : extents)
        if (e == 0) throw EmptyExtent("grid extent must be positive");

    std::size_t n = 1;
    for (std::size_t e : extents) n *= e;

    Poset p;
    p.grid_extents_ = extents;
    std::vector<std::vector<std::size_t>> tuples;
    tuples.reserve(n);
    std::vector<std::size_t> t(extents.size(), 0);
    for (std::size_t cnt = 0; cnt < n; ++cnt) {
        tuples.push_back(t);
        std::string id;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) id += ',';
            id += std::to_string(t[i]);
        }
        p.elements_.push_back(id);
        // odometer increment, last coordinate fastest
        for (std::size_t i = t.size(); i-- > 0;) {
            if (++t[i] < extents[i]) break;
            t[i] = 0;
        }
    }
    p.index_elements();
    p.leq_.assign(n * n, 0);
    for (GradeIdx a = 0; a < n; ++a)
        for (GradeIdx b = 0; b < n; ++b) {
            bool le = true;
            for (std::size_t i = 0; i < extents.size() && le; ++i)
                le = tuples[a][i] <= tuples[b][i];
            if (le) p.leq_[a * n + b] = 1;
        }
    p.compute_covers();
    p.compute_linear_extension();
    return p;
}

std::vector<std::pair<GradeIdx, GradeIdx>> Poset::comparable_pairs() const {
    std::vector<std::pair<GradeIdx, GradeIdx>> out;
    for (GradeIdx a = 0; a < size(); ++a)
        for (GradeIdx b = 0; b < size(); ++b)
            if (a != b && leq(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<GradeIdx> Poset::maximal_elements() const {
    std::vector<GradeIdx> out;
    for (GradeIdx a = 0; a < size(); ++a) {
        bool maximal = true;
        for (GradeIdx b = 0; b < size() && maximal; ++b)
            if (a != b && leq(a, b)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

// ----- UpperSet -----------------------------------------------------------

UpperSet UpperSet::from_members(const Poset& p, std::vector<GradeIdx> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!is_upper_set(p, members))
        throw Error("member set is not upward closed");
    UpperSet u;
    u.members_ = std::move(members);
    return u;
}

UpperSet UpperSet::principal(const Poset& p, GradeIdx a) {
    UpperSet u;
    for (GradeIdx q = 0; q < p.size(); ++q)
        if (p.leq(a, q)) u.members_.push_back(q);
    return u;
}

UpperSet UpperSet::closure(const Poset& p, const std::vector<GradeIdx>& seeds) {
    std::vector<GradeIdx> members;
    for (GradeIdx s : seeds)
        for (GradeIdx q = 0; q < p.size(); ++q)
            if (p.leq(s, q)) members.push_back(q);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    UpperSet u;
    u.members_ = std::move(members);
    return u;
}

bool UpperSet::contains(GradeIdx g) const {
    return std::binary_search(members_.begin(), members_.end(), g);
}

UpperSet UpperSet::union_of(const UpperSet& a, const UpperSet& b) {
    UpperSet u;
    std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(),
                   b.members_.end(), std::back_inserter(u.members_));
    return u;
}

UpperSet UpperSet::intersection_of(const UpperSet& a, const UpperSet& b) {
    UpperSet u;
    std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                          b.members_.end(), std::back_inserter(u.members_));
    return u;
}

bool is_upper_set(const Poset& p, const std::vector<GradeIdx>& members) {
    for (GradeIdx a : members)
        for (GradeIdx q = 0; q < p.size(); ++q)
            if (p.leq(a, q) && !std::count(members.begin(), members.end(), q))
                return false;
    return true;
}

bool is_upper_set(const Poset& p, const std::set<std::string>& ids) {
    std::vector<GradeIdx> members;
    members.reserve(ids.size());
    for (const auto& id : ids) members.push_back(p.index_of(id));
    return is_upper_set(p, members);
}

} // namespace cofil
