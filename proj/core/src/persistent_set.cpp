#include "cofil/persistent_set.hpp"

#include "cofil/errors.hpp"
#include "cofil/union_find.hpp"

#include <algorithm>

namespace cofil {

void PersistentSet::insert(GradeIdx q, const std::string& key) {
    if (fibers.size() <= q) fibers.resize(q + 1);
    auto& fiber = fibers[q];
    auto it = std::lower_bound(fiber.begin(), fiber.end(), key);
    if (it == fiber.end() || *it != key) fiber.insert(it, key);
}

bool PersistentSet::fiber_contains(GradeIdx q, const std::string& key) const {
    if (q >= fibers.size()) return false;
    return std::binary_search(fibers[q].begin(), fibers[q].end(), key);
}

std::size_t PersistentSet::total_elements() const {
    std::size_t n = 0;
    for (const auto& f : fibers) n += f.size();
    return n;
}

const std::string& PersistentSet::image_of(GradeIdx from, GradeIdx to,
                                           const std::string& key) const {
    auto pit = maps.find({from, to});
    if (pit != maps.end()) {
        auto kit = pit->second.find(key);
        if (kit != pit->second.end()) return kit->second;
    }
    return key; // inclusion
}

Colimit colimit_persistent_set(const Poset& p, const PersistentSet& b) {
    if (b.fibers.size() > p.size())
        throw Error("persistent set has fibers outside the poset");

    // flat indexing of (grade, key) pairs
    std::vector<std::size_t> offset(p.size() + 1, 0);
    for (GradeIdx q = 0; q < p.size(); ++q)
        offset[q + 1] = offset[q] + (q < b.fibers.size() ? b.fibers[q].size() : 0);
    auto flat = [&](GradeIdx q, const std::string& key) {
        const auto& fiber = b.fibers[q];
        auto it = std::lower_bound(fiber.begin(), fiber.end(), key);
        return offset[q] + static_cast<std::size_t>(it - fiber.begin());
    };

    UnionFind uf(offset.back());
    for (auto& [a, c] : p.cover_pairs()) {
        if (a >= b.fibers.size()) continue;
        for (const std::string& key : b.fibers[a]) {
            const std::string& image = b.image_of(a, c, key);
            if (!b.fiber_contains(c, image))
                throw Error("structure map sends '" + key + "' at grade " + p.id_of(a) +
                            " outside the fiber at " + p.id_of(c));
            uf.unite(flat(a, key), flat(c, image));
        }
    }

    Colimit col;
    col.projection.assign(p.size(), {});
    std::map<std::size_t, std::size_t> class_of_root;
    for (GradeIdx q : p.linear_extension()) {
        if (q >= b.fibers.size()) continue;
        for (const std::string& key : b.fibers[q]) {
            std::size_t root = uf.find(flat(q, key));
            auto [it, inserted] = class_of_root.emplace(root, col.class_count);
            if (inserted) {
                ++col.class_count;
                col.class_rep.push_back(key);
            }
            col.projection[q].emplace(key, it->second);
        }
    }
    return col;
}

UpperSetDecomposition upper_set_decompose(const Poset& p, const PersistentSet& b) {
    UpperSetDecomposition out;
    out.colimit = colimit_persistent_set(p, b);

    // condition: every projection injective
    for (GradeIdx q = 0; q < p.size(); ++q) {
        std::vector<char> seen(out.colimit.class_count, 0);
        for (const auto& [key, cls] : out.colimit.projection[q]) {
            if (seen[cls])
                throw NotInjective("colimit projection at grade " + p.id_of(q) +
                                       " identifies two fiber elements",
                                   q);
            seen[cls] = 1;
        }
    }

    std::vector<std::vector<GradeIdx>> member_lists(out.colimit.class_count);
    for (GradeIdx q = 0; q < p.size(); ++q)
        for (const auto& [key, cls] : out.colimit.projection[q])
            member_lists[cls].push_back(q);

    std::size_t accounted = 0;
    for (auto& members : member_lists) {
        accounted += members.size();
        out.upper_sets.push_back(UpperSet::from_members(p, std::move(members)));
    }
    if (accounted != b.total_elements())
        throw Error("upper set decomposition does not account for every fiber element");
    return out;
}

} // namespace cofil
