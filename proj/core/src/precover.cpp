#include "cofil/precover.hpp"

#include "cofil/errors.hpp"
#include "cofil/matrix.hpp"

namespace cofil {

RepresentativeSet representative_persistent_set(const Filtration& f,
                                                const SpanningCofiltration& t,
                                                const Simplex& edge, Ring ring) {
    f.entry(edge); // reject edges outside the filtration

    RepresentativeSet rep{edge, {}, {}};
    rep.set.fibers.assign(f.poset().size(), {});

    // grades where the edge is present but not in the tree
    std::vector<GradeIdx> excluded;
    std::map<GradeIdx, std::string> cycle_key_at;
    for (GradeIdx q = 0; q < f.poset().size(); ++q) {
        if (!f.contains_at(edge, q)) continue;
        if (t.trees[q].edges.count(edge)) continue;
        Chain z = chain_add(Chain::unit(ring, edge),
                            chain_negate(tree_path_chain(t.trees[q], edge, ring)));
        std::string key = z.to_string();
        cycle_key_at.emplace(q, key);
        rep.cycles.emplace(std::move(key), std::move(z));
        excluded.push_back(q);
    }
    if (excluded.empty())
        throw EdgeNeverExcluded("edge " + edge.to_string() +
                                " lies in every spanning tree that sees it");

    for (GradeIdx q = 0; q < f.poset().size(); ++q)
        for (GradeIdx src : excluded)
            if (f.poset().leq(src, q)) rep.set.insert(q, cycle_key_at.at(src));
    return rep;
}

std::string CycleKey::to_string() const {
    return edge.to_string() + "#" + std::to_string(class_index);
}

std::size_t Precover::rank_at(GradeIdx q) const {
    std::size_t n = 0;
    for (const auto& [edge, rep] : summands)
        if (q < rep.set.fibers.size()) n += rep.set.fibers[q].size();
    return n;
}

Precover precover(const Filtration& f, const SpanningCofiltration& t, Ring ring) {
    Precover pc;
    pc.ring = ring;

    for (const Simplex& edge : f.total().simplices_of_dim(1)) {
        bool excluded_somewhere = false;
        for (GradeIdx q = 0; q < f.poset().size() && !excluded_somewhere; ++q)
            if (f.contains_at(edge, q) && !t.trees[q].edges.count(edge))
                excluded_somewhere = true;
        if (!excluded_somewhere) continue;

        RepresentativeSet rep = representative_persistent_set(f, t, edge, ring);
        UpperSetDecomposition dec = upper_set_decompose(f.poset(), rep.set);
        for (std::size_t cls = 0; cls < dec.colimit.class_count; ++cls) {
            CycleKey key{edge, cls};
            const Chain& z = rep.cycles.at(dec.colimit.class_rep[cls]);
            // the recorded cycle must be a 1-cycle of every frame in its upper set
            if (!boundary(z).is_zero())
                throw Error("recorded chain for " + key.to_string() + " is not a cycle");
            for (GradeIdx q : dec.upper_sets[cls].members())
                for (const auto& [s, coeff] : z.terms())
                    if (!f.contains_at(s, q))
                        throw Error("cycle for " + key.to_string() +
                                    " leaves the frame at grade " + f.poset().id_of(q));
            pc.decomposition.emplace(key, dec.upper_sets[cls]);
            pc.evaluation.emplace(key, z);
        }
        pc.edges.push_back(edge);
        pc.summands.emplace(edge, std::move(rep));
    }
    return pc;
}

std::vector<GradeEpiReport> precover_map_and_check(const Filtration& f, const Precover& pc) {
    std::vector<GradeEpiReport> reports;
    reports.reserve(f.poset().size());
    for (GradeIdx q : f.poset().linear_extension()) {
        OrderedComplex frame = f.at(q);
        std::vector<Simplex> frame_edges = frame.simplices_of_dim(1);
        std::map<Simplex, std::size_t> row_of;
        for (std::size_t i = 0; i < frame_edges.size(); ++i)
            row_of.emplace(frame_edges[i], i);

        // evaluated cycles at this grade, one column each
        std::vector<const Chain*> columns;
        for (const Simplex& edge : pc.edges) {
            const RepresentativeSet& rep = pc.summands.at(edge);
            if (q >= rep.set.fibers.size()) continue;
            for (const std::string& key : rep.set.fibers[q])
                columns.push_back(&rep.cycles.at(key));
        }

        ExactMatrix image(pc.ring, frame_edges.size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& [s, coeff] : columns[j]->terms())
                image.set(row_of.at(s), j, coeff);

        GradeEpiReport r;
        r.grade = q;
        r.precover_rank = columns.size();
        r.z1_rank = frame_edges.size() - rank(boundary_matrix(frame, 1, pc.ring));
        r.image_rank = rank(image);
        r.surjective = r.image_rank == r.z1_rank;
        reports.push_back(r);
    }
    return reports;
}

std::vector<GradeEpiReport> precover_map_and_check(const Filtration& f,
                                                   const SpanningCofiltration& t,
                                                   Ring ring) {
    return precover_map_and_check(f, precover(f, t, ring));
}

void require_epimorphism(const Poset& p, const std::vector<GradeEpiReport>& reports) {
    for (const GradeEpiReport& r : reports)
        if (!r.surjective)
            throw EpimorphismFailed("evaluation misses part of the cycle module at grade " +
                                        p.id_of(r.grade),
                                    r.grade);
}

} // namespace cofil
