#include "cofil/filtration.hpp"

#include "cofil/errors.hpp"

#include <algorithm>

namespace cofil {

std::vector<GradeIdx> reduce_to_antichain(const Poset& p, std::vector<GradeIdx> grades) {
    std::sort(grades.begin(), grades.end());
    grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
    std::vector<GradeIdx> minimal;
    for (GradeIdx g : grades) {
        bool dominated = false;
        for (GradeIdx h : grades)
            if (h != g && p.leq(h, g)) { dominated = true; break; }
        if (!dominated) minimal.push_back(g);
    }
    return minimal;
}

Filtration::Filtration(Poset poset, OrderedComplex total,
                       std::map<Simplex, std::vector<GradeIdx>> entry)
    : poset_(std::move(poset)), total_(std::move(total)), entry_(std::move(entry)) {
    for (const Simplex& s : total_.simplices()) {
        auto it = entry_.find(s);
        if (it == entry_.end() || it->second.empty())
            throw FaceGradeViolation("simplex " + s.to_string() + " has no entry grade");
        for (GradeIdx g : it->second)
            if (g >= poset_.size())
                throw UnknownGrade("entry grade index out of range for " + s.to_string());
        it->second = reduce_to_antichain(poset_, it->second);
    }
    if (entry_.size() != total_.size())
        throw FaceGradeViolation("entry map mentions simplices outside the complex");

    // every face must be present wherever its coface is
    for (const Simplex& s : total_.simplices()) {
        if (s.dim() == 0) continue;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(s.dim()); ++i) {
            Simplex f = s.face_dropping(i);
            for (GradeIdx g : entry_.at(s))
                if (!contains_at(f, g))
                    throw FaceGradeViolation(
                        "face " + f.to_string() + " enters after its coface " +
                        s.to_string() + " (grade " + poset_.id_of(g) + ")");
        }
    }
}

const std::vector<GradeIdx>& Filtration::entry(const Simplex& s) const {
    auto it = entry_.find(s);
    if (it == entry_.end())
        throw NotASubcomplex("simplex " + s.to_string() + " is not in the filtration");
    return it->second;
}

bool Filtration::contains_at(const Simplex& s, GradeIdx q) const {
    auto it = entry_.find(s);
    if (it == entry_.end()) return false;
    for (GradeIdx g : it->second)
        if (poset_.leq(g, q)) return true;
    return false;
}

OrderedComplex Filtration::at(GradeIdx q) const {
    if (q >= poset_.size()) throw UnknownGrade("grade index out of range");
    std::set<Simplex> members;
    for (const Simplex& s : total_.simplices())
        if (contains_at(s, q)) members.insert(s);
    return total_.subcomplex(members);
}

OrderedComplex Filtration::at_id(const std::string& grade_id) const {
    if (!poset_.has_element(grade_id))
        throw UnknownGrade("unknown grade '" + grade_id + "'");
    return at(poset_.index_of(grade_id));
}

} // namespace cofil
