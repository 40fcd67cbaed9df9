#include "cofil/io.hpp"

#include "cofil/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cofil {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

int FiltrationDocument::vertex_id(const std::string& name) const {
    auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
    if (it == vertex_names.end()) return -1;
    return static_cast<int>(it - vertex_names.begin());
}

const std::string& FiltrationDocument::vertex_name(int id) const {
    return vertex_names.at(static_cast<std::size_t>(id));
}

std::string FiltrationDocument::simplex_name(const Simplex& s) const {
    std::string out;
    for (int v : s.vertices()) {
        if (!out.empty()) out += ' ';
        out += vertex_name(v);
    }
    return out;
}

FiltrationDocument parse_filtration(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;

    bool poset_declared = false;
    bool poset_is_grid = false;
    std::vector<std::size_t> grid_extents;
    std::vector<std::string> poset_elements;
    std::vector<std::pair<std::string, std::string>> poset_covers;

    std::vector<std::string> vertex_names;
    std::map<std::string, int> vid;

    bool in_order_block = false;
    bool have_order_block = false;
    std::vector<std::vector<std::string>> order_lines; // raw simplex name lists
    std::size_t order_block_line = 0;

    struct SimplexDecl {
        std::vector<std::string> names;
        std::vector<std::string> grades;
        std::size_t line;
    };
    std::vector<SimplexDecl> decls;

    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<std::string> tok = split_ws(strip_comment(raw));
        if (tok.empty()) continue;

        if (in_order_block) {
            if (tok.size() == 1 && tok[0] == "end") {
                in_order_block = false;
                continue;
            }
            order_lines.push_back(tok);
            continue;
        }

        const std::string& kw = tok[0];
        if (kw == "poset") {
            if (poset_declared) throw ParseError("poset declared twice", lineno);
            if (tok.size() >= 2 && tok[1] == "grid") {
                if (tok.size() < 3) throw ParseError("poset grid needs extents", lineno);
                for (std::size_t i = 2; i < tok.size(); ++i) {
                    try {
                        grid_extents.push_back(std::stoul(tok[i]));
                    } catch (const std::exception&) {
                        throw ParseError("bad grid extent '" + tok[i] + "'", lineno);
                    }
                }
                poset_is_grid = true;
            } else if (tok.size() == 2 && tok[1] == "explicit") {
                poset_is_grid = false;
            } else {
                throw ParseError("expected 'poset grid <extents>' or 'poset explicit'",
                                 lineno);
            }
            poset_declared = true;
        } else if (kw == "elements") {
            if (!poset_declared || poset_is_grid)
                throw ParseError("'elements' is only valid after 'poset explicit'", lineno);
            poset_elements.insert(poset_elements.end(), tok.begin() + 1, tok.end());
        } else if (kw == "cover") {
            if (!poset_declared || poset_is_grid)
                throw ParseError("'cover' is only valid after 'poset explicit'", lineno);
            if (tok.size() != 3) throw ParseError("cover needs two elements", lineno);
            poset_covers.emplace_back(tok[1], tok[2]);
        } else if (kw == "vertices") {
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (vid.count(tok[i]))
                    throw ParseError("vertex '" + tok[i] + "' declared twice", lineno);
                vid.emplace(tok[i], static_cast<int>(vertex_names.size()));
                vertex_names.push_back(tok[i]);
            }
        } else if (kw == "order") {
            if (have_order_block) throw ParseError("order block declared twice", lineno);
            in_order_block = true;
            have_order_block = true;
            order_block_line = lineno;
        } else if (kw == "simplex") {
            auto sep = std::find(tok.begin(), tok.end(), ":");
            if (sep == tok.end() || sep == tok.begin() + 1 || sep + 1 == tok.end())
                throw ParseError("expected 'simplex <vertices> : <grades>'", lineno);
            SimplexDecl d;
            d.names.assign(tok.begin() + 1, sep);
            d.grades.assign(sep + 1, tok.end());
            d.line = lineno;
            decls.push_back(std::move(d));
        } else {
            throw ParseError("unknown directive '" + kw + "'", lineno);
        }
    }
    if (in_order_block)
        throw ParseError("order block not closed with 'end'", order_block_line);
    if (!poset_declared) throw ParseError("missing poset declaration", 0);

    Poset poset = poset_is_grid ? Poset::grid(grid_extents)
                                : Poset::from_covers(poset_elements, poset_covers);

    auto resolve_simplex = [&](const std::vector<std::string>& names,
                               std::size_t line) -> Simplex {
        std::vector<int> verts;
        verts.reserve(names.size());
        for (const std::string& n : names) {
            auto it = vid.find(n);
            if (it == vid.end())
                throw ParseError("unknown vertex '" + n + "'", line);
            verts.push_back(it->second);
        }
        try {
            return Simplex(std::move(verts));
        } catch (const DuplicateVertexInSimplex& e) {
            throw ParseError(e.what(), line);
        }
    };

    std::map<Simplex, std::vector<GradeIdx>> entry;
    std::vector<Simplex> declared;
    for (const SimplexDecl& d : decls) {
        Simplex s = resolve_simplex(d.names, d.line);
        std::vector<GradeIdx>& grades = entry[s];
        for (const std::string& g : d.grades) {
            if (!poset.has_element(g))
                throw UnknownPosetElement("unknown grade '" + g + "' (line " +
                                          std::to_string(d.line) + ")");
            grades.push_back(poset.index_of(g));
        }
        declared.push_back(std::move(s));
    }

    // every face must itself be declared; report the offending pair
    auto spell = [&](const Simplex& s) {
        std::string out;
        for (int v : s.vertices()) {
            if (!out.empty()) out += ' ';
            out += vertex_names.at(static_cast<std::size_t>(v));
        }
        return out;
    };
    std::set<Simplex> declared_set(declared.begin(), declared.end());
    for (const Simplex& s : declared_set) {
        if (s.dim() == 0) continue;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(s.dim()); ++i) {
            Simplex face = s.face_dropping(i);
            if (!declared_set.count(face))
                throw FaceGradeViolation("face '" + spell(face) + "' of simplex '" +
                                         spell(s) + "' is never declared");
        }
    }

    // grade dominance with file-level names: a face may not enter later
    // than any grade of its coface
    for (const Simplex& s : declared_set) {
        if (s.dim() == 0) continue;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(s.dim()); ++i) {
            Simplex face = s.face_dropping(i);
            for (GradeIdx g : entry.at(s)) {
                bool present = false;
                for (GradeIdx h : entry.at(face))
                    if (poset.leq(h, g)) { present = true; break; }
                if (!present)
                    throw FaceGradeViolation("face '" + spell(face) +
                                             "' enters after its coface '" + spell(s) +
                                             "' (grade " + poset.id_of(g) + ")");
            }
        }
    }

    OrderedComplex total;
    if (have_order_block) {
        std::vector<Simplex> sequence;
        sequence.reserve(order_lines.size());
        for (const auto& names : order_lines)
            sequence.push_back(resolve_simplex(names, order_block_line));
        std::set<Simplex> in_order(sequence.begin(), sequence.end());
        if (in_order != declared_set)
            throw ParseError("order block must list exactly the declared simplices",
                             order_block_line);
        total = OrderedComplex::from_ordered(std::move(sequence));
    } else {
        total = OrderedComplex::from_simplices(declared);
    }

    return FiltrationDocument{std::move(vertex_names), have_order_block,
                              Filtration(std::move(poset), std::move(total),
                                         std::move(entry))};
}

std::string serialize_filtration(const FiltrationDocument& doc) {
    const Poset& poset = doc.filtration.poset();
    std::ostringstream out;
    if (!poset.grid_extents().empty()) {
        out << "poset grid";
        for (std::size_t e : poset.grid_extents()) out << ' ' << e;
        out << '\n';
    } else {
        out << "poset explicit\n";
        out << "elements";
        for (const std::string& id : poset.elements()) out << ' ' << id;
        out << '\n';
        for (auto& [a, b] : poset.cover_pairs())
            out << "cover " << poset.id_of(a) << ' ' << poset.id_of(b) << '\n';
    }
    if (!doc.vertex_names.empty()) {
        out << "vertices";
        for (const std::string& v : doc.vertex_names) out << ' ' << v;
        out << '\n';
    }
    if (doc.custom_order) {
        out << "order\n";
        for (const Simplex& s : doc.filtration.total().simplices())
            out << "  " << doc.simplex_name(s) << '\n';
        out << "end\n";
    }
    // grades per simplex in linear-extension position order
    std::vector<std::size_t> position(poset.size());
    for (std::size_t i = 0; i < poset.linear_extension().size(); ++i)
        position[poset.linear_extension()[i]] = i;
    for (const Simplex& s : doc.filtration.total().simplices()) {
        std::vector<GradeIdx> grades = doc.filtration.entry(s);
        std::sort(grades.begin(), grades.end(),
                  [&](GradeIdx a, GradeIdx b) { return position[a] < position[b]; });
        out << "simplex " << doc.simplex_name(s) << " :";
        for (GradeIdx g : grades) out << ' ' << poset.id_of(g);
        out << '\n';
    }
    return out.str();
}

} // namespace cofil
