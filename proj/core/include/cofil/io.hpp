#ifndef COFIL_IO_HPP
#define COFIL_IO_HPP

#include "cofil/filtration.hpp"

#include <string>
#include <vector>

namespace cofil {

/// A parsed filtration file: the core Filtration plus the name tables
/// needed to print simplices and grades the way the file spelled them.
struct FiltrationDocument {
    std::vector<std::string> vertex_names; // declaration order = vertex order
    bool custom_order = false;             // file carried an explicit order block
    Filtration filtration;

    int vertex_id(const std::string& name) const;       // -1 when unknown
    const std::string& vertex_name(int id) const;
    std::string simplex_name(const Simplex& s) const;   // "v1 v2"

    bool operator==(const FiltrationDocument& other) const {
        return vertex_names == other.vertex_names && custom_order == other.custom_order &&
               filtration == other.filtration;
    }
};

/// Parses the textual filtration format:
///
///   # comment
///   poset grid 3 3            (or: poset explicit / elements a b / cover a b)
///   vertices v1 v2 v3 v4
///   order                     (optional: all simplices, increasing)
///     v1
///     ...
///   end
///   simplex v1 v2 : 0,1
///   simplex v1 v4 : 0,2 2,0
///
/// Grade tokens are poset element ids; grid elements are "i,j". Errors
/// carry line numbers (ParseError) or name the offending face/coface pair
/// (FaceGradeViolation); unknown grade tokens raise UnknownPosetElement.
FiltrationDocument parse_filtration(const std::string& text);

/// Canonical serialization; parse(serialize(d)) == d.
std::string serialize_filtration(const FiltrationDocument& doc);

} // namespace cofil

#endif
