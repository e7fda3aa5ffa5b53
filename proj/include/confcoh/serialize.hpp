#ifndef CONFCOH_SERIALIZE_HPP
#define CONFCOH_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "confcoh/cochain.hpp"
#include "confcoh/parse.hpp"

namespace confcoh {

using Json = nlohmann::ordered_json;

/// A well-formed spec naming something that does not exist or has the wrong shape.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// vir, cur:sl2, cur:sl3, cur:abelian:<n>, cur:dual (Cur of C[x]/x^2), leibniz.
ConformalAlgebra algebra_from_name(const std::string& name);
/// sl2, sl3, abelian:<n>.
LiePresentation lie_from_name(const std::string& name);
/// trivial, ca:<a>, mda:<delta>,<alpha>, adjoint, and for current algebras
/// mu:<rep> with rep one of adjoint, trivial, V<m> (sl2), standard, sym<k> (sl3).
ConformalModule module_from_name(const std::string& name, const std::string& algebra_name,
                                 const ConformalAlgebra& A);
LieRep rep_from_name(const LiePresentation& g, const std::string& name);

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text);

/// {"name", "kind": lie|associative|leibniz, "generators": [..],
///  "brackets": [{"pair": [a, b], "value": {gen: poly}}]}
ConformalAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const ConformalAlgebra& A);

/// {"name", "kind": "free", "basis": [..], "action": [{"generator", "on", "value": {u: poly}}]}
/// or {"name", "kind": "scalar", "dim": n, "del": "a"}.
ConformalModule module_from_json(const Json& j, const ConformalAlgebra& A);
Json module_to_json(const ConformalModule& M, const ConformalAlgebra& A);

/// {"variant", "q", "values": [{"args": [gen..], "value": {u: poly}}]}; a
/// plain polynomial string is accepted as the value for one-dimensional modules.
Cochain cochain_from_json(const Json& j, const std::vector<std::string>& gens, const std::vector<std::string>& basis);
Json cochain_to_json(const Cochain& g, const std::vector<std::string>& gens, const std::vector<std::string>& basis);

/// An algebra or module given either as a builtin name (string) or inline object.
/// algebra_name is the builtin name of A (needed by mu:<rep>), empty if inline.
ConformalAlgebra algebra_from_spec(const Json& j);
ConformalModule module_from_spec(const Json& j, const ConformalAlgebra& A, const std::string& algebra_name);

}  // namespace confcoh

#endif
