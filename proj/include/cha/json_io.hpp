#ifndef CHA_JSON_IO_HPP
#define CHA_JSON_IO_HPP

#include "json.hpp"

#include "cha/adjoint.hpp"
#include "cha/element.hpp"
#include "cha/oracle.hpp"

namespace cha {

using json = nlohmann::json;

/// {"n": 1, "z": 0.0, "a": [...], "b": [...], "c": 0.0}; "b" is the
/// coefficient of -X_p.
void to_json(json& j, const ChaElement& x);
void from_json(const json& j, ChaElement& x);

void to_json(json& j, const StructuredExpMatrix& m);
void from_json(const json& j, StructuredExpMatrix& m);

void to_json(json& j, const BchDiagnostics& d);

/// {"dim": d, "entries": [[...], ...]} row-major.
json dense_to_json(const DenseMatrix& m);
DenseMatrix dense_from_json(const json& j);

} // namespace cha

#endif
