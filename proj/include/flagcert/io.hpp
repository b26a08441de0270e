#pragma once

// Exact JSON encoding of the library types.
//
// Base-level scalars are strings "a/b+c/d*i". Tower scalars are objects
// {"radicands": [...], "coords": [...]} with coordinates in the tower's basis order.
// A radicand is an integer, a base-level string, or the coordinate list of an
// element of the level below it.

#include <map>
#include <string>

#include <json.hpp>

#include "flagcert/forms.hpp"
#include "flagcert/groups.hpp"
#include "flagcert/witnesses.hpp"

namespace flagcert {

using Json = nlohmann::ordered_json;

/// Reuses one TowerPtr per radicand chain so that decoded scalars from one document combine.
class TowerInterner {
 public:
  TowerPtr intern(const Json& radicands);
  /// Registers an existing tower chain so that matching radicand lists decode onto it.
  void adopt(const TowerPtr& tower);

 private:
  std::map<std::string, TowerPtr> towers_;
};

Json radicands_to_json(const TowerPtr& tower);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, TowerInterner& towers);

/// {"rows", "cols", "radicands", "entries"}: entries are base-level strings when the
/// radicand list is empty and coordinate lists over the common tower otherwise.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, TowerInterner& towers);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, TowerInterner& towers);

Json form_to_json(const FormSpec& f);
FormSpec form_from_json(const Json& j, TowerInterner& towers);

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j, TowerInterner& towers);

inline constexpr const char* kWitnessSchema = "flagcert-witness/1";
/// The verified flag is not stored; readers must re-verify.
Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j, TowerInterner& towers);

Json model_to_json(const StandardModel& m);

/// Common tower of all entries; throws std::invalid_argument when entries lie on different branches.
TowerPtr matrix_tower(const Matrix& m);

}  // namespace flagcert
