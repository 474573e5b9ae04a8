#pragma once

#include <json.hpp>

#include "gerbeflow/cartan.hpp"
#include "gerbeflow/hochschild.hpp"
#include "gerbeflow/linfty.hpp"

namespace gerbeflow {

using Json = nlohmann::json;

// Writers emit canonical (sorted) output. Readers take the coefficient ring from
// context and throw ParseError on malformed input.

Json to_json(const Rational& q);
Json to_json(const Scalar& s);
Json to_json(const Poly& p);
Json to_json(const MultiVector& m);
Json to_json(const DiffForm& f);
Json to_json(const MultiDiffOp& d);
Json to_json(const ArtinRing& r);

Rational rational_from_json(const Json& j);
Scalar scalar_from_json(const Json& j, int order);
Poly poly_from_json(const Json& j, const ArtinRing& ring);
MultiVector multivector_from_json(const Json& j, const ArtinRing& ring);
DiffForm diffform_from_json(const Json& j, const ArtinRing& ring);
MultiDiffOp mdo_from_json(const Json& j, const ArtinRing& ring);
/// Either an integer order or {"param": name, "order": N}.
ArtinRing ring_from_json(const Json& j);

struct MCProblem {
  ArtinRing ring;
  DiffForm H;
  MultiVector pi1;
  int max_order = 1;
};
MCProblem mc_problem_from_json(const Json& j);
Json to_json(const MCProblem& p);
Json to_json(const MCSolveResult& r);

}  // namespace gerbeflow
