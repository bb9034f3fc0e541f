#pragma once

#include <json.hpp>

#include "brq/abelian.hpp"
#include "brq/elliptic.hpp"
#include "brq/torus.hpp"
#include "brq/verdict.hpp"

namespace brq {

using Json = nlohmann::json;

// Integers serialize as decimal strings so arbitrary precision survives.
Json to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

Json to_json(const TraceStep& step);
Json to_json(const Verdict& v);

EllipticCurveSpec curve_from_json(const Json& j);
Json to_json(const EllipticCurveSpec& c);

SchemeInvariants invariants_from_json(const Json& j);
StackDescriptor descriptor_from_json(const Json& j);

Json to_json(const FpPoint& p);
Json to_json(const QPoint& p);

Json bottom_row_to_json(const BottomRowReport& rep, bool audit);

}  // namespace brq
