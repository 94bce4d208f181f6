#pragma once

// JSON forms of the library's values. Integers that do not fit in a signed
// 64-bit word are written as decimal strings.

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "arcnest/automata.hpp"
#include "arcnest/diagrams.hpp"
#include "arcnest/involution.hpp"
#include "arcnest/ratfunc.hpp"
#include "arcnest/tableaux.hpp"

namespace arcnest {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const Arc& a);
Json to_json(const ColouredPermutation& cp);
Json to_json(const ColouredSetPartition& sp);
Json to_json(const IntegerPartition& p);
Json to_json(const PartialSYT& t);
Json to_json(const TableauSequence& seq);
Json to_json(const ColourClassSlice& s);
Json to_json(const SliceTrace& t);
Json to_json(const JointHistogram& h);
Json to_json(const IntPoly& p);
Json to_json(const RationalFunction& rf);
Json to_json(const Multigraph& g);

// Parses the to_json form back (shapes and optional fillings).
TableauSequence tableau_sequence_from_json(const Json& j);

}  // namespace arcnest
