#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hibi/lattice.hpp"
#include "hibi/plucker.hpp"
#include "hibi/polytope.hpp"
#include "hibi/poset.hpp"
#include "hibi/valuation.hpp"

namespace hibi {

/// All emitted JSON keeps insertion order, so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Canonical text form: two-space indent plus a trailing newline.
std::string dump_json(const Json& j);

/// Integers become JSON numbers only inside the 53-bit safe range,
/// strings otherwise.
Json json_int(long long v);
Json json_bigint(const BigInt& v);

/// Rationals are always strings "num/den" with positive denominator.
Json json_rational(const Rational& q);

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Reads {"elements": [labels...], "covers": [[lo, hi]...]}; cover entries
/// may be labels or element indices.
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

Json lattice_to_json(const DistributiveLattice& l);

/// Chain as the array of its element labels, bottom first.
Json chain_to_json(const DistributiveLattice& l, const Chain& c);

Json hibi_ideal_to_json(const DistributiveLattice& l);
Json standard_basis_to_json(const DistributiveLattice& l, int degree);

Json value_to_json(const ValueVector& v);
Json quasi_to_json(const DistributiveLattice& l, Family f,
                   const QuasiResult& r);

Json straightening_entry_to_json(const GrassmannLattice& gl,
                                 const StraighteningEntry& e);
Json straightening_table_to_json(const GrassmannLattice& gl,
                                 const StraighteningTable& t);
Json governed_to_json(const GrassmannLattice& gl, const GovernedReport& r);

Json polytope_to_json(const RationalPolytope& p,
                      const std::vector<std::vector<long long>>& lattice_pts);

Json triangulation_to_json(const DistributiveLattice& l,
                           const std::vector<Simplex>& simplices);

}  // namespace hibi
