#pragma once

// JSON and DOT serialization of inventory members, predicate reports and
// theorem results, plus the member naming scheme used by the CLI.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "taucat/tautilt.hpp"

namespace taucat {

using Json = nlohmann::ordered_json;

// Malformed member list (e.g. dangling dimension-vector component).
struct MemberSyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Well-formed name that resolves to no inventory member.
struct UnknownMemberError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// P<v> / S<v> / I<v> when the member is projective / simple / injective (in
// that preference order), otherwise "d1,...,dn#k" with k the position among
// inventory members sharing the dimension vector.
std::string member_name(const Inventory& inv, int i);
std::vector<std::string> member_names(const Inventory& inv, const Subset& s);

// Comma-separated member list. Tokens: reserved names P*/S*/I* (bare P/S/I
// allowed when the quiver has one vertex); "d#k" closes a dimension vector,
// consuming the n_vertices-1 most recent pending integer tokens; leftover
// integer tokens are inventory indices. Throws MemberSyntaxError /
// UnknownMemberError.
Subset parse_member_spec(const Inventory& inv, const std::string& spec);

std::string fnv1a_hex(const std::string& bytes);

Json algebra_json(const BoundAlgebra& a, const std::string& file,
                  const std::string& bytes, int inventory_size);
Json inventory_json(const Inventory& inv);
Json subset_json(const Inventory& inv, const Subset& s);
Json approx_json(const Inventory& inv, const Approximation& ap);
Json stt_report_json(const Inventory& inv, const SttReport& r);
Json tilt_report_json(const Inventory& inv, const TiltReport& r);
Json completion_json(const Inventory& inv, const Completion& c);
Json theorem_json(const Inventory& inv, const TheoremResult& r);
Json bijection_json(const Inventory& inv, const BijectionReport& r);

// DOT digraph of the Fac fixed points ordered by inclusion; edges are
// covering inclusions, drawn from the smaller class to the larger.
std::string dot_tors_hasse(const Inventory& inv, const std::vector<Subset>& fixed);
// DOT graph of support tau-tilting subcategories; edges join pairs whose
// support-completed pairs (members plus complement-support projectives)
// differ in exactly one element.
std::string dot_stt_exchange(const Inventory& inv, const std::vector<Subset>& stt);

}  // namespace taucat
