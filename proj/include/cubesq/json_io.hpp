#ifndef CUBESQ_JSON_IO_HPP
#define CUBESQ_JSON_IO_HPP

#include <json.hpp>

#include "cubesq/binary_form.hpp"
#include "cubesq/decompose.hpp"
#include "cubesq/elliptic.hpp"
#include "cubesq/lattice.hpp"
#include "cubesq/mordell.hpp"

namespace cubesq {

// Insertion-ordered JSON keeps serialized reports byte-stable.
using Json = nlohmann::ordered_json;

// Exact form: { "degree": d, "coeffs": [[a_num, a_den, b_num, b_den], ...] }
// with big integers as decimal strings; index i <-> z^i w^(d-i).
Json to_json(const CycForm& f);
// Complex form: { "degree": d, "coeffs": [[re, im], ...] }.
Json to_json(const CForm& f);

CycForm cycform_from_json(const Json& j);
CForm cform_from_json(const Json& j);
bool json_form_is_exact(const Json& j);

Rat rat_from_string(const std::string& s);  // "p" or "p/q"

Json to_json(const std::vector<KodairaFiber>& fibers);
Json to_json(const GramLattice& L, const Rat& norm, const std::vector<std::array<Rat, 2>>& vectors);
Json to_json(const SolveReport& r);
Json to_json(const ExperimentReport& r);
Json to_json(const std::vector<Representation>& reps);
Json to_json(const Family& fam);
Json to_json(const std::vector<RelationCheck>& checks);

}  // namespace cubesq

#endif
