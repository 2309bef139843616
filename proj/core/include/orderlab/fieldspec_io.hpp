#ifndef ORDERLAB_FIELDSPEC_IO_HPP_
#define ORDERLAB_FIELDSPEC_IO_HPP_

#include <string>

#include <json.hpp>

#include "orderlab/pseries.hpp"
#include "orderlab/structure.hpp"

namespace orderlab {

/* Ingests a field description. Keys exactly: "min_poly" (integer array,
 * ascending degree), "maximal_basis" (array of arrays of exact rational
 * strings), "class_number", "class_group" (integer array),
 * "fundamental_units" (array of rational-string arrays),
 * "torsion_order", "label". Unknown keys rejected. */
FieldSpec field_spec_from_json(nlohmann::json const& j);
FieldSpec load_field_spec(std::string const& path);

/* Order mini-grammar:
 *   "Z_plus <m>"                  Z + m*O
 *   "Z_plus_ideal <gens> ^<e>"    Z + (gens)^e, gens comma-separated
 *   "basis <r>; <r>; ..."         explicit basis rows over the power basis
 *   "maximal"                     the maximal order itself
 */
OrderRing parse_order(std::string const& desc, FieldSpec const& spec);

/* Canonical JSON: objects sort keys, big integers and rationals are
 * exact decimal strings, lattices dump as row arrays. Output is
 * byte-identical across runs. */
nlohmann::json json_of_element(FieldElement const& x);
nlohmann::json json_of_lattice(ZLattice const& l);
nlohmann::json json_of_report(PropertyReport const& rep);
nlohmann::json json_of_length_set(LengthSet const& ls);
nlohmann::json json_of_deg1(Deg1Certificate const& cert);
nlohmann::json json_of_obstruction(ObstructionResult const& res);
nlohmann::json json_of_hfd_witness(HfdViolationWitness const& w);

}  // namespace orderlab

#endif
