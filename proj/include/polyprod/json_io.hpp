#ifndef POLYPROD_JSON_IO_HPP
#define POLYPROD_JSON_IO_HPP

#include <json.hpp>

#include "polyprod/complex.hpp"
#include "polyprod/decomp.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/series.hpp"
#include "polyprod/space.hpp"
#include "polyprod/spheres.hpp"

namespace polyprod {

// nlohmann::json keeps object keys sorted, so dumps are byte-stable.
using Json = nlohmann::json;

Json to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const BettiTable& t);
Json to_json(const Series& s);
Json to_json(const SphereMultiset& m);
Json to_json(const Space& e);
Space space_from_json(const Json& j);
Json to_json(const DecompResult& r);

/// {"base": complex, "sub_a": [...], "sub_b": [...], "psi": [...],
///  "copies": n, "phi": [[...], ...]}; psi and phi are optional.
GluingSpec gluing_from_json(const Json& j);
Json to_json(const GluingSpec& spec);

}  // namespace polyprod

#endif  // POLYPROD_JSON_IO_HPP
