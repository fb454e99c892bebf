#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "commvar/chartab.hpp"
#include "commvar/cohomology.hpp"
#include "commvar/exact_poly.hpp"
#include "commvar/weyl.hpp"

namespace commvar::render {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";
inline constexpr const char* engine_version = "commvar 1.0.0";

// Polynomials serialize as {"coefficients": [...]}: decimal strings in
// ascending degree, dense, [] for zero.
Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j);
Json partition_json(const Partition& p);

std::string poly_plain(const Poly& p);
/// "1 + t^{2} + 2 t^{3}"
std::string poly_latex(const Poly& p);

Json classes_json(const WeylData& weyl);
std::string classes_plain(const WeylData& weyl);

Json poincare_json(const PoincareResult& r);
Json equivariant_json(const EquivariantResult& r);
std::string equivariant_plain(const EquivariantResult& r);
std::string equivariant_latex(const EquivariantResult& r);

Json character_table_json(const CharacterTable& table);
/// Column header in cycle notation, one χ row per irreducible.
std::string character_table_plain(const CharacterTable& table);
std::string character_table_latex(const CharacterTable& table);

/// Polynomial with character coefficients, e.g.
/// "chi_1 + chi_4*t + (chi_3 + chi_4)*t^4"; LaTeX gives "\chi_{1} + \chi_{4} t + ...".
std::string char_poly_text(const std::vector<IsotypicComponent>& components,
                           const CharacterTable& table, bool latex);
Json isotypic_json(const std::vector<IsotypicComponent>& components, const CharacterTable& table);
Json char_poly_json(const WDecomposition& d, unsigned n);
std::string char_poly_plain(const WDecomposition& d, unsigned n);
std::string char_poly_latex(const WDecomposition& d, unsigned n);

Json torsion_json(const CartanType& cartan, const std::set<unsigned long>& primes);

/// Wraps a payload in the output document envelope.
Json document(const Json& query, const Json& result, long long elapsed_us);

}  // namespace commvar::render
