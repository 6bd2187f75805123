#ifndef BLOCKCOND_CONFIG_IO_HPP_
#define BLOCKCOND_CONFIG_IO_HPP_

#include <string>

#include "blockcond/conductor.hpp"

namespace blockcond {

/* Wire formats. A character is encoded by its local components,
 *
 *   {"local": [{"p": 7, "k": 1, "gen_exp": 2},
 *              {"p": 2, "k": 3, "minus_one_exp": 1, "five_exp": 0}]}
 *
 * with the modulus implied as prod p^k and exponents relative to the
 * canonical generators (smallest positive primitive root mod p^k for odd
 * p; -1 and 5 for p = 2). A config is
 *
 *   {"label": ..., "level": N, "nebentypus": <character>,
 *    "dim_Af": ..., "deg_F": ..., "schur_index": 1|2,
 *    "inner_twists": [{"label": "s", "chi": <character>, "galois_exp": 2}, ...],
 *    "level_overrides": [{"chi": <character>, "q": 7, "v": 1}]}
 *
 * The identity inner twist may be omitted; it is synthesized. Parse errors
 * carry JSON-pointer paths. */

NewformConfig parse_config(std::string const & json_text);

// deterministic (byte-stable) renderings; parse(render(c)) round-trips
std::string render_config(NewformConfig const & config);

std::string render_character_json(DirichletCharacter const & chi);
DirichletCharacter parse_character_json(std::string const & json_text);

// report renderings for the CLI: versioned JSON and a text form
std::string render_report_json(ConductorReport const & report);
std::string render_report_text(ConductorReport const & report);
std::string render_decomposition_text(OrbitDecomposition const & dec);
std::string render_level_table_text(NewformConfig const & config);
std::string render_level_table_json(NewformConfig const & config);

} // namespace blockcond

#endif
