#pragma once

#include <string>

#include <json.hpp>

#include "solvlie/lie.hpp"
#include "solvlie/subspace.hpp"

namespace solvlie {

// ordered_json keeps insertion order, so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

Json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

/// Reads "q", "gf2", "GF(3)", or a bare prime.  Errors: invalid_argument,
/// not_prime.
FieldDescriptor field_from_text(const std::string& text);

/// Algebra document: {"field": {...}, "dim": n, "basis_names": [...],
/// "brackets": [{"i": i, "j": j, "value": ["1", "0", ...]}, ...]} with i < j
/// and scalars rendered as decimal or fraction strings.  Pairs omitted from
/// "brackets" have zero bracket.
Json algebra_to_json(const LieAlgebra& L);

/// Inverse of algebra_to_json.  Rejects malformed documents (missing keys,
/// bad field kind, i >= j, duplicate pairs, wrong vector length, scalars that
/// do not parse) with code "parse_error".
LieAlgebra algebra_from_json(const Json& doc);

/// Reads and parses an algebra document from a file (UTF-8 JSON).  Syntax
/// errors keep nlohmann's position info in the message.
LieAlgebra load_algebra_file(const std::string& path);

std::string algebra_to_text(const LieAlgebra& L);

/// Subspace text: semicolon-separated coordinate rows, "0,1,0;1,0,2".
/// "0" and "" both denote the zero subspace.  The result is canonicalized
/// (reduced row echelon basis), so any spanning set is accepted.
Subspace parse_subspace(const FieldDescriptor& f, std::size_t n,
                        const std::string& text);
std::string subspace_to_text(const Subspace& u);

}  // namespace solvlie
