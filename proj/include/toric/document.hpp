#pragma once

// Input documents: a JSON object with lattice_rank, rays and optional cones,
// divisor, interior_ray and apex; or a plain list with one ray per line.

#include "toric/polyhedral.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

struct InputDocument {
  Index lattice_rank = 0;
  std::vector<IntegerVector> rays;
  std::optional<std::vector<std::vector<Index>>> cones;
  std::optional<std::vector<Rational>> divisor;  // one coefficient per ray
  std::optional<IntegerVector> interior_ray;
  std::optional<IntegerVector> apex;
};

/// Integer or fraction, e.g. "-3", "7/2". Throws ParseError.
Rational parse_rational(std::string_view s);

/// JSON when the first non-blank character is '{', plain ray list otherwise.
/// Throws ParseError on malformed text and ValidationError on inconsistent
/// content (ragged vectors, indices out of range, wrong divisor length).
InputDocument parse_document(std::string_view text);
InputDocument read_document(const std::string& path);

/// Canonical JSON text; parse_document(serialize(d)) reproduces normalize(d).
std::string serialize(const InputDocument& doc);

/// Canonical form: cone index lists sorted and deduplicated.
InputDocument normalize(InputDocument doc);

/// The cone on all rays (documents without cones).
Cone document_cone(const InputDocument& doc);

/// The fan of the listed cones, or of the single cone on all rays.
Fan document_fan(const InputDocument& doc);

}  // namespace toric
