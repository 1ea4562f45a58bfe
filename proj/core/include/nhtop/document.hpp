#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "nhtop/complex.hpp"

namespace nhtop {

// Complex documents are JSON objects:
//   {
//     "format": "nhtop-complex",
//     "name": "...",              // optional
//     "description": "...",       // optional
//     "vertices": ["a", "b"],     // optional; every vertex must lie in a facet
//     "facets": [["a","b"], ...], // nonempty simplices only
//     "includes_empty": true,     // false/absent + no facets = void complex
//     "ground": ["a","b","c"]     // optional; must contain every vertex
//   }
// The empty simplex is implicit: any complex with facets contains it, and
// {∅} is encoded as no facets + includes_empty true. A ground list records
// the ambient vertex set the complex is meant to be dualized over.

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComplexDocument {
  SimplicialComplex complex;
  std::optional<std::string> name;
  std::optional<std::string> description;
  std::optional<std::vector<Vertex>> ground;  // sorted, ⊇ complex.vertex_set()
};

// Throws DocumentError with a descriptive message on malformed input,
// unknown vertices, duplicate facets, or an includes_empty flag that
// contradicts the facet list.
ComplexDocument parse_complex_document(const std::string& json_text);

std::string serialize_complex_document(const ComplexDocument& doc, bool pretty = true);
std::string serialize_complex(const SimplicialComplex& k, bool pretty = true);

}  // namespace nhtop
