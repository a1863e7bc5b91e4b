#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltacx/complex.hpp"
#include "deltacx/homology.hpp"
#include "deltacx/mfs_combinatorics.hpp"

namespace deltacx {

// Exact isomorphism type among the three model structures.
enum class StructuralTag { kNone, kStandardSimplex, kBoundarySimplex, kNonSimplicialSphere };

// Homology signature. Never a homeomorphism claim.
enum class SignatureKind { kBall, kSphere, kRP2JoinSphere, kUnrecognized };

std::string to_string(StructuralTag tag);
std::string to_string(SignatureKind kind);

struct ClassifyContext {
  std::optional<int> n;
  std::optional<int> r;
  std::optional<std::map<VertexId, VertexLabel>> labels;
};

struct PLVerdict {
  StructuralTag structure = StructuralTag::kNone;
  int structure_dim = -1;  // m for sigma^m, boundary of sigma^(m+1), or the sphere
  SignatureKind signature = SignatureKind::kUnrecognized;
  // Ball/sphere dimension, or k for RP^2 * S^k.
  int signature_dim = -1;
  // Every link is a homology sphere (interior) or acyclic (boundary) of the
  // expected dimension.
  bool manifold_consistent = false;
  std::vector<CellId> manifold_failures;
  bool degenerate_context = false;  // r == n
  std::optional<bool> join_of_labeled_parts;
  HomologyProfile profile;

  // e.g. "StructurallyBoundarySimplex + ConsistentWithSphere(3)"
  std::string summary() const;
};

PLVerdict classify(const RegularDeltaComplex& complex,
                   const std::optional<ClassifyContext>& context = std::nullopt);

// Signature of a reduced integral profile for a complex of dimension dim.
std::pair<SignatureKind, int> homology_signature(const HomologyProfile& reduced, int dim);

}  // namespace deltacx
