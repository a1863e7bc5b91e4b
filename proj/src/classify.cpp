#include "deltacx/classify.hpp"

#include <algorithm>
#include <thread>

#include "deltacx/constructions.hpp"

namespace deltacx {

std::string to_string(StructuralTag tag) {
  switch (tag) {
    case StructuralTag::kNone: return "none";
    case StructuralTag::kStandardSimplex: return "StructurallyStandardSimplex";
    case StructuralTag::kBoundarySimplex: return "StructurallyBoundarySimplex";
    case StructuralTag::kNonSimplicialSphere: return "StructurallyNonSimplicialSphere";
  }
  return "none";
}

std::string to_string(SignatureKind kind) {
  switch (kind) {
    case SignatureKind::kBall: return "ConsistentWithBall";
    case SignatureKind::kSphere: return "ConsistentWithSphere";
    case SignatureKind::kRP2JoinSphere: return "ConsistentWithRP2JoinSphere";
    case SignatureKind::kUnrecognized: return "Unrecognized";
  }
  return "Unrecognized";
}

std::string PLVerdict::summary() const {
  std::string out;
  if (structure != StructuralTag::kNone) out = to_string(structure) + " + ";
  out += to_string(signature);
  if (signature != SignatureKind::kUnrecognized) {
    out += "(" + std::to_string(signature_dim) + ")";
  }
  return out;
}

std::pair<SignatureKind, int> homology_signature(const HomologyProfile& reduced, int dim) {
  if (dim < 0) return {SignatureKind::kSphere, -1};
  const std::vector<int> support = reduced.support();
  if (support.empty()) return {SignatureKind::kBall, dim};
  if (support.size() != 1) return {SignatureKind::kUnrecognized, -1};
  const int d = support.front();
  const DegreeHomology& g = reduced.at(d);
  if (d == dim && g.rank == 1 && g.torsion.empty()) return {SignatureKind::kSphere, dim};
  if (g.rank == 0 && g.torsion == std::vector<std::uint64_t>{2} && dim == d + 1 && d >= 1) {
    return {SignatureKind::kRP2JoinSphere, d - 2};
  }
  return {SignatureKind::kUnrecognized, -1};
}

namespace {

StructuralTag structural_tag(const RegularDeltaComplex& complex, int& m) {
  const int dim = complex.dim();
  m = dim;
  if (dim < 0) return StructuralTag::kNone;
  const auto fv = complex.f_vector();
  auto matches = [&](const RegularDeltaComplex& model) {
    return model.f_vector() == fv && is_isomorphic(complex, model).has_value();
  };
  if (matches(standard_simplex(dim))) return StructuralTag::kStandardSimplex;
  if (matches(boundary_simplex(dim + 1))) return StructuralTag::kBoundarySimplex;
  if (dim >= 1 && matches(nonsimplicial_sphere(dim))) {
    return StructuralTag::kNonSimplicialSphere;
  }
  return StructuralTag::kNone;
}

bool link_ok(const RegularDeltaComplex& complex, CellId c) {
  const int dim = complex.dim();
  const int cdim = complex.cell(c).dim;
  const RegularDeltaComplex lk = link(complex, c);
  if (lk.empty()) return cdim == dim;
  if (lk.dim() != dim - cdim - 1) return false;
  const HomologyProfile p = homology(lk);
  const auto [kind, kdim] = homology_signature(p, lk.dim());
  return kind == SignatureKind::kBall || (kind == SignatureKind::kSphere && kdim == lk.dim());
}

std::vector<CellId> manifold_failures(const RegularDeltaComplex& complex) {
  const std::size_t n = complex.size();
  std::vector<char> bad(n, 0);
  const std::size_t workers =
      n < 64 ? 1 : std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  auto run = [&](std::size_t start) {
    for (std::size_t c = start; c < n; c += workers) {
      bad[c] = !link_ok(complex, static_cast<CellId>(c));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t s = 0; s < workers; ++s) pool.emplace_back(run, s);
  }
  std::vector<CellId> out;
  for (std::size_t c = 0; c < n; ++c) {
    if (bad[c]) out.push_back(static_cast<CellId>(c));
  }
  return out;
}

}  // namespace

PLVerdict classify(const RegularDeltaComplex& complex,
                   const std::optional<ClassifyContext>& context) {
  require_valid(complex);
  PLVerdict v;
  v.structure = structural_tag(complex, v.structure_dim);
  v.profile = homology(complex);
  std::tie(v.signature, v.signature_dim) = homology_signature(v.profile, complex.dim());
  v.manifold_failures = manifold_failures(complex);
  v.manifold_consistent = v.manifold_failures.empty();
  if (context) {
    v.degenerate_context = context->n && context->r && *context->n == *context->r;
    if (context->labels) {
      LabeledComplex lc{complex, *context->labels};
      const Subcomplex hor = horizontal_subcomplex(lc);
      v.join_of_labeled_parts = is_combinatorial_product_type(lc, hor.complex).is_join;
    }
  }
  return v;
}

}  // namespace deltacx
