#include "doctest.h"

#include "deltacx/complex.hpp"
#include "deltacx/constructions.hpp"
#include "deltacx/homology.hpp"
#include "oracle.hpp"

using namespace deltacx;

namespace {

bool sphere_like(const RegularDeltaComplex& k, int n) {
  return homology(k) == sphere_profile(n, k.dim());
}

bool acyclic(const RegularDeltaComplex& k) { return homology(k).all_zero(); }

Cell make_cell(int dim, std::vector<VertexId> vs, std::vector<CellId> fs) {
  return Cell{0, dim, std::move(vs), std::move(fs)};
}

}  // namespace

TEST_CASE("validate accepts constructor output") {
  CHECK(validate(standard_simplex(2)).ok());
  CHECK(validate(boundary_simplex(4)).ok());
  CHECK(validate(nonsimplicial_sphere(3)).ok());
  CHECK(validate(RegularDeltaComplex{}).ok());
}

TEST_CASE("validate rejects a loop edge") {
  RegularDeltaComplex loop({make_cell(0, {0}, {}), make_cell(1, {0, 1}, {0, 0})});
  const ValidationReport r = validate(loop);
  CHECK_FALSE(r.ok());
  CHECK(r.has(ViolationKind::kRegularity));
  CHECK_THROWS_AS(require_valid(loop), Error);
}

TEST_CASE("validate accepts a circle with two vertices and two edges") {
  RegularDeltaComplex circle({make_cell(0, {0}, {}), make_cell(0, {1}, {}),
                              make_cell(1, {0, 1}, {1, 0}), make_cell(1, {0, 1}, {1, 0})});
  CHECK(validate(circle).ok());
  CHECK(circle == nonsimplicial_sphere(1));
}

TEST_CASE("validate reports each violation kind") {
  SUBCASE("dangling facet") {
    RegularDeltaComplex k({make_cell(0, {0}, {}), make_cell(1, {0, 1}, {7, 0})});
    CHECK(validate(k).has(ViolationKind::kDanglingFacet));
  }
  SUBCASE("shape") {
    RegularDeltaComplex k({make_cell(0, {0}, {}), make_cell(0, {1}, {}),
                           make_cell(2, {0, 1}, {1, 0})});
    CHECK(validate(k).has(ViolationKind::kShape));
  }
  SUBCASE("non-increasing vertex tuple") {
    RegularDeltaComplex k({make_cell(0, {0}, {}), make_cell(0, {1}, {}),
                           make_cell(1, {1, 0}, {0, 1})});
    CHECK(validate(k).has(ViolationKind::kShape));
  }
  SUBCASE("facet vertices") {
    RegularDeltaComplex k({make_cell(0, {0}, {}), make_cell(0, {1}, {}),
                           make_cell(1, {0, 1}, {0, 1})});
    CHECK(validate(k).has(ViolationKind::kFacetVertices));
  }
  SUBCASE("facet dimension") {
    RegularDeltaComplex k({make_cell(0, {0}, {}), make_cell(0, {1}, {}),
                           make_cell(1, {0, 1}, {1, 0}), make_cell(1, {0, 1}, {2, 0})});
    CHECK(validate(k).has(ViolationKind::kFacetDimension));
  }
  SUBCASE("duplicate vertex label") {
    RegularDeltaComplex k({make_cell(0, {0}, {}), make_cell(0, {0}, {})});
    CHECK(validate(k).has(ViolationKind::kDuplicateVertex));
  }
  SUBCASE("facet identity") {
    // tetrahedron whose triangles {1,2,3} and {0,2,3} use different copies
    // of edge {2,3}
    const RegularDeltaComplex t = standard_simplex(3);
    std::vector<Cell> cells(t.cells().begin(), t.cells().end());
    const std::vector<VertexId> e23{2, 3}, f023{0, 2, 3};
    CellId edge = kNoCell, tri = kNoCell;
    for (const Cell& c : t.cells()) {
      if (c.vertices == e23) edge = c.id;
      if (c.vertices == f023) tri = c.id;
    }
    Cell copy = t.cell(edge);
    cells.push_back(copy);
    cells[tri].facets[0] = static_cast<CellId>(cells.size() - 1);
    const ValidationReport r = validate(RegularDeltaComplex(cells));
    CHECK(r.has(ViolationKind::kFacetIdentity));
  }
  SUBCASE("regularity of a cone point") {
    // two edges {0,1} glued to a triangle where the triangle's two facets
    // spanned by different vertex sets collapse onto one edge
    RegularDeltaComplex k({make_cell(0, {0}, {}), make_cell(0, {1}, {}),
                           make_cell(1, {0, 1}, {1, 0}), make_cell(1, {0, 1}, {1, 0}),
                           make_cell(2, {0, 1, 2}, {2, 2, 2})});
    CHECK_FALSE(validate(k).ok());
  }
}

TEST_CASE("standard_simplex cell counts") {
  CHECK(standard_simplex(0).f_vector() == std::vector<std::size_t>{1});
  CHECK(standard_simplex(2).f_vector() == std::vector<std::size_t>{3, 3, 1});
  for (int m = 0; m <= 7; ++m) {
    const auto fv = standard_simplex(m).f_vector();
    for (int k = 0; k <= m; ++k) {
      CHECK(fv[static_cast<std::size_t>(k)] ==
            oracle::binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k + 1)));
    }
  }
  CHECK(acyclic(standard_simplex(4)));
  CHECK(is_simplicial(standard_simplex(3)));
}

TEST_CASE("boundary_simplex") {
  const RegularDeltaComplex s0 = boundary_simplex(1);
  CHECK(s0.f_vector() == std::vector<std::size_t>{2});
  CHECK(sphere_like(s0, 0));
  const HomologyProfile p = homology(boundary_simplex(3));
  CHECK(p.at(2).rank == 1);
  CHECK(p.support() == std::vector<int>{2});
  for (int n = 0; n <= 5; ++n) {
    const auto fv = boundary_simplex(n + 1).f_vector();
    REQUIRE(fv.size() == static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
      CHECK(fv[static_cast<std::size_t>(k)] ==
            oracle::binomial(static_cast<unsigned>(n + 2), static_cast<unsigned>(k + 1)));
    }
  }
}

TEST_CASE("nonsimplicial_sphere") {
  const RegularDeltaComplex c = nonsimplicial_sphere(1);
  CHECK(c.f_vector() == std::vector<std::size_t>{2, 2});
  const RegularDeltaComplex s2 = nonsimplicial_sphere(2);
  CHECK(s2.f_vector() == std::vector<std::size_t>{3, 3, 2});
  CHECK(euler_characteristic(s2) == 2);
  CHECK(homology(nonsimplicial_sphere(4)) == sphere_profile(4, 4));
  CHECK_FALSE(is_simplicial(s2));
  for (int n = 1; n <= 5; ++n) {
    const RegularDeltaComplex k = nonsimplicial_sphere(n);
    const auto top = k.cells_of_dim(n);
    REQUIRE(top.size() == 2);
    CHECK(k.cell(top[0]).vertices == k.cell(top[1]).vertices);
    CHECK(k.cell(top[0]).facets == k.cell(top[1]).facets);
    CHECK(k.vertex_labels().size() == static_cast<std::size_t>(n + 1));
  }
}

TEST_CASE("skeleton") {
  const RegularDeltaComplex sk = skeleton(standard_simplex(4), 2);
  CHECK(sk.f_vector() == std::vector<std::size_t>{5, 10, 10});
  const HomologyProfile p = homology(sk);
  CHECK(p.support() == std::vector<int>{2});
  CHECK(p.at(2).rank == 4);
  CHECK(skeleton(standard_simplex(3), 5) == standard_simplex(3));
  CHECK(skeleton(standard_simplex(3), -1).empty());
  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n < m; ++n) {
      const HomologyProfile q = homology(skeleton(standard_simplex(m), n));
      CHECK(q.support() == std::vector<int>{n});
      CHECK(q.at(n).rank == oracle::binomial(static_cast<unsigned>(m), static_cast<unsigned>(n + 1)));
    }
  }
}

TEST_CASE("star, closed star and link") {
  const RegularDeltaComplex b = boundary_simplex(4);
  const auto st = star(b, b.vertex_cell(0));
  CHECK(std::find(st.begin(), st.end(), b.vertex_cell(0)) != st.end());
  CHECK(closed_star(b, b.vertex_cell(0)).complex.dim() == 3);

  for (int n = 1; n <= 5; ++n) {
    const RegularDeltaComplex k = boundary_simplex(n + 1);
    for (CellId v : k.cells_of_dim(0)) {
      CHECK(is_isomorphic(link(k, v), boundary_simplex(n)).has_value());
    }
  }
  const RegularDeltaComplex circle = nonsimplicial_sphere(1);
  const RegularDeltaComplex lk = link(circle, circle.vertex_cell(0));
  CHECK(lk.f_vector() == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(link(circle, 99), UnknownCellError);

  // link of a vertex in the nonsimplicial 2-sphere is a two-vertex circle
  const RegularDeltaComplex s2 = nonsimplicial_sphere(2);
  CHECK(link(s2, s2.vertex_cell(0)) == nonsimplicial_sphere(1));
  // link of a top cell is empty
  CHECK(link(s2, s2.cells_of_dim(2)[0]).empty());
  const Link with = link_with_cofaces(s2, s2.vertex_cell(1));
  CHECK(with.to_coface.size() == with.complex.size());
}

TEST_CASE("join, cone and suspension") {
  const RegularDeltaComplex s0 = boundary_simplex(1);
  const RegularDeltaComplex square = join(s0, s0);
  CHECK(square.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(sphere_like(square, 1));
  CHECK(euler_characteristic(square) == 0);

  CHECK(acyclic(cone(boundary_simplex(3))));
  CHECK(join(standard_simplex(0), boundary_simplex(3)) == cone(boundary_simplex(3)));

  const RegularDeltaComplex s4 = join(boundary_simplex(3), boundary_simplex(2));
  CHECK(sphere_like(s4, 4));

  CHECK(sphere_like(suspension(s0), 1));
  CHECK(suspension(s0) == join(s0, s0));
  CHECK(sphere_like(suspension(boundary_simplex(3)), 3));
  CHECK(suspension(RegularDeltaComplex{}) == s0);

  const RegularDeltaComplex a = nonsimplicial_sphere(2);
  CHECK(join(a, RegularDeltaComplex{}) == a);
  CHECK(join(RegularDeltaComplex{}, a) == a);
  const RegularDeltaComplex b = standard_simplex(1);
  CHECK(join(a, b).size() == (1 + a.size()) * (1 + b.size()) - 1);
  CHECK(is_isomorphic(join(a, b), join(b, a)).has_value());

  const RegularDeltaComplex left = join(join(s0, s0), s0);
  const RegularDeltaComplex right = join(s0, join(s0, s0));
  CHECK(is_isomorphic(left, right).has_value());
  CHECK(sphere_like(left, 2));
  CHECK(sphere_like(right, 2));
  CHECK(left.f_vector() == std::vector<std::size_t>{6, 12, 8});
}

TEST_CASE("glue_along_boundary") {
  SUBCASE("two simplices along the boundary give the nonsimplicial sphere") {
    for (int n = 1; n <= 4; ++n) {
      const ComplexPtr a = share(standard_simplex(n));
      const ComplexPtr b = share(standard_simplex(n));
      std::vector<bool> domain(a->size(), true);
      domain[a->cells_of_dim(n)[0]] = false;
      const CellMap m = match_by_vertices(a, b, domain);
      const RegularDeltaComplex g = glue_along_boundary(*a, *b, m);
      CHECK(is_isomorphic(g, nonsimplicial_sphere(n)).has_value());
    }
  }
  SUBCASE("two edges along one endpoint give a path") {
    const ComplexPtr a = share(standard_simplex(1));
    const ComplexPtr b = share(standard_simplex(1));
    CellMap m{a, b, std::vector<CellId>(a->size(), kNoCell)};
    m.assignment[a->vertex_cell(1)] = b->vertex_cell(0);
    const RegularDeltaComplex g = glue_along_boundary(*a, *b, m);
    CHECK(g.f_vector() == std::vector<std::size_t>{3, 2});
    CHECK(acyclic(g));
  }
  SUBCASE("sigma^k * sigma^(r-1) doubled along its boundary, k=1, r=2") {
    const RegularDeltaComplex piece = join(standard_simplex(1), standard_simplex(1));
    const ComplexPtr a = share(piece);
    const ComplexPtr b = share(piece);
    std::vector<bool> domain(a->size(), true);
    domain[a->cells_of_dim(a->dim())[0]] = false;
    const RegularDeltaComplex g = glue_along_boundary(*a, *b, match_by_vertices(a, b, domain));
    // sigma^1 * sigma^1 is a 3-ball, so the double is a 3-sphere
    CHECK(g.dim() == 3);
    CHECK(sphere_like(g, 3));
  }
  SUBCASE("non-isomorphic matching is rejected") {
    const ComplexPtr a = share(standard_simplex(1));
    const ComplexPtr b = share(standard_simplex(2));
    CellMap m{a, b, std::vector<CellId>(a->size(), kNoCell)};
    m.assignment[a->cells_of_dim(1)[0]] = b->cells_of_dim(1)[0];
    CHECK_THROWS_AS(glue_along_boundary(*a, *b, m), GlueError);
  }
  SUBCASE("gluing that breaks regularity is rejected") {
    // both endpoints onto one vertex
    const ComplexPtr a = share(standard_simplex(1));
    const ComplexPtr b = share(standard_simplex(0));
    CellMap m{a, b, std::vector<CellId>(a->size(), kNoCell)};
    m.assignment[a->vertex_cell(0)] = b->vertex_cell(0);
    m.assignment[a->vertex_cell(1)] = b->vertex_cell(0);
    CHECK_THROWS_AS(glue_along_boundary(*a, *b, m), GlueError);
  }
}

TEST_CASE("barycentric_subdivision") {
  const Subdivision s1 = barycentric_subdivision(standard_simplex(1));
  CHECK(s1.complex.f_vector() == std::vector<std::size_t>{3, 2});
  CHECK(s1.carrier.is_total());

  const Subdivision c = barycentric_subdivision(nonsimplicial_sphere(1));
  CHECK(c.complex.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(is_simplicial(c.complex));

  const RegularDeltaComplex b4 = boundary_simplex(4);
  const Subdivision sb = barycentric_subdivision(b4);
  CHECK(homology(sb.complex) == homology(b4));
  CHECK(is_simplicial(sb.complex));
  CHECK(validate(sb.complex).ok());
  for (std::size_t i = 0; i < sb.flags.size(); ++i) {
    CHECK(sb.carrier.assignment[i] == sb.flags[i].back());
  }
}

TEST_CASE("is_simplicial and is_isomorphic") {
  CHECK(is_simplicial(standard_simplex(3)));
  CHECK_FALSE(is_simplicial(nonsimplicial_sphere(2)));

  // boundary of the tetrahedron on relabelled vertices
  const RegularDeltaComplex relabelled =
      simplicial_closure({{3, 7, 9}, {3, 7, 12}, {3, 9, 12}, {7, 9, 12}});
  const auto iso = is_isomorphic(boundary_simplex(3), relabelled);
  REQUIRE(iso.has_value());
  CHECK(verify_isomorphism(boundary_simplex(3), relabelled, *iso));
  CHECK_FALSE(is_isomorphic(boundary_simplex(3), nonsimplicial_sphere(2)).has_value());
  CHECK_FALSE(is_isomorphic(standard_simplex(2), boundary_simplex(3)).has_value());
}

TEST_CASE("facet compatibility of cell maps") {
  const ComplexPtr s = share(standard_simplex(2));
  CellMap id{s, s, {}};
  for (const Cell& c : s->cells()) id.assignment.push_back(c.id);
  CHECK(check_facet_compatible(id).ok);
  CellMap partial = id;
  partial.assignment[0] = kNoCell;
  CHECK_FALSE(check_facet_compatible(partial).ok);
}

TEST_CASE("face_spanned and closure") {
  const RegularDeltaComplex s = standard_simplex(3);
  const CellId top = s.cells_of_dim(3)[0];
  const std::vector<VertexId> span{1, 3};
  const CellId e = face_spanned(s, top, span);
  CHECK(s.cell(e).vertices == span);
  CHECK(closure(s, top).size() == 15);
}
