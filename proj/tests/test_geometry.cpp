#include <doctest.h>

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "polyharm/group.hpp"
#include "polyharm/incidence.hpp"
#include "polyharm/solid.hpp"

using namespace polyharm;

namespace {

const std::vector<Rational> kGrid = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                     Rational(3), Rational(5)};

// Closed-form feet from the construction write-up; cross-checks only, the
// builder must not use them.
struct TetraFeet {
  Rational alpha, beta, gamma, delta;
};
TetraFeet tetra_feet(const Rational& r) {
  const Rational q9 = r * r - Rational(2) * r + Rational(9);
  const Rational q3 = r * r - Rational(2) * r + Rational(3);
  return {Rational(4) * r * (r - Rational(3)) / (Rational(3) * q9),
          Rational(2) * r * (r + Rational(3)) / (Rational(3) * q9),
          Rational(2) * r * r / (Rational(3) * q3),
          r * (r - Rational(3)) / (Rational(3) * q3)};
}

BigFloat rel_err(const BigFloat& a, const BigFloat& b) {
  BigFloat scale = a.abs() > b.abs() ? a.abs() : b.abs();
  if (scale < BigFloat(1)) scale = BigFloat(1);
  return (a - b).abs() / scale;
}

}  // namespace

TEST_CASE("skeleton counts are constant over r, including degenerate values") {
  for (const auto& r : kGrid) {
    auto tetra = build_solid<Rational>(Family::TriakisTetra, r);
    CHECK(tetra.vertices.size() == 8);
    CHECK(tetra.edges.size() == 18);
    CHECK(tetra.faces.size() == 12);
    CHECK(tetra.flags.size() == 72);
    auto octa = build_solid<Rational>(Family::TriakisOcta, r);
    CHECK(octa.vertices.size() == 14);
    CHECK(octa.edges.size() == 36);
    CHECK(octa.faces.size() == 24);
    CHECK(octa.flags.size() == 144);
  }
  CHECK_THROWS_AS(build_solid<Rational>(Family::TriakisTetra, Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_solid<Rational>(Family::TriakisOcta, Rational(-2)),
                  std::invalid_argument);
}

TEST_CASE("combinatorial structure is identical across parameters") {
  auto a = build_solid<Rational>(Family::TriakisTetra, Rational(1));
  auto b = build_solid<Rational>(Family::TriakisTetra, Rational(3));
  auto c = build_solid<Rational>(Family::TriakisTetra, Rational(2));
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].label == c.edges[i].label);
    CHECK(b.edges[i].v0 == c.edges[i].v0);
    CHECK(b.edges[i].v1 == c.edges[i].v1);
  }
  for (std::size_t i = 0; i < a.faces.size(); ++i) {
    CHECK(a.faces[i].label == c.faces[i].label);
    CHECK(b.faces[i].verts == c.faces[i].verts);
  }
  CHECK(a.flags.size() == c.flags.size());
}

TEST_CASE("tetra apexes: centroid rule and the cube at r=3") {
  auto inst = build_solid<Rational>(Family::TriakisTetra, Rational(1));
  const auto& d = inst.vertices[static_cast<std::size_t>(inst.vertex_index("d"))];
  CHECK(d.apex);
  CHECK(d.point == Vec3<Rational>{Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)});
  auto cube = build_solid<Rational>(Family::TriakisTetra, Rational(3));
  CHECK(cube.vertices[static_cast<std::size_t>(cube.vertex_index("d"))].point ==
        Vec3<Rational>{Rational(-1), Rational(-1), Rational(-1)});
  CHECK(cube.vertices[static_cast<std::size_t>(cube.vertex_index("c"))].point ==
        Vec3<Rational>{Rational(1), Rational(1), Rational(-1)});
}

TEST_CASE("feet satisfy the orthogonality conditions exactly") {
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    for (const auto& r : kGrid) {
      auto inst = build_solid<Rational>(fam, r);
      for (const auto& e : inst.edges) {
        const auto& p0 = inst.vertices[static_cast<std::size_t>(e.v0)].point;
        const auto& p1 = inst.vertices[static_cast<std::size_t>(e.v1)].point;
        const auto dir = vec_sub(p1, p0);
        CHECK(dot(e.foot, dir).is_zero());  // foot orthogonal to the line
        CHECK(cross(vec_sub(e.foot, p0), dir) ==
              (Vec3<Rational>{Rational(0), Rational(0), Rational(0)}));  // foot on the line
      }
      for (const auto& f : inst.faces) {
        const auto& p0 = inst.vertices[static_cast<std::size_t>(f.verts[0])].point;
        const auto& p1 = inst.vertices[static_cast<std::size_t>(f.verts[1])].point;
        const auto& p2 = inst.vertices[static_cast<std::size_t>(f.verts[2])].point;
        CHECK(dot(f.foot, vec_sub(p1, p0)).is_zero());
        CHECK(dot(f.foot, vec_sub(p2, p0)).is_zero());
        CHECK(det3(vec_sub(f.foot, p0), vec_sub(p1, p0), vec_sub(p2, p0)).is_zero());
      }
    }
  }
}

TEST_CASE("feet match the closed forms") {
  for (const auto& r : kGrid) {
    auto inst = build_solid<Rational>(Family::TriakisTetra, r);
    const auto f = tetra_feet(r);
    const auto& ad = inst.edges[static_cast<std::size_t>(inst.edge_index("Ad"))];
    CHECK(ad.foot == Vec3<Rational>{f.alpha, -f.beta, -f.beta});
    const auto& ab = inst.edges[static_cast<std::size_t>(inst.edge_index("AB"))];
    CHECK(ab.foot == Vec3<Rational>{Rational(0), Rational(0), Rational(-1)});
    const auto& abd = inst.faces[static_cast<std::size_t>(inst.face_index("ABd"))];
    CHECK(abd.foot == Vec3<Rational>{f.delta, f.delta, -f.gamma});
    const auto& abc = inst.faces[static_cast<std::size_t>(inst.face_index("ABc"))];
    CHECK(abc.foot == Vec3<Rational>{-f.delta, -f.delta, -f.gamma});

    auto octa = build_solid<Rational>(Family::TriakisOcta, r);
    const Rational q3 = r * r - Rational(2) * r + Rational(3);
    const Rational q23 = Rational(2) * r * r - Rational(4) * r + Rational(3);
    const Rational u = Rational(2) * r * r / (Rational(3) * q3);
    const Rational v = r * (Rational(3) - r) / (Rational(3) * q3);
    const Rational p = r * (Rational(3) - Rational(2) * r) / (Rational(3) * q23);
    const Rational q = r * r / (Rational(3) * q23);
    const auto& adp = octa.edges[static_cast<std::size_t>(octa.edge_index("A+D+++"))];
    CHECK(adp.foot == Vec3<Rational>{u, v, v});
    const auto& adm = octa.edges[static_cast<std::size_t>(octa.edge_index("B-D+-+"))];
    CHECK(adm.foot == Vec3<Rational>{v, -u, v});
    const auto& fabd = octa.faces[static_cast<std::size_t>(octa.face_index("A+B+D+++"))];
    CHECK(fabd.foot == Vec3<Rational>{q, q, p});
    const auto& fbcd = octa.faces[static_cast<std::size_t>(octa.face_index("B-C+D+-+"))];
    CHECK(fbcd.foot == Vec3<Rational>{p, -q, q});
  }
  // Spot value: at r=3 the Ad foot is (0,-1,-1).
  auto inst3 = build_solid<Rational>(Family::TriakisTetra, Rational(3));
  CHECK(inst3.edges[static_cast<std::size_t>(inst3.edge_index("Ad"))].foot ==
        Vec3<Rational>{Rational(0), Rational(-1), Rational(-1)});
}

TEST_CASE("symmetry closure: the solid's group permutes the skeleton") {
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    auto inst = build_solid<Rational>(fam, Rational(5, 2));
    const Group g = fam == Family::TriakisTetra ? Group::A3 : Group::B3;
    std::map<Vec3<Rational>, int> vertex_of;
    for (std::size_t i = 0; i < inst.vertices.size(); ++i)
      vertex_of[inst.vertices[i].point] = static_cast<int>(i);
    std::map<std::pair<int, int>, Vec3<Rational>> edge_foot;
    for (const auto& e : inst.edges)
      edge_foot[{std::min(e.v0, e.v1), std::max(e.v0, e.v1)}] = e.foot;

    for (const auto& el : group_elements(g)) {
      for (const auto& v : inst.vertices) {
        auto it = vertex_of.find(act(el, v.point));
        REQUIRE(it != vertex_of.end());
        CHECK(inst.vertices[static_cast<std::size_t>(it->second)].apex == v.apex);
      }
      for (const auto& e : inst.edges) {
        const int w0 = vertex_of.at(act(el, inst.vertices[static_cast<std::size_t>(e.v0)].point));
        const int w1 = vertex_of.at(act(el, inst.vertices[static_cast<std::size_t>(e.v1)].point));
        CHECK(edge_foot.at({std::min(w0, w1), std::max(w0, w1)}) == act(el, e.foot));
      }
    }
  }
}

TEST_CASE("incidence numbers match closed forms on the r grid") {
  const mpfr_prec_t prec = 128;
  const BigFloat tol = BigFloat::from_double(1e-12, prec);
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    for (const auto& r : kGrid) {
      auto inst = build_solid_f(fam, r, prec);
      const auto geo = incidence_numbers(inst);
      const auto cf = incidence_closed_forms(fam, BigFloat::from_rational(r, prec));
      CHECK(rel_err(geo.ve1, cf.ve1) < tol);
      CHECK(rel_err(geo.ve2, cf.ve2) < tol);
      CHECK(rel_err(geo.ve3, cf.ve3) < tol);
      CHECK(rel_err(geo.ef1, cf.ef1) < tol);
      CHECK(rel_err(geo.ef2, cf.ef2) < tol);
    }
  }
}

TEST_CASE("incidence zeros at the distinguished parameters") {
  const mpfr_prec_t prec = 128;
  const BigFloat tiny = BigFloat::from_double(1e-25, prec);
  CHECK(incidence_numbers(build_solid_f(Family::TriakisTetra, Rational(9), prec)).ve2.abs() <
        tiny);
  CHECK(incidence_numbers(build_solid_f(Family::TriakisTetra, Rational(1), prec)).ve3.abs() <
        tiny);
  CHECK(incidence_numbers(build_solid_f(Family::TriakisOcta, Rational(3, 2), prec)).ef1.abs() <
        tiny);
}

TEST_CASE("incidence numbers depend only on the class") {
  const mpfr_prec_t prec = 128;
  const BigFloat tol = BigFloat::from_double(1e-28, prec);
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    auto inst = build_solid_f(fam, Rational(7, 4), prec);
    const auto rep = incidence_numbers(inst);
    for (std::size_t ei = 0; ei < inst.edges.size(); ++ei) {
      const auto& e = inst.edges[ei];
      for (int vi : {e.v0, e.v1}) {
        const int t = inst.ve_type(vi, static_cast<int>(ei));
        CHECK(rel_err(incidence_ve(inst, vi, static_cast<int>(ei)), rep.ve(t)) < tol);
      }
    }
    for (std::size_t fi = 0; fi < inst.faces.size(); ++fi)
      for (int ei : inst.faces[fi].edges) {
        const int t = inst.ef_type(ei);
        CHECK(rel_err(incidence_ef(inst, ei, static_cast<int>(fi)), rep.ef(t)) < tol);
      }
  }
}

TEST_CASE("raw and normalized face weights differ by one common positive factor") {
  const mpfr_prec_t prec = 128;
  const BigFloat tol = BigFloat::from_double(1e-25, prec);
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    auto inst = build_solid_f(fam, Rational(5, 4), prec);
    const auto raw = raw_flag_weights(inst);
    const auto nrm = normalized_flag_weights(fam, inst.r);
    const BigFloat ratio0 = raw[0] / nrm[0];
    CHECK(rel_err(raw[1] / nrm[1], ratio0) < tol);
    CHECK(rel_err(raw[2] / nrm[2], ratio0) < tol);
    CHECK(ratio0 > BigFloat(0));
  }
}

TEST_CASE("flag classification") {
  auto inst = build_solid<Rational>(Family::TriakisTetra, Rational(2));
  const int vA = inst.vertex_index("A"), vd = inst.vertex_index("d");
  const int eAB = inst.edge_index("AB"), eAd = inst.edge_index("Ad");
  const int fABd = inst.face_index("ABd");
  std::map<std::tuple<int, int, int>, int> type_of;
  std::array<int, 3> per_type{0, 0, 0};
  for (const auto& fl : inst.flags) {
    type_of[{fl.vertex, fl.edge, fl.face}] = fl.type;
    ++per_type[static_cast<std::size_t>(fl.type - 1)];
  }
  CHECK(type_of.at({vA, eAB, fABd}) == 1);
  CHECK(type_of.at({vA, eAd, fABd}) == 2);
  CHECK(type_of.at({vd, eAd, fABd}) == 3);
  CHECK(per_type == std::array<int, 3>{24, 24, 24});

  auto octa = build_solid<Rational>(Family::TriakisOcta, Rational(2));
  std::array<int, 3> octa_per_type{0, 0, 0};
  for (const auto& fl : octa.flags) ++octa_per_type[static_cast<std::size_t>(fl.type - 1)];
  CHECK(octa_per_type == std::array<int, 3>{48, 48, 48});
  CHECK(enumerate_flags(octa).size() == 144);
}

TEST_CASE("face orientations give outward normals") {
  for (Family fam : {Family::TriakisTetra, Family::TriakisOcta}) {
    for (const auto& r : kGrid) {
      auto inst = build_solid<Rational>(fam, r);
      for (const auto& f : inst.faces) {
        const Rational d = det3(inst.vertices[static_cast<std::size_t>(f.verts[0])].point,
                                inst.vertices[static_cast<std::size_t>(f.verts[1])].point,
                                inst.vertices[static_cast<std::size_t>(f.verts[2])].point);
        CHECK((Rational(f.orientation) * d).sign() > 0);
      }
    }
  }
}
