#include <doctest.h>

#include <set>

#include "cuspkit/errors.hpp"
#include "cuspkit/qdata.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace cuspkit;

namespace {

RootVec rv(std::vector<int> c) { return RootVec(std::move(c)); }

QData make(const char* cartan, const char* quiver, std::vector<int> phi) {
  CartanDatum c = parse_cartan(cartan);
  return QData{c, DynkinQuiver::parse(c, quiver), std::move(phi)};
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_qdata(make("A2", "2>1", {0, 1})).empty());
  auto odd = validate_qdata(make("A2", "2>1", {1, 2}));
  REQUIRE(odd.size() == 1);
  CHECK(odd.front().rule == "phi(1) odd");
  auto arrow = validate_qdata(make("A2", "1>2", {0, 1}));
  REQUIRE(arrow.size() == 1);
  CHECK(arrow.front().rule == "arrow");
  CHECK(arrow.front().where == "1>2");
  CartanDatum a3 = parse_cartan("A3");
  CHECK_THROWS_AS(DynkinQuiver::parse(a3, "1>2"), ConfigError);
  CHECK_THROWS_AS(DynkinQuiver::parse(a3, "1>2,2>3,3>2"), ConfigError);
  CHECK_THROWS_AS(DynkinQuiver::parse(a3, "1>3,2>3"), ConfigError);
  CHECK(DynkinQuiver::parse(a3, "2>1,2>3").to_string() == "2>1,2>3");
  CHECK(DynkinQuiver::all(a3).size() == 4);
  CHECK(DynkinQuiver::all(parse_cartan("D4")).size() == 8);
}

TEST_CASE("height functions") {
  CartanDatum a3 = parse_cartan("A3");
  QData q = QData::with_base(a3, DynkinQuiver::parse(a3, "1>2,3>2"), 0);
  CHECK(q.phi == std::vector<int>{0, -1, 0});
  CHECK(validate_qdata(q).empty());
  for (const QData& e : enumerate_qdata(parse_cartan("D4"))) CHECK(validate_qdata(e).empty());
  CHECK(enumerate_qdata(a3).size() == 12);
}

TEST_CASE("A2 AR quiver") {
  auto rs = build_root_system(Series::A, 2);
  QData q = make("A2", "2>1", {0, 1});
  ARQuiver ar = ar_quiver(q, rs);
  REQUIRE(ar.vertices.size() == 3);
  CHECK(ar.label_of(rv({1, 0})) == VertexLabel{1, 0});
  CHECK(ar.label_of(rv({1, 1})) == VertexLabel{2, 1});
  CHECK(ar.label_of(rv({0, 1})) == VertexLabel{1, 2});
  CHECK(ar.root_at({2, 1}) == rv({1, 1}));
  CHECK_FALSE(ar.root_at({2, 3}).has_value());
  CHECK(ar.arrows.size() == 2);
  CHECK(ar.to_tsv() == "i\t0\t1\t2\n1\t[1,0]\t.\t[0,1]\n2\t.\t[1,1]\t.\n");
  CHECK_THROWS_AS(ar_quiver(make("A2", "1>2", {0, 1}), rs), DomainError);
}

TEST_CASE("AR quivers agree with sink reflections") {
  for (const char* name : {"A2", "A3", "A4", "D4", "D5"}) {
    auto rs = build_root_system(parse_cartan(name));
    std::set<RootVec> all(rs.positive_roots().begin(), rs.positive_roots().end());
    for (const QData& q : enumerate_qdata(rs.cartan())) {
      INFO(std::string(name), " ", q.quiver.to_string(), " base ", q.phi.front());
      ARQuiver ar = ar_quiver(q, rs);
      CoordinateBijection bij = root_coordinate_bijection(ar);
      CHECK(ar.vertices.size() == rs.num_positive());
      CHECK(bij.to_label.size() == all.size());
      for (const auto& [root, label] : bij.to_label) {
        CHECK(all.count(root));
        CHECK(bij.to_root.at(label) == root);
        CHECK(in_c0(rs.cartan(), label));
      }
      for (int i = 1; i <= rs.rank(); ++i) CHECK(bij.simple(i, rs.rank()).i >= 1);
      // every adapted reduced word, read by sink reflection, lands on the same coordinates
      std::size_t checked = 0;
      for (const auto& letters : oracle::all_adapted_words(q.quiver, rs.rank(), rs.num_positive(), 40)) {
        ReducedWord w{letters};
        if (!is_reduced(rs.cartan(), w)) continue;
        CHECK(is_adapted(w, q.quiver));
        auto coords = oracle::coordinates_by_reflection(q, letters);
        CHECK(coords == bij.to_label);
        ConvexSeq seq = beta_sequence(rs, w);
        for (const auto& [from, to] : ar.arrows) CHECK(*seq.position(bij.to_root.at(from)) < *seq.position(bij.to_root.at(to)));
        ++checked;
      }
      CHECK(checked > 0);
      ReducedWord w = adapted_word(rs, q.quiver);
      CHECK(is_adapted(w, q.quiver));
      CHECK(oracle::coordinates_by_reflection(q, w.letters) == bij.to_label);
      for (const auto& [from, to] : ar.arrows) {
        CHECK(to.p == from.p + 1);
        CHECK(rs.cartan().entry(from.i, to.i) == -1);
      }
    }
  }
}

TEST_CASE("adaptedness") {
  CartanDatum a2 = parse_cartan("A2");
  DynkinQuiver q = DynkinQuiver::parse(a2, "2>1");
  CHECK(is_adapted(parse_word("1,2,1"), q));
  CHECK_FALSE(is_adapted(parse_word("2,1,2"), q));
  CartanDatum a1 = parse_cartan("A1");
  CHECK(is_adapted(parse_word("1"), DynkinQuiver::from_arrows(a1, {})));
  CHECK(adapted_word(build_root_system(a1), DynkinQuiver::from_arrows(a1, {})) == parse_word("1"));
}

TEST_CASE("D-shift on labels") {
  auto inv1 = involution_and_coxeter(build_root_system(Series::A, 1));
  CHECK(dshift_label(inv1, {1, 0}) == VertexLabel{1, 2});
  auto inv2 = involution_and_coxeter(build_root_system(Series::A, 2));
  CHECK(dshift_label(inv2, {1, 0}) == VertexLabel{2, 3});
  CHECK(dshift_label(inv2, {1, 0}, 2) == VertexLabel{1, 6});
  CHECK(dshift_label(inv2, {1, 0}, -1) == VertexLabel{2, -3});
  for (const char* name : {"A2", "A3", "D4", "D5"}) {
    CartanDatum c = parse_cartan(name);
    auto inv = involution_and_coxeter(build_root_system(c));
    std::set<VertexLabel> images;
    for (int i = 1; i <= c.rank(); ++i)
      for (int p = -6; p <= 6; ++p) {
        VertexLabel v{i, p};
        images.insert(dshift_label(inv, v));
        CHECK(dshift_label(inv, dshift_label(inv, v, 1), -1) == v);
        CHECK(dshift_label(inv, v, 2) == VertexLabel{i, p + 2 * inv.coxeter});
        if (in_c0(c, v)) CHECK(in_c0(c, dshift_label(inv, v)));
      }
    CHECK(images.size() == static_cast<std::size_t>(13 * c.rank()));
  }
}

TEST_CASE("JSON and TSV forms") {
  auto rs = build_root_system(Series::A, 2);
  QData q = make("A2", "2>1", {0, 1});
  nlohmann::json j = ar_quiver(q, rs).to_json();
  CHECK(j["vertices"].size() == 3);
  CHECK(q.to_json()["phi"] == nlohmann::json::array({0, 1}));
  CHECK(VertexLabel{1, 0}.to_string() == "(1,0)");
}
