#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include "bhc/catalog.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace bhc;
using nlohmann::json;
using support::q;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

void check_same(const CatalogEntry& a, const CatalogEntry& b) {
  CHECK(a.name == b.name);
  CHECK(a.hopf.has_value() == b.hopf.has_value());
  if (a.hopf) {
    const HopfData &x = a.hopf->data(), &y = b.hopf->data();
    CHECK(x.H == y.H);
    for (Index i = 0; i < x.H.dim(); ++i) CHECK(x.H.label(i) == y.H.label(i));
    CHECK(x.m == y.m);
    CHECK(x.eta == y.eta);
    CHECK(x.delta == y.delta);
    CHECK(x.eps == y.eps);
    CHECK(x.S == y.S);
    CHECK(a.hopf->cat().kind() == b.hopf->cat().kind());
    CHECK(a.hopf->psi() == b.hopf->psi());
  }
  REQUIRE(a.pairs.size() == b.pairs.size());
  for (std::size_t p = 0; p < a.pairs.size(); ++p) {
    CHECK(a.pairs[p].name == b.pairs[p].name);
    CHECK(a.pairs[p].delta.map == b.pairs[p].delta.map);
    CHECK(a.pairs[p].sigma.map == b.pairs[p].sigma.map);
  }
  CHECK(a.bmpi_expected == b.bmpi_expected);
  CHECK(a.lie.has_value() == b.lie.has_value());
  if (a.lie) {
    CHECK(a.lie->generators() == b.lie->generators());
    CHECK(a.lie->even_dim() == b.lie->even_dim());
    CHECK(a.lie->delta() == b.lie->delta());
    for (Index i = 0; i < a.lie->dim(); ++i)
      for (Index j = 0; j < a.lie->dim(); ++j) CHECK(a.lie->bracket(i, j) == b.lie->bracket(i, j));
  }
}

// Gaussian binomial by the recursion [a,b] = [a-1,b-1] + q^b [a-1,b]
Scalar gauss(unsigned a, unsigned b, const Scalar& qv) {
  if (b == 0 || b == a) return Scalar(qv.field(), 1L);
  if (b > a) return Scalar(qv.field());
  Scalar qb(qv.field(), 1L);
  for (unsigned i = 0; i < b; ++i) qb = qb * qv;
  return gauss(a - 1, b - 1, qv) + qb * gauss(a - 1, b, qv);
}

json cz2_json() { return json::parse(export_entry(load_example("cz2"))); }

}  // namespace

TEST_CASE("every catalog entry loads and verifies") {
  const auto names = example_names();
  CHECK(names.size() == 12);
  for (const auto& n : names) {
    CAPTURE(n);
    const CatalogEntry e = load_example(n);
    CHECK(e.name == n);
    CHECK_FALSE(e.summary.empty());
    CHECK(verify_entry(e).passed());
    CHECK(e.bmpi_expected.size() == e.pairs.size());
  }
  CHECK(load_example("cz2").hopf->H().dim() == 2);
  CHECK(load_example("super_ext_2").hopf->H().dim() == 4);
  CHECK(load_example("group_z_12").hopf->H().dim() == 12);
  CHECK(load_example("lie_odd_abelian_4").lie->odd_dim() == 4);
  const CatalogEntry a = load_example("anyon_line_4");
  CHECK(a.hopf->H().dim() == 4);
  CHECK(a.hopf->field() == Field::cyclotomic(4));
  CHECK(a.bmpi_expected == std::vector<bool>{false});
  for (const char* bad : {"cz3", "group_z_1", "group_z_13", "super_ext_4", "lie_odd_abelian_0", ""})
    CHECK(code_of([&] { load_example(bad); }) == Errc::unknown_name);
}

TEST_CASE("r-matrix variant carries R = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g)") {
  const CatalogEntry e = load_example("cz2_rmatrix");
  CHECK(e.hopf->cat().kind() == CategoryKind::r_matrix);
  CHECK(e.hopf->cat().r_element() == make_sparse({{0, q(1, 2)}, {1, q(1, 2)}, {2, q(1, 2)}, {3, q(-1, 2)}}));
  CHECK(e.hopf->psi() == load_example("cz2").hopf->psi());
}

TEST_CASE("oracle: anyonic coproduct coefficients are Gaussian binomials at ζ₄") {
  const HopfObject h = *load_example("anyon_line_4").hopf;
  const Scalar z = support::zeta(h.field(), 4, 1);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned j = 0; j <= a; ++j) CHECK(h.delta().entry(j * 4 + (a - j), a) == gauss(a, j, z));
  for (unsigned j = 1; j < 4; ++j) CHECK(gauss(4, j, z).is_zero());
  // S(θ^k) = (-1)^k ζ₄^{k(k-1)/2} θ^k
  for (long k = 0; k < 4; ++k) {
    Scalar expect = support::zeta(h.field(), 4, k * (k - 1) / 2);
    if (k % 2) expect = -expect;
    CHECK(h.S().entry(k, k) == expect);
  }
}

TEST_CASE("export then import reproduces every entry") {
  for (const auto& n : example_names()) {
    CAPTURE(n);
    const CatalogEntry e = load_example(n);
    const std::string text = export_entry(e);
    const CatalogEntry back = import_presentation_text(text, n + ".json");
    check_same(e, back);
    CHECK(export_entry(back) == text);
  }
}

TEST_CASE("file round trip and load_any") {
  const auto dir = std::filesystem::temp_directory_path() / "bhc_catalog_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "cz2.json").string();
  export_entry(load_example("cz2"), path);
  check_same(load_example("cz2"), import_presentation(path));
  check_same(load_example("cz2"), load_any(path));
  check_same(load_example("super_ext_1"), load_any("super_ext_1"));
  CHECK(code_of([&] { import_presentation((dir / "missing.json").string()); }) == Errc::io_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("a non-coassociative coproduct is rejected naming coassociativity") {
  json j = cz2_json();
  j["hopf"]["delta"].push_back({1, 1, 0, "1"});  // Δg = g⊗g + g⊗1
  const std::string text = j.dump(2);
  CHECK(code_of([&] { import_presentation_text(text); }) == Errc::verification_failed);
  CHECK(message_of([&] { import_presentation_text(text); }).find("coassociativity") != std::string::npos);
}

TEST_CASE("documented BMPI verdicts are enforced") {
  json j = json::parse(export_entry(load_example("anyon_line_4")));
  j["pair"]["bmpi"] = true;
  CHECK(code_of([&] { import_presentation_text(j.dump()); }) == Errc::verification_failed);
  j["pair"].erase("bmpi");
  CHECK(import_presentation_text(j.dump()).bmpi_expected == std::vector<bool>{false});
}

TEST_CASE("malformed interchange files give positioned parse errors") {
  json j = cz2_json();
  j["colour"] = "blue";
  const std::string unknown = message_of([&] { import_presentation_text(j.dump(2), "x.json"); });
  CHECK(unknown.find("x.json:") == 0);
  CHECK(unknown.find("unknown key 'colour'") != std::string::npos);
  CHECK(code_of([&] { import_presentation_text(j.dump(2)); }) == Errc::parse_error);

  j = cz2_json();
  j["category"]["kind"] = "ribbon";
  CHECK(code_of([&] { import_presentation_text(j.dump(2)); }) == Errc::parse_error);
  CHECK(message_of([&] { import_presentation_text(j.dump(2)); }).find("unknown category kind 'ribbon'") != std::string::npos);

  const std::string truncated = "{\n  \"name\": \"x\",\n  \"field\": ";
  const std::string msg = message_of([&] { import_presentation_text(truncated, "t.json"); });
  CHECK(msg.find("t.json:3:") == 0);
  CHECK(code_of([&] { import_presentation_text(truncated); }) == Errc::parse_error);

  j = cz2_json();
  j["hopf"]["m"][0] = json::array({0, 0, "1"});
  CHECK(code_of([&] { import_presentation_text(j.dump()); }) == Errc::parse_error);
  j = cz2_json();
  j["hopf"]["m"][0] = json::array({0, 7, 0, "1"});
  CHECK(message_of([&] { import_presentation_text(j.dump()); }).find("out of range") != std::string::npos);
  j = cz2_json();
  j["hopf"]["m"][0][3] = "1/0";
  CHECK(code_of([&] { import_presentation_text(j.dump()); }) == Errc::parse_error);
  j = cz2_json();
  j["field"] = "reals";
  CHECK(code_of([&] { import_presentation_text(j.dump()); }) == Errc::parse_error);
}

TEST_CASE("SAYD modules in an interchange file") {
  json j = cz2_json();
  // the line with g acting by -1 and trivial coaction: σI_δ for (δ₋, 1)
  j["modules"] = json::array({{{"name", "C_-"}, {"labels", {"m"}}, {"phi", {{0, 0, 0, "1"}, {0, 1, 0, "-1"}}}, {"rho", {{0, 0, 0, "1"}}}}});
  const CatalogEntry e = import_presentation_text(j.dump());
  REQUIRE(e.modules.size() == 1);
  CHECK(e.modules[0].name == "C_-");
  CHECK(check_aYD(e.modules[0]).passed());
  CHECK(export_entry(import_presentation_text(export_entry(e))) == export_entry(e));

  // coaction by g with action by -1: δσ = -1 breaks stability
  j["modules"][0]["rho"] = json::array({json::array({0, 1, 0, "1"})});
  CHECK(code_of([&] { import_presentation_text(j.dump()); }) == Errc::verification_failed);
}

TEST_CASE("Lie presentations") {
  const json j = {{"name", "heis"},
                  {"lie", {{"even", 3}, {"odd", 0}, {"brackets", {{0, 1, {{2, "1"}}}}}, {"names", {"x", "y", "z"}}}}};
  const CatalogEntry e = import_presentation_text(j.dump());
  REQUIRE(e.lie);
  CHECK(e.lie->bracket(1, 0) == SparseVec{{2, q(-1)}});
  CHECK(lie_homology(*e.lie, 3) == std::vector<Index>{1, 2, 2, 1});

  json bad = j;
  bad["lie"]["brackets"] = {{0, 1, {{0, "1"}}}, {0, 2, {{1, "1"}}}, {1, 2, {{0, "1"}}}};
  CHECK(code_of([&] { import_presentation_text(bad.dump()); }) == Errc::verification_failed);
  bad = j;
  bad["lie"]["brackets"] = {{0, 5, {{0, "1"}}}};
  CHECK(code_of([&] { import_presentation_text(bad.dump()); }) == Errc::parse_error);
}
