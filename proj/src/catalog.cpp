#include "bhc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bhc {

using json = nlohmann::json;

namespace {

Scalar num(Field f, long v) { return Scalar(f, v); }

// ---- builders ------------------------------------------------------------

HopfData group_algebra(Field F, unsigned m, const std::string& name) {
  std::vector<std::string> labels;
  for (unsigned a = 0; a < m; ++a) labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
  const Space H = Space::atom(F, name, labels);
  std::vector<Triple3> mt, dt;
  std::vector<Pair2> st;
  std::vector<Pair1> et;
  for (unsigned a = 0; a < m; ++a) {
    for (unsigned b = 0; b < m; ++b) mt.emplace_back(a, b, (a + b) % m, num(F, 1));
    dt.emplace_back(a, a, a, num(F, 1));
    st.emplace_back(a, (m - a) % m, num(F, 1));
    et.emplace_back(a, num(F, 1));
  }
  return hopf_data_from_tensors(H, mt, {{0, num(F, 1)}}, dt, et, st);
}

ModularPair pair_from(const HopfObject& h, const std::vector<Scalar>& delta, const std::string& name) {
  std::vector<SparseVec> cols;
  for (const Scalar& v : delta) cols.push_back(make_sparse({{0, v}}));
  return ModularPair::make(h, Character::make(h, LinearMap::from_columns(h.H(), h.I(), std::move(cols))),
                           unit_cocharacter(h), name);
}

CatalogEntry make_group(unsigned m, const std::string& entry_name) {
  const Field F = m <= 2 ? Field::rational() : Field::cyclotomic(m);
  CatalogEntry e;
  e.name = entry_name;
  e.summary = m == 2 ? "group algebra of Z2 over Q" : "group algebra of Z" + std::to_string(m) + " over " + F.name();
  const CategoryPtr cat = BraidedCategory::trivial(F);
  HopfData data = group_algebra(F, m, m == 2 ? "CZ2" : "CZ" + std::to_string(m));
  const Space H = data.H;
  e.hopf = HopfObject::make(cat, cat->object(H), std::move(data), m == 2 ? "CZ2" : "CZ" + std::to_string(m));
  e.pairs.push_back(trivial_pair(*e.hopf));
  std::vector<Scalar> chi;
  for (unsigned a = 0; a < m; ++a) chi.push_back(Scalar::root_of_unity(F, m, a));
  e.pairs.push_back(pair_from(*e.hopf, chi, m == 2 ? "(δ₋,1)" : "(δ_ζ,1)"));
  e.bmpi_expected = {true, true};
  return e;
}

CatalogEntry make_cz2_rmatrix() {
  const Field F = Field::rational();
  CatalogEntry e;
  e.name = "cz2_rmatrix";
  e.summary = "CZ2 in CZ2-modules braided by R = (1/2)(1⊗1 + 1⊗g + g⊗1 - g⊗g)";
  const HopfData bg = group_algebra(F, 2, "CZ2");
  const Scalar h(F, mpq_class(1, 2));
  const CategoryPtr cat = BraidedCategory::r_matrix(bg, make_sparse({{0, h}, {1, h}, {2, h}, {3, -h}}));
  HopfData data = group_algebra(F, 2, "CZ2");
  // the adjoint action of a commutative group algebra is the trivial one
  const CatObject carrier = cat->object(data.H);
  e.hopf = HopfObject::make(cat, carrier, std::move(data), "CZ2");
  e.pairs.push_back(trivial_pair(*e.hopf));
  e.pairs.push_back(pair_from(*e.hopf, {num(F, 1), num(F, -1)}, "(δ₋,1)"));
  e.bmpi_expected = {true, true};
  e.notes.push_back("adjoint action, hence ψ is the plain swap");
  return e;
}

CatalogEntry make_super_ext(unsigned k) {
  const Field F = Field::rational();
  // subsets of {0..k-1} as bitmasks, by size then lexicographically
  std::vector<unsigned> subsets;
  for (unsigned size = 0; size <= k; ++size) {
    std::vector<unsigned> level;
    for (unsigned s = 0; s < (1u << k); ++s)
      if (static_cast<unsigned>(__builtin_popcount(s)) == size) level.push_back(s);
    std::sort(level.begin(), level.end(), [](unsigned a, unsigned b) {
      for (unsigned i = 0; i < 32; ++i) {
        const bool x = a >> i & 1, y = b >> i & 1;
        if (x != y) return x;
      }
      return false;
    });
    subsets.insert(subsets.end(), level.begin(), level.end());
  }
  std::map<unsigned, Index> pos;
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (Index a = 0; a < subsets.size(); ++a) {
    pos[subsets[a]] = a;
    std::string l;
    for (unsigned i = 0; i < k; ++i)
      if (subsets[a] >> i & 1) l += k == 1 ? "θ" : "θ" + std::to_string(i + 1);
    labels.push_back(l.empty() ? "1" : l);
    grades.push_back(__builtin_popcount(subsets[a]) % 2);
  }
  // θ_Aθ_B = (-1)^{#{a ∈ A, b ∈ B, a > b}} θ_{A∪B}
  auto cross = [&](unsigned A, unsigned B) {
    int c = 0;
    for (unsigned a = 0; a < k; ++a)
      for (unsigned b = 0; b < a; ++b) c += (A >> a & 1) && (B >> b & 1);
    return c % 2 ? -1 : 1;
  };
  std::vector<Triple3> mt, dt;
  std::vector<Pair1> et;
  std::vector<Pair2> st;
  for (unsigned A : subsets) {
    for (unsigned B : subsets)
      if (!(A & B)) mt.emplace_back(pos[A], pos[B], pos[A | B], num(F, cross(A, B)));
    for (unsigned B : subsets)
      if ((B & A) == B) dt.emplace_back(pos[A], pos[B], pos[A & ~B], num(F, cross(B, A & ~B)));
    st.emplace_back(pos[A], pos[A], num(F, __builtin_popcount(A) % 2 ? -1 : 1));
  }
  et.emplace_back(0, num(F, 1));
  const std::string name = "Λ" + std::to_string(k);
  const Space H = Space::atom(F, name, labels, grades);
  const CategoryPtr cat = BraidedCategory::koszul(F);
  CatalogEntry e;
  e.name = "super_ext_" + std::to_string(k);
  e.summary = "exterior algebra on " + std::to_string(k) + " primitive odd generators";
  e.hopf = HopfObject::make(cat, cat->object(H), hopf_data_from_tensors(H, mt, {{0, num(F, 1)}}, dt, et, st), name);
  e.pairs.push_back(trivial_pair(*e.hopf));
  e.bmpi_expected = {true};
  return e;
}

CatalogEntry make_anyon_line() {
  const Field F = Field::cyclotomic(4);
  const unsigned n = 4;
  const Scalar q = Scalar::root_of_unity(F, 4, 1);
  // Gaussian binomials [a, b]_q via [a, b] = [a-1, b-1] + q^b [a-1, b]
  std::vector<std::vector<Scalar>> gb(n, std::vector<Scalar>(n, num(F, 0)));
  for (unsigned a = 0; a < n; ++a) {
    gb[a][0] = num(F, 1);
    for (unsigned b = 1; b <= a; ++b) {
      Scalar qb = num(F, 1);
      for (unsigned t = 0; t < b; ++t) qb *= q;
      gb[a][b] = gb[a - 1][b - 1] + qb * (b <= a - 1 ? gb[a - 1][b] : num(F, 0));
    }
  }
  std::vector<Triple3> mt, dt;
  std::vector<Pair2> st;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; a + b < n; ++b) mt.emplace_back(a, b, a + b, num(F, 1));
    for (unsigned j = 0; j <= a; ++j) dt.emplace_back(a, j, a - j, gb[a][j]);
    // S(θ^k) = (-1)^k q^{k(k-1)/2} θ^k
    st.emplace_back(a, a, Scalar::root_of_unity(F, 4, static_cast<long>(a * (a - 1) / 2 + 2 * a)));
  }
  const Space H = Space::atom(F, "A4", {"1", "θ", "θ²", "θ³"}, {0, 1, 2, 3});
  const CategoryPtr cat = BraidedCategory::bicharacter(F, {4}, {{1}}, 4);
  CatalogEntry e;
  e.name = "anyon_line_4";
  e.summary = "anyonic line k[θ]/(θ⁴) over Q(ζ4), χ(a,b) = ζ4^{ab}";
  e.hopf = HopfObject::make(cat, cat->object(H), hopf_data_from_tensors(H, mt, {{0, num(F, 1)}}, dt, {{0, num(F, 1)}}, st),
                            "A4");
  e.pairs.push_back(trivial_pair(*e.hopf));
  e.bmpi_expected = {false};
  e.notes.push_back("non-symmetric braiding; (ε,1) is a modular pair but not a braided modular pair in involution");
  return e;
}

CatalogEntry make_lie(const std::string& name, SuperLieAlgebra g, std::string summary) {
  CatalogEntry e;
  e.name = name;
  e.summary = std::move(summary);
  e.lie = std::move(g);
  return e;
}

std::optional<unsigned> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size() || name.size() > prefix.size() + 3) return std::nullopt;
  unsigned v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    v = v * 10 + static_cast<unsigned>(name[i] - '0');
  }
  return v;
}

CatalogEntry build_example(const std::string& name) {
  const Field Q = Field::rational();
  if (name == "cz2") return make_group(2, "cz2");
  if (name == "cz2_rmatrix") return make_cz2_rmatrix();
  if (name == "anyon_line_4") return make_anyon_line();
  if (name == "lie_ax_b")
    return make_lie(name, SuperLieAlgebra::make("ax+b", 2, 0, {{0, 1, {{1, Scalar(Q, 1)}}}}, {}, {"x", "y"}),
                    "two-dimensional non-abelian Lie algebra, [x,y] = y");
  if (name == "lie_1_1")
    return make_lie(name, SuperLieAlgebra::make("g(1|1)", 1, 1, {{0, 1, {{1, Scalar(Q, 1)}}}}, {}, {"x", "θ"}),
                    "even x, odd θ, [x,θ] = θ");
  if (auto k = suffix_number(name, "super_ext_"); k && *k >= 1 && *k <= 3) return make_super_ext(*k);
  if (auto m = suffix_number(name, "group_z_"); m && *m >= 2 && *m <= 12) return make_group(*m, name);
  if (auto k = suffix_number(name, "lie_odd_abelian_"); k && *k >= 1 && *k <= 4)
    return make_lie(name, SuperLieAlgebra::make("Π" + std::to_string(*k), 0, *k, {}),
                    "abelian Lie superalgebra on " + std::to_string(*k) + " odd generators");
  throw Error(Errc::unknown_name, "no catalog entry named '" + name + "'");
}

void require_verified(const CatalogEntry& e) {
  const CheckReport r = verify_entry(e);
  if (const CheckEntry* f = r.first_failure())
    throw Error(Errc::verification_failed,
                e.name + ": " + f->name + " fails" + (f->witness.empty() ? "" : " (witness " + f->witness + ")"));
}

// ---- interchange ---------------------------------------------------------

class Reader {
 public:
  Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw Error(Errc::parse_error, source_ + ":" + locate(path) + ": " + msg + " (at " + (path.empty() ? "/" : path) + ")");
  }
  [[noreturn]] void fail_at(std::size_t byte, const std::string& msg) const {
    throw Error(Errc::parse_error, source_ + ":" + line_col(byte) + ": " + msg);
  }

  void keys(const json& j, const std::string& path, const std::set<std::string>& allowed) const {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : j.items())
      if (!allowed.count(k)) fail(path + "/" + k, "unknown key '" + k + "'");
  }
  const json& need(const json& j, const std::string& path, const std::string& key) const {
    if (!j.contains(key)) fail(path, "missing key '" + key + "'");
    return j.at(key);
  }
  Index index(const json& j, const std::string& path, Index bound) const {
    if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer index");
    const Index v = j.get<Index>();
    if (v >= bound) fail(path, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
  }
  Scalar scalar(const json& j, const std::string& path, Field f) const {
    std::string lit;
    if (j.is_string()) lit = j.get<std::string>();
    else if (j.is_number_integer()) lit = std::to_string(j.get<long>());
    else fail(path, "expected a scalar literal");
    try {
      return Scalar::parse(f, lit);
    } catch (const Error& e) {
      fail(path, std::string("bad scalar: ") + e.what());
    }
  }
  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }
  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }
  // [[i, s], ...], [[i, j, s], ...] or [[i, j, k, s], ...]
  std::vector<std::pair<std::vector<Index>, Scalar>> sparse(const json& j, const std::string& path,
                                                            const std::vector<Index>& bounds, Field f) const {
    std::vector<std::pair<std::vector<Index>, Scalar>> out;
    array(j, path);
    for (std::size_t r = 0; r < j.size(); ++r) {
      const std::string p = path + "/" + std::to_string(r);
      if (!j[r].is_array() || j[r].size() != bounds.size() + 1)
        fail(p, "expected an entry of length " + std::to_string(bounds.size() + 1));
      std::vector<Index> idx;
      for (std::size_t t = 0; t < bounds.size(); ++t) idx.push_back(index(j[r][t], p + "/" + std::to_string(t), bounds[t]));
      out.emplace_back(std::move(idx), scalar(j[r][bounds.size()], p + "/" + std::to_string(bounds.size()), f));
    }
    return out;
  }

 private:
  std::string line_col(std::size_t byte) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text_.size(); ++i) {
      if (text_[i] == '\n') ++line, col = 1;
      else ++col;
    }
    return std::to_string(line) + ":" + std::to_string(col);
  }
  // best effort: the first occurrence of the last key of the path
  std::string locate(const std::string& path) const {
    std::string key = path.substr(path.rfind('/') + 1);
    while (!key.empty() && std::all_of(key.begin(), key.end(), ::isdigit)) {
      const std::string up = path.substr(0, path.rfind('/'));
      if (up.empty() || up == path) break;
      return locate(up);
    }
    const std::size_t at = key.empty() ? std::string::npos : text_.find("\"" + key + "\"");
    return line_col(at == std::string::npos ? 0 : at);
  }

  const std::string& text_;
  std::string source_;
};

struct Presentation {
  HopfData data;
  std::optional<LinearMap> action, coaction;
  std::string name;
};

Space read_space(const Reader& rd, const json& j, const std::string& path, Field F, const std::string& name) {
  const json& lj = rd.array(rd.need(j, path, "labels"), path + "/labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lj.size(); ++i) labels.push_back(rd.string(lj[i], path + "/labels/" + std::to_string(i)));
  std::vector<int> grades;
  if (j.contains("grades")) {
    const json& gj = rd.array(j.at("grades"), path + "/grades");
    if (gj.size() != labels.size()) rd.fail(path + "/grades", "need one grade per label");
    for (std::size_t i = 0; i < gj.size(); ++i) {
      if (!gj[i].is_number_integer() || gj[i].get<long>() < 0) rd.fail(path + "/grades/" + std::to_string(i), "expected a grade code");
      grades.push_back(gj[i].get<int>());
    }
  }
  return Space::atom(F, name, labels, grades);
}

Presentation read_hopf(const Reader& rd, const json& j, const std::string& path, Field F,
                       const std::optional<Space>& background) {
  rd.keys(j, path, {"name", "labels", "grades", "m", "unit", "delta", "counit", "antipode", "action", "coaction"});
  Presentation p;
  p.name = j.contains("name") ? rd.string(j.at("name"), path + "/name") : "H";
  const Space H = read_space(rd, j, path, F, p.name);
  const Index d = H.dim();
  auto t3 = [&](const char* key) {
    std::vector<Triple3> out;
    for (auto& [i, c] : rd.sparse(rd.need(j, path, key), path + "/" + key, {d, d, d}, F)) out.emplace_back(i[0], i[1], i[2], c);
    return out;
  };
  auto t1 = [&](const char* key) {
    std::vector<Pair1> out;
    for (auto& [i, c] : rd.sparse(rd.need(j, path, key), path + "/" + key, {d}, F)) out.emplace_back(i[0], c);
    return out;
  };
  std::vector<Pair2> st;
  for (auto& [i, c] : rd.sparse(rd.need(j, path, "antipode"), path + "/antipode", {d, d}, F)) st.emplace_back(i[0], i[1], c);
  p.data = hopf_data_from_tensors(H, t3("m"), t1("unit"), t3("delta"), t1("counit"), st);
  if (background) {
    const Index b = background->dim();
    // action: [i, j, k, s] = coefficient of e_k in b_i ▷ e_j; coaction: [i, j, k, s] = coefficient of b_j⊗e_k in ρ(e_i)
    if (j.contains("action")) {
      std::vector<std::tuple<Index, Index, Scalar>> t;
      for (auto& [i, c] : rd.sparse(j.at("action"), path + "/action", {b, d, d}, F)) t.emplace_back(i[2], i[0] * d + i[1], c);
      p.action = LinearMap::from_triples(tensor(*background, H), H, t);
    }
    if (j.contains("coaction")) {
      std::vector<std::tuple<Index, Index, Scalar>> t;
      for (auto& [i, c] : rd.sparse(j.at("coaction"), path + "/coaction", {d, b, d}, F)) t.emplace_back(i[1] * d + i[2], i[0], c);
      p.coaction = LinearMap::from_triples(H, tensor(*background, H), t);
    }
  } else if (j.contains("action") || j.contains("coaction")) {
    rd.fail(path, "action/coaction need a module category");
  }
  return p;
}

CategoryPtr read_category(const Reader& rd, const json& j, const std::string& path, Field F) {
  if (!j.is_object()) rd.fail(path, "expected an object");
  const std::string kind = rd.string(rd.need(j, path, "kind"), path + "/kind");
  if (kind == "trivial" || kind == "koszul") {
    rd.keys(j, path, {"kind"});
    return kind == "trivial" ? BraidedCategory::trivial(F) : BraidedCategory::koszul(F);
  }
  if (kind == "bicharacter") {
    rd.keys(j, path, {"kind", "factors", "exponents", "root_order"});
    std::vector<unsigned> factors;
    const json& fj = rd.array(rd.need(j, path, "factors"), path + "/factors");
    for (std::size_t i = 0; i < fj.size(); ++i) factors.push_back(static_cast<unsigned>(rd.index(fj[i], path + "/factors", 1000)));
    std::vector<std::vector<long>> ex;
    const json& ej = rd.array(rd.need(j, path, "exponents"), path + "/exponents");
    for (std::size_t i = 0; i < ej.size(); ++i) {
      const json& row = rd.array(ej[i], path + "/exponents/" + std::to_string(i));
      std::vector<long> r;
      for (const json& x : row) {
        if (!x.is_number_integer()) rd.fail(path + "/exponents", "expected integer exponents");
        r.push_back(x.get<long>());
      }
      ex.push_back(std::move(r));
    }
    const unsigned root = j.contains("root_order") ? static_cast<unsigned>(rd.index(j.at("root_order"), path + "/root_order", 1000)) : 0;
    try {
      return BraidedCategory::bicharacter(F, factors, ex, root);
    } catch (const Error& e) {
      rd.fail(path, e.what());
    }
  }
  if (kind == "r_matrix" || kind == "yetter_drinfeld") {
    rd.keys(j, path, {"kind", "background", "R", "S_inverse"});
    const Presentation bg = read_hopf(rd, rd.need(j, path, "background"), path + "/background", F, std::nullopt);
    const Index b = bg.data.H.dim();
    if (kind == "r_matrix") {
      std::vector<std::pair<Index, Scalar>> R;
      for (auto& [i, c] : rd.sparse(rd.need(j, path, "R"), path + "/R", {b, b}, F)) R.emplace_back(i[0] * b + i[1], c);
      return BraidedCategory::r_matrix(bg.data, make_sparse(std::move(R)));
    }
    std::vector<std::tuple<Index, Index, Scalar>> t;
    for (auto& [i, c] : rd.sparse(rd.need(j, path, "S_inverse"), path + "/S_inverse", {b, b}, F)) t.emplace_back(i[1], i[0], c);
    return BraidedCategory::yetter_drinfeld(bg.data, LinearMap::from_triples(bg.data.H, bg.data.H, t));
  }
  rd.fail(path + "/kind", "unknown category kind '" + kind + "'");
}

SuperLieAlgebra read_lie(const Reader& rd, const json& j, const std::string& path, const std::string& name) {
  rd.keys(j, path, {"even", "odd", "brackets", "delta", "names"});
  const unsigned even = static_cast<unsigned>(rd.index(rd.need(j, path, "even"), path + "/even", 64));
  const unsigned odd = static_cast<unsigned>(rd.index(rd.need(j, path, "odd"), path + "/odd", 64));
  const Index d = even + odd;
  const Field Q = Field::rational();
  std::vector<SuperLieAlgebra::Bracket> br;
  if (j.contains("brackets")) {
    const json& bj = rd.array(j.at("brackets"), path + "/brackets");
    for (std::size_t r = 0; r < bj.size(); ++r) {
      const std::string p = path + "/brackets/" + std::to_string(r);
      if (!bj[r].is_array() || bj[r].size() != 3) rd.fail(p, "expected [i, j, [[k, scalar], ...]]");
      SparseVec v;
      for (auto& [i, c] : rd.sparse(bj[r][2], p + "/2", {d}, Q)) v.emplace_back(i[0], c);
      br.emplace_back(rd.index(bj[r][0], p + "/0", d), rd.index(bj[r][1], p + "/1", d), std::move(v));
    }
  }
  std::vector<std::pair<Index, Scalar>> delta;
  if (j.contains("delta"))
    for (auto& [i, c] : rd.sparse(j.at("delta"), path + "/delta", {d}, Q)) delta.emplace_back(i[0], c);
  std::vector<std::string> names;
  if (j.contains("names")) {
    const json& nj = rd.array(j.at("names"), path + "/names");
    for (std::size_t i = 0; i < nj.size(); ++i) names.push_back(rd.string(nj[i], path + "/names/" + std::to_string(i)));
  }
  try {
    return SuperLieAlgebra::make(name, even, odd, std::move(br), std::move(delta), std::move(names));
  } catch (const Error& e) {
    if (e.code() == Errc::precondition_failed) throw Error(Errc::verification_failed, e.what());
    rd.fail(path, e.what());
  }
}

// ---- export helpers ----

json scalar_json(const Scalar& s) { return s.to_string(); }

json space_json(const Space& s, json& out) {
  const Atom& a = *s.factors().at(0);
  out["labels"] = a.labels;
  if (!a.grades.empty()) out["grades"] = a.grades;
  return out;
}

json hopf_json(const HopfData& d, const std::string& name) {
  json out;
  out["name"] = name;
  space_json(d.H, out);
  const Index n = d.H.dim();
  json m = json::array(), u = json::array(), dl = json::array(), c = json::array(), s = json::array();
  for (const auto& [row, col, v] : d.m.triples()) m.push_back({col / n, col % n, row, scalar_json(v)});
  for (const auto& [row, col, v] : d.eta.triples()) u.push_back({row, scalar_json(v)});
  for (const auto& [row, col, v] : d.delta.triples()) dl.push_back({col, row / n, row % n, scalar_json(v)});
  for (const auto& [row, col, v] : d.eps.triples()) c.push_back({col, scalar_json(v)});
  for (const auto& [row, col, v] : d.S.triples()) s.push_back({col, row, scalar_json(v)});
  out["m"] = m;
  out["unit"] = u;
  out["delta"] = dl;
  out["counit"] = c;
  out["antipode"] = s;
  return out;
}

json category_json(const BraidedCategory& cat) {
  json out;
  out["kind"] = kind_name(cat.kind());
  switch (cat.kind()) {
    case CategoryKind::trivial:
    case CategoryKind::koszul:
      break;
    case CategoryKind::bicharacter:
      out["factors"] = cat.group_factors();
      out["exponents"] = cat.exponents();
      out["root_order"] = cat.root_order();
      break;
    case CategoryKind::r_matrix:
    case CategoryKind::yetter_drinfeld: {
      const HopfData& bg = cat.background();
      out["background"] = hopf_json(bg, bg.H.factors().at(0)->name);
      const Index b = bg.H.dim();
      json t = json::array();
      if (cat.kind() == CategoryKind::r_matrix) {
        for (const auto& [k, v] : cat.r_element()) t.push_back({k / b, k % b, scalar_json(v)});
        out["R"] = t;
      } else {
        for (const auto& [row, col, v] : cat.s_inverse().triples()) t.push_back({col, row, scalar_json(v)});
        out["S_inverse"] = t;
      }
      break;
    }
  }
  return out;
}

}  // namespace

HopfData hopf_data_from_tensors(const Space& H, const std::vector<Triple3>& m, const std::vector<Pair1>& unit,
                                const std::vector<Triple3>& delta, const std::vector<Pair1>& counit,
                                const std::vector<Pair2>& antipode) {
  const Index d = H.dim();
  const Space I = Space::unit(H.field()), HH = tensor(H, H);
  auto bound = [&](Index i) {
    if (i >= d) throw Error(Errc::invalid_argument, "structure tensor index " + std::to_string(i) + " out of range");
    return i;
  };
  std::vector<std::tuple<Index, Index, Scalar>> mt, ut, dt, et, st;
  for (const auto& [i, j, k, c] : m) mt.emplace_back(bound(k), bound(i) * d + bound(j), c);
  for (const auto& [k, c] : unit) ut.emplace_back(bound(k), 0, c);
  for (const auto& [i, j, k, c] : delta) dt.emplace_back(bound(j) * d + bound(k), bound(i), c);
  for (const auto& [i, c] : counit) et.emplace_back(0, bound(i), c);
  for (const auto& [i, k, c] : antipode) st.emplace_back(bound(k), bound(i), c);
  return HopfData{H,
                  LinearMap::from_triples(HH, H, mt),
                  LinearMap::from_triples(I, H, ut),
                  LinearMap::from_triples(H, HH, dt),
                  LinearMap::from_triples(H, I, et),
                  LinearMap::from_triples(H, H, st)};
}

std::vector<std::string> example_names() {
  return {"cz2",          "cz2_rmatrix", "super_ext_1",       "super_ext_2",       "super_ext_3", "anyon_line_4",
          "group_z_3",    "group_z_4",   "lie_odd_abelian_1", "lie_odd_abelian_2", "lie_ax_b",    "lie_1_1"};
}

CatalogEntry load_example(const std::string& name) {
  CatalogEntry e = build_example(name);
  require_verified(e);
  return e;
}

CheckReport verify_entry(const CatalogEntry& e) {
  CheckReport r("catalog entry " + e.name);
  if (e.hopf) {
    const HopfObject& h = *e.hopf;
    const CheckReport ax = verify_hopf(h);
    r.merge(ax, "hopf: ");
    if (!ax.passed()) return r;
    r.merge(derived_identities(h), "derived: ");
    r.merge(check_s_squared(h), "S²: ");
    r.merge(check_phi_isomorphism(h), "φ: ");
    for (std::size_t k = 0; k < e.pairs.size(); ++k) {
      const ModularPair& p = e.pairs[k];
      const std::string tag = "pair " + p.name + ": ";
      const CheckReport mp = check_modular_pair(h, p.delta, p.sigma);
      r.merge(mp, tag);
      if (!mp.passed()) continue;
      const bool bmpi = check_bmpi(h, p).passed();
      if (k < e.bmpi_expected.size())
        r.expect(tag + "BMPI verdict as documented", bmpi == e.bmpi_expected[k],
                 std::string(bmpi ? "passes" : "fails") + ", expected " + (e.bmpi_expected[k] ? "pass" : "fail"));
      const SaydModule s = sigma_I_delta(h, p);
      const bool sayd = check_aYD(s).passed() && check_stability(s).passed();
      r.expect(tag + "σI_δ is SAYD ⟺ BMPI", sayd == bmpi,
               std::string("SAYD ") + (sayd ? "yes" : "no") + ", BMPI " + (bmpi ? "yes" : "no"));
    }
    for (const SaydModule& s : e.modules) {
      r.merge(check_aYD(s), "module " + s.name + ": ");
      r.merge(check_stability(s), "module " + s.name + ": ");
    }
  }
  if (e.lie) r.merge(e.lie->check(), "lie: ");
  return r;
}

std::string export_entry(const CatalogEntry& e) {
  json out;
  out["name"] = e.name;
  if (!e.summary.empty()) out["summary"] = e.summary;
  if (!e.notes.empty()) out["notes"] = e.notes;
  if (e.hopf) {
    const HopfObject& h = *e.hopf;
    out["field"] = h.field().name();
    out["category"] = category_json(h.cat());
    json hj = hopf_json(h.data(), h.name());
    if (h.cat().module_kind()) {
      const Index d = h.H().dim();
      const Index b = h.cat().background().H.dim();
      (void)b;
      json a = json::array();
      for (const auto& [row, col, v] : h.carrier().action->triples()) a.push_back({col / d, col % d, row, scalar_json(v)});
      hj["action"] = a;
      if (h.carrier().coaction) {
        json c = json::array();
        for (const auto& [row, col, v] : h.carrier().coaction->triples()) c.push_back({col, row / d, row % d, scalar_json(v)});
        hj["coaction"] = c;
      }
    }
    out["hopf"] = hj;
    json pairs = json::array();
    for (std::size_t k = 0; k < e.pairs.size(); ++k) {
      const ModularPair& p = e.pairs[k];
      json pj;
      pj["name"] = p.name;
      json dl = json::array(), sg = json::array();
      for (const auto& [row, col, v] : p.delta.map.triples()) dl.push_back({col, scalar_json(v)});
      for (const auto& [row, col, v] : p.sigma.map.triples()) sg.push_back({row, scalar_json(v)});
      pj["delta"] = dl;
      pj["sigma"] = sg;
      if (k < e.bmpi_expected.size()) pj["bmpi"] = static_cast<bool>(e.bmpi_expected[k]);
      pairs.push_back(pj);
    }
    if (!pairs.empty()) out["pair"] = pairs.size() == 1 ? pairs[0] : pairs;
    if (!e.modules.empty()) {
      json mods = json::array();
      const Index d = h.H().dim();
      for (const SaydModule& s : e.modules) {
        json mj;
        mj["name"] = s.name;
        space_json(s.M().space, mj);
        const Index dm = s.M().space.dim();
        json phi = json::array(), rho = json::array();
        for (const auto& [row, col, v] : s.phi().triples()) phi.push_back({col / d, col % d, row, scalar_json(v)});
        for (const auto& [row, col, v] : s.rho().triples()) rho.push_back({col, row / dm, row % dm, scalar_json(v)});
        mj["phi"] = phi;
        mj["rho"] = rho;
        mods.push_back(mj);
      }
      out["modules"] = mods;
    }
  }
  if (e.lie) {
    const SuperLieAlgebra& g = *e.lie;
    out["field"] = "rational";
    json lj;
    lj["even"] = g.even_dim();
    lj["odd"] = g.odd_dim();
    lj["names"] = g.generators();
    json br = json::array();
    for (const auto& [i, j, v] : g.bracket_list()) {
      json vv = json::array();
      for (const auto& [k, c] : v) vv.push_back({k, scalar_json(c)});
      br.push_back({i, j, vv});
    }
    lj["brackets"] = br;
    json dl = json::array();
    for (Index i = 0; i < g.dim(); ++i)
      if (!g.delta(i).is_zero()) dl.push_back({i, scalar_json(g.delta(i))});
    lj["delta"] = dl;
    out["lie"] = lj;
  }
  return out.dump(2) + "\n";
}

void export_entry(const CatalogEntry& e, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(Errc::io_error, "cannot write " + path);
  f << export_entry(e);
  if (!f) throw Error(Errc::io_error, "write to " + path + " failed");
}

CatalogEntry import_presentation_text(const std::string& text, const std::string& source) {
  const Reader rd(text, source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    rd.fail_at(e.byte > 0 ? e.byte - 1 : 0, std::string("malformed JSON: ") + e.what());
  }
  rd.keys(doc, "", {"name", "summary", "notes", "field", "category", "hopf", "lie", "pair", "modules"});
  CatalogEntry e;
  e.name = doc.contains("name") ? rd.string(doc.at("name"), "/name") : source;
  if (doc.contains("summary")) e.summary = rd.string(doc.at("summary"), "/summary");
  if (doc.contains("notes"))
    for (const json& n : rd.array(doc.at("notes"), "/notes")) e.notes.push_back(rd.string(n, "/notes"));
  Field F = Field::rational();
  try {
    if (doc.contains("field")) F = Field::parse(rd.string(doc.at("field"), "/field"));
  } catch (const Error& err) {
    if (err.code() == Errc::parse_error) throw;
    rd.fail("/field", err.what());
  }
  if (doc.contains("hopf") == doc.contains("lie")) rd.fail("", "exactly one of 'hopf' and 'lie' is required");

  if (doc.contains("lie")) {
    if (doc.contains("category") || doc.contains("pair") || doc.contains("modules"))
      rd.fail("", "'category', 'pair' and 'modules' only go with 'hopf'");
    if (!F.is_rational()) rd.fail("/field", "Lie presentations are over the rationals");
    e.lie = read_lie(rd, doc.at("lie"), "/lie", e.name);
    require_verified(e);
    return e;
  }

  const CategoryPtr cat = read_category(rd, rd.need(doc, "", "category"), "/category", F);
  const std::optional<Space> bg = cat->module_kind() ? std::optional<Space>(cat->background().H) : std::nullopt;
  Presentation p = read_hopf(rd, doc.at("hopf"), "/hopf", F, bg);
  try {
    CatObject carrier = p.action ? cat->module_object(p.data.H, *p.action, p.coaction) : cat->object(p.data.H);
    if (p.coaction && !p.action) rd.fail("/hopf/coaction", "a coaction needs an action");
    e.hopf = HopfObject::make(cat, std::move(carrier), std::move(p.data), p.name);
  } catch (const Error& err) {
    if (err.code() == Errc::parse_error) throw;
    throw Error(Errc::verification_failed, e.name + ": " + err.what());
  }
  const HopfObject& h = *e.hopf;
  const Index d = h.H().dim();
  {
    const CheckReport ax = verify_hopf(h);
    if (const CheckEntry* f = ax.first_failure())
      throw Error(Errc::verification_failed, e.name + ": " + f->name + " fails" + (f->witness.empty() ? "" : " (witness " + f->witness + ")"));
  }

  if (doc.contains("pair")) {
    const json& pj = doc.at("pair");
    std::vector<std::pair<const json*, std::string>> items;
    if (pj.is_array())
      for (std::size_t k = 0; k < pj.size(); ++k) items.emplace_back(&pj[k], "/pair/" + std::to_string(k));
    else
      items.emplace_back(&pj, "/pair");
    for (const auto& [jp, path] : items) {
      rd.keys(*jp, path, {"name", "delta", "sigma", "bmpi"});
      std::vector<std::tuple<Index, Index, Scalar>> dt, st;
      for (auto& [i, c] : rd.sparse(rd.need(*jp, path, "delta"), path + "/delta", {d}, F)) dt.emplace_back(0, i[0], c);
      for (auto& [i, c] : rd.sparse(rd.need(*jp, path, "sigma"), path + "/sigma", {d}, F)) st.emplace_back(i[0], 0, c);
      const std::string name = jp->contains("name") ? rd.string(jp->at("name"), path + "/name") : "(δ,σ)";
      try {
        e.pairs.push_back(ModularPair::make(h, Character{LinearMap::from_triples(h.H(), h.I(), dt)},
                                            Cocharacter{LinearMap::from_triples(h.I(), h.H(), st)}, name));
      } catch (const Error& err) {
        throw Error(Errc::verification_failed, e.name + ": pair " + name + ": " + err.what());
      }
      if (jp->contains("bmpi") && !jp->at("bmpi").is_boolean()) rd.fail(path + "/bmpi", "expected a boolean");
      // a pair without a documented verdict takes the computed one
      e.bmpi_expected.push_back(jp->contains("bmpi") ? jp->at("bmpi").get<bool>() : check_bmpi(h, e.pairs.back()).passed());
    }
  }

  if (doc.contains("modules")) {
    const json& mj = rd.array(doc.at("modules"), "/modules");
    for (std::size_t k = 0; k < mj.size(); ++k) {
      const std::string path = "/modules/" + std::to_string(k);
      rd.keys(mj[k], path, {"name", "labels", "grades", "phi", "rho"});
      const std::string name = mj[k].contains("name") ? rd.string(mj[k].at("name"), path + "/name") : "M" + std::to_string(k);
      const Space M = read_space(rd, mj[k], path, F, name);
      const Index dm = M.dim();
      std::vector<std::tuple<Index, Index, Scalar>> pt, rt;
      for (auto& [i, c] : rd.sparse(rd.need(mj[k], path, "phi"), path + "/phi", {dm, d, dm}, F)) pt.emplace_back(i[2], i[0] * d + i[1], c);
      for (auto& [i, c] : rd.sparse(rd.need(mj[k], path, "rho"), path + "/rho", {dm, d, dm}, F)) rt.emplace_back(i[1] * dm + i[2], i[0], c);
      const CatObject Mo = h.cat().object(M);
      e.modules.push_back(make_sayd(RightModule{h, Mo, LinearMap::from_triples(tensor(M, h.H()), M, pt)},
                                    LeftComodule{h, Mo, LinearMap::from_triples(M, tensor(h.H(), M), rt)}, name));
    }
  }
  try {
    require_verified(e);
  } catch (const Error& err) {
    if (err.code() == Errc::precondition_failed) throw Error(Errc::verification_failed, err.what());
    throw;
  }
  return e;
}

CatalogEntry import_presentation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::io_error, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return import_presentation_text(ss.str(), path);
}

CatalogEntry load_any(const std::string& name_or_path) {
  const bool looks_like_path = name_or_path.find('/') != std::string::npos ||
                               (name_or_path.size() > 5 && name_or_path.substr(name_or_path.size() - 5) == ".json");
  if (looks_like_path) return import_presentation(name_or_path);
  return load_example(name_or_path);
}

}  // namespace bhc
