#include "bhc/hopf.hpp"

namespace bhc {

namespace {

// One report entry for "a = rhs = b".
void expect_both(CheckReport& r, const std::string& name, const LinearMap& a, const LinearMap& b, const LinearMap& rhs) {
  CheckReport tmp;
  tmp.expect_equal(name, a, rhs);
  if (tmp.passed()) tmp = CheckReport(), tmp.expect_equal(name, b, rhs);
  r.add(tmp.entries().front());
}

void require_host(const HopfObject& h, const LinearMap& f, bool from_h, const char* what) {
  const Space& expected_dom = from_h ? h.H() : h.I();
  const Space& expected_cod = from_h ? h.I() : h.H();
  if (f.domain() != expected_dom || f.codomain() != expected_cod)
    throw Error(Errc::host_mismatch, std::string(what) + " is not hosted by " + h.name());
}

}  // namespace

HopfObject HopfObject::make(CategoryPtr cat, CatObject carrier, HopfData maps, std::string name) {
  if (!cat) throw Error(Errc::invalid_argument, "Hopf object needs a category");
  if (carrier.space.field() != cat->field()) throw Error(Errc::field_mismatch, "carrier and category fields differ");
  cat->require_object(carrier);
  const Space& H = carrier.space;
  const Space HH = tensor(H, H), I = Space::unit(H.field());
  auto shape = [&](const LinearMap& f, const Space& d, const Space& c, const char* what) {
    if (f.domain() != d || f.codomain() != c)
      throw Error(Errc::space_mismatch, std::string(what) + " must map " + d.describe() + " → " + c.describe() +
                                            ", got " + f.domain().describe() + " → " + f.codomain().describe());
  };
  shape(maps.m, HH, H, "m");
  shape(maps.eta, I, H, "η");
  shape(maps.delta, H, HH, "Δ");
  shape(maps.eps, H, I, "ε");
  shape(maps.S, H, H, "S");
  maps.H = H;
  const CatObject hh = cat->tensor_object(carrier, carrier), unit = cat->unit_object();
  auto morph = [&](const LinearMap& f, const CatObject& s, const CatObject& t, const char* what) {
    if (!cat->is_morphism(f, s, t)) throw Error(Errc::not_a_morphism, std::string(what) + " is not a morphism of " + cat->name());
  };
  morph(maps.m, hh, carrier, "m");
  morph(maps.eta, unit, carrier, "η");
  morph(maps.delta, carrier, hh, "Δ");
  morph(maps.eps, carrier, unit, "ε");
  morph(maps.S, carrier, carrier, "S");

  HopfObject h;
  h.name_ = std::move(name);
  h.cat_ = std::move(cat);
  h.carrier_ = std::move(carrier);
  h.maps_ = std::move(maps);
  h.psi_ = h.cat_->braiding(h.carrier_, h.carrier_);
  h.psi_inv_ = h.cat_->braiding_inverse(h.carrier_, h.carrier_);
  return h;
}

LinearMap HopfObject::block_psi(unsigned p, unsigned q) const { return cat_->block_braiding(carrier_, p, carrier_, q); }

LinearMap HopfObject::delta_power(unsigned k) const {
  LinearMap g = id();
  for (unsigned j = 0; j < k; ++j) g = apply_at(delta(), j, g);
  return g;
}

LinearMap HopfObject::product(unsigned k) const {
  if (k == 0) return eta();
  LinearMap g = LinearMap::identity(H().power(k));
  for (unsigned j = 1; j < k; ++j) g = apply_at(m(), 0, g);
  return g;
}

// --- characters ----------------------------------------------------------------

Character Character::make(const HopfObject& h, LinearMap map) {
  require_host(h, map, true, "δ");
  CheckReport r;
  r.expect_equal("δm = δ⊗δ", compose(map, h.m()), tensor(map, map));
  r.expect_equal("δη = id_I", compose(map, h.eta()), LinearMap::identity(h.I()));
  if (const CheckEntry* e = r.first_failure())
    throw Error(Errc::precondition_failed, "not a character: " + e->name + " fails (" + e->detail + ")");
  return Character{std::move(map)};
}

Cocharacter Cocharacter::make(const HopfObject& h, LinearMap map) {
  require_host(h, map, false, "σ");
  CheckReport r;
  r.expect_equal("Δσ = σ⊗σ", compose(h.delta(), map), tensor(map, map));
  r.expect_equal("εσ = id_I", compose(h.eps(), map), LinearMap::identity(h.I()));
  if (const CheckEntry* e = r.first_failure())
    throw Error(Errc::precondition_failed, "not a cocharacter: " + e->name + " fails (" + e->detail + ")");
  return Cocharacter{std::move(map)};
}

ModularPair ModularPair::make(const HopfObject& h, Character d, Cocharacter s, std::string name) {
  CheckReport r = check_modular_pair(h, d, s);
  if (const CheckEntry* e = r.first_failure())
    throw Error(Errc::precondition_failed, "not a modular pair: " + e->name + " fails (" + e->detail + ")");
  return ModularPair{std::move(d), std::move(s), std::move(name)};
}

Character counit_character(const HopfObject& h) { return Character{h.eps()}; }
Cocharacter unit_cocharacter(const HopfObject& h) { return Cocharacter{h.eta()}; }
ModularPair trivial_pair(const HopfObject& h) { return ModularPair{counit_character(h), unit_cocharacter(h), "(ε,1)"}; }

// --- axioms ----------------------------------------------------------------------

CheckReport verify_hopf(const HopfObject& h) {
  CheckReport r("Hopf axioms for " + h.name() + " in " + h.cat().name());
  for (const auto& n : h.cat().notes()) r.note("braiding", n);
  const LinearMap id = h.id();
  const LinearMap id2 = LinearMap::identity(tensor(h.H(), h.H()));
  const LinearMap id3 = LinearMap::identity(h.H().power(3));
  const LinearMap& m = h.m();
  const LinearMap& d = h.delta();

  r.expect_equal("associativity m(m⊗1) = m(1⊗m)", compose(m, apply_at(m, 0, id3)), compose(m, apply_at(m, 1, id3)));
  expect_both(r, "unit m(η⊗1) = id = m(1⊗η)", compose(m, tensor(h.eta(), id)), compose(m, tensor(id, h.eta())), id);
  r.expect_equal("coassociativity (Δ⊗1)Δ = (1⊗Δ)Δ", apply_at(d, 0, d), apply_at(d, 1, d));
  expect_both(r, "counit (ε⊗1)Δ = id = (1⊗ε)Δ", apply_at(h.eps(), 0, d), apply_at(h.eps(), 1, d), id);
  {
    // Δm = (m⊗m)(1⊗ψ⊗1)(Δ⊗Δ)
    LinearMap g = apply_at(d, 0, id2);
    g = apply_at(d, 2, g);
    g = apply_at(h.psi(), 1, g);
    g = apply_at(m, 0, g);
    g = apply_at(m, 1, g);
    r.expect_equal("compatibility Δm = (m⊗m)(1⊗ψ⊗1)(Δ⊗Δ)", compose(d, m), g);
  }
  r.expect_equal("Δη = η⊗η", compose(d, h.eta()), tensor(h.eta(), h.eta()));
  r.expect_equal("εm = ε⊗ε", compose(h.eps(), m), tensor(h.eps(), h.eps()));
  r.expect_equal("εη = id_I", compose(h.eps(), h.eta()), LinearMap::identity(h.I()));
  expect_both(r, "antipode m(S⊗1)Δ = ηε = m(1⊗S)Δ", compose(m, apply_at(h.S(), 0, d)), compose(m, apply_at(h.S(), 1, d)),
              compose(h.eta(), h.eps()));
  return r;
}

CheckReport derived_identities(const HopfObject& h) {
  if (!verify_hopf(h).passed()) throw Error(Errc::precondition_failed, h.name() + " does not satisfy the Hopf axioms");
  CheckReport r("derived antipode identities for " + h.name());
  const LinearMap& m = h.m();
  const LinearMap& d = h.delta();
  const LinearMap& S = h.S();
  const LinearMap& psi = h.psi();
  const LinearMap SS = tensor(S, S);
  r.expect_equal("Sm = mψ(S⊗S)", compose(S, m), compose({m, psi, SS}));
  r.expect_equal("Sm = m(S⊗S)ψ", compose(S, m), compose({m, SS, psi}));
  r.expect_equal("ΔS = ψ(S⊗S)Δ", compose(d, S), compose({psi, SS, d}));
  r.expect_equal("ΔS = (S⊗S)ψΔ", compose(d, S), compose({SS, psi, d}));
  r.expect_equal("Sη = η", compose(S, h.eta()), h.eta());
  r.expect_equal("εS = ε", compose(h.eps(), S), h.eps());
  {
    // Δ²m = (m⊗m⊗m)(1,ψ,1,1,1)(1,1,1,ψ,1)(1,1,ψ,1,1)(Δ²⊗Δ²)
    const LinearMap d2 = h.delta_power(2);
    LinearMap g = tensor(d2, d2);
    g = apply_at(psi, 2, g);
    g = apply_at(psi, 3, g);
    g = apply_at(psi, 1, g);
    g = apply_at(m, 0, g);
    g = apply_at(m, 1, g);
    g = apply_at(m, 2, g);
    r.expect_equal("Δ²m = (m⊗m⊗m)(1,ψ,1,1,1)(1,1,1,ψ,1)(1,1,ψ,1,1)(Δ²⊗Δ²)", compose(d2, m), g);
  }
  return r;
}

LinearMap twisted_antipode(const HopfObject& h, const Character& delta) {
  require_host(h, delta.map, true, "δ");
  LinearMap g = apply_at(h.S(), 1, h.delta());
  return apply_at(delta.map, 0, g);
}

CheckReport check_twisted_antipode(const HopfObject& h, const Character& delta, const Cocharacter* sigma) {
  require_host(h, delta.map, true, "δ");
  if (sigma) require_host(h, sigma->map, false, "σ");
  CheckReport r("twisted antipode identities for " + h.name());
  const LinearMap St = twisted_antipode(h, delta);
  const LinearMap& m = h.m();
  const LinearMap& d = h.delta();
  const LinearMap& S = h.S();
  const LinearMap& psi = h.psi();
  r.expect_equal("S̃m = mψ(S̃⊗S̃)", compose(St, m), compose({m, psi, tensor(St, St)}));
  r.expect_equal("S̃m = m(S̃⊗S̃)ψ", compose(St, m), compose({m, tensor(St, St), psi}));
  r.expect_equal("S̃η = η", compose(St, h.eta()), h.eta());
  r.expect_equal("ΔS̃ = ψ(S̃⊗S)Δ", compose(d, St), compose({psi, tensor(St, S), d}));
  r.expect_equal("ΔS̃ = (S⊗S̃)ψΔ", compose(d, St), compose({tensor(S, St), psi, d}));
  r.expect_equal("εS̃ = δ", compose(h.eps(), St), delta.map);
  r.expect_equal("δS̃ = ε", compose(delta.map, St), h.eps());
  r.expect_equal("m(S²⊗S̃)ψΔ = ηδ", compose({m, tensor(compose(S, S), St), psi, d}), compose(h.eta(), delta.map));
  if (sigma) {
    const LinearMap& s = sigma->map;
    r.expect_equal("S̃σ = Sσ", compose(St, s), compose(S, s));
    r.expect_equal("m(S̃σ⊗σ) = η", compose(m, tensor(compose(St, s), s)), h.eta());
    r.expect_equal("m(Sσ⊗σ) = η", compose(m, tensor(compose(S, s), s)), h.eta());
  }
  return r;
}

CheckReport check_modular_pair(const HopfObject& h, const Character& delta, const Cocharacter& sigma) {
  require_host(h, delta.map, true, "δ");
  require_host(h, sigma.map, false, "σ");
  CheckReport r("modular pair for " + h.name());
  const LinearMap idI = LinearMap::identity(h.I());
  r.expect_equal("δm = δ⊗δ", compose(delta.map, h.m()), tensor(delta.map, delta.map));
  r.expect_equal("δη = id_I", compose(delta.map, h.eta()), idI);
  r.expect_equal("Δσ = σ⊗σ", compose(h.delta(), sigma.map), tensor(sigma.map, sigma.map));
  r.expect_equal("εσ = id_I", compose(h.eps(), sigma.map), idI);
  r.expect_equal("δσ = id_I", compose(delta.map, sigma.map), idI);
  return r;
}

LinearMap bmpi_composite(const HopfObject& h, const ModularPair& pair) {
  const LinearMap St = twisted_antipode(h, pair.delta);
  const LinearMap& s = pair.sigma.map;
  LinearMap g = h.id();
  g = apply_at(compose(h.S(), s), 0, g);  // Sσ ⊗ h
  g = apply_at(compose(St, St), 1, g);    // Sσ ⊗ S̃²h
  g = apply_at(s, 2, g);                  // Sσ ⊗ S̃²h ⊗ σ
  g = apply_at(h.m(), 0, g);
  return apply_at(h.m(), 0, g);
}

CheckReport check_bmpi(const HopfObject& h, const ModularPair& pair) {
  CheckReport pre = check_modular_pair(h, pair.delta, pair.sigma);
  if (const CheckEntry* e = pre.first_failure())
    throw Error(Errc::precondition_failed, "not a modular pair: " + e->name + " fails");
  CheckReport r("BMPI condition for " + h.name() + (pair.name.empty() ? "" : " with " + pair.name));
  const LinearMap c = bmpi_composite(h, pair);
  CheckEntry& e = r.expect_equal("m((m⊗1)(Sσ⊗S̃²⊗σ)) = id", c, h.id());
  e.matrix = c;
  return r;
}

bool is_braided_commutative(const HopfObject& h) { return compose(h.m(), h.psi()) == h.m(); }
bool is_braided_cocommutative(const HopfObject& h) { return compose(h.psi(), h.delta()) == h.delta(); }

CheckReport check_s_squared(const HopfObject& h) {
  CheckReport r("S² = id criterion for " + h.name());
  const bool comm = is_braided_commutative(h), cocomm = is_braided_cocommutative(h);
  const LinearMap S2 = compose(h.S(), h.S());
  r.expect_equal("mψ = m", compose(h.m(), h.psi()), h.m(), false);
  r.expect_equal("Δ = ψΔ", compose(h.psi(), h.delta()), h.delta(), false);
  const CheckEntry& s2 = r.expect_equal("S² = id", S2, h.id(), false);
  const bool implication = !(comm || cocomm) || s2.passed;
  r.expect("(mψ = m) ∨ (Δ = ψΔ) ⟹ S² = id", implication,
           (comm || cocomm) ? std::string("premise holds") : std::string("premise does not hold"));
  return r;
}

}  // namespace bhc
