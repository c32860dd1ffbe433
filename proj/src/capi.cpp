#include "bhc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "bhc/catalog.hpp"
#include "bhc/cocyclic.hpp"
#include "bhc/homology.hpp"
#include "bhc/superlie.hpp"

struct bhc_entry {
  bhc::CatalogEntry e;
  std::string field, category;
};

struct bhc_report {
  bhc::CheckReport r;
};

struct bhc_cocyclic {
  bhc::ParaCocyclicModule p;
};

namespace {

thread_local std::string last_error;

template <class F>
bhc_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return BHC_OK;
  } catch (const bhc::Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BHC_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BHC_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw bhc::Error(bhc::Errc::invalid_argument, std::string(what) + " is null");
}

const bhc::HopfObject& hopf_of(const bhc_entry* e) {
  need(e, "entry");
  if (!e->e.hopf) throw bhc::Error(bhc::Errc::invalid_argument, e->e.name + " has no Hopf presentation");
  return *e->e.hopf;
}

const bhc::SuperLieAlgebra& lie_of(const bhc_entry* e) {
  need(e, "entry");
  if (!e->e.lie) throw bhc::Error(bhc::Errc::invalid_argument, e->e.name + " has no Lie presentation");
  return *e->e.lie;
}

const bhc::ModularPair& pair_of(const bhc_entry* e, std::size_t i) {
  if (i >= e->e.pairs.size())
    throw bhc::Error(bhc::Errc::unknown_name, e->e.name + " has no pair #" + std::to_string(i));
  return e->e.pairs[i];
}

unsigned effective_cap(unsigned cap) { return cap ? cap : bhc::kDefaultDegreeCap; }

void check_cap(unsigned n, unsigned cap) {
  if (n > effective_cap(cap))
    throw bhc::Error(bhc::Errc::cap_exceeded,
                     "degree " + std::to_string(n) + " exceeds the cap " + std::to_string(effective_cap(cap)));
}

void copy_dims(const std::vector<bhc::Index>& v, std::size_t* out, std::size_t n) {
  if (!out) return;
  for (std::size_t i = 0; i < n; ++i) out[i] = i < v.size() ? v[i] : 0;
}

bhc_entry* wrap(bhc::CatalogEntry e) {
  auto* out = new bhc_entry{std::move(e), {}, {}};
  if (out->e.hopf) {
    out->field = out->e.hopf->field().name();
    out->category = out->e.hopf->cat().name();
  } else {
    out->field = "rational";
    out->category = "super vector spaces";
  }
  return out;
}

// σI_δ for a pair, or an entry module; a module failing its own axioms is reported, not thrown
void sayd_checks(bhc::CheckReport& r, const bhc::SaydModule& s, const std::string& prefix) {
  try {
    r.merge(bhc::check_aYD(s), prefix);
  } catch (const bhc::Error& e) {
    if (e.code() != bhc::Errc::precondition_failed) throw;
    r.expect(prefix + "module and comodule axioms", false, e.what());
    return;
  }
  r.merge(bhc::check_stability(s), prefix);
}

bhc::CheckReport run_check(const bhc_entry* ent, bhc_check_kind kind) {
  const bhc::HopfObject& h = hopf_of(ent);
  const bhc::CatalogEntry& e = ent->e;
  switch (kind) {
    case BHC_CHECK_HOPF: {
      bhc::CheckReport r("Hopf axioms for " + e.name);
      r.merge(bhc::verify_hopf(h));
      if (r.passed()) {
        r.merge(bhc::derived_identities(h), "derived: ");
        r.merge(bhc::check_s_squared(h), "S²: ");
      }
      return r;
    }
    case BHC_CHECK_PAIR: {
      bhc::CheckReport r("modular pairs of " + e.name);
      for (const auto& p : e.pairs) {
        r.merge(bhc::check_modular_pair(h, p.delta, p.sigma), p.name + ": ");
        r.merge(bhc::check_twisted_antipode(h, p.delta, &p.sigma), p.name + ": ");
      }
      return r;
    }
    case BHC_CHECK_BMPI: {
      bhc::CheckReport r("BMPI for " + e.name);
      for (const auto& p : e.pairs) r.merge(bhc::check_bmpi(h, p), p.name + ": ");
      return r;
    }
    case BHC_CHECK_SAYD: {
      bhc::CheckReport r("SAYD modules over " + e.name);
      for (const auto& p : e.pairs) sayd_checks(r, bhc::sigma_I_delta(h, p), "σI_δ for " + p.name + ": ");
      for (const auto& m : e.modules) sayd_checks(r, m, m.name + ": ");
      return r;
    }
    case BHC_CHECK_CATEGORY: {
      bhc::CheckReport r("category " + h.cat().name() + " on " + e.name);
      r.merge(h.cat().check_object(h.carrier()), "object: ");
      const std::vector<bhc::CatObject> objs = {h.cat().unit_object(), h.carrier()};
      const std::vector<bhc::Morphism> maps = {{h.eta(), 0, 1}, {h.eps(), 1, 0}, {h.S(), 1, 1}};
      r.merge(bhc::check_category(h.cat(), objs, maps));
      return r;
    }
  }
  throw bhc::Error(bhc::Errc::invalid_argument, "unknown check kind");
}

}  // namespace

extern "C" {

const char* bhc_last_error(void) { return last_error.c_str(); }

const char* bhc_status_name(bhc_status s) { return bhc::errc_name(static_cast<bhc::Errc>(s)); }

unsigned bhc_default_cap(void) { return bhc::kDefaultDegreeCap; }

bhc_status bhc_entry_load(const char* name_or_path, bhc_entry** out) {
  return guard([&] {
    need(name_or_path, "name");
    need(out, "out");
    *out = wrap(bhc::load_any(name_or_path));
  });
}

bhc_status bhc_entry_import_text(const char* json_text, const char* source, bhc_entry** out) {
  return guard([&] {
    need(json_text, "text");
    need(out, "out");
    *out = wrap(bhc::import_presentation_text(json_text, source ? source : "<input>"));
  });
}

void bhc_entry_free(bhc_entry* e) { delete e; }

const char* bhc_example_name(size_t i) {
  static const std::vector<std::string> names = bhc::example_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

const char* bhc_entry_name(const bhc_entry* e) { return e ? e->e.name.c_str() : ""; }
int bhc_entry_has_hopf(const bhc_entry* e) { return e && e->e.hopf ? 1 : 0; }
int bhc_entry_has_lie(const bhc_entry* e) { return e && e->e.lie ? 1 : 0; }
size_t bhc_entry_dim(const bhc_entry* e) { return e && e->e.hopf ? e->e.hopf->H().dim() : 0; }
const char* bhc_entry_field(const bhc_entry* e) { return e ? e->field.c_str() : ""; }
const char* bhc_entry_category(const bhc_entry* e) { return e ? e->category.c_str() : ""; }
size_t bhc_entry_pair_count(const bhc_entry* e) { return e ? e->e.pairs.size() : 0; }

const char* bhc_entry_pair_name(const bhc_entry* e, size_t i) {
  return e && i < e->e.pairs.size() ? e->e.pairs[i].name.c_str() : nullptr;
}

bhc_status bhc_entry_find_pair(const bhc_entry* e, const char* name_or_index, size_t* out) {
  return guard([&] {
    need(e, "entry");
    need(name_or_index, "pair");
    need(out, "out");
    const std::string key = name_or_index;
    for (std::size_t i = 0; i < e->e.pairs.size(); ++i)
      if (e->e.pairs[i].name == key) return void(*out = i);
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos && key.size() < 10) {
      const std::size_t i = std::stoul(key);
      if (i < e->e.pairs.size()) return void(*out = i);
    }
    throw bhc::Error(bhc::Errc::unknown_name, e->e.name + " has no pair '" + key + "'");
  });
}

bhc_status bhc_entry_export(const bhc_entry* e, char** out) {
  return guard([&] {
    need(e, "entry");
    need(out, "out");
    const std::string s = bhc::export_entry(e->e);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void bhc_string_free(char* s) { std::free(s); }

bhc_status bhc_check(const bhc_entry* e, bhc_check_kind kind, bhc_report** out) {
  return guard([&] {
    need(out, "out");
    *out = new bhc_report{run_check(e, kind)};
  });
}

void bhc_report_free(bhc_report* r) { delete r; }
const char* bhc_report_title(const bhc_report* r) { return r ? r->r.title().c_str() : ""; }
int bhc_report_passed(const bhc_report* r) { return r && r->r.passed() ? 1 : 0; }
size_t bhc_report_size(const bhc_report* r) { return r ? r->r.entries().size() : 0; }

bhc_status bhc_report_entry(const bhc_report* r, size_t i, const char** name, int* passed, int* required,
                            const char** witness, const char** detail) {
  return guard([&] {
    need(r, "report");
    if (i >= r->r.entries().size()) throw bhc::Error(bhc::Errc::invalid_argument, "report entry out of range");
    const bhc::CheckEntry& c = r->r.entries()[i];
    if (name) *name = c.name.c_str();
    if (passed) *passed = c.passed ? 1 : 0;
    if (required) *required = c.required ? 1 : 0;
    if (witness) *witness = c.witness.c_str();
    if (detail) *detail = c.detail.c_str();
  });
}

size_t bhc_report_note_count(const bhc_report* r) { return r ? r->r.notes().size() : 0; }

bhc_status bhc_report_note(const bhc_report* r, size_t i, const char** key, const char** value) {
  return guard([&] {
    need(r, "report");
    if (i >= r->r.notes().size()) throw bhc::Error(bhc::Errc::invalid_argument, "report note out of range");
    if (key) *key = r->r.notes()[i].first.c_str();
    if (value) *value = r->r.notes()[i].second.c_str();
  });
}

bhc_status bhc_cocyclic_build(const bhc_entry* e, bhc_builder b, size_t pair, unsigned n_max, unsigned cap,
                              bhc_cocyclic** out) {
  return guard([&] {
    need(out, "out");
    const bhc::HopfObject& h = hopf_of(e);
    const bhc::ModularPair& p = pair_of(e, pair);
    check_cap(n_max, cap);
    const unsigned c = effective_cap(cap);
    switch (b) {
      case BHC_BUILD_CM:
        *out = new bhc_cocyclic{bhc::build_cm(h, p, n_max, c)};
        return;
      case BHC_BUILD_CM_SUPER:
        *out = new bhc_cocyclic{bhc::build_cm_super(h, p, n_max, c)};
        return;
      case BHC_BUILD_TRIPLE:
        *out = new bhc_cocyclic{
            bhc::build_triple(bhc::regular_module_coalgebra(h), bhc::sigma_I_delta(h, p), n_max, true, c)};
        return;
    }
    throw bhc::Error(bhc::Errc::invalid_argument, "unknown builder");
  });
}

void bhc_cocyclic_free(bhc_cocyclic* c) { delete c; }
unsigned bhc_cocyclic_max_degree(const bhc_cocyclic* c) { return c ? c->p.max_degree : 0; }

size_t bhc_cocyclic_dim(const bhc_cocyclic* c, unsigned n) {
  return c && n < c->p.spaces.size() ? c->p.spaces[n].dim() : 0;
}

bhc_status bhc_cocyclic_verify(const bhc_cocyclic* c, bhc_report** out) {
  return guard([&] {
    need(c, "module");
    need(out, "out");
    *out = new bhc_report{bhc::verify_identities(c->p)};
  });
}

bhc_status bhc_cocyclic_tau_power(const bhc_cocyclic* c, unsigned n, int* equal, int* is_identity) {
  return guard([&] {
    need(c, "module");
    const bhc::TauPower t = bhc::tau_power(c->p, n);
    if (equal) *equal = t.equal ? 1 : 0;
    if (is_identity) *is_identity = t.tau_power.is_identity() ? 1 : 0;
  });
}

bhc_status bhc_cocyclic_restrict(const bhc_cocyclic* c, bhc_cocyclic** out) {
  return guard([&] {
    need(c, "module");
    need(out, "out");
    *out = new bhc_cocyclic{bhc::restrict_to_cyclic(c->p).restricted};
  });
}

bhc_status bhc_cohomology(const bhc_entry* e, bhc_theory t, size_t pair, unsigned n_max, unsigned cap, size_t* dims) {
  return guard([&] {
    const bhc::HopfObject& h = hopf_of(e);
    const bhc::ModularPair& p = pair_of(e, pair);
    check_cap(n_max, cap);
    std::vector<bhc::Index> v;
    switch (t) {
      case BHC_HOCHSCHILD:
        v = bhc::hochschild_dims(h, p, n_max);
        break;
      case BHC_CYCLIC:
        v = bhc::cyclic_cohomology(h, p, n_max);
        break;
      case BHC_COTOR:
        v = bhc::cotor(h, p.sigma, n_max);
        break;
      default:
        throw bhc::Error(bhc::Errc::invalid_argument, "unknown theory");
    }
    copy_dims(v, dims, n_max + 1);
  });
}

bhc_status bhc_decomposition(const bhc_entry* e, unsigned n_max, unsigned cap, size_t* hc, size_t* hh,
                             size_t* partial_sums, int* agree) {
  return guard([&] {
    const bhc::HopfObject& h = hopf_of(e);
    check_cap(n_max, cap);
    const bhc::Decomposition d = bhc::decomposition_check(h, n_max);
    copy_dims(d.hc, hc, n_max + 1);
    copy_dims(d.hh, hh, n_max + 1);
    copy_dims(d.partial_sums, partial_sums, n_max + 1);
    if (agree) *agree = d.report.passed() ? 1 : 0;
  });
}

bhc_status bhc_lie_homology(const bhc_entry* e, unsigned n_max, unsigned cap, size_t* dims) {
  return guard([&] {
    const bhc::SuperLieAlgebra& g = lie_of(e);
    check_cap(n_max, cap);
    copy_dims(bhc::lie_homology(g, n_max), dims, n_max + 1);
  });
}

bhc_status bhc_lie_ba_check(const bhc_entry* e, unsigned n_max, unsigned truncation, unsigned cap, bhc_report** out) {
  return guard([&] {
    need(out, "out");
    const bhc::SuperLieAlgebra& g = lie_of(e);
    check_cap(n_max, cap);
    *out = new bhc_report{bhc::check_BA_equals_Ad(g, n_max, truncation)};
  });
}

bhc_status bhc_lie_compare(const bhc_entry* e, unsigned n_max, unsigned cap, size_t* hc, size_t* lie,
                           size_t* partial_sums, int* agree) {
  return guard([&] {
    const bhc::SuperLieAlgebra& g = lie_of(e);
    check_cap(n_max, cap);
    const bhc::LieComparison c = bhc::compare_cyclic_with_lie(g, n_max);
    copy_dims(c.hc, hc, n_max + 1);
    copy_dims(c.lie, lie, n_max + 1);
    copy_dims(c.partial_sums, partial_sums, n_max + 1);
    if (agree) *agree = c.agree ? 1 : 0;
  });
}

}  // extern "C"
