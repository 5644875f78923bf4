#include "solv/resolution.hpp"

#include <algorithm>
#include <utility>

namespace solv {

namespace {

ModulePtr induced_ambient(const FreeModuleSpec& M, ModulePtr parent,
                          const std::vector<ModuleElement>& images,
                          std::string name, const char* what) {
  ModuleOrderingSpec ord;
  ord.kind = ModOrderKind::Schreyer;
  ord.graded = M.order.graded;
  ord.parent = std::move(parent);
  std::vector<long long> shifts;
  for (const ModuleElement& g : images) {
    if (g.is_zero()) throw MathError(std::string(what) + ": zero image");
    ord.images.push_back(SchreyerImage{g.lead().mono, g.lead().comp});
    shifts.push_back(filtered_degree(M, g));
  }
  return make_module(M.algebra, static_cast<int>(images.size()),
                     std::move(shifts), std::move(ord), std::move(name));
}

ModuleElement row_to_element(const FreeModuleSpec& M,
                             const std::vector<Polynomial>& row) {
  std::vector<ModuleTerm> terms;
  for (size_t j = 0; j < row.size(); ++j)
    for (const Term& t : row[j].terms)
      terms.push_back(ModuleTerm{t.coef, t.mono, static_cast<int>(j)});
  return make_element(M, std::move(terms));
}

Polynomial coefficient_of(const AlgebraSpec& A, const ModuleElement& x,
                          int comp) {
  std::vector<Term> terms;
  for (const ModuleTerm& t : x.terms)
    if (t.comp == comp) terms.push_back(Term{t.coef, t.mono});
  return make_poly(A, std::move(terms));
}

bool has_constant_term(const Polynomial& f) {
  for (const Term& t : f.terms) {
    if (std::all_of(t.mono.begin(), t.mono.end(),
                    [](int e) { return e == 0; }))
      return true;
  }
  return false;
}

}  // namespace

ModulePtr schreyer_ambient(const GroebnerRecord& rec, std::string name) {
  const FreeModuleSpec& M = *rec.module;
  if (name.empty()) name = M.name + "_eps";
  return induced_ambient(M, rec.module, rec.basis, std::move(name),
                         "schreyer ambient");
}

std::vector<ModuleElement> schreyer_syzygies(const GroebnerRecord& rec) {
  ModulePtr amb = schreyer_ambient(rec);
  std::vector<ModuleElement> out;
  for (const SyzygySeed& s : rec.seeds) out.push_back(row_to_element(*amb, s.row));
  return out;
}

ModulePtr syzygy_ambient(const GroebnerRecord& rec, std::string name) {
  const FreeModuleSpec& M = *rec.module;
  if (name.empty()) name = M.name + "_syz";
  return induced_ambient(M, rec.module, rec.inputs, std::move(name),
                         "syzygy ambient");
}

std::vector<ModuleElement> syzygy_generators(const GroebnerRecord& rec) {
  const AlgebraSpec& A = rec.module->alg();
  ModulePtr amb = syzygy_ambient(rec);
  const size_t m = rec.inputs.size();
  const size_t t = rec.basis.size();
  std::vector<ModuleElement> out;

  for (const SyzygySeed& s : rec.seeds) {
    std::vector<Polynomial> row(m);
    for (size_t l = 0; l < m; ++l) {
      Polynomial acc;
      for (size_t k = 0; k < t; ++k) {
        if (s.row[k].is_zero() || rec.vmat[k][l].is_zero()) continue;
        acc = add(A, acc, mul(A, s.row[k], rec.vmat[k][l]));
      }
      row[l] = std::move(acc);
    }
    ModuleElement e = row_to_element(*amb, row);
    if (!e.is_zero()) out.push_back(std::move(e));
  }

  for (size_t l = 0; l < m; ++l) {
    std::vector<Polynomial> row(m);
    for (size_t l2 = 0; l2 < m; ++l2) {
      Polynomial acc;
      for (size_t k = 0; k < t; ++k) {
        if (rec.umat[l][k].is_zero() || rec.vmat[k][l2].is_zero()) continue;
        acc = add(A, acc, mul(A, rec.umat[l][k], rec.vmat[k][l2]));
      }
      if (l2 == l) acc = sub(A, acc, poly_constant(Rational(1), A.ngens()));
      row[l2] = std::move(acc);
    }
    ModuleElement e = row_to_element(*amb, row);
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

std::vector<ModuleElement> step_images(const ResolutionStep& st) {
  std::vector<ModuleElement> rows;
  for (const auto& row : st.matrix)
    rows.push_back(row_to_element(*st.target, row));
  return rows;
}

ModuleElement apply_step(const ResolutionStep& st, const ModuleElement& x) {
  std::vector<ModuleElement> rows = step_images(st);
  ModuleElement out;
  for (const ModuleTerm& t : x.terms)
    out = add(*st.target, out,
              act_term(*st.target, t.coef, t.mono, rows[t.comp]));
  return out;
}

Resolution minimal_filtered_resolution(ModulePtr L0,
                                       const std::vector<ModuleElement>& Theta,
                                       int max_length, long long step_cap) {
  const int n = L0->alg().ngens();
  if (max_length < 0) max_length = n;
  if (!L0->order.graded)
    throw MathError("resolution requires a degree-first ordering");
  for (const ModuleElement& x : Theta)
    if (x.is_zero()) throw MathError("zero generator");

  Resolution R;
  GroebnerRecord rec0 = buchberger(L0, Theta, step_cap);
  R.presentation = minimize_presentation(L0, rec0.basis);

  ModulePtr cur = R.presentation.reduced_ambient;
  std::vector<ModuleElement> gens = R.presentation.reduced_in_prime;
  int level = 1;
  while (!gens.empty()) {
    if (static_cast<int>(R.steps.size()) >= max_length)
      throw MathError("resolution exceeds maximum length");
    std::vector<ModuleElement> W = minimal_standard_basis(cur, gens, step_cap);
    GroebnerRecord recW = buchberger(cur, W, step_cap);

    ResolutionStep st;
    st.target = cur;
    st.source = syzygy_ambient(recW, "L" + std::to_string(level));
    for (const ModuleElement& w : W) {
      std::vector<Polynomial> row;
      for (int j = 0; j < cur->rank; ++j)
        row.push_back(coefficient_of(cur->alg(), w, j));
      st.matrix.push_back(std::move(row));
    }
    R.steps.push_back(std::move(st));

    gens = syzygy_generators(recW);
    cur = R.steps.back().source;
    ++level;
  }
  R.verified = verify_resolution(R);
  return R;
}

VerifyReport verify_resolution(const Resolution& R) {
  VerifyReport rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    rep.failures.push_back(std::move(msg));
  };
  const QuotientPresentation& P = R.presentation;
  const int n = P.ambient->alg().ngens();
  const size_t d = R.steps.size();

  if (d > static_cast<size_t>(n))
    fail("length " + std::to_string(d) + " exceeds generator count " +
         std::to_string(n));

  // Structural chain and zero rows.
  bool structural = true;
  for (size_t l = 0; l < d; ++l) {
    const ResolutionStep& st = R.steps[l];
    const FreeModuleSpec* expect =
        l == 0 ? P.reduced_ambient.get() : R.steps[l - 1].source.get();
    if (st.target->rank != expect->rank || st.target->shifts != expect->shifts) {
      fail("map " + std::to_string(l + 1) + " target does not match the chain");
      structural = false;
    }
    if (static_cast<int>(st.matrix.size()) != st.source->rank) {
      fail("map " + std::to_string(l + 1) + " row count mismatch");
      structural = false;
    }
    for (const auto& row : st.matrix)
      if (static_cast<int>(row.size()) != st.target->rank) {
        fail("map " + std::to_string(l + 1) + " column count mismatch");
        structural = false;
      }
  }
  if (!structural) return rep;

  std::vector<std::vector<ModuleElement>> rows(d);
  for (size_t l = 0; l < d; ++l) {
    rows[l] = step_images(R.steps[l]);
    for (size_t k = 0; k < rows[l].size(); ++k)
      if (rows[l][k].is_zero())
        fail("map " + std::to_string(l + 1) + " row " + std::to_string(k + 1) +
             " is zero");
  }
  if (!rep.pass) return rep;

  // (a) consecutive compositions vanish.
  for (size_t l = 0; l + 1 < d; ++l) {
    const ResolutionStep& phi = R.steps[l];
    for (size_t k = 0; k < rows[l + 1].size(); ++k) {
      if (!apply_step(phi, rows[l + 1][k]).is_zero()) {
        fail("composition of maps " + std::to_string(l + 2) + " and " +
             std::to_string(l + 1) + " is nonzero at generator " +
             std::to_string(k + 1));
        break;
      }
    }
  }

  // (d) source shifts match image degrees.
  for (size_t l = 0; l < d; ++l) {
    const ResolutionStep& st = R.steps[l];
    for (size_t k = 0; k < rows[l].size(); ++k) {
      if (filtered_degree(*st.target, rows[l][k]) != st.source->shifts[k])
        fail("map " + std::to_string(l + 1) + " shift of generator " +
             std::to_string(k + 1) + " does not match its image degree");
    }
  }

  // (c) minimality: no unit entry at matching shifts.
  for (size_t l = 0; l < d; ++l) {
    const ResolutionStep& st = R.steps[l];
    for (size_t k = 0; k < st.matrix.size(); ++k)
      for (size_t j = 0; j < st.matrix[k].size(); ++j) {
        if (has_constant_term(st.matrix[k][j]) &&
            st.source->shifts[k] == st.target->shifts[j])
          fail("map " + std::to_string(l + 1) + " entry (" +
               std::to_string(k + 1) + "," + std::to_string(j + 1) +
               ") is a unit at matching shifts");
      }
  }
  for (size_t r = 0; r < P.reduced_in_prime.size(); ++r) {
    const ModuleElement& v = P.reduced_in_prime[r];
    for (const ModuleTerm& t : v.terms) {
      bool constant = std::all_of(t.mono.begin(), t.mono.end(),
                                  [](int e) { return e == 0; });
      if (constant && P.reduced_ambient->shifts[t.comp] ==
                          filtered_degree(*P.reduced_ambient, v))
        fail("relation " + std::to_string(r + 1) +
             " still eliminates a component");
    }
  }

  // (b) exactness.
  try {
    if (d == 0) {
      if (!P.reduced_in_prime.empty())
        fail("no maps but relations remain");
    } else {
      ModulePtr L0p = P.reduced_ambient;
      if (P.reduced_in_prime.empty()) {
        fail("maps present but the relation module is zero");
      } else {
        GroebnerRecord rel = buchberger(L0p, P.reduced_in_prime);
        for (size_t k = 0; k < rows[0].size(); ++k)
          if (!normal_form(*L0p, rows[0][k], rel.basis).is_zero())
            fail("map 1 image " + std::to_string(k + 1) +
                 " lies outside the relation module");
        GroebnerRecord img = buchberger(L0p, rows[0]);
        for (size_t r = 0; r < P.reduced_in_prime.size(); ++r)
          if (!normal_form(*L0p, P.reduced_in_prime[r], img.basis).is_zero())
            fail("relation " + std::to_string(r + 1) +
                 " is not generated by the map 1 image");
      }
      for (size_t l = 0; l < d; ++l) {
        const ResolutionStep& st = R.steps[l];
        GroebnerRecord rec = buchberger(st.target, rows[l]);
        std::vector<ModuleElement> syz = syzygy_generators(rec);
        if (l + 1 == d) {
          if (!syz.empty())
            fail("kernel of the last map is nonzero");
        } else {
          GroebnerRecord next = buchberger(st.source, rows[l + 1]);
          for (ModuleElement& s : syz) {
            ModuleElement e = make_element(*st.source, std::move(s.terms));
            if (!normal_form(*st.source, e, next.basis).is_zero()) {
              fail("a syzygy of map " + std::to_string(l + 1) +
                   " is not generated by map " + std::to_string(l + 2));
              break;
            }
          }
        }
      }
    }
  } catch (const std::exception& e) {
    fail(std::string("exactness check aborted: ") + e.what());
  }

  return rep;
}

}  // namespace solv
