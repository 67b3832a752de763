/*
   Copyright 2026 The frobex authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "frobex/frobenius.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace frobex {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next.store(n);
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Verifier::Verifier(const FrobeniusFamily& family, CentralCharacter chi, unsigned threads, std::uint64_t seed)
    : fam_(family), chi_(std::move(chi)), threads_(threads), rng_(seed) {
  for (const auto& v : fam_.central_variables())
    if (!chi_.values.count(v)) throw Error("central character '" + chi_.label + "' has no value for " + v);
  for (const auto& v : fam_.unit_variables())
    if (chi_.values.at(v).is_zero())
      throw Error("central character '" + chi_.label + "' must assign an invertible value to " + v);
}

const Matrix& Verifier::gram() {
  if (gram_) return *gram_;
  const std::size_t n = fam_.rank();
  Matrix g(n, n);
  parallel_for(n, threads_, [&](std::size_t i) {
    const Element& bi = fam_.basis_element(i);
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = poly_eval(fam_.phi(fam_.engine().multiply(bi, fam_.basis_element(j))), chi_);
  });
  gram_ = std::move(g);
  return *gram_;
}

std::vector<Cyc> Verifier::reduce(const Element& h) const {
  std::vector<Cyc> v(fam_.rank());
  for (const auto& [i, z] : fam_.coordinates(h)) v[i] = poly_eval(z, chi_);
  return v;
}

const std::vector<Cyc>& Verifier::structure(std::size_t i, std::size_t j) {
  {
    std::lock_guard lock(mu_);
    auto it = table_.find({i, j});
    if (it != table_.end()) return *it->second;
  }
  auto v = std::make_unique<std::vector<Cyc>>(
      reduce(fam_.engine().multiply(fam_.basis_element(i), fam_.basis_element(j))));
  std::lock_guard lock(mu_);
  return *table_.try_emplace({i, j}, std::move(v)).first->second;
}

namespace {

std::vector<std::size_t> support(const Matrix& m, std::size_t col) {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < m.rows(); ++k)
    if (!m(k, col).is_zero()) s.push_back(k);
  return s;
}

std::optional<Cyc> eigenvalue(const std::vector<Cyc>& v, const std::vector<Cyc>& nv) {
  std::optional<Cyc> lambda;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) {
      if (!nv[k].is_zero()) return std::nullopt;
      continue;
    }
    const Cyc l = nv[k] / v[k];
    if (lambda && *lambda != l) return std::nullopt;
    lambda = l;
  }
  return lambda;
}

}  // namespace

FrobeniusReport Verifier::run(const VerifyOptions& opts) {
  FrobeniusReport rep;
  rep.character_label = chi_.label;
  for (const auto& [k, v] : chi_.values) rep.character[k] = v.str();
  const std::size_t n = fam_.rank();
  rep.dim = n;
  rep.gram = gram();
  const Matrix& g = rep.gram;
  rep.rank = frobex::rank(g);
  rep.full_rank = rep.rank == n;
  rep.symmetric = g.is_symmetric();
  if (!rep.full_rank) {
    rep.failures.push_back("Gram matrix has rank " + std::to_string(rep.rank) + " < " + std::to_string(n));
    return rep;
  }

  if (opts.dual) {
    rep.dual = inverse(g);
    rep.dual_ok = (g * rep.dual).is_identity();
    if (!rep.dual_ok) rep.failures.push_back("dual basis does not pair to the identity");
  }
  if (!opts.nakayama) return rep;

  // B(x, y) = B(nu(y), x) gives G^T N = G.
  const Matrix gt = g.transpose();
  auto nak = solve(gt, g);
  if (!nak) {
    rep.failures.push_back("no solution for G^T N = G");
    return rep;
  }
  rep.nakayama = std::move(*nak);
  const Matrix& N = rep.nakayama;
  rep.nakayama_identity = N.is_identity();

  // Phi(b_i b_j) = Phi(N(b_j) b_i).
  auto pair_ok = [&](std::size_t i, std::size_t j) {
    Cyc s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (!N(k, j).is_zero() && !g(k, i).is_zero()) s += N(k, j) * g(k, i);
    return s == g(i, j);
  };
  rep.roundtrip_ok = true;
  if (n <= opts.roundtrip_exhaustive_limit) {
    rep.roundtrip_ok = gt * N == g;
    rep.roundtrip_pairs = n * n;
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < opts.roundtrip_samples; ++t) {
      const std::size_t i = pick(rng_), j = pick(rng_);
      if (!pair_ok(i, j)) rep.roundtrip_ok = false;
      ++rep.roundtrip_pairs;
    }
  }
  if (!rep.roundtrip_ok) rep.failures.push_back("Nakayama round trip Phi(b_i b_j) = Phi(N(b_j) b_i) failed");

  // nu(b_i b_j) = nu(b_i) nu(b_j) on sampled pairs.
  rep.automorphism_ok = true;
  {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < opts.automorphism_samples; ++t) {
      const std::size_t i = pick(rng_), j = pick(rng_);
      const std::vector<Cyc> lhs = N.apply(structure(i, j));
      std::vector<Cyc> rhs(n);
      for (std::size_t k : support(N, i))
        for (std::size_t l : support(N, j)) {
          const Cyc f = N(k, i) * N(l, j);
          const auto& s = structure(k, l);
          for (std::size_t r = 0; r < n; ++r)
            if (!s[r].is_zero()) rhs[r] += f * s[r];
        }
      ++rep.automorphism_pairs;
      if (lhs != rhs) {
        rep.automorphism_ok = false;
        rep.failures.push_back("Nakayama matrix is not multiplicative on (" + fam_.basis_label(i) + ", " +
                               fam_.basis_label(j) + ")");
        break;
      }
    }
  }

  if (opts.check_generators) {
    for (const auto& gen : fam_.generators()) {
      GeneratorImage img;
      img.name = gen.name;
      const auto v = reduce(gen.element);
      const auto nv = N.apply(v);
      img.realized = eigenvalue(v, nv);
      if (gen.has_expected) {
        img.has_expected = true;
        img.expected = gen.expected.str();
        img.ok = img.realized && *img.realized == gen.expected;
        if (gen.alternate) {
          img.alternate = gen.alternate->str();
          if (!img.ok && img.realized && *img.realized == *gen.alternate) img.ok = img.matched_alternate = true;
        }
        if (!img.ok) {
          rep.generators_ok = false;
          rep.failures.push_back("Nakayama image of " + gen.name + " differs from " + gen.expected.str() + " * " +
                                 gen.name);
        }
      }
      rep.generators.push_back(std::move(img));
    }
  }

  if (n <= opts.crosscheck_limit) {
    // G from the structure constants: G_ij = coordinate of b_i b_j at Phi's index.
    bool ok = true;
    const std::size_t p = fam_.phi_index();
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (structure(i, j)[p] != g(i, j)) ok = false;
    // The unit acts trivially in the table.
    const auto one = reduce(fam_.engine().one());
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::vector<Cyc> e(n);
      e[i] = 1;
      std::vector<Cyc> prod(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (one[k].is_zero()) continue;
        const auto& s = structure(k, i);
        for (std::size_t r = 0; r < n; ++r) prod[r] += one[k] * s[r];
      }
      if (prod != e) ok = false;
    }
    rep.crosscheck_ok = ok;
    if (!ok) rep.failures.push_back("structure-constant table disagrees with the Gram matrix");
  }
  return rep;
}

std::vector<std::vector<CentralPoly>> pairing(const FrobeniusFamily& fam, const std::vector<Element>& left,
                                              const std::vector<Element>& right) {
  std::vector<std::vector<CentralPoly>> p(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (const auto& r : right) p[i].push_back(fam.phi(fam.engine().multiply(left[i], r)));
  return p;
}

WitnessPairing witness_pairing(const FrobeniusFamily& fam, const CentralCharacter& chi, unsigned threads) {
  const std::size_t n = fam.rank();
  std::vector<Element> wit(n);
  parallel_for(n, threads, [&](std::size_t j) { wit[j] = fam.witness(j); });
  const bool left = fam.witness_side() == WitnessSide::Left;
  WitnessPairing out;
  out.values = Matrix(n, n);
  parallel_for(n, threads, [&](std::size_t i) {
    const Element& b = fam.basis_element(i);
    for (std::size_t j = 0; j < n; ++j)
      out.values(i, j) = poly_eval(fam.phi(left ? fam.engine().multiply(wit[j], b) : fam.engine().multiply(b, wit[j])), chi);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !out.values(i, j).is_zero()) ++out.off_diagonal;
  return out;
}

HypothesisLog check_hypothesis(const FrobeniusFamily& fam, std::size_t combos, std::uint64_t seed, bool singles) {
  HypothesisLog log;
  const std::size_t n = fam.rank();
  const Engine& eng = fam.engine();
  const bool left = fam.witness_side() == WitnessSide::Left;
  auto apply = [&](const Element& x, const Element& a) {
    return fam.phi(left ? eng.multiply(x, a) : eng.multiply(a, x));
  };
  std::map<std::size_t, std::pair<Element, CentralPoly>> cache;  // witness and its unit
  auto witness_unit = [&](std::size_t b) -> const std::pair<Element, CentralPoly>& {
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    Element x = fam.witness(b);
    CentralPoly u = apply(x, fam.basis_element(b));
    return cache.emplace(b, std::make_pair(std::move(x), std::move(u))).first->second;
  };
  auto record = [&](HypothesisEntry e) {
    if (!e.ok) ++log.failures;
    log.entries.push_back(std::move(e));
  };

  if (singles) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& [x, u] = witness_unit(b);
      HypothesisEntry e;
      e.input = fam.basis_label(b);
      e.leading = b;
      e.leading_label = e.input;
      e.unit = u.str();
      e.z_b = "1";
      e.value = e.unit;
      e.ok = u.is_constant() && !u.is_zero();
      if (!e.ok) e.note = "Phi(witness * b) is not a unit";
      ++log.singles;
      record(std::move(e));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> nterms(2, 4);
  const std::vector<Cyc> grid{Cyc(-2), Cyc(-1), Cyc(1), Cyc(2), Cyc(1, 2)};
  std::uniform_int_distribution<std::size_t> pick_c(0, grid.size() - 1);
  for (std::size_t t = 0; t < combos; ++t) {
    std::map<std::size_t, Cyc> coeffs;
    const int k = std::min<int>(nterms(rng), static_cast<int>(n));
    while (static_cast<int>(coeffs.size()) < k) coeffs.emplace(pick(rng), grid[pick_c(rng)]);
    Element a;
    std::size_t lead = coeffs.begin()->first;
    std::string input;
    for (const auto& [b, c] : coeffs) {
      a.add_scaled(fam.basis_element(b), c);
      if (fam.leading_rank(b) > fam.leading_rank(lead)) lead = b;
      input += (input.empty() ? "" : " + ") + ("(" + c.str() + ")*" + fam.basis_label(b));
    }
    const auto& [x, u] = witness_unit(lead);
    const CentralPoly value = apply(x, a);
    HypothesisEntry e;
    e.input = input;
    e.leading = lead;
    e.leading_label = fam.basis_label(lead);
    e.unit = u.str();
    e.z_b = coeffs.at(lead).str();
    e.value = value.str();
    const bool unit = u.is_constant() && !u.is_zero();
    e.ok = unit && value == u * coeffs.at(lead);
    if (!e.ok) e.note = unit ? "Phi(witness * a) != u * z_b" : "Phi(witness * b) is not a unit";
    ++log.combinations;
    record(std::move(e));
  }
  return log;
}

EngineCheck check_engine(const FrobeniusFamily& fam, std::size_t triples, std::uint64_t seed) {
  EngineCheck out;
  const Engine& eng = fam.engine();
  const RewriteSystem& rs = eng.rules();
  if (auto msg = eng.validate_rules(); !msg.empty()) out.failures.push_back(msg);
  std::mt19937_64 rng(seed);
  const int letters = static_cast<int>(rs.letter_count());
  std::uniform_int_distribution<int> pick_letter(0, letters - 1);
  auto random_word = [&](int maxlen) {
    std::uniform_int_distribution<int> len(1, maxlen);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = pick_letter(rng);
    return w;
  };
  auto word_name = [&](const Word& w) {
    std::string s;
    for (int l : w) s += (s.empty() ? "" : "*") + rs.letter_name(l);
    return s;
  };
  // A random canonical monomial: the leading term of a short random word.
  auto random_monomial = [&]() {
    for (;;) {
      Element e = eng.normal_form(random_word(3));
      if (e.is_zero()) continue;
      auto it = e.terms().begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng));
      return Element::monomial(it->first);
    }
  };
  for (std::size_t t = 0; t < triples; ++t) {
    const Element a = random_monomial(), b = random_monomial(), c = random_monomial();
    const Element ab = eng.multiply(a, b);
    const Element lhs = eng.multiply(ab, c);
    const Element rhs = eng.multiply(a, eng.multiply(b, c));
    ++out.associativity_triples;
    if (lhs != rhs) {
      out.failures.push_back("associativity fails on (" + a.str(rs) + ", " + b.str(rs) + ", " + c.str(rs) + ")");
      break;
    }
    ++out.degree_checks;
    if (!ab.is_zero() && eng.weight(ab) > eng.weight(a) + eng.weight(b))
      out.failures.push_back("filtration bound fails on (" + a.str(rs) + ", " + b.str(rs) + ")");
  }
  for (std::size_t t = 0; t < triples; ++t) {
    const Word w = random_word(8);
    const Element nf = eng.normal_form(w);
    ++out.idempotence_words;
    for (const auto& [m, c] : nf.terms()) {
      if (eng.normal_form(rs.spell(m)) != Element::monomial(m)) {
        out.failures.push_back("normal form of " + word_name(w) + " is not idempotent at " + rs.render(m));
        break;
      }
    }
    if (eng.multiply(eng.one(), nf) != nf || eng.multiply(nf, eng.one()) != nf)
      out.failures.push_back("unit law fails on " + word_name(w));
  }
  return out;
}

}  // namespace frobex
