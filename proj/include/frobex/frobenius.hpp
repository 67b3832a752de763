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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobex/family.hpp"
#include "frobex/matrix.hpp"

namespace frobex {

struct GeneratorImage {
  std::string name;
  bool has_expected = false;
  std::string expected;
  std::string alternate;
  /// Set when the realized scalar matched the alternate instead of the expected value.
  bool matched_alternate = false;
  /// lambda with N(g) = lambda g, when g's image is an eigenvector.
  std::optional<Cyc> realized;
  bool ok = true;
};

struct FrobeniusReport {
  std::string character_label;
  std::map<std::string, std::string> character;
  std::size_t dim = 0;
  std::size_t rank = 0;
  bool full_rank = false;
  bool symmetric = false;
  bool nakayama_identity = false;
  Matrix gram, nakayama, dual;
  bool roundtrip_ok = false;
  std::size_t roundtrip_pairs = 0;
  bool dual_ok = false;
  bool automorphism_ok = false;
  std::size_t automorphism_pairs = 0;
  std::vector<GeneratorImage> generators;
  bool generators_ok = true;
  std::optional<bool> crosscheck_ok;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  bool nakayama = true;
  bool dual = true;
  bool check_generators = true;
  std::size_t automorphism_samples = 100;
  std::size_t roundtrip_exhaustive_limit = 64;
  std::size_t roundtrip_samples = 500;
  /// Rebuild G from the structure-constant table when dim is at most this.
  std::size_t crosscheck_limit = 0;
};

/// A family specialized at one central character; products are memoized.
class Verifier {
 public:
  Verifier(const FrobeniusFamily& family, CentralCharacter chi, unsigned threads = 1, std::uint64_t seed = 1);

  const FrobeniusFamily& family() const { return fam_; }
  const CentralCharacter& character() const { return chi_; }

  /// G_ij = Phi(b_i b_j) evaluated at chi.
  const Matrix& gram();
  /// Coordinates of h in the reduced algebra.
  std::vector<Cyc> reduce(const Element& h) const;
  /// Coordinates of b_i b_j in the reduced algebra, memoized.
  const std::vector<Cyc>& structure(std::size_t i, std::size_t j);

  FrobeniusReport run(const VerifyOptions& opts);

 private:
  const FrobeniusFamily& fam_;
  CentralCharacter chi_;
  unsigned threads_;
  std::mt19937_64 rng_;
  std::optional<Matrix> gram_;
  std::mutex mu_;
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::vector<Cyc>>> table_;
};

/// Bilinear pairing matrix P_ij = Phi(left_i * right_j) before specialization.
std::vector<std::vector<CentralPoly>> pairing(const FrobeniusFamily& fam, const std::vector<Element>& left,
                                              const std::vector<Element>& right);

struct WitnessPairing {
  Matrix values;
  std::size_t off_diagonal = 0;
  bool diagonal() const { return off_diagonal == 0; }
};

/// P_ij = Phi(b_i x_j) at chi with x_j = witness(j), multiplied on the family's witness side.
WitnessPairing witness_pairing(const FrobeniusFamily& fam, const CentralCharacter& chi, unsigned threads = 1);

struct HypothesisEntry {
  std::string input;
  std::size_t leading = 0;
  std::string leading_label;
  std::string unit;  // Phi(witness * b), a nonzero constant when ok
  std::string z_b;
  std::string value;  // Phi(witness * a)
  bool ok = false;
  std::string note;
};

struct HypothesisLog {
  std::vector<HypothesisEntry> entries;
  std::size_t singles = 0, combinations = 0, failures = 0;
  bool passed() const { return failures == 0; }
};

/// Runs the witness on every single basis element plus `combos` random combinations with
/// nonzero scalar coefficients from {-2, -1, 1, 2, 1/2}.
HypothesisLog check_hypothesis(const FrobeniusFamily& fam, std::size_t combos, std::uint64_t seed,
                               bool singles = true);

struct EngineCheck {
  std::size_t associativity_triples = 0;
  std::size_t idempotence_words = 0;
  std::size_t degree_checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Associativity on random monomial triples, normal-form idempotence on random words of
/// length <= 8, the filtration bound weight(ab) <= weight(a) + weight(b), and rule validation.
EngineCheck check_engine(const FrobeniusFamily& fam, std::size_t triples, std::uint64_t seed);

/// Runs fn(i) for i in [0, n) on up to `threads` workers; rethrows the first failure.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace frobex
