#ifndef FOLK_CORPUS_HPP
#define FOLK_CORPUS_HPP

#include <string>
#include <vector>

#include "folk/fibcof.hpp"
#include "folk/interval.hpp"

namespace folk {

/// The versioned test corpus. The seven base categories carry the
/// functor-level corpus (all functors among them); pairwise products are
/// kept as categories only, so the full verifier run stays at desk scale.
struct Corpus {
  std::string version;
  std::vector<CatPtr> base;
  std::vector<CatPtr> categories;  // base plus pairwise products
  std::vector<FunctorMap> functors;
  std::vector<ClosureInstance> retracts;
  std::vector<CatPtr> test_family;  // universal-property falsifier family
};

Corpus default_corpus(Kit& kit);

/// Corpus loaded from a directory of .cat files; functors are enumerated
/// among the categories whose arrow count stays within the bound.
Corpus load_corpus(Kit& kit, const std::string& dir, int max_arrows = 9);

/// All homotopies between the given pair, capped deterministically.
std::vector<Homotopy> homotopies_between(Kit& kit, CatPtr a, CatPtr b, size_t cap);

/// The corpus homotopy family: homotopies between base pairs, capped per
/// pair, always including the identity homotopies.
std::vector<Homotopy> corpus_homotopies(Kit& kit, const Corpus& corpus, size_t cap_per_pair);

}  // namespace folk

#endif
