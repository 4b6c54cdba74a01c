#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oppgeo/document.hpp"

namespace oppgeo {

// What the shipped fixture is expected to produce, as asserted by the test
// suite and reported by `corpus verify-all`. Opposition fixtures fill the
// edge and collapse fields; Nelson fixtures fill the inference fields.
struct FixtureExpectation {
  std::size_t confirmedEdges = 0;
  std::size_t refutedEdges = 0;
  std::size_t collapsedOrder = 0;
  std::size_t validInferences = 0;
  bool cube = false;
};

struct CorpusFixture {
  std::string name;
  std::string document;  // canonical schema v1 JSON text
  FixtureExpectation expected;
};

// The worked examples shipped with the library, in a fixed order:
// kantian / kantian-nelson (the analytic-or-a-posteriori dilemma as hexagon
// and as argument diagram), political / political-nelson (the inter-state
// anarchy dilemma), duty-value (a hexagon whose drawn contrariety fails and
// which collapses to a square), metaphysics (the eight-vertex trichotomy),
// and poincare (the seven-vertex form, where the third disjunct is rejected
// without its own factual premiss).
const std::vector<CorpusFixture>& corpus_fixtures();

std::vector<std::string> corpus_names();

// Throws Error for names not in the corpus.
const CorpusFixture& corpus_fixture(const std::string& name);

// Parses the named fixture's document.
DiagramDocument corpus_document(const std::string& name);

}  // namespace oppgeo
