// Copyright 2026 The PhaseLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "phaselab/morphism.hpp"

namespace phaselab {

/// Syntax tree of a string diagram. Wires all carry the same object X, so a
/// term's type is a pair (inputs, outputs) of wire counts.
class DiagramTerm {
 public:
  enum class Kind { Id, Swap, Delta, Epsilon, DeltaDag, EpsilonDag, Gen, Compose, Tensor };

  static DiagramTerm id(unsigned wires);
  static DiagramTerm swap();
  static DiagramTerm delta();
  static DiagramTerm epsilon();
  static DiagramTerm delta_dag();
  static DiagramTerm epsilon_dag();
  static DiagramTerm gen(std::string name, unsigned inputs, unsigned outputs);
  /// second o first.
  static DiagramTerm compose(DiagramTerm second, DiagramTerm first);
  static DiagramTerm tensor(DiagramTerm left, DiagramTerm right);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const DiagramTerm& lhs() const { return *lhs_; }
  const DiagramTerm& rhs() const { return *rhs_; }

  /// (inputs, outputs). Throws TypeMismatch for an ill-typed Compose.
  std::pair<unsigned, unsigned> arity() const;

  /// Number of delta / epsilon / dagger / Gen nodes.
  unsigned generator_count() const;

  /// Every wire and node lies in one connected component of the wiring graph.
  /// The empty diagram is not connected.
  bool is_connected() const;

  std::string str() const;

 private:
  DiagramTerm(Kind kind, unsigned in, unsigned out) : kind_(kind), in_(in), out_(out) {}

  Kind kind_;
  unsigned in_ = 0;
  unsigned out_ = 0;
  std::string name_;
  std::shared_ptr<const DiagramTerm> lhs_;
  std::shared_ptr<const DiagramTerm> rhs_;
};

/// Interpretation of the diagram generators in a concrete theory.
template <Scalar S>
struct DiagramModel {
  TheoryObject wire;
  Morphism<S> delta;
  Morphism<S> epsilon;
  std::map<std::string, Morphism<S>> generators;
};

/// Matrix denotation of a term. Compositional; throws TypeMismatch on
/// ill-typed terms or unknown generator names.
template <Scalar S>
Morphism<S> evaluate(const DiagramTerm& term, const DiagramModel<S>& model);

struct RandomDiagramOptions {
  unsigned max_generators = 8;
  unsigned max_wires = 4;
};

/// Draws a random term with boundary (inputs, outputs) built from delta,
/// epsilon, their daggers and swaps. Returns nullopt when the draw is rejected
/// (disconnected, or too many generator nodes); callers redraw.
std::optional<DiagramTerm> random_spider_diagram(unsigned inputs, unsigned outputs, std::mt19937_64& rng,
                                                 const RandomDiagramOptions& options = {});

extern template Morphism<CycloScalar> evaluate(const DiagramTerm&, const DiagramModel<CycloScalar>&);
extern template Morphism<BoolScalar> evaluate(const DiagramTerm&, const DiagramModel<BoolScalar>&);

}  // namespace phaselab
