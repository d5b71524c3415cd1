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

#include "phaselab/diagram.hpp"

#include <numeric>
#include <vector>

namespace phaselab {

DiagramTerm DiagramTerm::id(unsigned wires) { return DiagramTerm(Kind::Id, wires, wires); }
DiagramTerm DiagramTerm::swap() { return DiagramTerm(Kind::Swap, 2, 2); }
DiagramTerm DiagramTerm::delta() { return DiagramTerm(Kind::Delta, 1, 2); }
DiagramTerm DiagramTerm::epsilon() { return DiagramTerm(Kind::Epsilon, 1, 0); }
DiagramTerm DiagramTerm::delta_dag() { return DiagramTerm(Kind::DeltaDag, 2, 1); }
DiagramTerm DiagramTerm::epsilon_dag() { return DiagramTerm(Kind::EpsilonDag, 0, 1); }

DiagramTerm DiagramTerm::gen(std::string name, unsigned inputs, unsigned outputs) {
  DiagramTerm t(Kind::Gen, inputs, outputs);
  t.name_ = std::move(name);
  return t;
}

DiagramTerm DiagramTerm::compose(DiagramTerm second, DiagramTerm first) {
  DiagramTerm t(Kind::Compose, first.in_, second.out_);
  t.lhs_ = std::make_shared<const DiagramTerm>(std::move(second));
  t.rhs_ = std::make_shared<const DiagramTerm>(std::move(first));
  return t;
}

DiagramTerm DiagramTerm::tensor(DiagramTerm left, DiagramTerm right) {
  DiagramTerm t(Kind::Tensor, left.in_ + right.in_, left.out_ + right.out_);
  t.lhs_ = std::make_shared<const DiagramTerm>(std::move(left));
  t.rhs_ = std::make_shared<const DiagramTerm>(std::move(right));
  return t;
}

std::pair<unsigned, unsigned> DiagramTerm::arity() const {
  switch (kind_) {
    case Kind::Compose: {
      auto [sin, sout] = lhs_->arity();
      auto [fin, fout] = rhs_->arity();
      if (fout != sin) {
        throw TypeMismatch("Compose node: first term has " + std::to_string(fout) +
                           " outputs, second expects " + std::to_string(sin));
      }
      return {fin, sout};
    }
    case Kind::Tensor: {
      auto [lin, lout] = lhs_->arity();
      auto [rin, rout] = rhs_->arity();
      return {lin + rin, lout + rout};
    }
    default:
      return {in_, out_};
  }
}

unsigned DiagramTerm::generator_count() const {
  switch (kind_) {
    case Kind::Compose:
    case Kind::Tensor:
      return lhs_->generator_count() + rhs_->generator_count();
    case Kind::Id:
    case Kind::Swap:
      return 0;
    default:
      return 1;
  }
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  std::size_t make() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Threads wire ids through the term; returns the ids of the output wires.
std::vector<std::size_t> wire_up(const DiagramTerm& t, UnionFind& uf, std::vector<std::size_t> in) {
  using K = DiagramTerm::Kind;
  switch (t.kind()) {
    case K::Id:
      return in;
    case K::Swap:
      return {in[1], in[0]};
    case K::Delta: {
      std::size_t a = uf.make();
      std::size_t b = uf.make();
      uf.unite(a, in[0]);
      uf.unite(b, in[0]);
      return {a, b};
    }
    case K::DeltaDag: {
      std::size_t o = uf.make();
      uf.unite(in[0], o);
      uf.unite(in[1], o);
      return {o};
    }
    case K::Epsilon:
      return {};
    case K::EpsilonDag:
      return {uf.make()};
    case K::Gen: {
      auto [gin, gout] = t.arity();
      std::size_t node = uf.make();
      for (auto w : in) uf.unite(w, node);
      std::vector<std::size_t> out;
      for (unsigned i = 0; i < gout; ++i) {
        out.push_back(uf.make());
        uf.unite(out.back(), node);
      }
      return out;
    }
    case K::Compose: {
      auto mid = wire_up(t.rhs(), uf, std::move(in));
      return wire_up(t.lhs(), uf, std::move(mid));
    }
    case K::Tensor: {
      unsigned left_in = t.lhs().arity().first;
      std::vector<std::size_t> a(in.begin(), in.begin() + left_in);
      std::vector<std::size_t> b(in.begin() + left_in, in.end());
      auto oa = wire_up(t.lhs(), uf, std::move(a));
      auto ob = wire_up(t.rhs(), uf, std::move(b));
      oa.insert(oa.end(), ob.begin(), ob.end());
      return oa;
    }
  }
  return {};
}

}  // namespace

bool DiagramTerm::is_connected() const {
  auto [inputs, outputs] = arity();
  UnionFind uf;
  std::vector<std::size_t> in;
  for (unsigned i = 0; i < inputs; ++i) in.push_back(uf.make());
  wire_up(*this, uf, std::move(in));
  if (uf.parent.empty()) return false;
  std::size_t root = uf.find(0);
  for (std::size_t i = 1; i < uf.parent.size(); ++i) {
    if (uf.find(i) != root) return false;
  }
  return true;
}

std::string DiagramTerm::str() const {
  switch (kind_) {
    case Kind::Id:
      return "id" + std::to_string(in_);
    case Kind::Swap:
      return "swap";
    case Kind::Delta:
      return "delta";
    case Kind::Epsilon:
      return "eps";
    case Kind::DeltaDag:
      return "delta+";
    case Kind::EpsilonDag:
      return "eps+";
    case Kind::Gen:
      return name_;
    case Kind::Compose:
      return "(" + lhs_->str() + " . " + rhs_->str() + ")";
    case Kind::Tensor:
      return "(" + lhs_->str() + " x " + rhs_->str() + ")";
  }
  return "?";
}

template <Scalar S>
Morphism<S> evaluate(const DiagramTerm& term, const DiagramModel<S>& model) {
  using K = DiagramTerm::Kind;
  const TheoryObject x = model.wire;
  auto wires = [&](unsigned n) { return TheoryObject{x.power * n, x.base_dim}; };
  switch (term.kind()) {
    case K::Id:
      return Morphism<S>::identity(wires(term.arity().first));
    case K::Swap:
      return Morphism<S>::swap(x, x);
    case K::Delta:
      return model.delta;
    case K::Epsilon:
      return model.epsilon;
    case K::DeltaDag:
      return dagger(model.delta);
    case K::EpsilonDag:
      return dagger(model.epsilon);
    case K::Gen: {
      auto it = model.generators.find(term.name());
      if (it == model.generators.end()) throw TypeMismatch("unknown generator '" + term.name() + "'");
      auto [in, out] = term.arity();
      if (!(it->second.dom() == wires(in)) || !(it->second.cod() == wires(out))) {
        throw TypeMismatch("generator '" + term.name() + "' has the wrong type");
      }
      return it->second;
    }
    case K::Compose:
      term.arity();
      return compose(evaluate(term.lhs(), model), evaluate(term.rhs(), model));
    case K::Tensor:
      return tensor(evaluate(term.lhs(), model), evaluate(term.rhs(), model));
  }
  throw TypeMismatch("unknown term kind");
}

template Morphism<CycloScalar> evaluate(const DiagramTerm&, const DiagramModel<CycloScalar>&);
template Morphism<BoolScalar> evaluate(const DiagramTerm&, const DiagramModel<BoolScalar>&);

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

// Places `g` (arity gin -> gout) at wire offset `pos` inside a layer of `w` wires.
DiagramTerm layer(DiagramTerm g, unsigned pos, unsigned gin, unsigned w) {
  DiagramTerm t = DiagramTerm::tensor(DiagramTerm::id(pos), std::move(g));
  return DiagramTerm::tensor(std::move(t), DiagramTerm::id(w - pos - gin));
}

}  // namespace

std::optional<DiagramTerm> random_spider_diagram(unsigned inputs, unsigned outputs, std::mt19937_64& rng,
                                                 const RandomDiagramOptions& options) {
  enum Move { kDelta, kDeltaDag, kEps, kEpsDag, kSwap };
  unsigned w = inputs;
  unsigned nodes = 0;
  DiagramTerm term = DiagramTerm::id(inputs);
  auto push = [&](Move move, unsigned pos) {
    switch (move) {
      case kDelta:
        term = DiagramTerm::compose(layer(DiagramTerm::delta(), pos, 1, w), std::move(term));
        ++w;
        ++nodes;
        break;
      case kDeltaDag:
        term = DiagramTerm::compose(layer(DiagramTerm::delta_dag(), pos, 2, w), std::move(term));
        --w;
        ++nodes;
        break;
      case kEps:
        term = DiagramTerm::compose(layer(DiagramTerm::epsilon(), pos, 1, w), std::move(term));
        --w;
        ++nodes;
        break;
      case kEpsDag:
        term = DiagramTerm::compose(layer(DiagramTerm::epsilon_dag(), pos, 0, w), std::move(term));
        ++w;
        ++nodes;
        break;
      case kSwap:
        term = DiagramTerm::compose(layer(DiagramTerm::swap(), pos, 2, w), std::move(term));
        break;
    }
  };

  const std::size_t free_steps = draw(rng, options.max_generators + 1);
  for (std::size_t step = 0; step < free_steps; ++step) {
    std::vector<Move> moves;
    if (w >= 1 && w + 1 <= options.max_wires) moves.push_back(kDelta);
    if (w >= 2) moves.push_back(kDeltaDag);
    if (w >= 1) moves.push_back(kEps);
    if (w + 1 <= options.max_wires) moves.push_back(kEpsDag);
    if (w >= 2) moves.push_back(kSwap);
    Move m = moves[draw(rng, moves.size())];
    switch (m) {
      case kDelta:
      case kEps:
        push(m, static_cast<unsigned>(draw(rng, w)));
        break;
      case kDeltaDag:
      case kSwap:
        push(m, static_cast<unsigned>(draw(rng, w - 1)));
        break;
      case kEpsDag:
        push(m, static_cast<unsigned>(draw(rng, w + 1)));
        break;
    }
  }
  // Steer the wire count to the requested boundary.
  while (w > outputs) {
    if (w >= 2) {
      push(kDeltaDag, static_cast<unsigned>(draw(rng, w - 1)));
    } else {
      push(kEps, 0);
    }
  }
  while (w < outputs) {
    if (w == 0) {
      push(kEpsDag, 0);
    } else {
      push(kDelta, static_cast<unsigned>(draw(rng, w)));
    }
  }
  if (nodes > options.max_generators) return std::nullopt;
  if (!term.is_connected()) return std::nullopt;
  return term;
}

}  // namespace phaselab
