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

// Dense matrices over a scalar semiring, typed by tensor powers of a single
// generating object.
//
// Index convention: in a tensor product the left factor is the most
// significant digit. For an object with n legs of base dimension d, basis
// index i has digits (i_0, ..., i_{n-1}) with i = sum_k i_k d^(n-1-k).

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "phaselab/scalars.hpp"

namespace phaselab {

class TypeMismatch : public std::invalid_argument {
 public:
  explicit TypeMismatch(const std::string& message) : std::invalid_argument(message) {}
};

/// The object Q^{(x) power}; power 0 is the monoidal unit I.
struct TheoryObject {
  unsigned power = 0;
  unsigned base_dim = 2;

  std::size_t dim() const {
    std::size_t d = 1;
    for (unsigned i = 0; i < power; ++i) d *= base_dim;
    return d;
  }
  TheoryObject tensor(const TheoryObject& other) const {
    if (other.base_dim != base_dim) throw TypeMismatch("tensor of objects with different base dimensions");
    return {power + other.power, base_dim};
  }
  static TheoryObject unit(unsigned base_dim) { return {0, base_dim}; }
  std::string str() const { return "Q^" + std::to_string(power) + "(d=" + std::to_string(base_dim) + ")"; }

  friend bool operator==(const TheoryObject&, const TheoryObject&) = default;
};

template <Scalar S>
class Morphism {
 public:
  Morphism() : Morphism(TheoryObject{}, TheoryObject{}) {}

  /// Zero morphism dom -> cod.
  Morphism(TheoryObject dom, TheoryObject cod)
      : dom_(dom), cod_(cod), entries_(dom.dim() * cod.dim(), S::zero()) {
    if (dom.base_dim != cod.base_dim) throw TypeMismatch("dom and cod have different base dimensions");
  }

  /// Row-major entries, dim(cod) rows by dim(dom) columns.
  Morphism(TheoryObject dom, TheoryObject cod, std::vector<S> entries)
      : dom_(dom), cod_(cod), entries_(std::move(entries)) {
    if (dom.base_dim != cod.base_dim) throw TypeMismatch("dom and cod have different base dimensions");
    if (entries_.size() != dom.dim() * cod.dim()) {
      throw TypeMismatch("entry count " + std::to_string(entries_.size()) + " does not match " +
                         cod.str() + " x " + dom.str());
    }
  }

  static Morphism identity(TheoryObject obj) {
    Morphism m(obj, obj);
    for (std::size_t i = 0; i < obj.dim(); ++i) m(i, i) = S::one();
    return m;
  }

  static Morphism scalar(unsigned base_dim, S value) {
    return Morphism(TheoryObject::unit(base_dim), TheoryObject::unit(base_dim), {std::move(value)});
  }

  static Morphism state(TheoryObject obj, std::vector<S> amplitudes) {
    return Morphism(TheoryObject::unit(obj.base_dim), obj, std::move(amplitudes));
  }

  /// The computational basis state |index> on obj.
  static Morphism basis_state(TheoryObject obj, std::size_t index) {
    Morphism m(TheoryObject::unit(obj.base_dim), obj);
    m(index, 0) = S::one();
    return m;
  }

  /// Leg permutation on `legs` copies of the base object: output leg i carries
  /// input leg perm[i].
  static Morphism permutation(unsigned base_dim, std::span<const unsigned> perm) {
    const unsigned n = static_cast<unsigned>(perm.size());
    TheoryObject obj{n, base_dim};
    Morphism m(obj, obj);
    std::vector<unsigned> in_digits(n);
    for (std::size_t in = 0; in < obj.dim(); ++in) {
      std::size_t rest = in;
      for (unsigned k = n; k-- > 0;) {
        in_digits[k] = static_cast<unsigned>(rest % base_dim);
        rest /= base_dim;
      }
      std::size_t out = 0;
      for (unsigned k = 0; k < n; ++k) out = out * base_dim + in_digits[perm[k]];
      m(out, in) = S::one();
    }
    return m;
  }

  /// The symmetry sigma_{A,B} : A (x) B -> B (x) A.
  static Morphism swap(TheoryObject a, TheoryObject b) {
    if (a.base_dim != b.base_dim) throw TypeMismatch("swap of objects with different base dimensions");
    std::vector<unsigned> perm;
    for (unsigned i = 0; i < b.power; ++i) perm.push_back(a.power + i);
    for (unsigned i = 0; i < a.power; ++i) perm.push_back(i);
    return permutation(a.base_dim, perm);
  }

  const TheoryObject& dom() const { return dom_; }
  const TheoryObject& cod() const { return cod_; }
  std::size_t rows() const { return cod_.dim(); }
  std::size_t cols() const { return dom_.dim(); }
  bool is_state() const { return dom_.power == 0; }

  const S& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  S& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  std::span<const S> entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  Morphism scaled(const S& factor) const {
    Morphism m = *this;
    for (auto& e : m.entries_) e = e * factor;
    return m;
  }

  /// Index of the first nonzero entry in row-major order.
  std::optional<std::size_t> first_nonzero() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!entries_[i].is_zero()) return i;
    }
    return std::nullopt;
  }

  std::string str() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
      s += r == 0 ? "[" : " ";
      for (std::size_t c = 0; c < cols(); ++c) {
        s += (*this)(r, c).str();
        if (c + 1 < cols()) s += " ";
      }
      s += r + 1 == rows() ? "]" : "\n";
    }
    return s;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  TheoryObject dom_;
  TheoryObject cod_;
  std::vector<S> entries_;
};

/// g o f.
template <Scalar S>
Morphism<S> compose(const Morphism<S>& g, const Morphism<S>& f) {
  if (!(f.cod() == g.dom())) {
    throw TypeMismatch("compose: cod(f) = " + f.cod().str() + " but dom(g) = " + g.dom().str());
  }
  Morphism<S> out(f.dom(), g.cod());
  const std::size_t inner = f.rows();
  const std::size_t cols = f.cols();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const S& gik = g(i, k);
      if (gik.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        const S& fkj = f(k, j);
        if (fkj.is_zero()) continue;
        out(i, j) += gik * fkj;
      }
    }
  }
  return out;
}

/// Kronecker product f (x) g.
template <Scalar S>
Morphism<S> tensor(const Morphism<S>& f, const Morphism<S>& g) {
  Morphism<S> out(f.dom().tensor(g.dom()), f.cod().tensor(g.cod()));
  const std::size_t gr = g.rows();
  const std::size_t gc = g.cols();
  for (std::size_t fi = 0; fi < f.rows(); ++fi) {
    for (std::size_t fj = 0; fj < f.cols(); ++fj) {
      const S& a = f(fi, fj);
      if (a.is_zero()) continue;
      for (std::size_t gi = 0; gi < gr; ++gi) {
        for (std::size_t gj = 0; gj < gc; ++gj) {
          const S& b = g(gi, gj);
          if (b.is_zero()) continue;
          out(fi * gr + gi, fj * gc + gj) = a * b;
        }
      }
    }
  }
  return out;
}

template <Scalar S, class... Rest>
Morphism<S> tensor(const Morphism<S>& f, const Morphism<S>& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// Entry-wise sum f + g.
template <Scalar S>
Morphism<S> add(const Morphism<S>& f, const Morphism<S>& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw TypeMismatch("add: morphisms of different types");
  std::vector<S> e(f.entries().begin(), f.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = e[i] + g.entries()[i];
  return Morphism<S>(f.dom(), f.cod(), std::move(e));
}

/// Conjugate transpose.
template <Scalar S>
Morphism<S> dagger(const Morphism<S>& f) {
  Morphism<S> out(f.cod(), f.dom());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out(j, i) = f(i, j).dagger();
  }
  return out;
}

/// The scalar lambda with g = lambda * f, when one exists. Zero f is only
/// proportional to zero g (with lambda = 1).
template <Scalar S>
std::optional<S> proportionality(const Morphism<S>& f, const Morphism<S>& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw TypeMismatch("proportionality between morphisms of different types");
  }
  auto p = f.first_nonzero();
  if (!p) {
    if (g.is_zero()) return S::one();
    return std::nullopt;
  }
  auto lambda = g.entries()[*p].divide(f.entries()[*p]);
  if (!lambda || lambda->is_zero()) return std::nullopt;
  if (f.scaled(*lambda) == g) return lambda;
  return std::nullopt;
}

/// True iff g = u * f for a unit phase u. The candidate u is fixed by the first
/// nonzero entry of f in row-major order.
template <Scalar S>
bool equal_up_to_phase(const Morphism<S>& f, const Morphism<S>& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw TypeMismatch("equal_up_to_phase between morphisms of different types");
  }
  auto p = f.first_nonzero();
  if (!p) return g.is_zero();
  const S& fp = f.entries()[*p];
  const S& gp = g.entries()[*p];
  for (const S& u : S::unit_phases()) {
    if (u * fp == gp) return f.scaled(u) == g;
  }
  return false;
}

/// Representative of the phase class of f: the multiple u * f (u a unit phase)
/// whose first nonzero entry is largest in the scalar order.
template <Scalar S>
Morphism<S> phase_canonical(const Morphism<S>& f) {
  auto p = f.first_nonzero();
  if (!p) return f;
  const S& fp = f.entries()[*p];
  const S* best = nullptr;
  S best_value;
  for (const S& u : S::unit_phases()) {
    S v = u * fp;
    if (best == nullptr || best_value < v) {
      best = &u;
      best_value = v;
    }
  }
  return f.scaled(*best);
}

/// Deduplication key: exact entries of the phase-canonical representative.
template <Scalar S>
std::string phase_key(const Morphism<S>& f) {
  Morphism<S> c = phase_canonical(f);
  std::string key;
  for (const auto& e : c.entries()) {
    key += e.str();
    key += ';';
  }
  return key;
}

/// Applies a k-leg gate to the given legs of a state on n legs. Untouched legs
/// are left in place, and gate leg j acts on state leg wires[j].
template <Scalar S>
Morphism<S> apply_to_wires(const Morphism<S>& gate, const Morphism<S>& state, std::span<const unsigned> wires) {
  if (!state.is_state()) throw TypeMismatch("apply_to_wires expects a state");
  if (gate.dom().power != wires.size() || gate.cod().power != wires.size()) {
    throw TypeMismatch("apply_to_wires: gate arity does not match wire count");
  }
  const unsigned d = state.cod().base_dim;
  const unsigned n = state.cod().power;
  for (unsigned w : wires) {
    if (w >= n) throw TypeMismatch("apply_to_wires: wire index out of range");
  }
  std::vector<std::size_t> weight(n);
  {
    std::size_t w = 1;
    for (unsigned k = n; k-- > 0;) {
      weight[k] = w;
      w *= d;
    }
  }
  Morphism<S> out(state.dom(), state.cod());
  const std::size_t gdim = gate.rows();
  for (std::size_t idx = 0; idx < state.rows(); ++idx) {
    const S& amp = state(idx, 0);
    if (amp.is_zero()) continue;
    std::size_t sub_in = 0;
    std::size_t base = idx;
    for (unsigned w : wires) {
      std::size_t digit = (idx / weight[w]) % d;
      sub_in = sub_in * d + digit;
      base -= digit * weight[w];
    }
    for (std::size_t sub_out = 0; sub_out < gdim; ++sub_out) {
      const S& g = gate(sub_out, sub_in);
      if (g.is_zero()) continue;
      std::size_t target = base;
      std::size_t rest = sub_out;
      for (std::size_t j = wires.size(); j-- > 0;) {
        target += (rest % d) * weight[wires[j]];
        rest /= d;
      }
      out(target, 0) += g * amp;
    }
  }
  return out;
}

}  // namespace phaselab
