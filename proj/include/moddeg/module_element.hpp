#pragma once

#include <algorithm>
#include <vector>

#include "moddeg/fields.hpp"
#include "moddeg/term_order.hpp"

namespace moddeg {

template <class F>
struct Term {
  typename F::Elem coeff;
  FMonomial mono;

  bool operator==(const Term&) const = default;
};

/// An element of F in canonical form: terms strictly descending under the
/// active order, no zero coefficients. Immutable after construction.
template <class F>
class ModuleElement {
 public:
  static ModuleElement make(const F& field, TermOrder order,
                            const RingContext& ring, FreeModuleShape shape,
                            std::vector<Term<F>> terms) {
    for (const auto& t : terms) {
      if (t.mono.mono.nvars() != ring.nvars)
        fail("ring-mismatch", "term has wrong variable count");
      if (t.mono.comp < 0 || t.mono.comp >= shape.rank())
        fail("shape-mismatch", "term component outside module rank");
    }
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) {
                return compare_terms(order, a.mono, b.mono, shape) > 0;
              });
    std::vector<Term<F>> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().mono == t.mono)
        merged.back().coeff = field.add(merged.back().coeff, t.coeff);
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged,
                  [&](const Term<F>& t) { return field.is_zero(t.coeff); });
    ModuleElement e;
    e.order_ = order;
    e.nvars_ = ring.nvars;
    e.shape_ = std::move(shape);
    e.terms_ = std::move(merged);
    return e;
  }

  static ModuleElement zero(const F& field, TermOrder order,
                            const RingContext& ring, FreeModuleShape shape) {
    return make(field, order, ring, std::move(shape), {});
  }

  TermOrder order() const { return order_; }
  int nvars() const { return nvars_; }
  const FreeModuleShape& shape() const { return shape_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term<F>& leading_term() const {
    if (terms_.empty())
      fail("zero-element", "the zero element has no leading term");
    return terms_.front();
  }

  /// Element without its leading term.
  ModuleElement tail() const {
    if (terms_.empty())
      fail("zero-element", "the zero element has no tail");
    ModuleElement e(*this);
    e.terms_.erase(e.terms_.begin());
    return e;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long long d = terms_.front().mono.degree(shape_);
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term<F>& t) {
      return t.mono.degree(shape_) == d;
    });
  }

  bool compatible_with(const ModuleElement& o) const {
    return order_ == o.order_ && nvars_ == o.nvars_ && shape_ == o.shape_;
  }

  bool operator==(const ModuleElement& o) const {
    return order_ == o.order_ && nvars_ == o.nvars_ && shape_ == o.shape_ &&
           terms_ == o.terms_;
  }

  std::string str(const F& field, const RingContext& ring) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      std::string c = field.str(terms_[i].coeff);
      std::string m = terms_[i].mono.str(ring, shape_);
      if (m == "1" || (shape_.rank() > 1 && m.rfind("e", 0) == 0))
        s += c == "1" ? m : c + (m == "1" ? "" : "*" + m);
      else
        s += (c == "1" ? "" : c + "*") + m;
    }
    return s;
  }

 private:
  TermOrder order_ = TermOrder::RevlexModule;
  int nvars_ = 0;
  FreeModuleShape shape_{{0}};
  std::vector<Term<F>> terms_;
};

namespace detail {

template <class F>
void check_compatible(const ModuleElement<F>& a, const ModuleElement<F>& b) {
  if (a.order() != b.order())
    fail("order-mismatch", "elements carry different term orders");
  if (a.nvars() != b.nvars())
    fail("ring-mismatch", "elements live over different rings");
  if (!(a.shape() == b.shape()))
    fail("shape-mismatch", "elements live in different free modules");
}

}  // namespace detail

/// a + b; both elements must share ring, shape and order.
template <class F>
ModuleElement<F> add(const F& field, const ModuleElement<F>& a,
                     const ModuleElement<F>& b) {
  detail::check_compatible(a, b);
  std::vector<Term<F>> merged;
  merged.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[j];
    int c = compare_terms(a.order(), ta.mono, tb.mono, a.shape());
    if (c > 0) {
      merged.push_back(ta);
      ++i;
    } else if (c < 0) {
      merged.push_back(tb);
      ++j;
    } else {
      auto s = field.add(ta.coeff, tb.coeff);
      if (!field.is_zero(s)) merged.push_back({std::move(s), ta.mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms().size(); ++i) merged.push_back(a.terms()[i]);
  for (; j < b.terms().size(); ++j) merged.push_back(b.terms()[j]);
  RingContext ring;
  ring.nvars = a.nvars();
  return ModuleElement<F>::make(field, a.order(), ring, a.shape(),
                                std::move(merged));
}

template <class F>
ModuleElement<F> scale(const F& field, const ModuleElement<F>& a,
                       const typename F::Elem& c) {
  std::vector<Term<F>> terms;
  if (!field.is_zero(c)) {
    terms.reserve(a.terms().size());
    for (const auto& t : a.terms())
      terms.push_back({field.mul(t.coeff, c), t.mono});
  }
  RingContext ring;
  ring.nvars = a.nvars();
  return ModuleElement<F>::make(field, a.order(), ring, a.shape(),
                                std::move(terms));
}

template <class F>
ModuleElement<F> negate(const F& field, const ModuleElement<F>& a) {
  std::vector<Term<F>> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms()) terms.push_back({field.neg(t.coeff), t.mono});
  RingContext ring;
  ring.nvars = a.nvars();
  return ModuleElement<F>::make(field, a.order(), ring, a.shape(),
                                std::move(terms));
}

template <class F>
ModuleElement<F> sub(const F& field, const ModuleElement<F>& a,
                     const ModuleElement<F>& b) {
  return add(field, a, negate(field, b));
}

/// c * x^m * a.
template <class F>
ModuleElement<F> term_multiply(const F& field, const ModuleElement<F>& a,
                               const typename F::Elem& c, const Monomial& m) {
  std::vector<Term<F>> terms;
  if (!field.is_zero(c)) {
    terms.reserve(a.terms().size());
    for (const auto& t : a.terms())
      terms.push_back(
          {field.mul(t.coeff, c), {t.mono.mono.times(m), t.mono.comp}});
  }
  RingContext ring;
  ring.nvars = a.nvars();
  return ModuleElement<F>::make(field, a.order(), ring, a.shape(),
                                std::move(terms));
}

template <class F>
ModuleElement<F> monomial_multiply(const F& field, const ModuleElement<F>& a,
                                   const Monomial& m) {
  return term_multiply(field, a, field.one(), m);
}

}  // namespace moddeg
