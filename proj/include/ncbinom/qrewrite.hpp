#pragma once

// Normal ordering under xy = q*yx (+ h*y^2), and the q-combinatorics that
// appear as coefficients of (x+y)^n in that normal form.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "derivation.hpp"

namespace ncbinom {

/// The relation xy = q*yx, or xy = q*yx + h*y^2 when `h` is present.
class QRelation {
public:
  QRelation(const ContextPtr &ctx, const std::string &x, const std::string &y,
            std::string q, std::optional<std::string> h = std::nullopt)
      : ctx_(ctx), q_(std::move(q)), h_(std::move(h)) {
    auto xi = ctx->generator_index(x);
    auto yi = ctx->generator_index(y);
    if (!xi || !yi)
      throw ContextError("QRelation: unknown generator");
    if (*xi == *yi)
      throw ContextError("QRelation: x and y must differ");
    if (!ctx->has_parameter(q_) || (h_ && !ctx->has_parameter(*h_)))
      throw ContextError("QRelation: parameter not declared in context");
    x_ = GeneratorId{*xi};
    y_ = GeneratorId{*yi};
  }

  const ContextPtr &context() const { return ctx_; }
  GeneratorId x() const { return x_; }
  GeneratorId y() const { return y_; }
  const std::string &q() const { return q_; }
  const std::optional<std::string> &h() const { return h_; }

private:
  ContextPtr ctx_;
  GeneratorId x_;
  GeneratorId y_;
  std::string q_;
  std::optional<std::string> h_;
};

/// An element whose words all have the shape y^k x^m.
class NormalForm {
public:
  const FreeElement &element() const { return element_; }

  static bool is_normal_word(const Word &w, GeneratorId x) {
    bool seen_x = false;
    for (auto letter : w.letters()) {
      if (letter == x.index)
        seen_x = true;
      else if (seen_x)
        return false;
    }
    return true;
  }

private:
  explicit NormalForm(FreeElement e) : element_(std::move(e)) {}
  friend NormalForm normalize(const FreeElement &, const QRelation &);

  FreeElement element_;
};

/// Rewrites the leftmost xy in each word until none remain. Words are
/// processed in decreasing (x count, inversion count), which every rewrite
/// step strictly lowers, so each pending word is expanded exactly once with
/// its fully merged coefficient.
inline NormalForm normalize(const FreeElement &e, const QRelation &rel) {
  e.require_same_context(FreeElement::zero(rel.context()));
  const auto x = rel.x().index;
  const auto y = rel.y().index;
  for (auto letter : e.generators_used())
    if (letter != x && letter != y)
      throw ContextError("normalize: element uses generator '" +
                         e.context()->generator_name(letter) +
                         "' outside the relation");

  auto rank = [&](const Word &w) {
    std::size_t xs = 0, inversions = 0;
    for (auto letter : w.letters()) {
      if (letter == x)
        ++xs;
      else
        inversions += xs;
    }
    return std::make_pair(xs, inversions);
  };
  using Key = std::tuple<std::size_t, std::size_t, Word>;
  std::map<Key, CoefPoly, std::greater<>> pending;
  auto push = [&](Word w, const CoefPoly &c) {
    if (c.is_zero())
      return;
    auto [xs, inv] = rank(w);
    auto [it, inserted] = pending.try_emplace(Key{xs, inv, std::move(w)}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        pending.erase(it);
    }
  };
  for (const auto &[w, c] : e.terms())
    push(w, c);

  const CoefPoly q = CoefPoly::variable(rel.q());
  const std::optional<CoefPoly> h =
      rel.h() ? std::optional(CoefPoly::variable(*rel.h())) : std::nullopt;

  FreeElement out(e.context());
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word &w = std::get<2>(node.key());
    const CoefPoly &c = node.mapped();
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i] == x && w[i + 1] == y))
      ++i;
    if (i + 1 >= w.size()) {
      out.add_term(w, c);
      continue;
    }
    std::vector<std::uint32_t> swapped = w.letters();
    std::swap(swapped[i], swapped[i + 1]);
    push(Word(swapped), q * c);
    if (h) {
      std::vector<std::uint32_t> squared = w.letters();
      squared[i] = y;
      push(Word(std::move(squared)), *h * c);
    }
  }
  return NormalForm(std::move(out));
}

/// (q;q)_k = prod_{i=0}^{k-1} (1 - q^{i+1}).
inline CoefPoly q_pochhammer(unsigned k, const std::string &q = "q") {
  CoefPoly r(1);
  for (unsigned i = 0; i < k; ++i)
    r *= CoefPoly(1) - CoefPoly::variable(q, i + 1);
  return r;
}

/// Gaussian binomial [n choose k]_q by the q-Pascal recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k]; zero outside 0 <= k <= n.
inline CoefPoly gaussian_binomial(unsigned n, long k,
                                  const std::string &q = "q") {
  if (k < 0 || k > static_cast<long>(n))
    return CoefPoly{};
  std::vector<CoefPoly> row{CoefPoly(1)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<CoefPoly> next(m + 1);
    next[0] = CoefPoly(1);
    next[m] = CoefPoly(1);
    for (unsigned j = 1; j < m; ++j)
      next[j] = row[j - 1] + CoefPoly::variable(q, j) * row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// [j]_q = 1 + q + ... + q^{j-1}; [0]_q = 0.
inline CoefPoly q_bracket(unsigned j, const std::string &q = "q") {
  CoefPoly r;
  for (unsigned i = 0; i < j; ++i)
    r += CoefPoly::variable(q, i);
  return r;
}

/// [n choose k]_q * prod_{j=0}^{k-1} (1 + [j]_q h).
inline CoefPoly benaoum_coefficient(unsigned n, long k,
                                    const std::string &q = "q",
                                    const std::string &h = "h") {
  CoefPoly r = gaussian_binomial(n, k, q);
  if (r.is_zero())
    return r;
  for (long j = 0; j < k; ++j)
    r *= CoefPoly(1) + q_bracket(static_cast<unsigned>(j), q) *
                           CoefPoly::variable(h);
  return r;
}

/// Context with generators x, y and parameters q, h used by the q-suites.
inline ContextPtr q_context() { return AlgebraContext::make({"x", "y"}, {"q", "h"}); }

/// Coefficient of y^k x^{n-k} in the normal form of (x+y)^n against the
/// closed-form coefficients.
inline IdentityReport verify_q_binomial(unsigned n, bool with_h) {
  auto ctx = q_context();
  QRelation rel(ctx, "x", "y", "q",
                with_h ? std::optional<std::string>("h") : std::nullopt);
  FreeElement x = FreeElement::generator(ctx, "x");
  FreeElement y = FreeElement::generator(ctx, "y");
  FreeElement lhs = normalize(power(x + y, n), rel).element();
  FreeElement rhs(ctx);
  for (unsigned k = 0; k <= n; ++k) {
    CoefPoly c = with_h ? benaoum_coefficient(n, k) : gaussian_binomial(n, k);
    rhs += (power(y, k) * power(x, n - k)).scaled(c);
  }
  return IdentityReport(with_h ? "qh-binomial" : "q-binomial",
                        static_cast<int>(n),
                        {{"relation", with_h ? "x*y = q*y*x + h*y^2"
                                             : "x*y = q*y*x"}},
                        std::move(lhs), std::move(rhs));
}

} // namespace ncbinom
