#include "f3sum/lemmas.hpp"

#include <string>

#include "f3sum/series.hpp"

namespace f3sum {

namespace {

Number divide_checked(const Number& num, const Number& den, const char* what) {
  if (den.is_zero()) throw DenominatorPole(std::string(what) + ": denominator vanishes");
  return num / den;
}

Number integer_like(long long v, const Number& like) { return Number::integer(v, like.backend()); }

Number half(const Number& x) { return x / integer_like(2, x); }

void require_arity(LemmaId id, std::span<const Number> params) {
  if (params.size() != lemma_arity(id)) {
    throw DomainError(std::string(lemma_name(id)) + " expects " + std::to_string(lemma_arity(id)) +
                      " parameters, got " + std::to_string(params.size()));
  }
}

}  // namespace

Number binomial_1f0(const Number& a, const Number& t) {
  Number one = Number::one(t.backend());
  if (t == one) throw PoleAtOne("(1-t)^{-a} evaluated at t = 1");
  return power(one - t, -a);
}

Number vandermonde_2f1(std::size_t n, const Number& a, const Number& c) {
  return divide_checked(pochhammer(c - a, n), pochhammer(c, n), "vandermonde_2f1");
}

Number saalschutz_3f2(std::size_t n, const Number& a, const Number& b, const Number& c) {
  return divide_checked(pochhammer(c - a, n) * pochhammer(c - b, n),
                        pochhammer(c, n) * pochhammer(c - a - b, n), "saalschutz_3f2");
}

Number nearly_poised_3f2(std::size_t n, const Number& a, const Number& b) {
  const Number one = integer_like(1, a);
  const Number gap = b - a - one;  // b - a - 1
  if (n == 0) {
    // (b-a-1) (b-a)_{-1} with (x)_{-1} = 1/(x-1)
    divide_checked(gap, gap, "nearly_poised_3f2");
    return one;
  }
  const Number nn = integer_like(static_cast<long long>(n), a);
  return divide_checked((gap - nn) * pochhammer(b - a, n - 1), pochhammer(b, n),
                        "nearly_poised_3f2");
}

Number twob_balanced_3f2(std::size_t n, const Number& a, const Number& b) {
  const Number one = integer_like(1, a);
  const Number two_b = b + b;
  return divide_checked(
      pochhammer(a - two_b, n) * pochhammer(one + half(a) - b, n) * pochhammer(-b, n),
      pochhammer(one + a - b, n) * pochhammer(half(a) - b, n) * pochhammer(-two_b, n),
      "twob_balanced_3f2");
}

Number watson_4f3(std::size_t n, const Number& a, const Number& b) {
  const Number one = integer_like(1, a);
  const Number two_b = b + b;
  return divide_checked(pochhammer(a - two_b, n) * pochhammer(-b, n),
                        pochhammer(one + a - b, n) * pochhammer(-two_b, n), "watson_4f3");
}

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::binomial_1f0: return "binomial_1f0";
    case LemmaId::vandermonde_2f1: return "vandermonde_2f1";
    case LemmaId::saalschutz_3f2: return "saalschutz_3f2";
    case LemmaId::nearly_poised_3f2: return "nearly_poised_3f2";
    case LemmaId::twob_balanced_3f2: return "twob_balanced_3f2";
    case LemmaId::watson_4f3: return "watson_4f3";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma(std::string_view name) {
  for (LemmaId id : kAllLemmas) {
    if (lemma_name(id) == name) return id;
  }
  return std::nullopt;
}

std::size_t lemma_arity(LemmaId id) {
  switch (id) {
    case LemmaId::binomial_1f0: return 1;
    case LemmaId::vandermonde_2f1: return 2;
    case LemmaId::saalschutz_3f2: return 3;
    default: return 2;
  }
}

PfqSeries lemma_series(LemmaId id, std::size_t n, std::span<const Number> params) {
  require_arity(id, params);
  const Number& a = params[0];
  const Number one = integer_like(1, a);
  const Number minus_n = integer_like(-static_cast<long long>(n), a);
  switch (id) {
    case LemmaId::binomial_1f0:
      return {{minus_n}, {}, a};
    case LemmaId::vandermonde_2f1:
      return {{minus_n, a}, {params[1]}, one};
    case LemmaId::saalschutz_3f2: {
      const Number& b = params[1];
      const Number& c = params[2];
      return {{minus_n, a, b}, {c, one + a + b - c + minus_n}, one};
    }
    case LemmaId::nearly_poised_3f2:
      return {{minus_n, a, one + half(a)}, {half(a), params[1]}, one};
    case LemmaId::twob_balanced_3f2: {
      const Number& b = params[1];
      return {{minus_n, a, b}, {one + a - b, one + b + b + minus_n}, one};
    }
    case LemmaId::watson_4f3: {
      const Number& b = params[1];
      return {{minus_n, a, one + half(a), b}, {half(a), one + a - b, one + b + b + minus_n}, one};
    }
  }
  throw DomainError("unknown lemma");
}

Number lemma_closed_form(LemmaId id, std::size_t n, std::span<const Number> params) {
  require_arity(id, params);
  switch (id) {
    case LemmaId::binomial_1f0:
      return binomial_1f0(integer_like(-static_cast<long long>(n), params[0]), params[0]);
    case LemmaId::vandermonde_2f1: return vandermonde_2f1(n, params[0], params[1]);
    case LemmaId::saalschutz_3f2: return saalschutz_3f2(n, params[0], params[1], params[2]);
    case LemmaId::nearly_poised_3f2: return nearly_poised_3f2(n, params[0], params[1]);
    case LemmaId::twob_balanced_3f2: return twob_balanced_3f2(n, params[0], params[1]);
    case LemmaId::watson_4f3: return watson_4f3(n, params[0], params[1]);
  }
  throw DomainError("unknown lemma");
}

}  // namespace f3sum
