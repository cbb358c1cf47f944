#include "superlab/monomial_order.hpp"

#include "superlab/errors.hpp"

namespace superlab {

namespace {

// Reverse lex on [begin, end): the monomial with the smaller exponent in
// the last differing variable is larger.
Cmp revlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = a.partial_degree(begin, end), db = b.partial_degree(begin, end);
  if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  return revlex(a, b, begin, end);
}

}  // namespace

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<unsigned> weights) {
  for (unsigned w : weights)
    if (w == 0) throw InputError("weights must be positive");
  MonomialOrder o(Kind::WeightedGrevlex);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block_elimination(std::size_t block_size) {
  MonomialOrder o(Kind::BlockElimination);
  o.block_size_ = block_size;
  return o;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (b.size() != n) throw ContextMismatch("monomials have different variable counts");
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::LT : Cmp::GT;
      return Cmp::EQ;
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::WeightedGrevlex: {
      if (weights_.size() != n) throw ContextMismatch("weight vector length differs from variable count");
      unsigned long wa = 0, wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += static_cast<unsigned long>(weights_[i]) * a[i];
        wb += static_cast<unsigned long>(weights_[i]) * b[i];
      }
      if (wa != wb) return wa < wb ? Cmp::LT : Cmp::GT;
      return grevlex_range(a, b, 0, n);
    }
    case Kind::BlockElimination: {
      std::size_t k = block_size_ < n ? block_size_ : n;
      Cmp c = grevlex_range(a, b, 0, k);
      if (c != Cmp::EQ) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return Cmp::EQ;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::WeightedGrevlex: {
      std::string s = "wgrevlex(";
      for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + ")";
    }
    case Kind::BlockElimination:
      return "elim(" + std::to_string(block_size_) + ")";
  }
  return "?";
}

}  // namespace superlab
