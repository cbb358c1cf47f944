#include "superlab/parser.hpp"

#include <cctype>
#include <string>

#include "superlab/errors.hpp"

namespace superlab {

namespace {

constexpr unsigned kMaxLiteralExponent = 1000;

template <class F>
class Parser {
public:
  Parser(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  Polynomial<F> run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Polynomial<F> p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      if (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial<F> factor() {
    Polynomial<F> b = base();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = digits("exponent");
      if (e > kMaxLiteralExponent) throw ParseError("exponent too large", at);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial<F> base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = digits("integer");
      const F& k = ring_->field();
      if (accept('/')) {
        std::size_t at = pos_;
        mpz_class den = digits("denominator");
        try {
          return Polynomial<F>::constant(ring_, k.from_fraction(num, den));
        } catch (const InputError& e) {
          throw ParseError(e.what(), at);
        }
      }
      return Polynomial<F>::constant(ring_, k.from_integer(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial<F>::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
  return Parser<F>(text, ring).run();
}

template Polynomial<RationalField> parse_poly(std::string_view, const RingPtr<RationalField>&);
template Polynomial<PrimeField> parse_poly(std::string_view, const RingPtr<PrimeField>&);

}  // namespace superlab
