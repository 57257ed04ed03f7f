#include "taulab/text.hpp"

#include "taulab/error.hpp"

#include <cctype>

namespace taulab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  void finish() {
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_alpha() {
    skip_space();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s);
  }

  OrderExpr order() {
    const std::size_t start = (skip_space(), pos_);
    const std::string w = word();
    if (w == "Z") return OrderExpr::integers();
    if (w == "Q") return OrderExpr::rationals();
    if (w == "lex" || w == "sum") {
      expect('(');
      OrderExpr a = order();
      expect(',');
      OrderExpr b = order();
      expect(')');
      return w == "lex" ? OrderExpr::lex(a, b) : OrderExpr::sum(a, b);
    }
    if (w == "rev") {
      expect('(');
      OrderExpr a = order();
      expect(')');
      return OrderExpr::reverse(a);
    }
    pos_ = start;
    fail(w.empty() ? "expected an order" : "unknown order '" + w + "'");
  }

  Elem elem(const OrderExpr& o) {
    switch (o.kind()) {
      case OrderExpr::Kind::Z: return Elem::integer(integer());
      case OrderExpr::Kind::Q: {
        Integer p = integer();
        if (!accept('/')) return Elem::rational(Rational(p));
        const std::size_t at = pos_;
        Integer q = integer();
        if (q == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        return Elem::rational(make_rational(p, q));
      }
      case OrderExpr::Kind::Lex: {
        expect('(');
        Elem a = elem(o.major());
        expect(',');
        Elem b = elem(o.minor());
        expect(')');
        return Elem::pair(o, a, b);
      }
      case OrderExpr::Kind::Sum: {
        const std::size_t start = (skip_space(), pos_);
        const std::string w = word();
        if (w != "left" && w != "right") {
          pos_ = start;
          fail("expected left(...) or right(...)");
        }
        expect('(');
        Elem x = elem(w == "left" ? o.left() : o.right());
        expect(')');
        return w == "left" ? Elem::left(o, x) : Elem::right(o, x);
      }
      case OrderExpr::Kind::Reverse: return Elem::reversed(o, elem(o.inner()));
    }
    fail("unsupported order");
  }

  CutPoint cut(const OrderExpr& o) {
    const std::size_t start = (skip_space(), pos_);
    if (!peek_alpha() || o.is(OrderExpr::Kind::Sum)) {
      // Sum literals start with a word too; try the cut keywords first.
      if (o.is(OrderExpr::Kind::Sum)) {
        const std::string w = word();
        if (w == "seam") return CutPoint::seam(o);
        if (w == "inL") return wrapped_elem(o);
        pos_ = start;
      }
      return CutPoint::in_l(elem(o));
    }
    const std::string w = word();
    if (w == "inL") return wrapped_elem(o);
    if (w == "surd") {
      expect('(');
      Integer p = integer();
      expect(',');
      Integer q = integer();
      expect(',');
      Integer r = integer();
      expect(',');
      Integer s = integer();
      expect(')');
      try {
        return CutPoint::gap(o, Surd(p, q, r, s));
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (w == "topOfCopy") {
      if (!o.is(OrderExpr::Kind::Lex)) {
        pos_ = start;
        fail("topOfCopy needs a lex order");
      }
      expect('(');
      Elem j = elem(o.minor());
      expect(')');
      try {
        return CutPoint::top_of_copy(o, j);
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (w == "seam") {
      pos_ = start;
      fail("seam needs a sum order");
    }
    pos_ = start;
    fail("unknown cut '" + w + "'");
  }

 private:
  CutPoint wrapped_elem(const OrderExpr& o) {
    expect('(');
    Elem x = elem(o);
    expect(')');
    return CutPoint::in_l(x);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OrderExpr parse_order(std::string_view text) {
  Parser p(text);
  OrderExpr o = p.order();
  p.finish();
  return o;
}

Elem parse_elem(const OrderExpr& order, std::string_view text) {
  Parser p(text);
  Elem x = p.elem(order);
  p.finish();
  return x;
}

CutPoint parse_cut(const OrderExpr& order, std::string_view text) {
  Parser p(text);
  CutPoint c = p.cut(order);
  p.finish();
  return c;
}

}  // namespace taulab
