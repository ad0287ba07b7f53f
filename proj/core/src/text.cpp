#include "oneone/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "oneone/error.hpp"

namespace oneone {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  std::size_t column() const { return pos_ + 1; }

  bool at_digit() const {
    return !done() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    std::string out;
    while (at_digit()) out += get();
    return out;
  }

  Integer signed_int() {
    skip_space();
    const std::size_t col = column();
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) neg = get() == '-';
    if (!at_digit()) throw ParseError("expected an integer exponent", col);
    Integer v(digits());
    return neg ? Integer(-v) : v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class Gen, class ReadLetter>
FreeWord<Gen> parse_word(std::string_view text, ReadLetter read_letter) {
  Scanner sc(text);
  sc.skip_space();
  if (!sc.done() && sc.peek() == '1') {
    sc.get();
    sc.skip_space();
    if (!sc.done()) throw ParseError("unexpected input after identity word", sc.column());
    return {};
  }
  std::vector<Syllable<Gen>> raw;
  while (true) {
    sc.skip_space();
    if (sc.done()) break;
    const std::size_t col = sc.column();
    const Gen g = read_letter(sc);
    Integer e = 1;
    sc.skip_space();
    if (!sc.done() && sc.peek() == '^') {
      sc.get();
      e = sc.signed_int();
    }
    if (e == 0) throw ParseError("zero exponent", col);
    // Merge here so that "a a^-1" parses to the identity rather than
    // depending on the reduction done by the word constructor.
    if (!raw.empty() && raw.back().gen == g)
      raw.back().exp += e;
    else
      raw.push_back({g, e});
  }
  return FreeWord<Gen>(std::span<const Syllable<Gen>>(raw));
}

template <class Gen>
std::string render(const FreeWord<Gen>& w, auto&& letter) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += letter(s.gen);
    if (s.exp != 1) out += "^" + s.exp.str();
  }
  return out;
}

}  // namespace

MCGWord parse_mcg(std::string_view text) {
  return parse_word<Twist>(text, [](Scanner& sc) {
    const std::size_t col = sc.column();
    switch (sc.get()) {
      case 'a': return Twist::Alpha;
      case 'b': return Twist::Beta;
      case 'g': return Twist::Gamma;
      default: throw ParseError("expected twist letter a, b or g", col);
    }
  });
}

Pi1Word parse_pi1(std::string_view text) {
  return parse_word<Loop>(text, [](Scanner& sc) {
    const std::size_t col = sc.column();
    switch (sc.get()) {
      case 'a': return Loop::AlphaBar;
      case 'b': return Loop::BetaBar;
      case 'g': return Loop::GammaBar;
      case 'A': return Loop::AlphaHat;
      default: throw ParseError("expected loop letter a, b, g or A", col);
    }
  });
}

CyclicWord parse_cyclic_word(std::string_view text) {
  return parse_word<std::int64_t>(text, [](Scanner& sc) {
    const std::size_t col = sc.column();
    if (sc.get() != 'x') throw ParseError("expected generator x<index>", col);
    if (!sc.at_digit()) throw ParseError("expected generator index", sc.column());
    const Integer idx(sc.digits());
    const auto v = to_int64(idx);
    if (!v || *v < 1) throw ParseError("generator index out of range", col);
    return *v;
  });
}

std::string to_string(const MCGWord& w) {
  return render(w, [](Twist t) { return std::string(1, symbol(t)); });
}

std::string to_string(const Pi1Word& w) {
  return render(w, [](Loop g) { return std::string(1, symbol(g)); });
}

std::string to_string(const CyclicWord& w) {
  return render(w, [](std::int64_t i) { return "x" + std::to_string(i); });
}

std::ostream& operator<<(std::ostream& os, const MCGWord& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const Pi1Word& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const CyclicWord& w) { return os << to_string(w); }

}  // namespace oneone
