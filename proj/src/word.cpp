#include "hecke/word.hpp"

#include <cctype>
#include <charconv>

#include "hecke/errors.hpp"

namespace hecke {

bool letter_less(const Letter& a, const Letter& b) {
  if (a.is_iota() != b.is_iota()) return a.is_iota();
  if (a.is_iota()) return false;
  const int aa = a.k < 0 ? -a.k : a.k;
  const int bb = b.k < 0 ? -b.k : b.k;
  if (aa != bb) return aa < bb;
  return a.k > b.k;  // positive before negative at equal |k|
}

std::optional<int> normalize_exponent(long long k, const HeckeParams& params) {
  const long long p = params.p;
  long long m = k % p;
  if (m < 0) m += p;          // m in [0, p)
  if (m == 0) return std::nullopt;
  if (2 * m > p) m -= p;      // (-p/2, p/2]; for even p, +r is kept when 2m == p
  return static_cast<int>(m);
}

namespace {

// Pushes one letter onto a reduced prefix, restoring reducedness.
void push_reduced(std::vector<Letter>& out, const Letter& l, const HeckeParams& params) {
  if (l.is_iota()) {
    if (!out.empty() && out.back().is_iota()) {
      out.pop_back();  // iota * iota = 1
    } else {
      out.push_back(l);
    }
    return;
  }
  auto k = normalize_exponent(l.k, params);
  if (!k) return;
  if (!out.empty() && !out.back().is_iota()) {
    const long long merged = static_cast<long long>(out.back().k) + *k;
    out.pop_back();
    if (auto mk = normalize_exponent(merged, params)) out.push_back(Letter::gamma(*mk));
    return;
  }
  out.push_back(Letter::gamma(*k));
}

}  // namespace

Word Word::from_letters(std::span<const Letter> letters, const HeckeParams& params) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) push_reduced(out, l, params);
  return Word(std::move(out));
}

Word multiply(const Word& a, const Word& b, const HeckeParams& params) {
  std::vector<Letter> out = a.letters_;
  for (const Letter& l : b.letters_) push_reduced(out, l, params);
  return Word(std::move(out));
}

Word inverse(const Word& w, const HeckeParams& params) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    if (it->is_iota()) {
      out.push_back(Letter::iota());
    } else {
      out.push_back(Letter::gamma(*normalize_exponent(-static_cast<long long>(it->k), params)));
    }
  }
  return Word(std::move(out));
}

long long letter_weight(const Letter& l) {
  return l.is_iota() ? 1 : (l.k < 0 ? -l.k : l.k);
}

long long word_length(const Word& w) {
  long long total = 0;
  for (const Letter& l : w.letters()) total += letter_weight(l);
  return total;
}

Word parse_word(std::string_view text, const HeckeParams& params) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  bool saw_e = false;
  std::size_t terms = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view tok = text.substr(start, i - start);
    ++terms;
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    if (tok == "i") {
      letters.push_back(Letter::iota());
      continue;
    }
    if (tok.size() > 2 && tok[0] == 'g' && tok[1] == '^') {
      long long k = 0;
      const char* first = tok.data() + 2;
      const char* last = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last)
        throw ParseError("bad exponent in '" + std::string(tok) + "'", start);
      // exponent 0 mod p is legal input; it simply contributes nothing
      if (auto nk = normalize_exponent(k, params)) letters.push_back(Letter::gamma(*nk));
      continue;
    }
    throw ParseError("unexpected token '" + std::string(tok) + "'", start);
  }
  if (saw_e && terms != 1) throw ParseError("'e' must stand alone", 0);
  return Word::from_letters(letters, params);
}

std::string format_letters(std::span<const Letter> letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    if (l.is_iota()) {
      out += 'i';
    } else {
      out += "g^";
      out += std::to_string(l.k);
    }
  }
  return out;
}

std::string format_word(const Word& w) { return format_letters(w.letters()); }

}  // namespace hecke
