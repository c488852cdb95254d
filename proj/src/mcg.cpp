#include "steincalc/mcg.hpp"

#include <cctype>
#include <sstream>

namespace steincalc {

IntMatrix intersection_form(const SurfaceSpec& s) {
  IntMatrix j(s.h1_rank(), s.h1_rank());
  for (int i = 0; i < s.genus; ++i) {
    const auto a = static_cast<std::size_t>(2 * i), b = a + 1;
    j(b, a) = 1;
    j(a, b) = -1;
  }
  return j;
}

long TwistWord::letter_count() const {
  long n = 0;
  for (const auto& l : letters) n += l.exponent;
  return n;
}

namespace {

IntMatrix column(const std::vector<long>& v) {
  IntMatrix c(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
  return c;
}

IntMatrix rank_one_part(const Curve& c, const SurfaceSpec& s) {
  if (c.homology.size() != s.h1_rank())
    throw Error("transvection: curve '" + c.name + "' has " + std::to_string(c.homology.size()) +
                " coordinates, surface H_1 has rank " + std::to_string(s.h1_rank()));
  const IntMatrix cv = column(c.homology);
  // x + <x,c> c = x + c (c^T J^T x)
  return cv * (cv.transpose() * intersection_form(s).transpose());
}

}  // namespace

IntMatrix transvection(const Curve& c, const SurfaceSpec& s) {
  return IntMatrix::identity(s.h1_rank()) + rank_one_part(c, s);
}

IntMatrix transvection_inverse(const Curve& c, const SurfaceSpec& s) {
  return IntMatrix::identity(s.h1_rank()) - rank_one_part(c, s);
}

IntMatrix word_action(const TwistWord& w) {
  IntMatrix m = IntMatrix::identity(w.surface.h1_rank());
  for (const auto& l : w.letters) {
    auto it = w.curves.find(l.curve);
    if (it == w.curves.end()) throw Error("word_action: unresolved curve '" + l.curve + "'");
    const IntMatrix t = l.exponent >= 0 ? transvection(it->second, w.surface)
                                        : transvection_inverse(it->second, w.surface);
    const long reps = l.exponent >= 0 ? l.exponent : -l.exponent;
    for (long k = 0; k < reps; ++k) m = t * m;
  }
  return m;
}

namespace {

class WordParser {
 public:
  explicit WordParser(const std::string& s) : s_(s) {}

  std::vector<Letter> parse() {
    auto out = sequence();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  std::vector<Letter> sequence() {
    std::vector<Letter> out;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ')') return out;
      std::vector<Letter> atom;
      if (s_[pos_] == '(') {
        ++pos_;
        atom = sequence();
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else {
        atom.push_back({identifier(), 1});
      }
      const long e = exponent();
      if (atom.size() == 1) {
        atom.front().exponent *= e;
        out.push_back(atom.front());
        continue;
      }
      // (w)^e for a group: repeat, or repeat the inverse word for e < 0.
      std::vector<Letter> unit = atom;
      if (e < 0) {
        unit.assign(atom.rbegin(), atom.rend());
        for (auto& l : unit) l.exponent = -l.exponent;
      }
      for (long k = 0; k < (e < 0 ? -e : e); ++k) out.insert(out.end(), unit.begin(), unit.end());
    }
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected curve name");
    return s_.substr(start, pos_ - start);
  }

  long exponent() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent after '^'");
    const long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error("word parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Letter> parse_word(const std::string& text) { return WordParser(text).parse(); }

std::string format_word(const std::vector<Letter>& letters) {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i].curve;
    if (letters[i].exponent != 1) os << '^' << letters[i].exponent;
  }
  return os.str();
}

std::map<std::string, Curve> hyperelliptic_chain(int genus) {
  if (genus < 1) throw Error("hyperelliptic chain: genus must be >= 1");
  const SurfaceSpec s{genus, 0};
  const std::size_t n = s.h1_rank();
  auto a = [](int i) { return static_cast<std::size_t>(2 * (i - 1)); };
  auto b = [](int i) { return static_cast<std::size_t>(2 * (i - 1) + 1); };

  std::map<std::string, Curve> chain;
  auto add = [&](int idx, std::vector<long> v) {
    const std::string name = "c" + std::to_string(idx);
    chain[name] = Curve{name, std::move(v), true};
  };
  std::vector<long> v(n, 0);
  v[a(1)] = 1;
  add(1, v);
  for (int i = 1; i <= genus; ++i) {
    std::vector<long> bi(n, 0);
    bi[b(i)] = 1;
    add(2 * i, bi);
    std::vector<long> odd(n, 0);
    if (i < genus) {
      odd[a(i + 1)] = 1;
      odd[a(i)] = -1;
    } else {
      odd[a(genus)] = 1;
    }
    add(2 * i + 1, odd);
  }
  return chain;
}

TwistWord hyperelliptic_half_word(int genus) {
  TwistWord w;
  w.surface = {genus, 0};
  w.curves = hyperelliptic_chain(genus);
  const int top = 2 * genus + 1;
  for (int i = 1; i < top; ++i) w.letters.push_back({"c" + std::to_string(i), 1});
  w.letters.push_back({"c" + std::to_string(top), 1});
  w.letters.push_back({"c" + std::to_string(top), 1});
  for (int i = top - 1; i >= 1; --i) w.letters.push_back({"c" + std::to_string(i), 1});
  return w;
}

TwistWord hyperelliptic_word(int genus) {
  TwistWord w = hyperelliptic_half_word(genus);
  const auto half = w.letters;
  w.letters.insert(w.letters.end(), half.begin(), half.end());
  return w;
}

TwistWord korkmaz_word(int m, std::optional<std::map<std::string, Curve>> curves) {
  if (m < 1) throw Error("korkmaz_word: m must be >= 1");
  const int g = 2 * m + 1;
  TwistWord w;
  w.surface = {g, 0};
  std::vector<Letter> half;
  for (int i = 0; i <= g; ++i) half.push_back({"b" + std::to_string(i), 1});
  half.push_back({"a", 1});
  half.push_back({"a", 1});
  half.push_back({"b", 1});
  half.push_back({"b", 1});
  w.letters = half;
  w.letters.insert(w.letters.end(), half.begin(), half.end());
  if (curves) w.curves = std::move(*curves);
  return w;
}

bool chain_consistent(const std::map<std::string, Curve>& chain, const SurfaceSpec& s) {
  const IntMatrix j = intersection_form(s);
  auto pairing = [&](const Curve& x, const Curve& y) {
    const IntMatrix r = column(x.homology).transpose() * j * column(y.homology);
    return r(0, 0);
  };
  const int n = static_cast<int>(chain.size());
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      const auto& x = chain.at("c" + std::to_string(i));
      const auto& y = chain.at("c" + std::to_string(k));
      const Integer p = pairing(x, y);
      if (k == i + 1 ? abs(p) != 1 : p != 0) return false;
    }
  return true;
}

long lf_euler_characteristic(long genus, long singular_fibers) {
  if (genus < 0 || singular_fibers < 0)
    throw Error("lf_euler_characteristic: genus and fibre count must be non-negative");
  return 4 - 4 * genus + singular_fibers;
}

namespace {

std::size_t class_length(int genus) {
  if (genus < 1) throw Error("H_2(X(g,1)) classes need g >= 1");
  return static_cast<std::size_t>(4 * genus + 6);
}

}  // namespace

HomologyClassX hyperplane_class(int genus) {
  HomologyClassX x{std::vector<long>(class_length(genus), 0)};
  x.coefficients[0] = 1;
  return x;
}

HomologyClassX exceptional_class(int genus, int i) {
  HomologyClassX x{std::vector<long>(class_length(genus), 0)};
  if (i < 1 || static_cast<std::size_t>(i) >= x.coefficients.size())
    throw Error("exceptional_class: index out of range");
  x.coefficients[static_cast<std::size_t>(i)] = 1;
  return x;
}

HomologyClassX operator+(const HomologyClassX& a, const HomologyClassX& b) {
  if (a.coefficients.size() != b.coefficients.size()) throw Error("homology class length mismatch");
  HomologyClassX c = a;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] += b.coefficients[i];
  return c;
}

HomologyClassX operator-(const HomologyClassX& a, const HomologyClassX& b) {
  if (a.coefficients.size() != b.coefficients.size()) throw Error("homology class length mismatch");
  HomologyClassX c = a;
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] -= b.coefficients[i];
  return c;
}

HomologyClassX fiber_class(int genus) {
  HomologyClassX f{std::vector<long>(class_length(genus), -1)};
  f.coefficients[0] = genus + 2;
  f.coefficients[1] = -genus;
  return f;
}

long pair(const HomologyClassX& x, const HomologyClassX& y) {
  if (x.coefficients.size() != y.coefficients.size() || x.coefficients.empty())
    throw Error("pair: length mismatch");
  long s = x.coefficients[0] * y.coefficients[0];
  for (std::size_t i = 1; i < x.coefficients.size(); ++i) s -= x.coefficients[i] * y.coefficients[i];
  return s;
}

long section_count(int genus) {
  if (genus < 1) throw Error("section_count: genus must be >= 1");
  return 4L * genus + 4;
}

}  // namespace steincalc
