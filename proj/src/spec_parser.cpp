#include "cutgroups/spec_parser.hpp"

#include <cctype>
#include <limits>

#include "cutgroups/errors.hpp"

namespace cutgroups {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec_expr();
    skip_ws();
    if (pos_ != s_.size())
      fail({"end of input"});
    return spec;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg += (i ? " or " : "") + expected[i];
    msg += pos_ < s_.size() ? ", found '" + std::string(1, s_[pos_]) + "'" : ", found end of input";
    throw ParseError(pos_, std::move(expected), msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c))
      return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c))
      fail({std::string("'") + c + "'"});
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail({"number"});
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail({"number below 2^64"});
      }
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::int64_t signed_number() {
    const bool negative = accept('-');
    const std::size_t start = pos_;
    const std::uint64_t v = number();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      pos_ = start;
      fail({"number below 2^63"});
    }
    return negative ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  }

  std::vector<std::uint64_t> number_list() {
    std::vector<std::uint64_t> v{number()};
    while (accept(','))
      v.push_back(number());
    return v;
  }

  GroupSpec parse_spec_expr() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string id = identifier();
    if (id.empty())
      fail({"group name"});
    if (id == "perm")
      return parse_perm();
    if (id == "metacyclic") {
      expect('(');
      const std::uint64_t n = number();
      expect(',');
      const std::uint64_t t = number();
      expect(',');
      const std::uint64_t l = number();
      expect(',');
      const std::uint64_t r = number();
      expect(')');
      return make_metacyclic(n, t, l, r);
    }
    if (id == "abelian") {
      expect('(');
      auto inv = number_list();
      expect(')');
      return make_abelian(std::move(inv));
    }
    if (id == "abc")
      return parse_abc();
    if (id == "product") {
      expect('(');
      std::vector<GroupSpec> factors{parse_spec_expr()};
      while (accept(','))
        factors.push_back(parse_spec_expr());
      expect(')');
      return make_product(std::move(factors));
    }
    if (id == "sym" || id == "alt" || id == "Sym" || id == "Alt") {
      expect('(');
      const std::uint64_t n = number();
      expect(')');
      return make_named(std::string(id[0] == 's' || id[0] == 'S' ? "Sym(" : "Alt(") + std::to_string(n) + ")");
    }
    if (id == "G1" || id == "G2")
      return make_named(id);
    if ((id[0] == 'D' || id[0] == 'Q' || id[0] == 'C') && id.size() > 1 &&
        id.find_first_not_of("0123456789", 1) == std::string::npos) {
      if (id.size() > 19) {
        pos_ = start + 1;
        fail({"number below 2^64"});
      }
      if (id[0] == 'C')
        return make_abelian({std::stoull(id.substr(1))});
      return make_named(id);
    }
    pos_ = start;
    fail({"perm", "metacyclic", "abelian", "abc", "product", "sym", "alt", "G1", "G2", "D<k>", "Q<k>", "C<k>"});
  }

  GroupSpec parse_perm() {
    expect('(');
    PermutationSpec p;
    const std::uint64_t degree = number();
    if (degree == 0 || degree > 255)
      fail({"degree between 1 and 255"});
    p.degree = static_cast<std::uint32_t>(degree);
    if (accept(';')) {
      do {
        p.generators.push_back(parse_cycles(p.degree));
      } while (accept(','));
    }
    expect(')');
    return GroupSpec{std::move(p)};
  }

  std::vector<std::uint32_t> parse_cycles(std::uint32_t degree) {
    std::vector<std::uint32_t> img(degree);
    for (std::uint32_t i = 0; i < degree; ++i)
      img[i] = i;
    std::vector<bool> used(degree, false);
    if (!peek('('))
      fail({"'('"});
    while (accept('(')) {
      std::vector<std::uint32_t> cycle;
      while (!peek(')')) {
        const std::size_t at = (skip_ws(), pos_);
        const std::uint64_t point = number();
        if (point < 1 || point > degree || used[point - 1]) {
          pos_ = at;
          fail({"unused point between 1 and " + std::to_string(degree)});
        }
        used[point - 1] = true;
        cycle.push_back(static_cast<std::uint32_t>(point - 1));
        accept(',');
      }
      expect(')');
      for (std::size_t i = 0; i < cycle.size(); ++i)
        img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return img;
  }

  GroupSpec parse_abc() {
    expect('(');
    AbelianByCyclicSpec a;
    a.invariants = number_list();
    expect(';');
    do {
      expect('(');
      std::vector<std::int64_t> row{signed_number()};
      while (accept(','))
        row.push_back(signed_number());
      expect(')');
      a.action.push_back(std::move(row));
    } while (accept(','));
    expect(';');
    a.t = number();
    expect(')');
    return GroupSpec{std::move(a)};
  }
};

} // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse_all(); }

} // namespace cutgroups
