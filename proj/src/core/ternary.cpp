#include "core/ternary.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace netconics {

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : s_(text) {}

  RatForm parse() {
    skip_space();
    if (at_end()) fail("empty form");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(sign);
      first = false;
      skip_space();
    }
    const int degree = degree_.value_or(0);
    return RatForm(degree, std::move(terms_));
  }

 private:
  void parse_term(int sign) {
    Rat coeff(sign);
    Exponent e{0, 0, 0};
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const int var = variable_index(c);
        ++pos_;
        int power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          power = parse_uint();
        }
        e[var] += power;
      } else {
        break;
      }
      any = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      if (at_end() || peek() == '+' || peek() == '-') break;
    }
    if (!any) fail("expected a term");
    const int d = e[0] + e[1] + e[2];
    if (degree_ && *degree_ != d) fail("form is not homogeneous");
    degree_ = d;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) it->second += coeff;
  }

  Rat parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string text(s_.substr(start, pos_ - start));
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("missing denominator");
      text += "/" + std::string(s_.substr(dstart, pos_ - dstart));
    }
    return Rat::parse(text);
  }

  int parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  int variable_index(char c) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int set = -1;
    int idx = -1;
    if (lower >= 'x' && lower <= 'z') { set = 0; idx = lower - 'x'; }
    if (lower >= 'a' && lower <= 'c') { set = 1; idx = lower - 'a'; }
    if (set < 0) fail(std::string("unknown variable '") + c + "'");
    if (var_set_ && *var_set_ != set) fail("mixed variable names");
    var_set_ = set;
    return idx;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kInvalidInput,
                "cannot parse form at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<int> degree_;
  std::optional<int> var_set_;
  RatForm::Terms terms_;
};

template <class R>
std::string render(const TernaryForm<R>& f, std::string_view vars) {
  if (vars.size() != 3) throw Error(ErrorCode::kInvalidInput, "need three variable names");
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<R, Rat>) {
      negative = c.sign() < 0;
      coeff = c.abs() == Rat(1) ? "" : c.abs().to_string();
    } else {
      coeff = c == R(1) ? "" : "(" + c.to_string() + ")";
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) os << (coeff.empty() ? "1" : coeff);
    else os << coeff << (coeff.empty() ? "" : "*") << mono;
  }
  return os.str();
}

}  // namespace

RatForm parse_form(std::string_view text) { return FormParser(text).parse(); }

std::string to_string(const RatForm& f, std::string_view vars) { return render(f, vars); }
std::string to_string(const EisForm& f, std::string_view vars) { return render(f, vars); }

EisForm to_eis(const RatForm& f) {
  return f.map_coeffs<EisRat>([](const Rat& c) { return EisRat(c); });
}

}  // namespace netconics
