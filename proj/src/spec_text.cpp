#include "cqi/spec_text.hpp"

#include <cctype>
#include <limits>
#include <string>

#include <json.hpp>

#include "cqi/error.hpp"

namespace cqi {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw ParseError(start, "integer too large");
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected integer");
    return v;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

CompositeGroupSpec parse_composite(Cursor& c) {
  CompositeGroupSpec spec;
  do {
    c.expect('Z');
    c.expect('(');
    const std::size_t at = c.pos();
    const std::uint64_t m = c.integer();
    if (m == 0) throw ParseError(at, "modulus must be >= 1");
    spec.moduli.push_back(m);
    c.expect(')');
  } while (c.accept('+'));
  return spec;
}

PrimePowerSignature parse_primary(Cursor& c) {
  c.expect('p');
  c.expect('=');
  const std::uint64_t p = c.integer();
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  c.expect(':');
  std::vector<Part> parts;
  do {
    c.skip_ws();
    const std::size_t at = c.pos();
    std::uint64_t q = c.integer();
    if (q == 0) throw ParseError(at, "order must be a power of p");
    unsigned m = 0;
    while (q % p == 0) {
      q /= p;
      ++m;
    }
    if (q != 1) throw ParseError(at, "order is not a power of " + std::to_string(p));
    std::uint64_t lambda = 1;
    if (c.accept('^')) {
      const std::size_t lat = c.pos();
      lambda = c.integer();
      if (lambda == 0 || lambda > std::numeric_limits<unsigned>::max())
        throw ParseError(lat, "multiplicity must be positive");
    }
    parts.push_back(Part{m, static_cast<unsigned>(lambda)});
  } while (c.accept('+'));
  return normalize_signature(p, std::move(parts));
}

GroupSpec parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
  if (!j.is_object()) throw ParseError(0, "JSON spec must be an object");
  try {
    if (j.contains("moduli")) {
      CompositeGroupSpec spec;
      for (const auto& m : j.at("moduli")) spec.moduli.push_back(m.get<std::uint64_t>());
      spec.validate();
      return spec;
    }
    const auto p = j.at("p").get<std::uint64_t>();
    std::vector<Part> parts;
    for (const auto& pair : j.at("parts")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError(0, "parts must be [exponent, multiplicity] pairs");
      parts.push_back(Part{pair[0].get<unsigned>(), pair[1].get<unsigned>()});
    }
    return normalize_signature(p, std::move(parts));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed JSON spec: ") + e.what());
  }
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  Cursor c(text);
  switch (c.peek()) {
    case '{':
      return parse_json(text);
    case 'Z': {
      CompositeGroupSpec spec = parse_composite(c);
      if (!c.at_end()) throw ParseError(c.pos(), "trailing input");
      return spec;
    }
    case 'p': {
      PrimePowerSignature sig = parse_primary(c);
      if (!c.at_end()) throw ParseError(c.pos(), "trailing input");
      return sig;
    }
    default:
      throw ParseError(c.pos(), "expected 'Z(', 'p=' or '{'");
  }
}

std::string spec_to_string(const GroupSpec& spec) {
  return std::visit([](const auto& s) { return s.to_string(); }, spec);
}

}  // namespace cqi
