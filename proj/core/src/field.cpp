#include "permpoly/field.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <sstream>

#include "permpoly/errors.hpp"

namespace permpoly {

namespace {

// Smallest irreducible polynomial of each degree, bit i = coefficient of X^i.
// Regenerated and re-verified by tests/field_test.cpp.
constexpr std::array<std::uint32_t, BinaryField::kMaxDegree + 1> kSmallestIrreducible = {
    0x0,      0x2,      0x7,      0xb,      0x13,     0x25,      0x43,     0x83,     0x11b,
    0x203,    0x409,    0x805,    0x1009,   0x201b,   0x4021,    0x8003,   0x1002b,  0x20009,
    0x40009,  0x80027,  0x100009, 0x200005, 0x400003, 0x800021,  0x100001b,
};

unsigned poly_degree(std::uint64_t p) { return static_cast<unsigned>(std::bit_width(p)) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned db = poly_degree(b);
  while (a != 0) {
    const unsigned da = poly_degree(a);
    if (da < db) break;
    a ^= b << (da - db);
  }
  return a;
}

std::uint64_t carryless_mul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    r ^= std::uint64_t{a} << std::countr_zero(rest);
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_degree(unsigned m) {
  if (m < 1 || m > BinaryField::kMaxDegree) {
    throw UnsupportedDegree("extension degree " + std::to_string(m) + " outside 1.." +
                            std::to_string(BinaryField::kMaxDegree));
  }
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
  if (poly < 2) return false;
  const unsigned deg = poly_degree(poly);
  const unsigned half = deg / 2;
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (half + 1)); ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

std::uint32_t default_reduction(unsigned m) {
  check_degree(m);
  return kSmallestIrreducible[m];
}

std::span<const std::uint32_t> builtin_reductions() { return kSmallestIrreducible; }

BinaryField make_field(unsigned m, std::optional<std::uint32_t> reduction) {
  return reduction ? BinaryField(m, *reduction) : BinaryField(m);
}

BinaryField::BinaryField(unsigned m) : BinaryField(m, default_reduction(m)) {}

BinaryField::BinaryField(unsigned m, std::uint32_t reduction) : m_(m), reduction_(reduction) {
  check_degree(m);
  if (reduction == 0 || poly_degree(reduction) != m) {
    throw UnsupportedDegree("reduction polynomial does not have degree " + std::to_string(m));
  }
  if (!is_irreducible(reduction)) {
    std::ostringstream os;
    os << "reduction polynomial 0x" << std::hex << reduction << " is reducible over F_2";
    throw ReducibleModulus(os.str());
  }
  if (m <= kMaxTableDegree) build_tables();
  for (unsigned i = 0; i < m; ++i) {
    trace_mask_ |= trace_by_squaring(Gf2mElement{1u << i}) << i;
  }
}

void BinaryField::build_tables() {
  const std::uint64_t group = order() - 1;
  const auto factors = prime_factors(group);
  const auto slow_pow = [this](std::uint32_t base, std::uint64_t e) {
    Gf2mElement r = one();
    Gf2mElement b{base};
    for (; e != 0; e >>= 1) {
      if (e & 1) r = mul_clmul(r, b);
      b = mul_clmul(b, b);
    }
    return r.bits;
  };

  std::uint32_t generator = 1;
  if (group > 1) {
    for (std::uint32_t g = 2; g < order(); ++g) {
      bool primitive = true;
      for (auto p : factors) {
        if (slow_pow(g, group / p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
  }

  auto tables = std::make_shared<Tables>();
  tables->exp.resize(2 * group);
  tables->log.assign(order(), 0);
  Gf2mElement cur = one();
  for (std::uint64_t i = 0; i < group; ++i) {
    tables->exp[i] = cur.bits;
    tables->exp[i + group] = cur.bits;
    tables->log[cur.bits] = static_cast<std::uint32_t>(i);
    cur = mul_clmul(cur, Gf2mElement{generator});
  }
  tables_ = std::move(tables);
}

Gf2mElement BinaryField::element(std::uint64_t bits) const {
  if (!contains(bits)) {
    throw OutOfRange("value " + std::to_string(bits) + " is not an element of GF(2^" +
                     std::to_string(m_) + ")");
  }
  return Gf2mElement{static_cast<std::uint32_t>(bits)};
}

Gf2mElement BinaryField::mul_clmul(Gf2mElement x, Gf2mElement y) const {
  std::uint64_t p = carryless_mul(x.bits, y.bits);
  const std::uint64_t red = reduction_;
  for (unsigned bit = 2 * m_; bit-- > m_;) {
    if ((p >> bit) & 1) p ^= red << (bit - m_);
  }
  return Gf2mElement{static_cast<std::uint32_t>(p)};
}

Gf2mElement BinaryField::mul(Gf2mElement x, Gf2mElement y) const {
  if (!tables_) return mul_clmul(x, y);
  if (x.is_zero() || y.is_zero()) return zero();
  const auto& t = *tables_;
  return Gf2mElement{t.exp[t.log[x.bits] + t.log[y.bits]]};
}

Gf2mElement BinaryField::square(Gf2mElement x) const { return mul(x, x); }

Gf2mElement BinaryField::inv(Gf2mElement x) const {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in GF(2^" + std::to_string(m_) + ")");
  const std::uint64_t group = order() - 1;
  if (tables_) {
    const auto& t = *tables_;
    return Gf2mElement{t.exp[(group - t.log[x.bits]) % group]};
  }
  return pow(x, group - 1);
}

Gf2mElement BinaryField::pow(Gf2mElement x, std::uint64_t e) const {
  if (e == 0) return one();
  if (x.is_zero()) return zero();
  const std::uint64_t group = order() - 1;
  e %= group;
  if (tables_) {
    const auto& t = *tables_;
    return Gf2mElement{t.exp[(std::uint64_t{t.log[x.bits]} * e) % group]};
  }
  Gf2mElement r = one();
  for (; e != 0; e >>= 1) {
    if (e & 1) r = mul(r, x);
    x = square(x);
  }
  return r;
}

Gf2mElement BinaryField::frobenius(Gf2mElement x, unsigned times) const {
  times %= m_;
  if (times == 0 || x.is_zero()) return x;
  if (tables_) {
    const auto& t = *tables_;
    const std::uint64_t group = order() - 1;
    return Gf2mElement{t.exp[((std::uint64_t{t.log[x.bits]} << times) % group)]};
  }
  for (unsigned i = 0; i < times; ++i) x = square(x);
  return x;
}

unsigned BinaryField::trace(Gf2mElement x) const {
  return static_cast<unsigned>(std::popcount(x.bits & trace_mask_) & 1);
}

unsigned BinaryField::trace_by_squaring(Gf2mElement x) const {
  Gf2mElement acc = x;
  Gf2mElement y = x;
  for (unsigned i = 1; i < m_; ++i) {
    y = square(y);
    acc += y;
  }
  if (acc.bits > 1) throw Error("trace left F_2; field arithmetic is inconsistent");
  return acc.bits;
}

std::vector<Gf2mElement> BinaryField::elements() const {
  std::vector<Gf2mElement> out(order());
  for (std::uint64_t i = 0; i < order(); ++i) out[i] = Gf2mElement{static_cast<std::uint32_t>(i)};
  return out;
}

std::string to_hex(Gf2mElement x) {
  std::ostringstream os;
  os << std::hex << x.bits;
  return os.str();
}

Gf2mElement parse_element(const BinaryField& field, std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty()) throw ParseError("empty field element");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (ec == std::errc::result_out_of_range) throw OutOfRange("field element out of range");
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a hex field element: '" + std::string(text) + "'");
  }
  return field.element(value);
}

}  // namespace permpoly
