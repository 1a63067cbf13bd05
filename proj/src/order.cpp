#include "tropwall/order.hpp"

#include <stdexcept>

namespace tropwall {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& r : rows_) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += r[i] * (a[i] - b[i]);
    if (s != 0) return s > 0 ? 1 : -1;
  }
  const std::size_t n = a.size();
  switch (base_) {
    case Base::GrLex:
    case Base::GrevLex: {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da > db ? 1 : -1;
      if (base_ == Base::GrLex) {
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      } else {
        for (std::size_t i = n; i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case Base::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Base::RevLex:
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
  }
  return 0;
}

bool MonomialOrder::is_well_order(std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& r : rows_) {
      if (r[i] < 0) return false;
      if (r[i] > 0) break;
    }
  }
  return true;
}

std::string MonomialOrder::key() const {
  static const char* names[] = {"lex", "revlex", "grlex", "grevlex"};
  std::string k;
  for (const auto& r : rows_) {
    k += "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) k += ",";
      k += std::to_string(r[i]);
    }
    k += "]";
  }
  return k + names[static_cast<int>(base_)];
}

std::vector<long long> MonomialOrder::integer_row(const Vector& w) {
  Integer l = denominator_lcm(w);
  std::vector<long long> r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = to_int64(Rational(w[i] * l));
  return r;
}

namespace {

MonomialOrder::Base parse_base(const std::string& s) {
  if (s == "lex") return MonomialOrder::Base::Lex;
  if (s == "revlex") return MonomialOrder::Base::RevLex;
  if (s == "grlex") return MonomialOrder::Base::GrLex;
  if (s == "grevlex") return MonomialOrder::Base::GrevLex;
  throw std::invalid_argument("unknown order: " + s);
}

const char* base_name(MonomialOrder::Base b) {
  switch (b) {
    case MonomialOrder::Base::Lex: return "lex";
    case MonomialOrder::Base::RevLex: return "revlex";
    case MonomialOrder::Base::GrLex: return "grlex";
    case MonomialOrder::Base::GrevLex: return "grevlex";
  }
  return "grevlex";
}

}  // namespace

OrderDescriptor OrderDescriptor::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.rfind("w:", 0) != 0) {
    auto b = parse_base(t);
    return {static_cast<Kind>(static_cast<int>(b)), std::nullopt, b};
  }
  auto open = t.find('['), close = t.find(']');
  if (open != 2 || close == std::string::npos) throw std::invalid_argument("malformed weight order: " + text);
  Vector w;
  std::string body = t.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    w.push_back(parse_rational(body.substr(start, comma - start)));
    start = comma + 1;
  }
  MonomialOrder::Base tb = MonomialOrder::Base::GrevLex;
  if (close + 1 < t.size()) {
    if (t[close + 1] != '+') throw std::invalid_argument("malformed weight order: " + text);
    tb = parse_base(t.substr(close + 2));
  }
  return weighted(std::move(w), tb);
}

std::string OrderDescriptor::to_string() const {
  if (kind != Kind::Weight) return base_name(tiebreak);
  std::string s = "w:[";
  for (std::size_t i = 0; i < weight->size(); ++i) {
    if (i) s += ",";
    s += tropwall::to_string((*weight)[i]);
  }
  return s + "]+" + base_name(tiebreak);
}

MonomialOrder OrderDescriptor::to_order(std::size_t n) const {
  if (kind != Kind::Weight) return MonomialOrder(tiebreak);
  if (weight->size() != n) throw std::invalid_argument("weight length does not match ring");
  Vector neg(n);
  for (std::size_t i = 0; i < n; ++i) neg[i] = -(*weight)[i];
  return MonomialOrder(tiebreak, {MonomialOrder::integer_row(neg)});
}

}  // namespace tropwall
