#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/stt/type.hpp"

namespace qmlstt::henkin {

// An element of a finite type domain: a truth value, a base-domain atom
// (its integer id), or a function given extensionally as a lookup table
// indexed by the canonical enumeration order of the argument domain.
class Value {
 public:
  using Table = std::vector<Value>;
  using TableRef = std::shared_ptr<const Table>;

  static Value truth(bool b) { return Value(b); }
  static Value atom(int id) { return Value(id); }
  static Value table(Table entries) {
    return Value(std::make_shared<const Table>(std::move(entries)));
  }
  static Value table(TableRef entries) { return Value(std::move(entries)); }

  bool is_truth() const { return std::holds_alternative<bool>(v_); }
  bool is_atom() const { return std::holds_alternative<int>(v_); }
  bool is_table() const { return std::holds_alternative<TableRef>(v_); }

  bool as_truth() const { return std::get<bool>(v_); }
  int as_atom() const { return std::get<int>(v_); }
  // Lvalues only: the reference points into the shared table, which would
  // die with a temporary at the end of the full expression.
  const Table& as_table() const& { return *std::get<TableRef>(v_); }
  const Table& as_table() const&& = delete;

  friend bool operator==(const Value& a, const Value& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_truth()) return a.as_truth() == b.as_truth();
    if (a.is_atom()) return a.as_atom() == b.as_atom();
    const Table& ta = a.as_table();
    const Table& tb = b.as_table();
    if (&ta == &tb) return true;
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i)
      if (!(ta[i] == tb[i])) return false;
    return true;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  explicit Value(bool b) : v_(b) {}
  explicit Value(int id) : v_(id) {}
  explicit Value(TableRef t) : v_(std::move(t)) {}

  std::variant<bool, int, TableRef> v_;
};

// Finite interpretation of the base domains plus named constants.  Function
// domains are always the full function space over the finite bases; they are
// enumerated lazily, memoized per type, and capped so that a term binding a
// variable at some enormous higher-order type fails loudly instead of
// allocating forever.
class FiniteFrame {
 public:
  FiniteFrame(int iota_size, int mu_size, std::uint64_t max_domain = 4'000'000)
      : iota_size_(iota_size), mu_size_(mu_size), max_domain_(max_domain) {
    if (iota_size < 1 || mu_size < 1)
      throw UnsupportedModel("base domains must be non-empty");
  }

  int iota_size() const { return iota_size_; }
  int mu_size() const { return mu_size_; }

  std::map<std::string, Value>& interp() { return interp_; }
  const std::map<std::string, Value>& interp() const { return interp_; }

  std::uint64_t domain_size(const stt::TypeRef& ty) const {
    if (ty->is_base()) {
      switch (ty->base_name()) {
        case stt::BaseName::O: return 2;
        case stt::BaseName::Iota: return static_cast<std::uint64_t>(iota_size_);
        case stt::BaseName::Mu: return static_cast<std::uint64_t>(mu_size_);
      }
    }
    std::uint64_t dom = domain_size(ty->domain());
    std::uint64_t cod = domain_size(ty->codomain());
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < dom; ++i) {
      if (out > max_domain_)
        throw ResourceBound("domain of type " + ty->to_string());
      out *= cod;
    }
    if (out > max_domain_)
      throw ResourceBound("domain of type " + ty->to_string());
    return out;
  }

  // Canonical enumeration of a type's domain.  A function's position is read
  // off its table: entry i is digit i of the position, base |codomain|, so
  // the entry for the first argument value varies fastest.
  const std::vector<Value>& enumerate(const stt::TypeRef& ty) const {
    std::string key = ty->to_string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    std::vector<Value> out;
    if (ty->is_base()) {
      switch (ty->base_name()) {
        case stt::BaseName::O:
          out = {Value::truth(false), Value::truth(true)};
          break;
        case stt::BaseName::Iota:
          for (int i = 0; i < iota_size_; ++i) out.push_back(Value::atom(i));
          break;
        case stt::BaseName::Mu:
          for (int i = 0; i < mu_size_; ++i) out.push_back(Value::atom(i));
          break;
      }
    } else {
      std::uint64_t size = domain_size(ty);
      if (size > max_domain_) throw ResourceBound("domain of type " + ty->to_string());
      std::uint64_t dom = domain_size(ty->domain());
      const std::vector<Value>& cod = enumerate(ty->codomain());
      out.reserve(size);
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        Value::Table entries;
        entries.reserve(dom);
        std::uint64_t x = idx;
        for (std::uint64_t i = 0; i < dom; ++i) {
          entries.push_back(cod[x % cod.size()]);
          x /= cod.size();
        }
        out.push_back(Value::table(std::move(entries)));
      }
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  // Position of a value in the canonical enumeration of its type, computed
  // without materializing the domain.
  std::uint64_t index_of(const stt::TypeRef& ty, const Value& v) const {
    if (ty->is_base()) {
      if (ty->base_name() == stt::BaseName::O) return v.as_truth() ? 1 : 0;
      return static_cast<std::uint64_t>(v.as_atom());
    }
    const Value::Table& t = v.as_table();
    std::uint64_t cod = domain_size(ty->codomain());
    std::uint64_t idx = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      idx += index_of(ty->codomain(), t[i]) * scale;
      scale *= cod;
    }
    return idx;
  }

 private:
  int iota_size_;
  int mu_size_;
  std::uint64_t max_domain_;
  std::map<std::string, Value> interp_;
  mutable std::map<std::string, std::vector<Value>> cache_;
};

}  // namespace qmlstt::henkin
