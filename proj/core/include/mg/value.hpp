#ifndef MG_VALUE_HPP
#define MG_VALUE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mg {

// Edge payload: tagged scalar (integer, float, text) or a nested list.
class Value;
using ValueList = std::vector<Value>;

class Value {
 public:
  Value() : rep_(std::int64_t{0}) {}
  Value(std::int64_t i) : rep_(i) {}
  Value(int i) : rep_(std::int64_t{i}) {}
  Value(double d) : rep_(d) {}
  Value(std::string s) : rep_(std::move(s)) {}
  Value(const char* s) : rep_(std::string(s)) {}
  Value(ValueList xs) : rep_(std::move(xs)) {}

  bool is_int() const { return std::holds_alternative<std::int64_t>(rep_); }
  bool is_float() const { return std::holds_alternative<double>(rep_); }
  bool is_text() const { return std::holds_alternative<std::string>(rep_); }
  bool is_list() const { return std::holds_alternative<ValueList>(rep_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(rep_); }
  double as_float() const { return std::get<double>(rep_); }
  const std::string& as_text() const { return std::get<std::string>(rep_); }
  const ValueList& as_list() const { return std::get<ValueList>(rep_); }

  bool operator==(const Value& o) const { return rep_ == o.rep_; }
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const;

  // Text form that round-trips through the MGF value grammar.
  std::string to_text() const;

 private:
  std::variant<std::int64_t, double, std::string, ValueList> rep_;
};

std::string values_to_text(const ValueList& vs);

}  // namespace mg

#endif
