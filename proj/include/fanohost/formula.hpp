#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace fano {

/// Integer expression over named parameters: + - * ( ) min(...) max(...).
/// Parsed once, evaluated on demand.
class Formula {
 public:
  explicit Formula(std::string_view text);

  long long evaluate(const std::map<std::string, long long>& vars = {}) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace fano
