#include "fanohost/formula.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "fanohost/error.hpp"

namespace fano {

struct Formula::Node {
  enum class Op { Number, Variable, Add, Sub, Mul, Neg, Min, Max } op;
  long long number = 0;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;

  long long eval(const std::map<std::string, long long>& vars) const {
    switch (op) {
      case Op::Number: return number;
      case Op::Variable: {
        auto it = vars.find(name);
        if (it == vars.end()) throw InvalidInput("formula variable '" + name + "' is unbound");
        return it->second;
      }
      case Op::Add: return args[0]->eval(vars) + args[1]->eval(vars);
      case Op::Sub: return args[0]->eval(vars) - args[1]->eval(vars);
      case Op::Mul: return args[0]->eval(vars) * args[1]->eval(vars);
      case Op::Neg: return -args[0]->eval(vars);
      case Op::Min:
      case Op::Max: {
        long long acc = args[0]->eval(vars);
        for (std::size_t i = 1; i < args.size(); ++i) {
          const long long v = args[i]->eval(vars);
          acc = op == Op::Min ? std::min(acc, v) : std::max(acc, v);
        }
        return acc;
      }
    }
    return 0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;
using Op = Formula::Node::Op;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    auto n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("formula '" + std::string(s_) + "': " + what + " at offset " +
                       std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Formula::Node>();
    n->op = op;
    n->args = {std::move(a), std::move(b)};
    return n;
  }

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (eat('+'))
        lhs = binary(Op::Add, lhs, term());
      else if (eat('-'))
        lhs = binary(Op::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    auto lhs = factor();
    while (eat('*')) lhs = binary(Op::Mul, lhs, factor());
    return lhs;
  }

  NodePtr factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    auto n = std::make_shared<Formula::Node>();
    const char c = s_[pos_];
    if (eat('-')) {
      n->op = Op::Neg;
      n->args = {factor()};
      return n;
    }
    if (eat('(')) {
      auto inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      n->op = Op::Number;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        n->number = n->number * 10 + (s_[pos_++] - '0');
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      if (eat('(')) {
        if (name == "min")
          n->op = Op::Min;
        else if (name == "max")
          n->op = Op::Max;
        else
          fail("unknown function '" + name + "'");
        do n->args.push_back(expr());
        while (eat(','));
        if (!eat(')')) fail("expected ')'");
        return n;
      }
      n->op = Op::Variable;
      n->name = std::move(name);
      return n;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula::Formula(std::string_view text) : text_(text), root_(Parser(text).parse()) {}

long long Formula::evaluate(const std::map<std::string, long long>& vars) const {
  return root_->eval(vars);
}

}  // namespace fano
