#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcat {

/// Raised for precondition failures and malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A single failed law, e.g. rule "d0 d2 = d1 d0", item "(9)", witness "cell 3".
struct Violation {
  std::string rule;
  std::string item;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t size() const { return violations.size(); }

  void add(std::string rule, std::string witness, std::string item = {}) {
    violations.push_back({std::move(rule), std::move(item), std::move(witness)});
  }

  void append(const ValidationReport& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations)
      violations.push_back({prefix + v.rule, v.item, v.witness});
  }

  bool mentions_item(const std::string& item) const {
    for (const auto& v : violations)
      if (v.item == item) return true;
    return false;
  }

  bool mentions_rule(const std::string& fragment) const {
    for (const auto& v : violations)
      if (v.rule.find(fragment) != std::string::npos) return true;
    return false;
  }

  std::string str(std::size_t limit = 50) const {
    std::ostringstream os;
    std::size_t n = 0;
    for (const auto& v : violations) {
      if (n++ == limit) {
        os << "... (" << violations.size() - limit << " more)\n";
        break;
      }
      if (!v.item.empty()) os << "item " << v.item << ": ";
      os << v.rule << " [" << v.witness << "]\n";
    }
    return os.str();
  }
};

/// Raised when a construction is handed input that fails its validator.
class InvalidInput : public Error {
 public:
  InvalidInput(const std::string& what, ValidationReport report)
      : Error(what + ":\n" + report.str(10)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Raised when a constructed certificate fails; always an implementation bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

template <class T>
std::string list(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace detail
}  // namespace opcat
