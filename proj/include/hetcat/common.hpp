#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hetcat {

// Thrown when an operation is invoked outside its domain: unknown names,
// boundary mismatches, malformed parameters. The CLI maps this to exit 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when data that claims to be verified fails its own invariant,
// e.g. a stale universal arrow that no longer factors a het. Distinct from
// DomainError: absence of a representation is a value, corruption is not.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One law violation, with the witnesses (object/morphism/element names)
// that exhibit it.
struct Violation {
  std::string law;
  std::vector<std::string> witness;
};

// Outcome of exhaustive law checking. Collects every violation found,
// not just the first, so seeded-mutation tests can be precise.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string law, std::vector<std::string> witness = {}) {
    violations.push_back(Violation{std::move(law), std::move(witness)});
  }

  void merge(const ValidationReport& other, const std::string& prefix = "") {
    for (const auto& v : other.violations) {
      violations.push_back(Violation{prefix.empty() ? v.law : prefix + v.law, v.witness});
    }
  }

  std::string to_string() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
      out += "[" + v.law + "]";
      for (const auto& w : v.witness) out += " " + w;
      out += "\n";
    }
    return out;
  }
};

// Either a validated value or the report explaining why validation failed.
template <typename T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}
  Result(ValidationReport report) : data_(std::move(report)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw DomainError("validation failed:\n" + report().to_string());
    return std::get<T>(data_);
  }
  T&& value() && {
    if (!ok()) throw DomainError("validation failed:\n" + report().to_string());
    return std::get<T>(std::move(data_));
  }

  // Empty report when the result is ok.
  const ValidationReport& report() const {
    static const ValidationReport empty{};
    if (ok()) return empty;
    return std::get<ValidationReport>(data_);
  }

 private:
  std::variant<T, ValidationReport> data_;
};

}  // namespace hetcat
