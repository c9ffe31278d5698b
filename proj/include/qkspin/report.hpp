#pragma once

#include "qkspin/matrix.hpp"

#include <string>
#include <vector>

namespace qkspin {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const;
  void add(const std::string& name, bool pass, const std::string& witness = "");
  // Records lhs == rhs; on failure the witness names the first differing
  // entry, whose column is the offending basis vector.
  bool expect_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs);
  bool expect_zero(const std::string& name, const Matrix& m);
  void merge(const Report& other, const std::string& prefix = "");
  const Check* first_failure() const;
};

}  // namespace qkspin
