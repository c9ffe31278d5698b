#include "qkspin/report.hpp"

namespace qkspin {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(const std::string& name, bool pass, const std::string& witness) {
  checks.push_back({name, pass, pass ? "" : witness});
}

bool Report::expect_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    add(name, false,
        "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
            std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return false;
  }
  for (int j = 0; j < lhs.cols(); ++j)
    for (int i = 0; i < lhs.rows(); ++i)
      if (lhs(i, j) != rhs(i, j)) {
        add(name, false,
            "basis vector " + std::to_string(j) + ", component " + std::to_string(i) + ": " +
                lhs(i, j).pretty() + " vs " + rhs(i, j).pretty());
        return false;
      }
  add(name, true);
  return true;
}

bool Report::expect_zero(const std::string& name, const Matrix& m) {
  return expect_equal(name, m, Matrix(m.rows(), m.cols()));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace qkspin
