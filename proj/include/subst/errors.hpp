#pragma once

#include <stdexcept>
#include <string>

namespace subst {

class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class budget_exhausted : public std::runtime_error {
 public:
  explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subst
