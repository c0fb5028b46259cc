#pragma once

// Assertion lists produced by the verification suites.

#include <json.hpp>

#include <string>
#include <vector>

namespace flocks {

struct Assertion
{
    std::string description;
    nlohmann::json expected, actual;
    bool pass = false;
};

class SuiteReport
{
  public:
    explicit SuiteReport(std::string name) : name_(std::move(name)) {}

    const std::string & name() const { return name_; }
    const std::vector<Assertion> & assertions() const { return assertions_; }
    bool pass() const;
    double seconds = 0;

    /// Records expected == actual.
    bool check(std::string description, const nlohmann::json & expected, const nlohmann::json & actual);
    /// Records a condition with free-form detail.
    bool require(std::string description, bool ok, const nlohmann::json & detail = nullptr);
    void merge(const SuiteReport & other);

    /// Without timing, so equal runs give equal bytes.
    nlohmann::json to_json(bool with_timing = false) const;
    std::string to_text() const;

  private:
    std::string name_;
    std::vector<Assertion> assertions_;
};

} // namespace flocks
