#pragma once

#include <stdexcept>
#include <string>

namespace nonarch {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("DivisionByZero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct ZeroGerm : std::domain_error {
    ZeroGerm() : std::domain_error("ZeroGerm") {}
};

struct NotFinite : std::domain_error {
    NotFinite() : std::domain_error("NotFinite") {}
};

struct NonpositiveStep : std::domain_error {
    NonpositiveStep() : std::domain_error("NonpositiveStep") {}
};

struct NotMember : std::domain_error {
    NotMember() : std::domain_error("NotMember") {}
};

struct OrderViolation : std::domain_error {
    OrderViolation() : std::domain_error("OrderViolation") {}
};

struct UniverseTooLarge : std::domain_error {
    explicit UniverseTooLarge(int k)
        : std::domain_error("UniverseTooLarge: k=" + std::to_string(k)) {}
};

struct DegreeLimit : std::domain_error {
    explicit DegreeLimit(int limit)
        : std::domain_error("DegreeLimit: polynomial degree exceeds " + std::to_string(limit)) {}
};

}  // namespace nonarch
