#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hclkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument value. `field` names the offending parameter when known.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& msg, std::string field = {})
        : Error(msg), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::string token)
        : Error(msg), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

class NotFound : public Error {
public:
    NotFound(const std::string& msg, std::vector<std::string> suggestions)
        : Error(msg), suggestions_(std::move(suggestions)) {}
    const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

private:
    std::vector<std::string> suggestions_;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

} // namespace hclkit
