#include "obslab/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "obslab/errors.hpp"

namespace obslab {
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    double parse() {
        const double value = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("cannot parse expression '" + std::string(text_) + "': " + what + " at offset " +
                          std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double sum() {
        double value = product();
        for (;;) {
            if (accept('+')) value += product();
            else if (accept('-')) value -= product();
            else return value;
        }
    }

    double product() {
        double value = unary();
        for (;;) {
            if (accept('*')) value *= unary();
            else if (accept('/')) value /= unary();
            else return value;
        }
    }

    double unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    double power() {
        const double base = atom();
        if (accept('^')) return std::pow(base, unary());
        return base;
    }

    double atom() {
        skip_space();
        if (accept('(')) {
            const double value = sum();
            if (!accept(')')) fail("expected ')'");
            return value;
        }
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "pi") return std::numbers::pi;
            double (*fn)(double) = nullptr;
            if (name == "sqrt") fn = [](double x) { return std::sqrt(x); };
            else if (name == "sin") fn = [](double x) { return std::sin(x); };
            else if (name == "cos") fn = [](double x) { return std::cos(x); };
            else fail("unknown name '" + std::string(name) + "'");
            if (!accept('(')) fail("expected '(' after function name");
            const double arg = sum();
            if (!accept(')')) fail("expected ')'");
            return fn(arg);
        }
        double value = 0.0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }
};

}  // namespace

double evaluate_expression(std::string_view text) {
    const double value = Parser(text).parse();
    if (!std::isfinite(value)) throw ConfigError("expression '" + std::string(text) + "' is not finite");
    return value;
}

}  // namespace obslab
