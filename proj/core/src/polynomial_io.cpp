#include <cctype>
#include <charconv>
#include <string>

#include "fglkit/graded_algebra.hpp"

namespace fglkit {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), message_(message), line_(line),
      column_(column)
{
}

namespace {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const RingPtr& ring, std::size_t first_line)
        : text_(text), ring_(ring), line_(first_line)
    {
    }

    GradedPolynomial parse()
    {
        std::vector<std::pair<Exponents, std::int64_t>> terms;
        skip_space();
        if (at_end())
            fail("empty expression");
        bool negate = false;
        for (;;) {
            parse_term(terms, negate);
            skip_space();
            if (at_end())
                break;
            if (peek() == '+')
                negate = false;
            else if (peek() == '-')
                negate = true;
            else
                fail(std::string("expected '+' or end of expression, found '") + peek() + "'");
            advance();
        }
        return GradedPolynomial::from_terms(ring_, terms);
    }

private:
    void parse_term(std::vector<std::pair<Exponents, std::int64_t>>& terms, bool negate)
    {
        skip_space();
        if (!at_end() && peek() == '-') {
            negate = !negate;
            advance();
            skip_space();
        }
        std::int64_t coeff = 1;
        Exponents exps(ring_->size(), 0);
        bool vanished = false;
        bool need_factor = true;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            need_factor = false;
        }
        for (;;) {
            skip_space();
            if (need_factor)
                parse_factor(exps, vanished, negate);
            skip_space();
            if (at_end() || peek() != '*')
                break;
            advance();
            need_factor = true;
        }
        if (!vanished)
            terms.emplace_back(std::move(exps), negate ? -coeff : coeff);
    }

    // Multiplies the running monomial by one factor on the right; the Koszul
    // sign of re-sorting is folded into `negate`.
    void parse_factor(Exponents& exps, bool& vanished, bool& negate)
    {
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail(at_end() ? "expected a variable, found end of input"
                          : std::string("expected a variable, found '") + peek() + "'");
        const auto start_col = column_;
        const auto start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            advance();
        const auto name = text_.substr(start, pos_ - start);
        const auto idx = ring_->index_of(name);
        if (!idx)
            throw ParseError("unknown variable '" + std::string(name) + "'", line_, start_col);
        std::int64_t exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            advance();
            skip_space();
            const auto exp_col = column_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected a positive exponent after '^'");
            exponent = parse_integer();
            if (exponent < 1 || exponent > 255)
                throw ParseError("exponent must be in 1..255", line_, exp_col);
            if (ring_->variable(*idx).is_odd() && exponent > 1)
                throw ParseError("odd variable '" + std::string(name) + "' cannot carry an exponent above 1", line_,
                                 exp_col);
        }
        if (vanished)
            return;
        Exponents factor(ring_->size(), 0);
        factor[*idx] = static_cast<std::uint8_t>(exponent);
        auto prod = multiply_monomials(*ring_, exps, factor);
        if (!prod) {
            vanished = true;
            return;
        }
        exps = std::move(prod->exponents);
        negate ^= prod->negative;
    }

    std::int64_t parse_integer()
    {
        const auto col = column_;
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            advance();
        std::int64_t value = 0;
        const auto digits = text_.substr(start, pos_ - start);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw ParseError("integer out of range", line_, col);
        return value;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t column_ = 1;
};

} // namespace

GradedPolynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t first_line)
{
    return PolynomialParser(text, ring, first_line).parse();
}

std::string format_monomial(const RingDescriptor& ring, const Exponents& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.variable(i).name;
        if (e[i] > 1)
            out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string format_polynomial(const GradedPolynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty())
            out += " + ";
        const auto mono = format_monomial(*f.ring(), t.exponents);
        if (mono.empty())
            out += std::to_string(t.coefficient);
        else if (t.coefficient == 1)
            out += mono;
        else
            out += std::to_string(t.coefficient) + "*" + mono;
    }
    return out;
}

} // namespace fglkit
