#include "adjlab/alexander.hpp"

#include <cctype>
#include <stdexcept>

namespace adjlab {

AlexanderPolynomial AlexanderPolynomial::from_coeffs(std::map<int, Int> coeffs)
{
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second == 0 ? coeffs.erase(it) : std::next(it);
    if (coeffs.empty())
        throw std::invalid_argument("the zero polynomial is not an Alexander polynomial");
    Int at_one = 0;
    for (const auto& [exp, c] : coeffs) {
        at_one += c;
        auto mirror = coeffs.find(-exp);
        if (mirror == coeffs.end() || mirror->second != c)
            throw std::invalid_argument("Alexander polynomial must be symmetric in t <-> 1/t");
    }
    if (at_one != 1 && at_one != -1)
        throw std::invalid_argument("Alexander polynomial must evaluate to +-1 at t = 1");
    AlexanderPolynomial p;
    p.coeffs_ = std::move(coeffs);
    return p;
}

AlexanderPolynomial AlexanderPolynomial::unknot()
{
    return from_coeffs({{0, Int(1)}});
}

AlexanderPolynomial AlexanderPolynomial::torus_knot_2_odd(int g)
{
    if (g < 0) throw std::invalid_argument("torus_knot_2_odd needs g >= 0");
    std::map<int, Int> c;
    for (int j = -g; j <= g; ++j) c[j] = ((g + j) % 2 == 0) ? 1 : -1;
    return from_coeffs(std::move(c));
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek()
    {
        skip_ws();
        return text[pos];
    }
    Int read_number()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected digits in polynomial");
        return Int(std::string(text.substr(start, pos - start)));
    }
};

} // namespace

AlexanderPolynomial AlexanderPolynomial::parse(std::string_view text)
{
    Cursor cur{text};
    std::map<int, Int> coeffs;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between polynomial terms");
        }
        first = false;

        Int coeff = 1;
        bool saw_number = false;
        if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.read_number();
            saw_number = true;
        }
        int exponent = 0;
        if (!cur.done() && cur.peek() == 't') {
            ++cur.pos;
            exponent = 1;
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                int esign = 1;
                if (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) {
                    if (cur.peek() == '-') esign = -1;
                    ++cur.pos;
                }
                Int e = cur.read_number();
                if (!fits_int64(e) || abs_int(e) > 1000000)
                    throw std::invalid_argument("polynomial exponent out of range");
                exponent = esign * static_cast<int>(e.convert_to<long long>());
            }
        } else if (!saw_number) {
            throw std::invalid_argument("expected a coefficient or 't' in polynomial term");
        }
        coeffs[exponent] += sign * coeff;
    }
    if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
    return from_coeffs(std::move(coeffs));
}

Int AlexanderPolynomial::coeff(int exponent) const
{
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int AlexanderPolynomial::degree() const
{
    return coeffs_.rbegin()->first > 0 ? coeffs_.rbegin()->first : 0;
}

bool AlexanderPolynomial::is_constant_one() const
{
    return coeffs_.size() == 1 && coeff(0) == 1;
}

std::string AlexanderPolynomial::to_string() const
{
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [exp, c] = *it;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        Int a = abs_int(c);
        if (a != 1 || exp == 0) out += a.str();
        if (exp != 0) {
            out += 't';
            if (exp != 1) out += "^" + std::to_string(exp);
        }
    }
    return out;
}

int alexander_degree(const AlexanderPolynomial& p) { return p.degree(); }

} // namespace adjlab
