#include "qig/weights.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qig {

namespace {

// Keep integer parts below 1e9 so micro-unit path sums stay far from
// int64 overflow at desk scale.
constexpr std::int64_t kMaxExactInteger = 1'000'000'000;

double parse_double_or_throw(const std::string& text) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("weight: cannot parse '" + text + "'");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) {
        throw std::invalid_argument("weight: trailing characters in '" + text + "'");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("weight: non-finite value '" + text + "'");
    }
    return value;
}

std::string shortest_double_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::optional<std::int64_t> parse_decimal_micro(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (n == 0) return std::nullopt;
    std::int64_t integer = 0;
    bool any_digit = false;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
        integer = integer * 10 + (text[i] - '0');
        if (integer > kMaxExactInteger) return std::nullopt;
        any_digit = true;
        ++i;
    }
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && text[i] >= '0' && text[i] <= '9') {
            if (frac_digits < 6) {
                frac = frac * 10 + (text[i] - '0');
                ++frac_digits;
            } else if (text[i] != '0') {
                return std::nullopt;  // more than six significant decimals
            } else {
                // trailing zeros beyond six places are harmless
            }
            any_digit = true;
            ++i;
        }
    }
    if (!any_digit || i != n) return std::nullopt;
    for (int k = frac_digits; k < 6; ++k) frac *= 10;
    return integer * kMicroScale + frac;
}

std::string micro_to_decimal(std::int64_t micro) {
    std::int64_t whole = micro / kMicroScale;
    std::int64_t frac = micro % kMicroScale;
    if (frac == 0) return std::to_string(whole);
    std::string f = std::to_string(frac);
    f.insert(f.begin(), 6 - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    return std::to_string(whole) + "." + f;
}

EdgeWeighting EdgeWeighting::from_strings(const Graph& owner,
                                          const std::vector<std::string>& weights) {
    if (static_cast<int>(weights.size()) != owner.edge_count()) {
        throw std::invalid_argument("weighting: expected " + std::to_string(owner.edge_count()) +
                                    " weights, got " + std::to_string(weights.size()));
    }
    EdgeWeighting w;
    w.owner_fingerprint_ = owner.fingerprint();
    w.values_.reserve(weights.size());
    w.micro_.reserve(weights.size());
    for (const std::string& s : weights) {
        if (auto micro = parse_decimal_micro(s)) {
            if (*micro <= 0) {
                throw std::invalid_argument("weight: must be strictly positive, got '" + s + "'");
            }
            w.micro_.push_back(*micro);
            w.values_.push_back(static_cast<double>(*micro) / static_cast<double>(kMicroScale));
        } else {
            const double v = parse_double_or_throw(s);
            if (v <= 0) {
                throw std::invalid_argument("weight: must be strictly positive, got '" + s + "'");
            }
            w.exact_ = false;
            w.values_.push_back(v);
        }
    }
    if (!w.exact_) {
        w.micro_.clear();
        w.raw_ = weights;
    }
    return w;
}

EdgeWeighting EdgeWeighting::from_doubles(const Graph& owner, const std::vector<double>& weights) {
    std::vector<std::string> texts;
    texts.reserve(weights.size());
    for (double v : weights) {
        if (!std::isfinite(v) || v <= 0) {
            throw std::invalid_argument("weight: must be strictly positive and finite");
        }
        texts.push_back(shortest_double_string(v));
    }
    return from_strings(owner, texts);
}

EdgeWeighting EdgeWeighting::uniform(const Graph& owner, const std::string& weight) {
    return from_strings(owner, std::vector<std::string>(static_cast<std::size_t>(owner.edge_count()), weight));
}

std::string EdgeWeighting::decimal(int edge) const {
    if (exact_) return micro_to_decimal(micro_[static_cast<std::size_t>(edge)]);
    return shortest_double_string(values_[static_cast<std::size_t>(edge)]);
}

void EdgeWeighting::check_owner(const Graph& g, const char* op) const {
    if (g.fingerprint() != owner_fingerprint_ || g.edge_count() != edge_count()) {
        throw std::invalid_argument(std::string(op) + ": weighting does not belong to this graph");
    }
}

}  // namespace qig
