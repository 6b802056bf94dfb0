#include "fbg/lattice.hpp"

#include "fbg/error.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace fbg {

namespace {

__extension__ using Wide = __int128;

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    if (text.empty())
        throw DegreeOutOfRange("malformed number '" + std::string(whole) + "'");
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec == std::errc::result_out_of_range)
        throw DegreeOutOfRange("number '" + std::string(whole) + "' exceeds 64-bit range");
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw DegreeOutOfRange("malformed number '" + std::string(whole) + "'");
    return out;
}

bool all_digits(std::string_view s)
{
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw DegreeOutOfRange("zero denominator");
    if (denominator < 0) {
        if (numerator == std::numeric_limits<std::int64_t>::min() ||
            denominator == std::numeric_limits<std::int64_t>::min())
            throw DegreeOutOfRange("rational out of 64-bit range");
        numerator = -numerator;
        denominator = -denominator;
    }
    std::int64_t g = std::gcd(numerator, denominator);
    if (g == 0)
        g = 1;
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view whole = text;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto p = text.substr(0, slash);
        auto q = text.substr(slash + 1);
        if (!q.empty() && (q.front() == '-' || q.front() == '+'))
            throw DegreeOutOfRange("malformed number '" + std::string(whole) + "'");
        return Rational(parse_int(p, whole), parse_int(q, whole));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        bool negative = !text.empty() && text.front() == '-';
        auto int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
        auto frac_part = text.substr(dot + 1);
        if (frac_part.empty() || !all_digits(frac_part) || !all_digits(int_part) ||
            (int_part.empty() && frac_part.empty()))
            throw DegreeOutOfRange("malformed number '" + std::string(whole) + "'");
        if (frac_part.size() > 18)
            throw DegreeOutOfRange("number '" + std::string(whole) + "' has too many decimals");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i)
            den *= 10;
        std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
        std::int64_t fp = parse_int(frac_part, whole);
        Wide num = static_cast<Wide>(ip) * den + fp;
        if (num > std::numeric_limits<std::int64_t>::max())
            throw DegreeOutOfRange("number '" + std::string(whole) + "' exceeds 64-bit range");
        auto n = static_cast<std::int64_t>(num);
        return Rational(negative ? -n : n, den);
    }
    return Rational(parse_int(text, whole));
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Frame Frame::chain(std::uint32_t levels)
{
    if (levels < 2)
        throw DegreeOutOfRange("a finite chain needs at least two levels");
    return Frame(FrameKind::FiniteChain, levels);
}

Frame Frame::parse(std::string_view name)
{
    if (name == "unit-interval")
        return unit_interval();
    if (name == "two-point")
        return two_point();
    constexpr std::string_view prefix = "chain:";
    if (name.substr(0, prefix.size()) == prefix) {
        auto digits = name.substr(prefix.size());
        std::uint32_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size() && n >= 2)
            return chain(n);
    }
    throw DegreeOutOfRange("unknown frame '" + std::string(name) + "'");
}

std::string Frame::name() const
{
    switch (kind_) {
    case FrameKind::UnitInterval:
        return "unit-interval";
    case FrameKind::TwoPoint:
        return "two-point";
    case FrameKind::FiniteChain:
        return "chain:" + std::to_string(levels_);
    }
    return {};
}

FrameValue Frame::top() const
{
    if (kind_ == FrameKind::FiniteChain)
        return FrameValue(*this, Rational(levels_ - 1));
    return FrameValue(*this, Rational(1));
}

FrameValue Frame::bottom() const { return FrameValue(*this, Rational(0)); }

bool Frame::contains(const Rational& r) const
{
    switch (kind_) {
    case FrameKind::UnitInterval:
        return Rational(0) <= r && r <= Rational(1);
    case FrameKind::TwoPoint:
        return r == Rational(0) || r == Rational(1);
    case FrameKind::FiniteChain:
        return r.denominator() == 1 && r.numerator() >= 0 &&
               r.numerator() < static_cast<std::int64_t>(levels_);
    }
    return false;
}

FrameValue Frame::value(const Rational& r) const
{
    if (!contains(r))
        throw DegreeOutOfRange("degree " + r.to_string() + " is not in " + name());
    return FrameValue(*this, r);
}

FrameValue Frame::parse_value(std::string_view text) const
{
    if (kind_ != FrameKind::UnitInterval &&
        (text.find('/') != std::string_view::npos || text.find('.') != std::string_view::npos))
        throw DegreeOutOfRange("degree '" + std::string(text) + "' is not in " + name());
    return value(Rational::parse(text));
}

bool FrameValue::is_top() const { return *this == frame_.top(); }

namespace {

void require_same(const FrameValue& a, const FrameValue& b)
{
    if (a.frame() != b.frame())
        throw InstanceMismatch("degrees from " + a.frame().name() + " and " + b.frame().name());
}

} // namespace

FrameValue meet(const FrameValue& a, const FrameValue& b)
{
    require_same(a, b);
    return b.rational() < a.rational() ? b : a;
}

FrameValue join(const FrameValue& a, const FrameValue& b)
{
    require_same(a, b);
    return a.rational() < b.rational() ? b : a;
}

bool leq(const FrameValue& a, const FrameValue& b)
{
    require_same(a, b);
    return a.rational() <= b.rational();
}

FrameValue join_all(const Frame& frame, std::span<const FrameValue> values)
{
    FrameValue acc = frame.bottom();
    for (const auto& v : values)
        acc = join(acc, v);
    return acc;
}

FrameValue meet_all(const Frame& frame, std::span<const FrameValue> values)
{
    FrameValue acc = frame.top();
    for (const auto& v : values)
        acc = meet(acc, v);
    return acc;
}

} // namespace fbg
