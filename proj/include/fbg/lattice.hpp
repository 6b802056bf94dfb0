#ifndef FBG_LATTICE_HPP
#define FBG_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace fbg {

/// Exact rational with 64-bit numerator and denominator, kept in lowest
/// terms with a positive denominator. Only what the frames need: ordering,
/// parsing and printing.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    /// Accepts "p/q", integers and finite decimals ("0.25"); conversion is exact.
    static Rational parse(std::string_view text);

    /// "p/q", or just "p" when the denominator is one.
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

enum class FrameKind : std::uint8_t { UnitInterval, TwoPoint, FiniteChain };

class FrameValue;

/// One of the concrete frames degrees are drawn from. All three are chains,
/// so meet and join are min and max of the underlying rationals.
class Frame {
public:
    /// [0,1] with rational elements; the usual choice.
    static Frame unit_interval() noexcept { return Frame(FrameKind::UnitInterval, 0); }
    /// {bottom, top}; the bridge to crisp structures.
    static Frame two_point() noexcept { return Frame(FrameKind::TwoPoint, 2); }
    /// {0, ..., levels-1} with the usual order; levels >= 2.
    static Frame chain(std::uint32_t levels);

    /// "unit-interval" | "two-point" | "chain:<n>".
    static Frame parse(std::string_view name);
    std::string name() const;

    FrameKind kind() const noexcept { return kind_; }
    std::uint32_t levels() const noexcept { return levels_; }

    FrameValue top() const;
    FrameValue bottom() const;

    bool contains(const Rational& r) const;
    /// Throws DegreeOutOfRange when r is not in the carrier.
    FrameValue value(const Rational& r) const;
    /// Degree text as written in model files: "3/10", "0.3", "1" (unit
    /// interval); "0".."n-1" (chains); "0"/"1" (two point).
    FrameValue parse_value(std::string_view text) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    Frame(FrameKind kind, std::uint32_t levels) noexcept : kind_(kind), levels_(levels) {}

    FrameKind kind_;
    std::uint32_t levels_;
};

/// An element of a frame. Immutable; only obtainable through Frame.
class FrameValue {
public:
    const Frame& frame() const noexcept { return frame_; }
    const Rational& rational() const noexcept { return value_; }

    bool is_bottom() const noexcept { return value_ == Rational(0); }
    bool is_top() const;

    std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const FrameValue&, const FrameValue&) = default;

private:
    friend class Frame;
    FrameValue(Frame frame, Rational value) : frame_(frame), value_(value) {}

    Frame frame_;
    Rational value_;
};

// Binary operations throw InstanceMismatch on mixed frames.
FrameValue meet(const FrameValue& a, const FrameValue& b);
FrameValue join(const FrameValue& a, const FrameValue& b);
bool leq(const FrameValue& a, const FrameValue& b);
/// Least upper bound of a finite collection; bottom for the empty one.
FrameValue join_all(const Frame& frame, std::span<const FrameValue> values);
FrameValue meet_all(const Frame& frame, std::span<const FrameValue> values);

} // namespace fbg

#endif
