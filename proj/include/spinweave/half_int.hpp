#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

namespace spinweave {

// Half-integer spin quantum number, stored as twice its value so that all
// spin arithmetic stays integral. HalfInt(1) is the spin 1, half() is 1/2.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : doubled_(2 * whole) {}

    static constexpr HalfInt from_doubled(int d) {
        HalfInt h;
        h.doubled_ = d;
        return h;
    }
    static constexpr HalfInt half() { return from_doubled(1); }

    constexpr int doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }
    constexpr bool is_negative() const { return doubled_ < 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_doubled(a.doubled_ + b.doubled_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_doubled(a.doubled_ - b.doubled_);
    }
    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  private:
    int doubled_ = 0;
};

constexpr HalfInt abs(HalfInt h) {
    return h.is_negative() ? -h : h;
}

// "1/2", "-3/2" for proper half-integers, otherwise the plain integer form.
inline std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.doubled() / 2);
    return std::to_string(h.doubled()) + "/2";
}

// Accepts the forms produced by to_string: "p/2" with odd p, or a plain
// integer. Throws ParseError on anything else.
HalfInt parse_half_int(std::string_view text);

} // namespace spinweave
