#include "spinweave/path.hpp"

#include <cassert>

#include "spinweave/errors.hpp"

namespace spinweave {

CouplingPath CouplingPath::validate(std::vector<HalfInt> spins) {
    if (spins.empty() || spins[0] != HalfInt::half())
        throw PathError(PathErrorKind::InvalidStart, "a coupling history must start at spin 1/2");
    for (std::size_t k = 1; k < spins.size(); ++k) {
        HalfInt step = spins[k] - spins[k - 1];
        if (step != HalfInt::half() && step != -HalfInt::half())
            throw PathError(PathErrorKind::InvalidStep,
                            "invalid step " + spinweave::to_string(spins[k - 1]) + " -> " +
                                spinweave::to_string(spins[k]) + " at position " +
                                std::to_string(k + 1) + "; each step changes the spin by 1/2");
        if (spins[k].is_negative())
            throw PathError(PathErrorKind::NegativeSpin,
                            "spin drops below zero at position " + std::to_string(k + 1));
    }
    return CouplingPath(std::move(spins));
}

CouplingPath CouplingPath::prefix(std::size_t len) const {
    assert(len >= 1 && len <= spins_.size());
    return CouplingPath(std::vector<HalfInt>(spins_.begin(), spins_.begin() + len));
}

std::string CouplingPath::to_string() const {
    std::string out;
    for (const HalfInt& s : spins_) {
        if (!out.empty()) out += ',';
        out += spinweave::to_string(s);
    }
    return out;
}

std::vector<CouplingPath> enumerate_paths(int n) {
    if (n < 1) throw IndexOutOfRange("path length must be at least 1");
    std::vector<CouplingPath> out;
    std::vector<HalfInt> spins{HalfInt::half()};
    // depth-first, lower branch first, so the result is lexicographic
    auto extend = [&](auto&& self) -> void {
        if (spins.size() == static_cast<std::size_t>(n)) {
            out.push_back(CouplingPath::validate(spins));
            return;
        }
        HalfInt s = spins.back();
        for (HalfInt next : {s - HalfInt::half(), s + HalfInt::half()}) {
            if (next.is_negative()) continue;
            spins.push_back(next);
            self(self);
            spins.pop_back();
        }
    };
    extend(extend);
    return out;
}

bool m_in_range(HalfInt s, HalfInt m) {
    return !s.is_negative() && abs(m) <= s && (s - m).is_integer();
}

std::vector<HalfInt> m_values(HalfInt s) {
    std::vector<HalfInt> out;
    for (int d = -s.doubled(); d <= s.doubled(); d += 2) out.push_back(HalfInt::from_doubled(d));
    return out;
}

CouplingPath parse_path(std::string_view text) {
    if (text.empty()) throw ParseError("", "empty coupling history");
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        tokens.push_back(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    bool fraction_form = false;
    for (std::string_view tok : tokens)
        if (tok.find('/') != std::string_view::npos) fraction_form = true;
    std::vector<HalfInt> spins;
    spins.reserve(tokens.size());
    for (std::string_view tok : tokens) {
        HalfInt value = parse_half_int(tok);
        spins.push_back(fraction_form ? value : HalfInt::from_doubled(value.doubled() / 2));
    }
    return CouplingPath::validate(std::move(spins));
}

} // namespace spinweave
