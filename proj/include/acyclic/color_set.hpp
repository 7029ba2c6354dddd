#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace acyclic {

using Color = int;

// 0 marks an uncolored edge; real colors are 1..palette.
inline constexpr Color kNoColor = 0;

// Set of colors drawn from 1..palette, stored as a bitmap.
class ColorSet {
public:
    ColorSet() = default;
    explicit ColorSet(int palette) : palette_(palette), words_((palette + 64) / 64, 0) {}
    ColorSet(int palette, std::initializer_list<Color> colors) : ColorSet(palette)
    {
        for (Color c : colors) {
            insert(c);
        }
    }

    static ColorSet full(int palette)
    {
        ColorSet s(palette);
        for (Color c = 1; c <= palette; ++c) {
            s.insert(c);
        }
        return s;
    }

    int palette() const { return palette_; }

    bool contains(Color c) const
    {
        return c >= 1 && c <= palette_ && ((words_[c >> 6] >> (c & 63)) & 1U) != 0;
    }
    void insert(Color c)
    {
        if (c >= 1 && c <= palette_) {
            words_[c >> 6] |= std::uint64_t{1} << (c & 63);
        }
    }
    void erase(Color c)
    {
        if (c >= 1 && c <= palette_) {
            words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
        }
    }

    int size() const
    {
        int total = 0;
        for (auto w : words_) {
            total += std::popcount(w);
        }
        return total;
    }
    bool empty() const { return size() == 0; }

    ColorSet& operator|=(const ColorSet& other)
    {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
            words_[i] |= other.words_[i];
        }
        return *this;
    }
    ColorSet& operator&=(const ColorSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
        }
        return *this;
    }
    ColorSet& operator-=(const ColorSet& other)
    {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
            words_[i] &= ~other.words_[i];
        }
        return *this;
    }

    friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
    friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
    friend ColorSet operator-(ColorSet a, const ColorSet& b) { return a -= b; }
    friend bool operator==(const ColorSet&, const ColorSet&) = default;

    // Members in ascending order.
    std::vector<Color> to_vector() const
    {
        std::vector<Color> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                out.push_back(static_cast<Color>(i * 64 + bit));
                w &= w - 1;
            }
        }
        return out;
    }

    // Smallest member, or kNoColor when empty.
    Color first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) {
                return static_cast<Color>(i * 64 + std::countr_zero(words_[i]));
            }
        }
        return kNoColor;
    }

private:
    int palette_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace acyclic
